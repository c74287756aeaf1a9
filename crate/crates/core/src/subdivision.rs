//! Edge subdivision and the parity correspondence between a subdivided
//! graph and the signed graph it induces.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::certificate::{validate_certificate, CycleDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Parity, SignedMultigraph};

/// Path length per edge id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubdivisionProfile {
    pub lengths: BTreeMap<String, usize>,
}

impl SubdivisionProfile {
    pub fn uniform(g: &SignedMultigraph, len: usize) -> Self {
        SubdivisionProfile {
            lengths: g.edges().iter().map(|e| (e.id.clone(), len)).collect(),
        }
    }

    /// Lengths in edge-index order; fails on missing ids or zero lengths.
    pub fn resolve(&self, g: &SignedMultigraph) -> Result<Vec<usize>> {
        for id in self.lengths.keys() {
            g.edge_by_id(id)?;
        }
        g.edges()
            .iter()
            .map(|e| match self.lengths.get(&e.id) {
                None => Err(Error::UnknownEdge(format!("no length for `{}`", e.id))),
                Some(0) => Err(Error::BadLength(e.id.clone())),
                Some(&l) => Ok(l),
            })
            .collect()
    }

    pub fn total(&self) -> usize {
        self.lengths.values().sum()
    }
}

/// Result of [`subdivide`].
#[derive(Clone, Debug)]
pub struct Subdivision {
    /// The subdivided graph. Every edge is odd, so even cycles of `h` are
    /// exactly its even-length cycles.
    pub h: SignedMultigraph,
    /// The original graph signed by path-length parity.
    pub induced: SignedMultigraph,
    /// Edge indices of `h` along each original edge, from `u` to `v`.
    pub paths: Vec<Vec<usize>>,
}

pub fn subdivide(g: &SignedMultigraph, p: &SubdivisionProfile) -> Result<Subdivision> {
    let lengths = p.resolve(g)?;
    let mut h = SignedMultigraph::new();
    for v in g.vertices() {
        h.add_vertex(v.clone())?;
    }
    let mut paths = Vec::with_capacity(g.edge_count());
    for (e, &len) in g.edges().iter().zip(&lengths) {
        let mut path = Vec::with_capacity(len);
        let mut at = e.u;
        for k in 0..len {
            let next = if k + 1 == len {
                e.v
            } else {
                h.add_vertex(format!("{}~{}", e.id, k + 1))?
            };
            path.push(h.add_edge(format!("{}/{}", e.id, k), at, next, Parity::Odd)?);
            at = next;
        }
        paths.push(path);
    }
    let odd: Vec<bool> = lengths.iter().map(|l| l % 2 == 1).collect();
    let induced = g.with_signature(&odd)?;
    Ok(Subdivision { h, induced, paths })
}

/// Maps an even-cycle decomposition of the induced signed graph to an
/// even-length-cycle decomposition of the subdivision.
pub fn lift_certificate(g: &SignedMultigraph, p: &SubdivisionProfile, d: &CycleDecomposition) -> Result<CycleDecomposition> {
    let sub = subdivide(g, p)?;
    validate_certificate(&sub.induced, d).map_err(Error::InvalidCertificate)?;
    if d.odd_cycle_index.is_some() {
        return Err(Error::Precondition("only even-cycle decompositions lift".into()));
    }
    let sets = d
        .cycles
        .iter()
        .map(|c| c.iter().flat_map(|&e| sub.paths[e].iter().copied()).collect())
        .collect();
    CycleDecomposition::from_edge_sets(&sub.h, sets, None)
}
