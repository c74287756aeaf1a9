//! Brute-force ground truth for small graphs.
//!
//! Simple cycles are enumerated once per unsigned graph; decomposability is
//! decided by exact-cover backtracking over the even cycles, always covering
//! the lowest uncovered edge first. Failed edge masks are memoised.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certificate::CycleDecomposition;
use crate::error::{Error, Result};
use crate::graph::{Parity, SignatureClass, SignedMultigraph};

/// Hard ceiling from the 64-bit edge masks.
pub const MASK_EDGES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_edges: usize,
    pub max_dim: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_edges: 24,
            max_dim: 20,
        }
    }
}

/// Every simple cycle of a graph, 2-cycles included.
#[derive(Clone, Debug)]
pub struct CycleCatalog {
    /// Closed walks of edge indices, sorted by their edge sets.
    pub cycles: Vec<Vec<usize>>,
    /// Edge-set masks, parallel to `cycles`.
    pub masks: Vec<u64>,
    /// Parity under the signature of the graph the catalog was built from.
    pub parity: Vec<Parity>,
    edge_count: usize,
}

impl CycleCatalog {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn parities(&self, odd: &[bool]) -> Vec<Parity> {
        self.cycles
            .iter()
            .map(|c| Parity::from_odd(c.iter().filter(|&&e| odd[e]).count() % 2 == 1))
            .collect()
    }

    /// Per edge, the catalog indices of the even cycles through it.
    fn even_cycles_by_edge(&self, odd: &[bool]) -> Vec<Vec<usize>> {
        let parity = self.parities(odd);
        let mut by_edge = vec![Vec::new(); self.edge_count];
        for (i, c) in self.cycles.iter().enumerate() {
            if parity[i] == Parity::Even {
                for &e in c {
                    by_edge[e].push(i);
                }
            }
        }
        by_edge
    }

    /// Even-cycle decomposition under `odd`, if one exists.
    pub fn decompose(&self, odd: &[bool]) -> Option<Vec<usize>> {
        let by_edge = self.even_cycles_by_edge(odd);
        let full = if self.edge_count == 64 {
            u64::MAX
        } else {
            (1u64 << self.edge_count) - 1
        };
        let mut chosen = Vec::new();
        let mut failed = HashSet::new();
        if cover(0, full, &self.masks, &by_edge, &mut chosen, &mut failed) {
            Some(chosen)
        } else {
            None
        }
    }
}

fn cover(
    covered: u64,
    full: u64,
    masks: &[u64],
    by_edge: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    failed: &mut HashSet<u64>,
) -> bool {
    if covered == full {
        return true;
    }
    if failed.contains(&covered) {
        return false;
    }
    let e = (!covered).trailing_zeros() as usize;
    for &c in &by_edge[e] {
        if masks[c] & covered != 0 {
            continue;
        }
        chosen.push(c);
        if cover(covered | masks[c], full, masks, by_edge, chosen, failed) {
            return true;
        }
        chosen.pop();
    }
    failed.insert(covered);
    false
}

fn check_edges(g: &SignedMultigraph, bounds: &OracleBounds) -> Result<()> {
    let bound = bounds.max_edges.min(MASK_EDGES);
    if g.edge_count() > bound {
        return Err(Error::BoundExceeded {
            what: "edge count",
            value: g.edge_count(),
            bound,
        });
    }
    Ok(())
}

pub fn enumerate_cycles(g: &SignedMultigraph, bounds: &OracleBounds) -> Result<CycleCatalog> {
    check_edges(g, bounds)?;
    let n = g.vertex_count();
    let mut found: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = Vec::new();
        on_path[s] = true;
        extend(g, s, s, &mut path, &mut on_path, &mut found);
        on_path[s] = false;
    }
    found.sort();
    let masks = found
        .iter()
        .map(|(key, _)| key.iter().fold(0u64, |m, &e| m | (1u64 << e)))
        .collect();
    let cycles: Vec<Vec<usize>> = found.into_iter().map(|(_, walk)| walk).collect();
    let odd = g.odd_mask();
    let mut cat = CycleCatalog {
        cycles,
        masks,
        parity: Vec::new(),
        edge_count: g.edge_count(),
    };
    cat.parity = cat.parities(&odd);
    Ok(cat)
}

// Cycles whose smallest vertex is `s`; each is reported once, in the
// direction where the first edge index is below the closing edge index.
fn extend(
    g: &SignedMultigraph,
    s: usize,
    at: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<(Vec<usize>, Vec<usize>)>,
) {
    for &e in g.incident(at) {
        if path.last() == Some(&e) {
            continue;
        }
        let y = g.edge(e).other(at);
        if y == s {
            if let Some(&first) = path.first() {
                if first < e && !path.contains(&e) {
                    let mut walk = path.clone();
                    walk.push(e);
                    let mut key = walk.clone();
                    key.sort_unstable();
                    found.push((key, walk));
                }
            }
            continue;
        }
        if y < s || on_path[y] {
            continue;
        }
        on_path[y] = true;
        path.push(e);
        extend(g, s, y, path, on_path, found);
        path.pop();
        on_path[y] = false;
    }
}

/// Decides even-cycle decomposability of `g` under its own signature.
pub fn oracle_decompose(g: &SignedMultigraph, bounds: &OracleBounds) -> Result<Option<CycleDecomposition>> {
    let cat = enumerate_cycles(g, bounds)?;
    Ok(decompose_with(&cat, &g.odd_mask()))
}

pub fn decompose_with(cat: &CycleCatalog, odd: &[bool]) -> Option<CycleDecomposition> {
    cat.decompose(odd)
        .map(|chosen| CycleDecomposition::new(chosen.into_iter().map(|c| cat.cycles[c].clone()).collect()))
}

/// One representative per signature class, in the order of the subsets of
/// non-forest edges read as binary numbers (bit `i` is the `i`-th
/// non-forest edge).
pub fn enumerate_signature_classes(
    g: &SignedMultigraph,
    parity_filter: Option<Parity>,
    bounds: &OracleBounds,
) -> Result<Vec<SignatureClass>> {
    let dim = g.cycle_space_dimension();
    if dim > bounds.max_dim.min(63) {
        return Err(Error::BoundExceeded {
            what: "cycle space dimension",
            value: dim,
            bound: bounds.max_dim.min(63),
        });
    }
    if parity_filter.is_some() && !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let forest = g.spanning_forest();
    let mut in_forest = vec![false; g.edge_count()];
    for &e in &forest {
        in_forest[e] = true;
    }
    let free: Vec<usize> = (0..g.edge_count()).filter(|&e| !in_forest[e]).collect();
    debug_assert_eq!(free.len(), dim);
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << dim) {
        if let Some(p) = parity_filter {
            if (mask.count_ones() % 2 == 1) != p.is_odd() {
                continue;
            }
        }
        let odd = (0..dim).filter(|i| mask >> i & 1 == 1).map(|i| free[i]).collect();
        out.push(SignatureClass {
            forest: forest.clone(),
            odd,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "strongly-decomposable")]
    StronglyDecomposable,
    #[serde(rename = "not")]
    Not,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Odd edge ids of the failing class representative.
    pub odd_edges: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongEcdReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub classes_total: u64,
    pub classes_even: u64,
}

impl StrongEcdReport {
    pub fn witness_mask(&self, g: &SignedMultigraph) -> Result<Option<Vec<bool>>> {
        let Some(w) = &self.witness else {
            return Ok(None);
        };
        let mut mask = vec![false; g.edge_count()];
        for id in &w.odd_edges {
            mask[g.edge_by_id(id)?] = true;
        }
        Ok(Some(mask))
    }
}

/// Sweeps every even-parity signature class of an Eulerian graph.
/// `jobs == 1` keeps the sweep on the calling thread.
pub fn oracle_is_strongly_ecd(g: &SignedMultigraph, bounds: &OracleBounds, jobs: usize) -> Result<StrongEcdReport> {
    if !g.is_eulerian() {
        return Err(Error::NotEulerian);
    }
    let cat = enumerate_cycles(g, bounds)?;
    let classes = enumerate_signature_classes(g, Some(Parity::Even), bounds)?;
    let total = 1u64 << g.cycle_space_dimension();
    let m = g.edge_count();
    let check = |c: &SignatureClass| cat.decompose(&c.odd_mask(m)).is_some();
    let ok: Vec<bool> = if jobs == 1 {
        classes.iter().map(check).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        pool.install(|| classes.par_iter().map(check).collect())
    };
    let witness = ok.iter().position(|&b| !b).map(|i| Witness {
        odd_edges: classes[i].odd.iter().map(|&e| g.edge(e).id.clone()).collect(),
    });
    Ok(StrongEcdReport {
        verdict: if witness.is_none() {
            Verdict::StronglyDecomposable
        } else {
            Verdict::Not
        },
        witness,
        classes_total: total,
        classes_even: classes.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::validate_certificate;
    use crate::graph::families::*;

    fn b() -> OracleBounds {
        OracleBounds::default()
    }

    // n choose k times (k-1)!/2 summed over k >= 3
    fn complete_cycle_count(n: u64) -> u64 {
        let mut total = 0;
        for k in 3..=n {
            let mut choose = 1;
            for i in 0..k {
                choose = choose * (n - i) / (i + 1);
            }
            let fact: u64 = (1..k).product();
            total += choose * fact / 2;
        }
        total
    }

    #[test]
    fn complete_graph_cycle_counts() {
        assert_eq!(complete_cycle_count(4), 7);
        assert_eq!(complete_cycle_count(5), 37);
        let k4 = enumerate_cycles(&complete(4, Parity::Even), &b()).unwrap();
        assert_eq!(k4.len(), 7);
        let k5 = enumerate_cycles(&complete(5, Parity::Even), &b()).unwrap();
        assert_eq!(k5.len(), 37);
        let by_len = |l: usize| k5.cycles.iter().filter(|c| c.len() == l).count();
        assert_eq!((by_len(3), by_len(4), by_len(5)), (10, 15, 12));
        let k7 = enumerate_cycles(&complete(7, Parity::Even), &b()).unwrap();
        assert_eq!(k7.len() as u64, complete_cycle_count(7));
    }

    #[test]
    fn parallel_pair_is_one_two_cycle() {
        let g = from_pairs(2, &[(0, 1), (0, 1)], Parity::Even);
        let cat = enumerate_cycles(&g, &b()).unwrap();
        assert_eq!(cat.cycles, vec![vec![0, 1]]);
        let g3 = from_pairs(2, &[(0, 1), (0, 1), (1, 0)], Parity::Even);
        assert_eq!(enumerate_cycles(&g3, &b()).unwrap().len(), 3);
    }

    #[test]
    fn catalog_walks_are_cycles() {
        let g = complete_bipartite(2, 4, Parity::Odd);
        let cat = enumerate_cycles(&g, &b()).unwrap();
        for (c, p) in cat.cycles.iter().zip(&cat.parity) {
            assert_eq!(g.cycle_parity(c).unwrap(), *p);
        }
        // 4-cycles of K2,4 only: choose 2 of the 4
        assert_eq!(cat.len(), 6);
    }

    #[test]
    fn edge_bound() {
        let g = complete(8, Parity::Even);
        assert!(matches!(enumerate_cycles(&g, &b()), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn k5_all_odd_has_no_decomposition() {
        assert!(oracle_decompose(&complete(5, Parity::Odd), &b()).unwrap().is_none());
        let d = oracle_decompose(&complete(5, Parity::Even), &b()).unwrap().unwrap();
        assert_eq!(validate_certificate(&complete(5, Parity::Even), &d), Ok(()));
    }

    #[test]
    fn single_cycles() {
        let c6 = cycle(6, Parity::Even).with_odd_edges(&[1, 4]).unwrap();
        let d = oracle_decompose(&c6, &b()).unwrap().unwrap();
        assert_eq!(d.cycles.len(), 1);
        let k22 = complete_bipartite(2, 2, Parity::Even);
        let d = oracle_decompose(&k22, &b()).unwrap().unwrap();
        assert_eq!(d.cycles.len(), 1);
        assert_eq!(d.cycles[0].len(), 4);
    }

    #[test]
    fn class_counts() {
        let k5 = complete(5, Parity::Even);
        assert_eq!(enumerate_signature_classes(&k5, None, &b()).unwrap().len(), 64);
        assert_eq!(
            enumerate_signature_classes(&k5, Some(Parity::Even), &b()).unwrap().len(),
            32
        );
        let tree = path(5, Parity::Odd);
        let classes = enumerate_signature_classes(&tree, None, &b()).unwrap();
        assert_eq!(classes.len(), 1);
        assert!(classes[0].odd.is_empty());
        let k22 = complete_bipartite(2, 2, Parity::Even);
        assert_eq!(enumerate_signature_classes(&k22, None, &b()).unwrap().len(), 2);
        let k4 = complete(4, Parity::Even);
        assert!(matches!(
            enumerate_signature_classes(&k4, Some(Parity::Even), &b()),
            Err(Error::NotEulerian)
        ));
        let tight = OracleBounds { max_edges: 24, max_dim: 5 };
        assert!(matches!(
            enumerate_signature_classes(&k5, None, &tight),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn strong_reports() {
        let k5 = complete(5, Parity::Even);
        let r = oracle_is_strongly_ecd(&k5, &b(), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Not);
        let w = r.witness_mask(&k5).unwrap().unwrap();
        assert!(k5.with_signature(&w).unwrap().is_equivalent(&[true; 10]).unwrap());
        assert_eq!((r.classes_total, r.classes_even), (64, 32));

        let k22 = complete_bipartite(2, 2, Parity::Even);
        let r = oracle_is_strongly_ecd(&k22, &b(), 2).unwrap();
        assert_eq!(r.verdict, Verdict::StronglyDecomposable);
        assert!(r.witness.is_none());

        assert!(matches!(
            oracle_is_strongly_ecd(&complete(4, Parity::Even), &b(), 1),
            Err(Error::NotEulerian)
        ));
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"verdict\":\"strongly-decomposable\""));
        assert!(json.contains("\"classes_total\":2"));
    }
}
