//! Constructive even-cycle decompositions for graphs built by a recipe.
//!
//! Each recipe node is decomposed by the proof of its class: base classes
//! by direct constructions and tables, composition nodes by reducing to
//! their children. Small leftover unions of cycles are split by an exact
//! local search; every use of that search outside the places
//! the constructions call for it is counted as a fallback.

mod apex;
mod bipartite;
mod derived;
mod join;
mod k5;
mod split;
mod substitute;
mod work;

use std::cell::Cell;

use once_cell::sync::Lazy;

use crate::certificate::{validate_certificate, CycleDecomposition};
use crate::error::{Error, Result};
use crate::graph::{families, Parity, SignedMultigraph};
use crate::recipe::{realize, Realized, Recipe};

use work::{edge_between, flipped, odd_sum};

const NODE_BUDGET: usize = 10_000;

thread_local! {
    static FALLBACKS: Cell<usize> = const { Cell::new(0) };
}

/// Counters from one run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecomposeStats {
    /// Recipe nodes visited, derived recipes included.
    pub nodes: usize,
    /// Leftovers split by exact search where a table or figure was expected
    /// to apply.
    pub fallbacks: usize,
}

pub(crate) struct Ctx {
    nodes: Cell<usize>,
}

impl Ctx {
    fn new() -> Self {
        Ctx { nodes: Cell::new(0) }
    }

    pub(crate) fn note_fallback() {
        FALLBACKS.with(|f| f.set(f.get() + 1));
    }

    /// Decomposes the realization `re` under the signature carried by `g`
    /// (a copy of `re.graph` with signs).
    pub(crate) fn node(&self, re: &Realized, g: &SignedMultigraph) -> Result<Vec<Vec<usize>>> {
        self.nodes.set(self.nodes.get() + 1);
        if self.nodes.get() > NODE_BUDGET {
            return Err(Error::Internal("node budget exhausted".into()));
        }
        let all: Vec<usize> = (0..g.edge_count()).collect();
        if all.is_empty() {
            return Ok(Vec::new());
        }
        if odd_sum(g, &all) {
            return Err(Error::Internal(format!("{} received an odd signature", re.recipe.name())));
        }
        match &re.recipe {
            Recipe::CompleteBipartite { n, m } => {
                let a: Vec<usize> = (0..*n).collect();
                let b: Vec<usize> = (*n..n + m).collect();
                bipartite::bipartite(g, &a, &b)
            }
            Recipe::CompleteBipartiteMinusC4 { n, m, deleted } => {
                let a: Vec<usize> = (0..*n).collect();
                let b: Vec<usize> = (*n..n + m).collect();
                bipartite::minus_c4(g, &a, &b, [a[deleted[0]], a[deleted[1]]], [b[deleted[2]], b[deleted[3]]])
            }
            Recipe::K5PlusM { m, pair } => {
                let others: Vec<usize> = (0..5).filter(|v| !pair.contains(v)).collect();
                let l = [pair[0], others[0], others[1], others[2], pair[1]];
                let k = k5::K5::new(|i, j| {
                    g.edges_between(l[i], l[j])
                        .into_iter()
                        .find(|&e| e < 10)
                        .ok_or_else(|| Error::Internal("K5 edge missing".into()))
                })?;
                let parallels: Vec<usize> = (10..10 + m).collect();
                k5::k5plus(g, &k, &parallels)
            }
            Recipe::CompleteMultipartite { parts } => derived::multipartite(self, g, parts),
            Recipe::OddClique { n } => derived::odd_clique(self, g, *n),
            Recipe::ExplicitBase { .. } => {
                split::even_split(g, &all).ok_or_else(|| Error::Internal("explicit base has no even split".into()))
            }
            Recipe::OddExpansion { .. } => apex::odd_expansion_node(self, re, g),
            Recipe::Apex { .. } => apex::apex_node(self, re, g),
            Recipe::CliqueJoinK2 { .. } => apex::clique_join_node(self, re, g),
            Recipe::Substitute { .. } => substitute::substitute_node(self, re, g),
            Recipe::TwinSubstitute { .. } => substitute::twin_node(self, re, g),
            Recipe::Join { .. } => join::join_node(self, re, g),
            Recipe::Subdivide { .. } => {
                let child = &re.children[0];
                let odd: Vec<bool> = re.paths.iter().map(|p| odd_sum(g, p)).collect();
                let cg = child.graph.with_signature(&odd)?;
                let cycles = self.node(child, &cg)?;
                Ok(cycles
                    .into_iter()
                    .map(|c| c.into_iter().flat_map(|e| re.paths[e].iter().copied()).collect())
                    .collect())
            }
        }
    }
}

/// A strongly decomposable subgraph of the graph being worked on.
#[derive(Clone, Debug)]
pub(crate) enum Piece<'a> {
    /// A child realization embedded by an edge map.
    Child { re: &'a Realized, emap: Vec<usize> },
    /// Fixed cycles, decomposable only while each stays even.
    Cycles(Vec<Vec<usize>>),
}

impl<'a> Piece<'a> {
    /// Embeds `re` into `host` through a vertex map.
    pub fn embed(re: &'a Realized, vmap: &[Option<usize>], host: &SignedMultigraph) -> Result<Self> {
        let mut emap = Vec::with_capacity(re.graph.edge_count());
        for e in re.graph.edges() {
            let (Some(u), Some(v)) = (vmap[e.u], vmap[e.v]) else {
                return Err(Error::Internal("embedding misses a vertex".into()));
            };
            emap.push(edge_between(host, u, v)?);
        }
        Ok(Piece::Child { re, emap })
    }

    pub fn edges(&self) -> Vec<usize> {
        match self {
            Piece::Child { emap, .. } => emap.clone(),
            Piece::Cycles(c) => c.concat(),
        }
    }

    pub fn decompose(&self, cx: &Ctx, g: &SignedMultigraph) -> Result<Vec<Vec<usize>>> {
        match self {
            Piece::Child { re, emap } => {
                let odd: Vec<bool> = emap.iter().map(|&e| g.edge(e).is_odd()).collect();
                let cg = re.graph.with_signature(&odd)?;
                let cycles = cx.node(re, &cg)?;
                Ok(cycles.into_iter().map(|c| c.into_iter().map(|e| emap[e]).collect()).collect())
            }
            Piece::Cycles(cs) => {
                if cs.iter().any(|c| odd_sum(g, c)) {
                    return Err(Error::Internal("fixed cycle is odd".into()));
                }
                Ok(cs.clone())
            }
        }
    }

    /// Moves the piece along an edge map into another graph.
    pub fn remap(&self, map: &[Option<usize>]) -> Result<Piece<'a>> {
        let m = |e: usize| map[e].ok_or_else(|| Error::Internal("piece edge not carried over".into()));
        Ok(match self {
            Piece::Child { re, emap } => Piece::Child {
                re,
                emap: emap.iter().map(|&e| m(e)).collect::<Result<_>>()?,
            },
            Piece::Cycles(cs) => Piece::Cycles(
                cs.iter()
                    .map(|c| c.iter().map(|&e| m(e)).collect::<Result<Vec<_>>>())
                    .collect::<Result<_>>()?,
            ),
        })
    }
}

/// Flips `e`, decomposes the piece, and returns the even cycles apart from
/// the one through `e`, which is odd under the true signature.
pub(crate) fn almost(cx: &Ctx, piece: &Piece<'_>, g: &SignedMultigraph, e: usize) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
    let gf = flipped(g, e)?;
    let mut cycles = piece.decompose(cx, &gf)?;
    let i = cycles
        .iter()
        .position(|c| c.contains(&e))
        .ok_or_else(|| Error::Internal("flipped edge not covered".into()))?;
    let odd = cycles.remove(i);
    Ok((cycles, odd))
}

static TABLES: Lazy<std::result::Result<(), String>> = Lazy::new(|| {
    bipartite::table_check()?;
    k5::figure_check()
});

/// Checks the built-in K5 figures and the K4,4-minus-C4 table.
pub fn base_tables_valid() -> std::result::Result<(), String> {
    TABLES.clone()
}

fn tables() -> Result<()> {
    TABLES.clone().map_err(Error::Internal)
}

fn signed(re: &Realized, sigma: &[bool]) -> Result<SignedMultigraph> {
    re.graph.with_signature(sigma)
}

/// Decomposes the realization of `recipe` under `sigma` into even cycles.
pub fn decompose(recipe: &Recipe, sigma: &[bool]) -> Result<CycleDecomposition> {
    Ok(decompose_with_stats(recipe, sigma)?.0)
}

pub fn decompose_with_stats(recipe: &Recipe, sigma: &[bool]) -> Result<(CycleDecomposition, DecomposeStats)> {
    let re = realize(recipe)?;
    decompose_realized(&re, sigma)
}

/// As [`decompose`], for an already realized (and validated) recipe.
pub fn decompose_realized(re: &Realized, sigma: &[bool]) -> Result<(CycleDecomposition, DecomposeStats)> {
    tables()?;
    let g = signed(re, sigma)?;
    if g.signature_size() % 2 == 1 {
        return Err(Error::OddSignature);
    }
    FALLBACKS.with(|f| f.set(0));
    let cx = Ctx::new();
    let sets = cx.node(re, &g)?;
    let d = CycleDecomposition::from_edge_sets(&g, sets, None).map_err(|e| Error::Internal(format!("construction produced a non-cycle: {e}")))?;
    validate_certificate(&g, &d).map_err(|v| Error::Internal(format!("construction produced an invalid certificate: {v}")))?;
    let stats = DecomposeStats {
        nodes: cx.nodes.get(),
        fallbacks: FALLBACKS.with(|f| f.get()),
    };
    Ok((d, stats))
}

/// For an odd signature: flips `e`, decomposes, and flags the cycle
/// through `e` as the one odd cycle.
pub fn almost_decompose(recipe: &Recipe, sigma: &[bool], e: usize) -> Result<CycleDecomposition> {
    let re = realize(recipe)?;
    let g = signed(&re, sigma)?;
    if g.signature_size() % 2 == 0 {
        return Err(Error::EvenSignature);
    }
    if e >= g.edge_count() {
        return Err(Error::UnknownEdge(e.to_string()));
    }
    let mut flip = sigma.to_vec();
    flip[e] = !flip[e];
    let (d, _) = decompose_realized(&re, &flip)?;
    let sets = d.cycles.clone();
    let odd = sets.iter().position(|c| c.contains(&e));
    let out = CycleDecomposition::from_edge_sets(&g, sets, odd)?;
    validate_certificate(&g, &out).map_err(|v| Error::Internal(format!("almost decomposition is invalid: {v}")))?;
    Ok(out)
}

/// K_{2,n} with vertices `a0 a1` and `b0..`.
pub fn decompose_k2n(n: usize, sigma: &[bool]) -> Result<CycleDecomposition> {
    decompose(&Recipe::bipartite(2, n), sigma)
}

/// A 4-cycle of K_{n,m} (vertices `a<i>` then `b<j>`) with the requested
/// parity, as vertices `a b a' b'`.
pub fn find_parity_four_cycle(n: usize, m: usize, sigma: &[bool], target: Parity) -> Result<[usize; 4]> {
    if n < 2 || m < 2 {
        return Err(Error::Precondition("both sides need at least two vertices".into()));
    }
    let g = families::complete_bipartite(n, m, Parity::Even).with_signature(sigma)?;
    let a: Vec<usize> = (0..n).collect();
    let b: Vec<usize> = (n..n + m).collect();
    bipartite::find_parity_four_cycle(&g, &a, &b, target.is_odd()).map_err(|_| {
        Error::Precondition(format!(
            "K_{{{n},{m}}} has no {} 4-cycle under this signature",
            if target.is_odd() { "odd" } else { "even" }
        ))
    })
}

/// K5 plus `m` parallel edges on vertices 0 and 1.
pub fn decompose_k5_plus(m: usize, sigma: &[bool]) -> Result<CycleDecomposition> {
    decompose(&Recipe::K5PlusM { m, pair: [0, 1] }, sigma)
}

/// Whether a signature of K5 (edges in the order `01 02 .. 34`) is
/// equivalent to all edges odd.
pub fn k5_is_bad(sigma: &[bool]) -> Result<bool> {
    let g = families::complete(5, Parity::Even).with_signature(sigma)?;
    g.is_equivalent(&[true; 10])
}
