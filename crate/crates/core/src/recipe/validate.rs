use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::SignedMultigraph;
use crate::oracle::Verdict;
use crate::subdivision::SubdivisionProfile;

use super::realize::{realize_node, Realized};
use super::{is_coclaw, is_triangle, Recipe};

/// Outcome of one node's hypothesis check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeCheck {
    /// Slash-separated child labels from the root, empty for the root.
    pub path: String,
    pub node: String,
    pub ok: bool,
    /// The violated clause, when `ok` is false.
    pub clause: Option<String>,
}

impl fmt::Display for NodeCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let at = if self.path.is_empty() { "root" } else { &self.path };
        match &self.clause {
            Some(c) => write!(f, "{} at {at}: {c}", self.node),
            None => write!(f, "{} at {at}: ok", self.node),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreconditionReport {
    /// Post-order: children before parents.
    pub nodes: Vec<NodeCheck>,
}

impl PreconditionReport {
    pub fn ok(&self) -> bool {
        self.nodes.iter().all(|n| n.ok)
    }

    pub fn first_failure(&self) -> Option<&NodeCheck> {
        self.nodes.iter().find(|n| !n.ok)
    }
}

pub fn validate_recipe(recipe: &Recipe) -> PreconditionReport {
    let mut report = PreconditionReport::default();
    walk(recipe, "", &mut report);
    report
}

fn join_path(parent: &str, label: &str) -> String {
    if parent.is_empty() {
        label.to_string()
    } else {
        format!("{parent}/{label}")
    }
}

/// Validates bottom-up, returning the realization when the subtree is valid.
fn walk(recipe: &Recipe, path: &str, report: &mut PreconditionReport) -> Option<Realized> {
    let mut children = Vec::new();
    let mut all_ok = true;
    for (label, child) in recipe.children() {
        match walk(child, &join_path(path, &label), report) {
            Some(r) => children.push(r),
            None => all_ok = false,
        }
    }
    let verdict = if all_ok {
        check(recipe, &children).and_then(|()| realize_node(recipe, children).map_err(|e| e.to_string()))
    } else {
        Err("a child recipe is invalid".to_string())
    };
    let (ok, clause, out) = match verdict {
        Ok(r) => (true, None, Some(r)),
        Err(c) => (false, Some(c), None),
    };
    report.nodes.push(NodeCheck {
        path: path.to_string(),
        node: recipe.name().to_string(),
        ok,
        clause,
    });
    out
}

fn require(cond: bool, clause: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(clause.into())
    }
}

fn simple(g: &SignedMultigraph, what: &str) -> Result<(), String> {
    require(g.is_simple(), format!("{what} must be simple"))
}

fn is_edgeless(g: &SignedMultigraph, n: usize) -> bool {
    g.vertex_count() == n && g.edge_count() == 0
}

/// Disjoint union of the children's graphs.
fn union(parts: &[Realized]) -> SignedMultigraph {
    let mut g = SignedMultigraph::new();
    for (i, p) in parts.iter().enumerate() {
        let base = g.vertex_count();
        for v in p.graph.vertices() {
            g.add_vertex(format!("{i}.{v}")).expect("fresh id");
        }
        for e in p.graph.edges() {
            let id = format!("{i}.{}", e.id);
            g.add_edge(id, base + e.u, base + e.v, e.sign).expect("fresh edge");
        }
    }
    g
}

fn check(recipe: &Recipe, children: &[Realized]) -> Result<(), String> {
    match recipe {
        Recipe::CompleteBipartite { n, m } => require(
            n % 2 == 0 && m % 2 == 0 && *n >= 2 && *m >= 2,
            "bipartite: both parts must be even and at least 2",
        ),
        Recipe::CompleteBipartiteMinusC4 { n, m, deleted } => {
            require(
                n % 2 == 0 && m % 2 == 0 && *n >= 2 && *m >= 2,
                "bipartite: both parts must be even and at least 2",
            )?;
            require(
                deleted[0] != deleted[1] && deleted[2] != deleted[3] && deleted[0].max(deleted[1]) < *n && deleted[2].max(deleted[3]) < *m,
                "bipartite minus C4: deleted vertices must be two distinct vertices on each side",
            )
        }
        Recipe::K5PlusM { m, pair } => {
            require(*m >= 2 && m % 2 == 0, "K5 plus parallels: m must be even and at least 2")?;
            require(pair[0] != pair[1] && pair[0] < 5 && pair[1] < 5, "K5 plus parallels: pair must be two distinct vertices of K5")
        }
        Recipe::CompleteMultipartite { parts } => {
            require(!parts.is_empty() && parts.iter().all(|&p| p >= 1), "multipartite: parts must be non-empty")?;
            let all_even = parts.iter().all(|p| p % 2 == 0);
            let all_odd = parts.iter().all(|p| p % 2 == 1) && parts.len() % 2 == 1;
            require(all_even || all_odd, "multipartite: not Eulerian (parts must be all even, or all odd with an odd number of parts)")?;
            require(parts.as_slice() != [1, 1, 1, 1, 1], "multipartite: K5 is excluded")
        }
        Recipe::OddClique { n } => {
            require(n % 2 == 1, "odd cliques: n must be odd")?;
            require(*n != 5, "odd cliques: K5 is excluded")
        }
        Recipe::ExplicitBase { graph, proof } => {
            let g = SignedMultigraph::try_from(graph).map_err(|e| e.to_string())?;
            require(g.is_eulerian(), "explicit base: graph must be Eulerian")?;
            require(
                proof.verdict == Verdict::StronglyDecomposable && proof.witness.is_none(),
                "explicit base: proof must certify strong decomposability",
            )?;
            let dim = g.cycle_space_dimension();
            require(
                dim < 64 && proof.classes_total == 1u64 << dim && proof.classes_even * 2 == proof.classes_total.max(2),
                "explicit base: proof class counts do not match the graph",
            )
        }
        Recipe::OddExpansion { v, s, .. } => {
            let g = &children[0].graph;
            require(s % 2 == 1, "odd expansion: s must be odd")?;
            let cv = g.vertex(v).map_err(|e| e.to_string())?;
            require(g.degree(cv) > 0, "odd expansion: v must not be isolated")?;
            simple(g, "odd expansion: G")
        }
        Recipe::Apex { k, .. } => {
            let g = &children[0].graph;
            require(*k >= 2 && k % 2 == 0, "apex: k must be even and at least 2")?;
            require(g.vertex_count() % 2 == 0, "apex: G must have an even number of vertices")?;
            require(!(*k == 2 && is_coclaw(g)), "apex: G is a co-claw and k = 2")?;
            simple(g, "apex: G")
        }
        Recipe::CliqueJoinK2 { .. } => {
            let g = &children[0].graph;
            require(g.vertex_count() % 2 == 1, "clique join: G must have an odd number of vertices")?;
            require(!is_triangle(g), "clique join: G is a triangle")?;
            simple(g, "clique join: G")
        }
        Recipe::Substitute { v, .. } => {
            let (g, h) = (&children[0].graph, &children[1].graph);
            let cv = g.vertex(v).map_err(|e| e.to_string())?;
            require(g.degree(cv) > 0, "substitution: v must not be isolated")?;
            require(h.vertex_count() % 2 == 1, "substitution: H must have an odd number of vertices")?;
            simple(g, "substitution: G")?;
            simple(h, "substitution: H")?;
            require(
                !(is_triangle(h) && g.degree(cv) < 4),
                format!("substitution: H is a triangle and deg(v) = {}", g.degree(cv)),
            )
        }
        Recipe::TwinSubstitute { twins, .. } => {
            let (g, h) = (&children[0].graph, &children[1].graph);
            let u = g.vertex(&twins[0]).map_err(|e| e.to_string())?;
            let v = g.vertex(&twins[1]).map_err(|e| e.to_string())?;
            require(u != v, "twin substitution: twins must be distinct")?;
            require(g.edges_between(u, v).is_empty(), "twin substitution: twins must be non-adjacent")?;
            require(g.neighbors(u) == g.neighbors(v), "twin substitution: twins must have the same neighbourhood")?;
            require(g.degree(u) > 0, "twin substitution: twins must not be isolated")?;
            require(h.vertex_count() % 2 == 0, "twin substitution: H must have an even number of vertices")?;
            simple(g, "twin substitution: G")?;
            simple(h, "twin substitution: H")?;
            require(
                !(is_coclaw(h) && g.degree(u) < 4),
                format!("twin substitution: H is a co-claw and deg(v) = {}", g.degree(u)),
            )
        }
        Recipe::Join { left, right } => {
            require(!left.is_empty() && !right.is_empty(), "join: both sides must be non-empty")?;
            for c in children {
                simple(&c.graph, "join: every component")?;
            }
            let l = union(&children[..left.len()]);
            let r = union(&children[left.len()..]);
            require(l.vertex_count() % 2 == 0 && r.vertex_count() % 2 == 0, "join: each side must have an even number of vertices")?;
            require(
                !((is_coclaw(&l) && is_edgeless(&r, 2)) || (is_coclaw(&r) && is_edgeless(&l, 2))),
                "join: a co-claw joined with the empty graph on two vertices",
            )
        }
        Recipe::Subdivide { lengths, .. } => {
            let p = SubdivisionProfile { lengths: lengths.clone() };
            p.resolve(&children[0].graph).map(|_| ()).map_err(|e| format!("subdivide: {e}"))
        }
    }
}
