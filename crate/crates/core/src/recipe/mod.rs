//! Construction trees: base classes combined by composition operations.
//!
//! A [`Recipe`] is pure data. [`validate_recipe`] checks every node's
//! hypotheses and [`realize`] turns a valid tree into a concrete graph
//! together with the structure maps the decomposer walks.

mod random;
mod realize;
mod validate;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::{GraphFile, SignedMultigraph};
use crate::oracle::StrongEcdReport;

pub use random::{random_even_signature, random_recipe};
pub use realize::{realize, realize_unchecked, Realized};
pub use validate::{validate_recipe, NodeCheck, PreconditionReport};

fn default_pair() -> [usize; 2] {
    [0, 1]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "node")]
pub enum Recipe {
    /// K_{n,m}; vertices `a<i>` and `b<j>`.
    CompleteBipartite { n: usize, m: usize },
    /// K_{n,m} minus the 4-cycle on `a<deleted[0]>`, `a<deleted[1]>`,
    /// `b<deleted[2]>`, `b<deleted[3]>`.
    CompleteBipartiteMinusC4 { n: usize, m: usize, deleted: [usize; 4] },
    /// K5 on `0..5` with `m` extra parallel edges on `pair`.
    K5PlusM {
        m: usize,
        #[serde(default = "default_pair")]
        pair: [usize; 2],
    },
    /// Vertices `p<i>.<j>`.
    CompleteMultipartite { parts: Vec<usize> },
    OddClique { n: usize },
    /// Any small graph, licensed by a completed oracle sweep.
    ExplicitBase { graph: GraphFile, proof: StrongEcdReport },
    /// Replace `v` by `s` pairwise non-adjacent clones `c.<j>`.
    OddExpansion {
        #[serde(rename = "G")]
        g: Box<Recipe>,
        v: String,
        s: usize,
    },
    /// Join with `k` independent vertices `x.<j>`.
    Apex {
        #[serde(rename = "G")]
        g: Box<Recipe>,
        k: usize,
    },
    /// Join with an edge `k.0 k.1`.
    CliqueJoinK2 {
        #[serde(rename = "G")]
        g: Box<Recipe>,
    },
    /// Replace `v` (a vertex of G's realization) by H.
    Substitute {
        #[serde(rename = "G")]
        g: Box<Recipe>,
        v: String,
        #[serde(rename = "H")]
        h: Box<Recipe>,
    },
    /// Replace the twin pair by H.
    TwinSubstitute {
        #[serde(rename = "G")]
        g: Box<Recipe>,
        twins: [String; 2],
        #[serde(rename = "H")]
        h: Box<Recipe>,
    },
    /// Join of two disjoint unions; children realize as `l<i>.*` and `r<i>.*`.
    Join { left: Vec<Recipe>, right: Vec<Recipe> },
    /// Replace each edge of G (by edge id) with a path of the given length.
    Subdivide {
        #[serde(rename = "G")]
        g: Box<Recipe>,
        lengths: BTreeMap<String, usize>,
    },
}

impl Recipe {
    pub fn name(&self) -> &'static str {
        match self {
            Recipe::CompleteBipartite { .. } => "CompleteBipartite",
            Recipe::CompleteBipartiteMinusC4 { .. } => "CompleteBipartiteMinusC4",
            Recipe::K5PlusM { .. } => "K5PlusM",
            Recipe::CompleteMultipartite { .. } => "CompleteMultipartite",
            Recipe::OddClique { .. } => "OddClique",
            Recipe::ExplicitBase { .. } => "ExplicitBase",
            Recipe::OddExpansion { .. } => "OddExpansion",
            Recipe::Apex { .. } => "Apex",
            Recipe::CliqueJoinK2 { .. } => "CliqueJoinK2",
            Recipe::Substitute { .. } => "Substitute",
            Recipe::TwinSubstitute { .. } => "TwinSubstitute",
            Recipe::Join { .. } => "Join",
            Recipe::Subdivide { .. } => "Subdivide",
        }
    }

    /// Child recipes paired with their path labels.
    pub fn children(&self) -> Vec<(String, &Recipe)> {
        match self {
            Recipe::OddExpansion { g, .. }
            | Recipe::Apex { g, .. }
            | Recipe::CliqueJoinK2 { g }
            | Recipe::Subdivide { g, .. } => vec![("G".into(), g.as_ref())],
            Recipe::Substitute { g, h, .. } | Recipe::TwinSubstitute { g, h, .. } => {
                vec![("G".into(), g.as_ref()), ("H".into(), h.as_ref())]
            }
            Recipe::Join { left, right } => left
                .iter()
                .enumerate()
                .map(|(i, r)| (format!("left[{i}]"), r))
                .chain(right.iter().enumerate().map(|(i, r)| (format!("right[{i}]"), r)))
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        1 + self.children().iter().map(|(_, c)| c.node_count()).sum::<usize>()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("recipe serializes")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn odd_clique(n: usize) -> Self {
        Recipe::OddClique { n }
    }

    pub fn bipartite(n: usize, m: usize) -> Self {
        Recipe::CompleteBipartite { n, m }
    }

    pub fn multipartite(parts: &[usize]) -> Self {
        Recipe::CompleteMultipartite { parts: parts.to_vec() }
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Recipe::CompleteMultipartite { parts: vec![n] }
    }
}

/// A triangle plus one isolated vertex.
pub fn is_coclaw(g: &SignedMultigraph) -> bool {
    if g.vertex_count() != 4 || g.edge_count() != 3 || !g.is_simple() {
        return false;
    }
    let mut degrees: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    degrees == [0, 2, 2, 2]
}

/// Simple graph isomorphic to K3.
pub fn is_triangle(g: &SignedMultigraph) -> bool {
    g.vertex_count() == 3 && g.edge_count() == 3 && g.is_simple()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::graph::Parity;

    #[test]
    fn coclaw_recognition() {
        let coclaw = from_pairs(4, &[(0, 1), (1, 2), (2, 0)], Parity::Even);
        assert!(is_coclaw(&coclaw));
        assert!(!is_coclaw(&complete(3, Parity::Even)));
        assert!(!is_coclaw(&from_pairs(4, &[], Parity::Even)));
        assert!(!is_coclaw(&from_pairs(4, &[(0, 1), (1, 2), (2, 3)], Parity::Even)));
        assert!(is_triangle(&complete(3, Parity::Odd)));
    }

    #[test]
    fn json_shape() {
        let r = Recipe::Substitute {
            g: Box::new(Recipe::bipartite(2, 2)),
            v: "a0".into(),
            h: Box::new(Recipe::odd_clique(3)),
        };
        let text = r.to_json();
        assert!(text.contains("\"node\": \"Substitute\""));
        assert!(text.contains("\"G\""));
        assert!(text.contains("\"H\""));
        assert_eq!(Recipe::from_json(&text).unwrap(), r);
        let k5p: Recipe = serde_json::from_str(r#"{"node":"K5PlusM","m":2}"#).unwrap();
        assert_eq!(k5p, Recipe::K5PlusM { m: 2, pair: [0, 1] });
        assert!(Recipe::from_json(r#"{"node":"Nope"}"#).is_err());
    }
}
