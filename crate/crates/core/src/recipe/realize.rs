use crate::error::{Error, Result};
use crate::graph::{Parity, SignedMultigraph};
use crate::subdivision::SubdivisionProfile;

use super::validate::validate_recipe;
use super::Recipe;

/// A recipe node turned into a concrete graph, with its realized children
/// and the maps from child vertices into this graph.
#[derive(Clone, Debug)]
pub struct Realized {
    pub recipe: Recipe,
    /// All edges even.
    pub graph: SignedMultigraph,
    pub children: Vec<Realized>,
    /// Per child: child vertex -> vertex here, `None` for replaced vertices.
    pub vmaps: Vec<Vec<Option<usize>>>,
    /// Vertices introduced by this node (clones, apex vertices, the K2 pair).
    pub added: Vec<usize>,
    /// Child vertices replaced by this node (the substituted vertex or twin pair).
    pub pivots: Vec<usize>,
    /// Subdivide only: edges of this graph along each child edge.
    pub paths: Vec<Vec<usize>>,
}

struct Builder {
    g: SignedMultigraph,
}

impl Builder {
    fn new() -> Self {
        Builder {
            g: SignedMultigraph::new(),
        }
    }

    fn vertex(&mut self, name: String) -> Result<usize> {
        self.g.add_vertex(name)
    }

    fn edge(&mut self, u: usize, v: usize) -> Result<usize> {
        let id = format!("e{}", self.g.edge_count());
        self.g.add_edge(id, u, v, Parity::Even)
    }

    /// Copies child vertices (except `skip`) under `prefix`.
    fn import(&mut self, child: &SignedMultigraph, prefix: &str, skip: &[usize]) -> Result<Vec<Option<usize>>> {
        let mut map = vec![None; child.vertex_count()];
        for (v, slot) in map.iter_mut().enumerate() {
            if !skip.contains(&v) {
                *slot = Some(self.vertex(format!("{prefix}{}", child.vertex_id(v)))?);
            }
        }
        Ok(map)
    }

    /// Copies child edges whose ends both survive.
    fn import_edges(&mut self, child: &SignedMultigraph, map: &[Option<usize>]) -> Result<()> {
        for e in child.edges() {
            if let (Some(u), Some(v)) = (map[e.u], map[e.v]) {
                self.edge(u, v)?;
            }
        }
        Ok(())
    }
}

fn leaf(recipe: &Recipe, g: SignedMultigraph) -> Realized {
    Realized {
        recipe: recipe.clone(),
        graph: g,
        children: Vec::new(),
        vmaps: Vec::new(),
        added: Vec::new(),
        pivots: Vec::new(),
        paths: Vec::new(),
    }
}

fn neighbours_mapped(g: &SignedMultigraph, v: usize, map: &[Option<usize>]) -> Result<Vec<usize>> {
    g.neighbors(v)
        .into_iter()
        .map(|x| map[x].ok_or_else(|| Error::Precondition("twin vertices are adjacent".into())))
        .collect()
}

/// Realizes the node from already-realized children, without checking
/// any hypotheses beyond what construction itself needs.
pub(crate) fn realize_node(recipe: &Recipe, children: Vec<Realized>) -> Result<Realized> {
    let mut b = Builder::new();
    match recipe {
        Recipe::CompleteBipartite { n, m } | Recipe::CompleteBipartiteMinusC4 { n, m, .. } => {
            let a: Vec<usize> = (0..*n).map(|i| b.vertex(format!("a{i}"))).collect::<Result<_>>()?;
            let bb: Vec<usize> = (0..*m).map(|j| b.vertex(format!("b{j}"))).collect::<Result<_>>()?;
            let deleted = match recipe {
                Recipe::CompleteBipartiteMinusC4 { deleted, .. } => Some(*deleted),
                _ => None,
            };
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in bb.iter().enumerate() {
                    if let Some(d) = deleted {
                        if (i == d[0] || i == d[1]) && (j == d[2] || j == d[3]) {
                            continue;
                        }
                    }
                    b.edge(x, y)?;
                }
            }
            Ok(leaf(recipe, b.g))
        }
        Recipe::K5PlusM { m, pair } => {
            for i in 0..5 {
                b.vertex(i.to_string())?;
            }
            for i in 0..5 {
                for j in i + 1..5 {
                    b.edge(i, j)?;
                }
            }
            if pair[0] >= 5 || pair[1] >= 5 || pair[0] == pair[1] {
                return Err(Error::Precondition("K5PlusM pair must be two distinct vertices of 0..5".into()));
            }
            for _ in 0..*m {
                b.edge(pair[0], pair[1])?;
            }
            Ok(leaf(recipe, b.g))
        }
        Recipe::CompleteMultipartite { parts } => {
            let mut groups = Vec::new();
            for (i, &size) in parts.iter().enumerate() {
                groups.push((0..size).map(|j| b.vertex(format!("p{i}.{j}"))).collect::<Result<Vec<_>>>()?);
            }
            for i in 0..groups.len() {
                for j in i + 1..groups.len() {
                    for &x in &groups[i] {
                        for &y in &groups[j] {
                            b.edge(x, y)?;
                        }
                    }
                }
            }
            Ok(leaf(recipe, b.g))
        }
        Recipe::OddClique { n } => {
            for i in 0..*n {
                b.vertex(i.to_string())?;
            }
            for i in 0..*n {
                for j in i + 1..*n {
                    b.edge(i, j)?;
                }
            }
            Ok(leaf(recipe, b.g))
        }
        Recipe::ExplicitBase { graph, .. } => {
            let g = SignedMultigraph::try_from(graph)?.unsigned();
            Ok(leaf(recipe, g))
        }
        Recipe::OddExpansion { v, s, .. } => {
            let child = &children[0];
            let cv = child.graph.vertex(v)?;
            let map = b.import(&child.graph, "g.", &[cv])?;
            b.import_edges(&child.graph, &map)?;
            let nbrs = neighbours_mapped(&child.graph, cv, &map)?;
            let clones: Vec<usize> = (0..*s).map(|j| b.vertex(format!("c.{j}"))).collect::<Result<_>>()?;
            for &c in &clones {
                for &x in &nbrs {
                    b.edge(c, x)?;
                }
            }
            Ok(Realized {
                recipe: recipe.clone(),
                graph: b.g,
                children,
                vmaps: vec![map],
                added: clones,
                pivots: vec![cv],
                paths: Vec::new(),
            })
        }
        Recipe::Apex { k, .. } => {
            let child = &children[0];
            let map = b.import(&child.graph, "g.", &[])?;
            b.import_edges(&child.graph, &map)?;
            let apex: Vec<usize> = (0..*k).map(|j| b.vertex(format!("x.{j}"))).collect::<Result<_>>()?;
            for &x in &apex {
                for y in map.iter().flatten() {
                    b.edge(*y, x)?;
                }
            }
            Ok(Realized {
                recipe: recipe.clone(),
                graph: b.g,
                children,
                vmaps: vec![map],
                added: apex,
                pivots: Vec::new(),
                paths: Vec::new(),
            })
        }
        Recipe::CliqueJoinK2 { .. } => {
            let child = &children[0];
            let map = b.import(&child.graph, "g.", &[])?;
            b.import_edges(&child.graph, &map)?;
            let p = b.vertex("k.0".into())?;
            let q = b.vertex("k.1".into())?;
            b.edge(p, q)?;
            for &x in &[p, q] {
                for y in map.iter().flatten() {
                    b.edge(*y, x)?;
                }
            }
            Ok(Realized {
                recipe: recipe.clone(),
                graph: b.g,
                children,
                vmaps: vec![map],
                added: vec![p, q],
                pivots: Vec::new(),
                paths: Vec::new(),
            })
        }
        Recipe::Substitute { v, .. } => {
            let (gc, hc) = (&children[0], &children[1]);
            let cv = gc.graph.vertex(v)?;
            let gmap = b.import(&gc.graph, "g.", &[cv])?;
            let hmap = b.import(&hc.graph, "h.", &[])?;
            b.import_edges(&gc.graph, &gmap)?;
            b.import_edges(&hc.graph, &hmap)?;
            let nbrs = neighbours_mapped(&gc.graph, cv, &gmap)?;
            for t in hmap.iter().flatten() {
                for &x in &nbrs {
                    b.edge(*t, x)?;
                }
            }
            Ok(Realized {
                recipe: recipe.clone(),
                graph: b.g,
                children,
                vmaps: vec![gmap, hmap],
                added: Vec::new(),
                pivots: vec![cv],
                paths: Vec::new(),
            })
        }
        Recipe::TwinSubstitute { twins, .. } => {
            let (gc, hc) = (&children[0], &children[1]);
            let cu = gc.graph.vertex(&twins[0])?;
            let cv = gc.graph.vertex(&twins[1])?;
            let gmap = b.import(&gc.graph, "g.", &[cu, cv])?;
            let hmap = b.import(&hc.graph, "h.", &[])?;
            b.import_edges(&gc.graph, &gmap)?;
            b.import_edges(&hc.graph, &hmap)?;
            let nbrs = neighbours_mapped(&gc.graph, cu, &gmap)?;
            for t in hmap.iter().flatten() {
                for &x in &nbrs {
                    b.edge(*t, x)?;
                }
            }
            Ok(Realized {
                recipe: recipe.clone(),
                graph: b.g,
                children,
                vmaps: vec![gmap, hmap],
                added: Vec::new(),
                pivots: vec![cu, cv],
                paths: Vec::new(),
            })
        }
        Recipe::Join { left, .. } => {
            let mut vmaps = Vec::new();
            for (i, c) in children.iter().enumerate() {
                let prefix = if i < left.len() {
                    format!("l{i}.")
                } else {
                    format!("r{}.", i - left.len())
                };
                let map = b.import(&c.graph, &prefix, &[])?;
                b.import_edges(&c.graph, &map)?;
                vmaps.push(map);
            }
            let side = |range: std::ops::Range<usize>| -> Vec<usize> {
                vmaps[range].iter().flat_map(|m| m.iter().flatten().copied()).collect()
            };
            let l = side(0..left.len());
            let r = side(left.len()..children.len());
            for &x in &l {
                for &y in &r {
                    b.edge(x, y)?;
                }
            }
            Ok(Realized {
                recipe: recipe.clone(),
                graph: b.g,
                children,
                vmaps,
                added: Vec::new(),
                pivots: Vec::new(),
                paths: Vec::new(),
            })
        }
        Recipe::Subdivide { lengths, .. } => {
            let child = &children[0];
            let profile = SubdivisionProfile {
                lengths: lengths.clone(),
            };
            let lens = profile.resolve(&child.graph)?;
            let map = b.import(&child.graph, "g.", &[])?;
            let mut paths = Vec::new();
            for (e, &len) in child.graph.edges().iter().zip(&lens) {
                let mut at = map[e.u].expect("kept");
                let end = map[e.v].expect("kept");
                let mut path = Vec::new();
                for k in 0..len {
                    let next = if k + 1 == len {
                        end
                    } else {
                        b.vertex(format!("s.{}.{}", e.id, k + 1))?
                    };
                    path.push(b.edge(at, next)?);
                    at = next;
                }
                paths.push(path);
            }
            Ok(Realized {
                recipe: recipe.clone(),
                graph: b.g,
                children,
                vmaps: vec![map],
                added: Vec::new(),
                pivots: Vec::new(),
                paths,
            })
        }
    }
}

pub fn realize_unchecked(recipe: &Recipe) -> Result<Realized> {
    let children = recipe
        .children()
        .into_iter()
        .map(|(_, c)| realize_unchecked(c))
        .collect::<Result<Vec<_>>>()?;
    realize_node(recipe, children)
}

/// Validates, then realizes. Fails with the first violated hypothesis.
pub fn realize(recipe: &Recipe) -> Result<Realized> {
    let report = validate_recipe(recipe);
    if let Some(fail) = report.first_failure() {
        return Err(Error::Precondition(fail.to_string()));
    }
    realize_unchecked(recipe)
}
