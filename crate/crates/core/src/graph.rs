//! Signed multigraphs and the signature algebra on top of them.
//!
//! A [`SignedMultigraph`] stores a sign per edge, so parallel edges carry
//! independent signs. Vertices and edges are addressed by dense indices
//! internally; the opaque string ids only matter at the file boundary.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parity of an edge (its sign), of a vertex, or of a cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_odd(odd: bool) -> Self {
        if odd {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Self {
        Parity::from_odd(!self.is_odd())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub u: usize,
    pub v: usize,
    pub sign: Parity,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn is_odd(&self) -> bool {
        self.sign.is_odd()
    }
}

/// A loopless multigraph with a sign on every edge.
#[derive(Clone, Debug, Default)]
pub struct SignedMultigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    vertex_index: HashMap<String, usize>,
    edge_index: HashMap<String, usize>,
    incidence: Vec<Vec<usize>>,
}

impl PartialEq for SignedMultigraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for SignedMultigraph {}

/// A vertex subset together with the edges it cuts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub side: Vec<usize>,
    pub edges: Vec<usize>,
}

/// Canonical representative of a signature class: the equivalent signature
/// that avoids a fixed breadth-first spanning forest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignatureClass {
    /// Edge indices of the spanning forest the representative avoids.
    pub forest: Vec<usize>,
    /// Odd edges of the representative, ascending.
    pub odd: Vec<usize>,
}

impl SignatureClass {
    pub fn odd_mask(&self, edge_count: usize) -> Vec<bool> {
        let mut mask = vec![false; edge_count];
        for &e in &self.odd {
            mask[e] = true;
        }
        mask
    }

    pub fn parity(&self) -> Parity {
        Parity::from_odd(self.odd.len() % 2 == 1)
    }
}

impl SignedMultigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex ids and `(id, u, v, sign)` records.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String, String, Parity)>,
    {
        let mut g = Self::new();
        for v in vertices {
            g.add_vertex(v)?;
        }
        for (id, u, v, sign) in edges {
            let u = g.vertex(&u)?;
            let v = g.vertex(&v)?;
            g.add_edge(id, u, v, sign)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) -> Result<usize> {
        let id = id.into();
        if self.vertex_index.contains_key(&id) {
            return Err(Error::DuplicateVertex(id));
        }
        let idx = self.vertices.len();
        self.vertex_index.insert(id.clone(), idx);
        self.vertices.push(id);
        self.incidence.push(Vec::new());
        Ok(idx)
    }

    pub fn add_edge(&mut self, id: impl Into<String>, u: usize, v: usize, sign: Parity) -> Result<usize> {
        let id = id.into();
        if u >= self.vertices.len() {
            return Err(Error::UnknownVertex(format!("#{u}")));
        }
        if v >= self.vertices.len() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        if u == v {
            return Err(Error::Loop(id));
        }
        if self.edge_index.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        let idx = self.edges.len();
        self.edge_index.insert(id.clone(), idx);
        self.edges.push(Edge { id, u, v, sign });
        self.incidence[u].push(idx);
        self.incidence[v].push(idx);
        Ok(idx)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex(&self, id: &str) -> Result<usize> {
        self.vertex_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn edge_by_id(&self, id: &str) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownEdge(id.to_string()))
    }

    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Distinct neighbours of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut n: Vec<usize> = self.incidence[v].iter().map(|&e| self.edges[e].other(v)).collect();
        n.sort_unstable();
        n.dedup();
        n
    }

    pub fn ends(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.u, e.v)).collect()
    }

    pub fn edges_between(&self, a: usize, b: usize) -> Vec<usize> {
        self.incidence[a]
            .iter()
            .copied()
            .filter(|&e| self.edges[e].other(a) == b)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|e| seen.insert((e.u.min(e.v), e.u.max(e.v))))
    }

    pub fn odd_mask(&self) -> Vec<bool> {
        self.edges.iter().map(Edge::is_odd).collect()
    }

    /// Odd edge indices, ascending.
    pub fn signature(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].is_odd()).collect()
    }

    pub fn signature_size(&self) -> usize {
        self.edges.iter().filter(|e| e.is_odd()).count()
    }

    /// Same graph with every edge sign replaced from `odd`.
    pub fn with_signature(&self, odd: &[bool]) -> Result<Self> {
        if odd.len() != self.edges.len() {
            return Err(Error::DomainMismatch {
                expected: self.edges.len(),
                got: odd.len(),
            });
        }
        let mut g = self.clone();
        for (e, &o) in g.edges.iter_mut().zip(odd) {
            e.sign = Parity::from_odd(o);
        }
        Ok(g)
    }

    /// Same graph with the given edges odd and all others even.
    pub fn with_odd_edges(&self, odd_edges: &[usize]) -> Result<Self> {
        let mut mask = vec![false; self.edges.len()];
        for &e in odd_edges {
            if e >= mask.len() {
                return Err(Error::UnknownEdge(format!("#{e}")));
            }
            mask[e] = true;
        }
        self.with_signature(&mask)
    }

    pub fn unsigned(&self) -> Self {
        let mut g = self.clone();
        for e in &mut g.edges {
            e.sign = Parity::Even;
        }
        g
    }

    pub fn vertex_parity(&self, v: usize) -> Result<Parity> {
        if v >= self.vertices.len() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        let odd = self.incidence[v].iter().filter(|&&e| self.edges[e].is_odd()).count();
        Ok(Parity::from_odd(odd % 2 == 1))
    }

    /// Every vertex has even degree. Connectivity is not checked.
    pub fn is_eulerian(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() % 2 == 0)
    }

    /// Number of connected components, isolated vertices included.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertices.len()];
        let mut count = 0;
        for s in 0..self.vertices.len() {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &e in &self.incidence[x] {
                    let y = self.edges[e].other(x);
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        count
    }

    pub fn cycle_space_dimension(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertices.len()
    }

    pub fn cut(&self, side: &[usize]) -> Result<Cut> {
        let mut inside = vec![false; self.vertices.len()];
        for &x in side {
            if x >= inside.len() {
                return Err(Error::UnknownVertex(format!("#{x}")));
            }
            inside[x] = true;
        }
        let edges = (0..self.edges.len())
            .filter(|&e| inside[self.edges[e].u] != inside[self.edges[e].v])
            .collect();
        let mut side = side.to_vec();
        side.sort_unstable();
        side.dedup();
        Ok(Cut { side, edges })
    }

    /// Flips the sign of every edge in the cut induced by `side`.
    pub fn resign(&self, side: &[usize]) -> Result<Self> {
        let cut = self.cut(side)?;
        let mut g = self.clone();
        for e in cut.edges {
            g.edges[e].sign = g.edges[e].sign.flip();
        }
        Ok(g)
    }

    /// Breadth-first spanning forest: roots are taken in vertex order and
    /// each vertex scans its incident edges in edge-index order.
    pub fn spanning_forest(&self) -> Vec<usize> {
        let mut seen = vec![false; self.vertices.len()];
        let mut forest = Vec::new();
        for root in 0..self.vertices.len() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let mut inc = self.incidence[x].clone();
                inc.sort_unstable();
                for e in inc {
                    let y = self.edges[e].other(x);
                    if !seen[y] {
                        seen[y] = true;
                        forest.push(e);
                        queue.push_back(y);
                    }
                }
            }
        }
        forest.sort_unstable();
        forest
    }

    /// Re-signs so that the canonical spanning forest carries no odd edge.
    pub fn normalize_signature(&self) -> (Self, SignatureClass) {
        let forest = self.spanning_forest();
        let mut in_forest = vec![false; self.edges.len()];
        for &e in &forest {
            in_forest[e] = true;
        }
        // potential[v] = parity of the forest path from v's root
        let mut potential = vec![false; self.vertices.len()];
        let mut seen = vec![false; self.vertices.len()];
        for root in 0..self.vertices.len() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &e in &self.incidence[x] {
                    if !in_forest[e] {
                        continue;
                    }
                    let y = self.edges[e].other(x);
                    if !seen[y] {
                        seen[y] = true;
                        potential[y] = potential[x] ^ self.edges[e].is_odd();
                        queue.push_back(y);
                    }
                }
            }
        }
        let mut g = self.clone();
        for e in &mut g.edges {
            let odd = e.is_odd() ^ potential[e.u] ^ potential[e.v];
            e.sign = Parity::from_odd(odd);
        }
        let odd = g.signature();
        (g, SignatureClass { forest, odd })
    }

    /// True iff the symmetric difference of the two odd-edge sets is a cut,
    /// decided by 2-colouring against the difference.
    pub fn is_equivalent(&self, other: &[bool]) -> Result<bool> {
        if other.len() != self.edges.len() {
            return Err(Error::DomainMismatch {
                expected: self.edges.len(),
                got: other.len(),
            });
        }
        let mut colour: Vec<Option<bool>> = vec![None; self.vertices.len()];
        for s in 0..self.vertices.len() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let cx = colour[x].expect("coloured");
                for &e in &self.incidence[x] {
                    let y = self.edges[e].other(x);
                    let want = cx ^ (self.edges[e].is_odd() ^ other[e]);
                    match colour[y] {
                        None => {
                            colour[y] = Some(want);
                            stack.push(y);
                        }
                        Some(c) if c != want => return Ok(false),
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(true)
    }

    /// Vertex sequence of a simple cycle given as a closed walk of edge
    /// indices, starting at the vertex shared by the last and first edge.
    pub fn cycle_vertices(&self, cycle: &[usize]) -> Result<Vec<usize>> {
        walk_cycle(&self.ends(), cycle).map_err(Error::NotACycle)
    }

    pub fn cycle_parity(&self, cycle: &[usize]) -> Result<Parity> {
        if let Some(&bad) = cycle.iter().find(|&&e| e >= self.edges.len()) {
            return Err(Error::UnknownEdge(format!("#{bad}")));
        }
        self.cycle_vertices(cycle)?;
        let odd = cycle.iter().filter(|&&e| self.edges[e].is_odd()).count();
        Ok(Parity::from_odd(odd % 2 == 1))
    }

    /// Orders an unordered edge set forming one simple cycle into a closed walk.
    pub fn order_cycle(&self, edges: &[usize]) -> Result<Vec<usize>> {
        order_cycle(&self.ends(), edges).map_err(Error::NotACycle)
    }
}

/// Checks that `cycle` is a closed walk with no repeated edge or vertex and
/// returns its vertices in walk order.
pub(crate) fn walk_cycle(ends: &[(usize, usize)], cycle: &[usize]) -> std::result::Result<Vec<usize>, String> {
    if cycle.len() < 2 {
        return Err(format!("length {} is below 2", cycle.len()));
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err("repeated edge".to_string());
    }
    let (a, b) = ends[cycle[0]];
    'start: for start in [a, b] {
        let mut at = start;
        let mut seen = Vec::with_capacity(cycle.len());
        for &e in cycle {
            let (u, v) = ends[e];
            let next = if u == at {
                v
            } else if v == at {
                u
            } else {
                continue 'start;
            };
            seen.push(at);
            at = next;
        }
        if at != start {
            continue;
        }
        let mut uniq = seen.clone();
        uniq.sort_unstable();
        uniq.dedup();
        if uniq.len() != seen.len() {
            return Err("repeated vertex".to_string());
        }
        return Ok(seen);
    }
    Err("consecutive edges do not share an endpoint or the walk is not closed".to_string())
}

pub(crate) fn order_cycle(ends: &[(usize, usize)], edges: &[usize]) -> std::result::Result<Vec<usize>, String> {
    if edges.len() < 2 {
        return Err(format!("length {} is below 2", edges.len()));
    }
    let mut by_vertex: HashMap<usize, Vec<usize>> = HashMap::new();
    for &e in edges {
        let (u, v) = ends[e];
        by_vertex.entry(u).or_default().push(e);
        by_vertex.entry(v).or_default().push(e);
    }
    if by_vertex.values().any(|inc| inc.len() != 2) {
        return Err("edge set is not 2-regular".to_string());
    }
    let first = *edges.iter().min().expect("non-empty");
    let (start, mut at) = ends[first];
    let mut order = vec![first];
    let mut prev = first;
    while at != start {
        let inc = &by_vertex[&at];
        let next = if inc[0] == prev { inc[1] } else { inc[0] };
        order.push(next);
        let (u, v) = ends[next];
        at = if u == at { v } else { u };
        prev = next;
        if order.len() > edges.len() {
            return Err("walk does not close".to_string());
        }
    }
    if order.len() != edges.len() {
        return Err("edge set has more than one component".to_string());
    }
    Ok(order)
}

/// On-disk graph format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: String,
    pub u: String,
    pub v: String,
    pub sign: Parity,
}

impl From<&SignedMultigraph> for GraphFile {
    fn from(g: &SignedMultigraph) -> Self {
        GraphFile {
            vertices: g.vertices.clone(),
            edges: g
                .edges
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id.clone(),
                    u: g.vertices[e.u].clone(),
                    v: g.vertices[e.v].clone(),
                    sign: e.sign,
                })
                .collect(),
        }
    }
}

impl TryFrom<&GraphFile> for SignedMultigraph {
    type Error = Error;

    fn try_from(f: &GraphFile) -> Result<Self> {
        SignedMultigraph::from_parts(
            f.vertices.iter().cloned(),
            f.edges
                .iter()
                .map(|e| (e.id.clone(), e.u.clone(), e.v.clone(), e.sign)),
        )
    }
}

impl SignedMultigraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&GraphFile::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(text)?;
        SignedMultigraph::try_from(&file)
    }
}

/// Small constructors used by tests, examples and the CLI.
pub mod families {
    use super::{Parity, SignedMultigraph};

    fn build(n: usize, pairs: &[(usize, usize)], sign: Parity) -> SignedMultigraph {
        let mut g = SignedMultigraph::new();
        for i in 0..n {
            g.add_vertex(i.to_string()).expect("fresh vertex");
        }
        for (k, &(u, v)) in pairs.iter().enumerate() {
            g.add_edge(format!("e{k}"), u, v, sign).expect("valid edge");
        }
        g
    }

    pub fn complete(n: usize, sign: Parity) -> SignedMultigraph {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        build(n, &pairs, sign)
    }

    /// Parts `0..n` and `n..n+m`.
    pub fn complete_bipartite(n: usize, m: usize, sign: Parity) -> SignedMultigraph {
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in 0..m {
                pairs.push((i, n + j));
            }
        }
        build(n + m, &pairs, sign)
    }

    pub fn cycle(n: usize, sign: Parity) -> SignedMultigraph {
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        build(n, &pairs, sign)
    }

    pub fn path(n: usize, sign: Parity) -> SignedMultigraph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        build(n, &pairs, sign)
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)], sign: Parity) -> SignedMultigraph {
        build(n, pairs, sign)
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn vertex_parity_examples() {
        let k5 = complete(5, Parity::Odd);
        for v in 0..5 {
            assert_eq!(k5.vertex_parity(v).unwrap(), Parity::Even);
        }
        let k22 = complete_bipartite(2, 2, Parity::Even);
        let g = k22.with_odd_edges(&[0]).unwrap();
        let (u, v) = (g.edge(0).u, g.edge(0).v);
        assert_eq!(g.vertex_parity(u).unwrap(), Parity::Odd);
        assert_eq!(g.vertex_parity(v).unwrap(), Parity::Odd);
        assert!(matches!(g.vertex_parity(9), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn eulerian_examples() {
        assert!(complete(5, Parity::Even).is_eulerian());
        assert!(!complete(4, Parity::Even).is_eulerian());
        assert!(!complete_bipartite(2, 3, Parity::Even).is_eulerian());
    }

    #[test]
    fn loops_and_duplicates_are_rejected() {
        let mut g = SignedMultigraph::new();
        g.add_vertex("a").unwrap();
        g.add_vertex("b").unwrap();
        assert!(matches!(g.add_edge("e", 0, 0, Parity::Odd), Err(Error::Loop(_))));
        g.add_edge("e", 0, 1, Parity::Odd).unwrap();
        g.add_edge("f", 0, 1, Parity::Even).unwrap();
        assert!(matches!(g.add_edge("e", 0, 1, Parity::Odd), Err(Error::DuplicateEdge(_))));
        assert!(matches!(g.add_vertex("a"), Err(Error::DuplicateVertex(_))));
        assert!(!g.is_simple());
    }

    #[test]
    fn resign_examples() {
        let k5 = complete(5, Parity::Odd);
        assert_eq!(k5.resign(&[]).unwrap(), k5);
        let r = k5.resign(&[0]).unwrap();
        assert_eq!(r.signature_size(), 6);
        assert_eq!(r.resign(&[0]).unwrap(), k5);
        assert!(k5.is_equivalent(&r.odd_mask()).unwrap());
    }

    #[test]
    fn normalize_examples() {
        let tree = path(6, Parity::Odd);
        let (n, class) = tree.normalize_signature();
        assert_eq!(n.signature_size(), 0);
        assert!(class.odd.is_empty());

        let k5 = complete(5, Parity::Odd);
        let (n, class) = k5.normalize_signature();
        // the breadth-first forest from vertex 0 is the star at 0
        assert_eq!(class.forest, vec![0, 1, 2, 3]);
        assert_eq!(class.odd, vec![4, 5, 6, 7, 8, 9]);
        assert!(k5.is_equivalent(&n.odd_mask()).unwrap());
        assert_eq!(n.normalize_signature().0, n);
    }

    #[test]
    fn equivalence_examples() {
        let k5 = complete(5, Parity::Odd);
        assert!(k5.is_equivalent(&k5.odd_mask()).unwrap());
        assert!(!k5.is_equivalent(&[false; 10]).unwrap());
        assert!(matches!(
            k5.is_equivalent(&[false; 3]),
            Err(Error::DomainMismatch { .. })
        ));
    }

    #[test]
    fn cycle_parity_examples() {
        let c4 = cycle(4, Parity::Even);
        assert_eq!(c4.cycle_parity(&[0, 1, 2, 3]).unwrap(), Parity::Even);
        let k5 = complete(5, Parity::Odd);
        // 0-1-2-3-4-0
        let e = |a: usize, b: usize| k5.edges_between(a, b)[0];
        let five = [e(0, 1), e(1, 2), e(2, 3), e(3, 4), e(4, 0)];
        assert_eq!(k5.cycle_parity(&five).unwrap(), Parity::Odd);
        let two = from_pairs(2, &[(0, 1), (0, 1)], Parity::Odd);
        assert_eq!(two.cycle_parity(&[0, 1]).unwrap(), Parity::Even);
        assert!(matches!(k5.cycle_parity(&[e(0, 1), e(2, 3), e(3, 4)]), Err(Error::NotACycle(_))));
        // figure-eight through vertex 0 repeats a vertex
        let eight = [e(0, 1), e(1, 2), e(2, 0), e(0, 3), e(3, 4), e(4, 0)];
        assert!(matches!(k5.cycle_parity(&eight), Err(Error::NotACycle(_))));
        assert!(matches!(k5.cycle_parity(&[e(0, 1), e(0, 1)]), Err(Error::NotACycle(_))));
    }

    #[test]
    fn order_cycle_walks_edge_sets() {
        let k5 = complete(5, Parity::Odd);
        let e = |a: usize, b: usize| k5.edges_between(a, b)[0];
        let set = [e(3, 4), e(0, 1), e(4, 0), e(1, 3)];
        let walk = k5.order_cycle(&set).unwrap();
        assert_eq!(walk.len(), 4);
        assert!(k5.cycle_vertices(&walk).is_ok());
        assert!(k5.order_cycle(&[e(0, 1), e(1, 2), e(3, 4), e(4, 2)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = complete_bipartite(2, 2, Parity::Even).with_odd_edges(&[1, 2]).unwrap();
        let text = g.to_json();
        assert_eq!(SignedMultigraph::from_json(&text).unwrap(), g);
        let raw = r#"{"vertices":["a","b"],"edges":[{"id":"e1","u":"a","v":"b","sign":"odd"}]}"#;
        let h = SignedMultigraph::from_json(raw).unwrap();
        assert_eq!(h.signature(), vec![0]);
        let bad = r#"{"vertices":["a"],"edges":[{"id":"e1","u":"a","v":"z","sign":"odd"}]}"#;
        assert!(matches!(SignedMultigraph::from_json(bad), Err(Error::UnknownVertex(_))));
    }
}
