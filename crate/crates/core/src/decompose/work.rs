use crate::error::{Error, Result};
use crate::graph::{order_cycle, Parity, SignedMultigraph};

/// A signed graph derived from a parent: every edge stands for a set of
/// parent edges (usually a path), and carries that set's parity.
pub(crate) struct Work {
    pub g: SignedMultigraph,
    pub lift: Vec<Vec<usize>>,
}

impl Work {
    /// Starts with all parent vertices and no edges.
    pub fn new(parent: &SignedMultigraph) -> Self {
        let mut g = SignedMultigraph::new();
        for v in parent.vertices() {
            g.add_vertex(v.clone()).expect("parent ids are unique");
        }
        Work { g, lift: Vec::new() }
    }

    pub fn vertex(&mut self, name: &str) -> Result<usize> {
        self.g.add_vertex(format!("~{name}"))
    }

    pub fn edge(&mut self, parent: &SignedMultigraph, u: usize, v: usize, lift: Vec<usize>) -> Result<usize> {
        let odd = odd_sum(parent, &lift);
        let id = format!("w{}", self.g.edge_count());
        let e = self.g.add_edge(id, u, v, Parity::from_odd(odd))?;
        self.lift.push(lift);
        Ok(e)
    }

    pub fn copy(&mut self, parent: &SignedMultigraph, e: usize) -> Result<usize> {
        let ed = parent.edge(e);
        self.edge(parent, ed.u, ed.v, vec![e])
    }

    /// Copies parent edges, returning the parent-to-work edge map.
    pub fn copy_all(&mut self, parent: &SignedMultigraph, edges: &[usize]) -> Result<Vec<Option<usize>>> {
        let mut map = vec![None; parent.edge_count()];
        for &e in edges {
            map[e] = Some(self.copy(parent, e)?);
        }
        Ok(map)
    }

    pub fn lift_cycles(&self, cycles: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        cycles
            .into_iter()
            .map(|c| c.into_iter().flat_map(|e| self.lift[e].iter().copied()).collect())
            .collect()
    }
}

pub(crate) fn odd_sum(g: &SignedMultigraph, edges: &[usize]) -> bool {
    edges.iter().filter(|&&e| g.edge(e).is_odd()).count() % 2 == 1
}

pub(crate) fn is_odd(g: &SignedMultigraph, e: usize) -> bool {
    g.edge(e).is_odd()
}

/// The unique edge joining `a` and `b`.
pub(crate) fn edge_between(g: &SignedMultigraph, a: usize, b: usize) -> Result<usize> {
    match g.edges_between(a, b).as_slice() {
        [e] => Ok(*e),
        [] => Err(Error::Internal(format!("no edge {}-{}", g.vertex_id(a), g.vertex_id(b)))),
        _ => Err(Error::Internal(format!("parallel edges {}-{}", g.vertex_id(a), g.vertex_id(b)))),
    }
}

/// Parity of the edge `ab`.
pub(crate) fn odd_at(g: &SignedMultigraph, a: usize, b: usize) -> Result<bool> {
    Ok(is_odd(g, edge_between(g, a, b)?))
}

/// Edges of the closed walk through `seq`.
pub(crate) fn cycle_on(g: &SignedMultigraph, seq: &[usize]) -> Result<Vec<usize>> {
    (0..seq.len()).map(|i| edge_between(g, seq[i], seq[(i + 1) % seq.len()])).collect()
}

/// Edges of the open walk through `seq`.
pub(crate) fn path_on(g: &SignedMultigraph, seq: &[usize]) -> Result<Vec<usize>> {
    seq.windows(2).map(|w| edge_between(g, w[0], w[1])).collect()
}

/// A cycle given by its edges, walked from one of its vertices.
#[derive(Clone, Debug)]
pub(crate) struct Walk {
    /// `vertices[i]` to `vertices[i + 1]` along `edges[i]`, wrapping.
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Walk {
    pub fn new(g: &SignedMultigraph, cycle: &[usize]) -> Result<Self> {
        let ends = g.ends();
        let edges = order_cycle(&ends, cycle).map_err(Error::Internal)?;
        let (a, b) = ends[edges[0]];
        let (c, d) = ends[edges[1 % edges.len()]];
        let mut at = if edges.len() == 2 || a == c || a == d { b } else { a };
        let mut vertices = Vec::with_capacity(edges.len());
        for &e in &edges {
            vertices.push(at);
            let (u, v) = ends[e];
            at = if u == at { v } else { u };
        }
        Ok(Walk { vertices, edges })
    }

    /// Rotated to start at `v`.
    pub fn from(&self, v: usize) -> Result<Walk> {
        let i = self
            .vertices
            .iter()
            .position(|&x| x == v)
            .ok_or_else(|| Error::Internal("vertex not on cycle".into()))?;
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.rotate_left(i);
        edges.rotate_left(i);
        Ok(Walk { vertices, edges })
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// The two paths between `p` and `q`: from `p` forward to `q`, and
    /// from `q` forward back to `p`.
    pub fn arcs(&self, p: usize, q: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        let w = self.from(p)?;
        let j = w
            .vertices
            .iter()
            .position(|&x| x == q)
            .ok_or_else(|| Error::Internal("vertex not on cycle".into()))?;
        Ok((w.edges[..j].to_vec(), w.edges[j..].to_vec()))
    }
}

/// Copy of `g` with the sign of `e` flipped.
pub(crate) fn flipped(g: &SignedMultigraph, e: usize) -> Result<SignedMultigraph> {
    let mut odd = g.odd_mask();
    odd[e] = !odd[e];
    g.with_signature(&odd)
}

pub(crate) fn minus(all: &[usize], drop: &[usize]) -> Vec<usize> {
    all.iter().copied().filter(|x| !drop.contains(x)).collect()
}
