//! Exact search for an even-cycle decomposition of a small edge set.
//!
//! Used for the small unions of cycles the constructions leave behind, and
//! for explicit bases. Degree-2 chains are suppressed first, so the search
//! runs over branch vertices only.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::graph::SignedMultigraph;

struct Chain {
    a: usize,
    b: usize,
    edges: Vec<usize>,
    odd: bool,
}

/// Splits `edges` into even cycles, or `None` when impossible (or when the
/// suppressed graph has more than 64 chains).
pub(crate) fn even_split(g: &SignedMultigraph, edges: &[usize]) -> Option<Vec<Vec<usize>>> {
    let mut inc: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &e in edges {
        let ed = g.edge(e);
        inc.entry(ed.u).or_default().push(e);
        inc.entry(ed.v).or_default().push(e);
    }
    if inc.values().any(|l| l.len() % 2 == 1) {
        return None;
    }
    let branch = |v: usize| inc[&v].len() != 2;
    let mut used = BTreeSet::new();
    let mut chains = Vec::new();
    let mut forced = Vec::new();
    for (&v, list) in &inc {
        if !branch(v) {
            continue;
        }
        for &e in list {
            if used.contains(&e) {
                continue;
            }
            let (mut at, mut cur) = (v, e);
            let mut path = Vec::new();
            loop {
                used.insert(cur);
                path.push(cur);
                at = g.edge(cur).other(at);
                if branch(at) {
                    break;
                }
                cur = *inc[&at].iter().find(|&&f| f != cur).expect("degree two");
            }
            let odd = path.iter().filter(|&&f| g.edge(f).is_odd()).count() % 2 == 1;
            if at == v {
                forced.push((path, odd));
            } else {
                chains.push(Chain { a: v, b: at, edges: path, odd });
            }
        }
    }
    let mut rest: Vec<usize> = edges.iter().copied().filter(|e| !used.contains(e)).collect();
    rest.sort_unstable();
    for &e in &rest {
        if used.contains(&e) {
            continue;
        }
        let start = g.edge(e).u;
        let (mut at, mut cur) = (start, e);
        let mut path = Vec::new();
        loop {
            used.insert(cur);
            path.push(cur);
            at = g.edge(cur).other(at);
            if at == start {
                break;
            }
            cur = *inc[&at].iter().find(|&&f| f != cur).expect("degree two");
        }
        let odd = path.iter().filter(|&&f| g.edge(f).is_odd()).count() % 2 == 1;
        forced.push((path, odd));
    }
    if forced.iter().any(|(_, odd)| *odd) || chains.len() > 64 {
        return None;
    }
    let mut out: Vec<Vec<usize>> = forced.into_iter().map(|(p, _)| p).collect();
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, c) in chains.iter().enumerate() {
        adj.entry(c.a).or_default().push(i);
        adj.entry(c.b).or_default().push(i);
    }
    let full = if chains.len() == 64 { u64::MAX } else { (1u64 << chains.len()) - 1 };
    let mut s = Search {
        chains: &chains,
        adj: &adj,
        full,
        failed: HashSet::new(),
        chosen: Vec::new(),
    };
    if !s.cover(0) {
        return None;
    }
    for mask in s.chosen {
        out.push((0..chains.len()).filter(|i| mask >> i & 1 == 1).flat_map(|i| chains[i].edges.iter().copied()).collect());
    }
    Some(out)
}

struct Search<'a> {
    chains: &'a [Chain],
    adj: &'a BTreeMap<usize, Vec<usize>>,
    full: u64,
    failed: HashSet<u64>,
    chosen: Vec<u64>,
}

impl Search<'_> {
    fn cover(&mut self, covered: u64) -> bool {
        if covered == self.full {
            return true;
        }
        if self.failed.contains(&covered) {
            return false;
        }
        let c0 = (!covered).trailing_zeros() as usize;
        let c = &self.chains[c0];
        let mut visited = vec![c.b];
        if self.extend(covered, c.b, c.a, 1u64 << c0, c.odd, &mut visited) {
            return true;
        }
        self.failed.insert(covered);
        false
    }

    /// Extends a path from `at` back to `target` over uncovered chains.
    fn extend(&mut self, covered: u64, at: usize, target: usize, mask: u64, odd: bool, visited: &mut Vec<usize>) -> bool {
        let Some(list) = self.adj.get(&at) else { return false };
        for &i in list {
            let bit = 1u64 << i;
            if (covered | mask) & bit != 0 {
                continue;
            }
            let ch = &self.chains[i];
            let next = if ch.a == at { ch.b } else { ch.a };
            let parity = odd ^ ch.odd;
            if next == target {
                if !parity {
                    self.chosen.push(mask | bit);
                    if self.cover(covered | mask | bit) {
                        return true;
                    }
                    self.chosen.pop();
                }
                continue;
            }
            if visited.contains(&next) {
                continue;
            }
            visited.push(next);
            if self.extend(covered, next, target, mask | bit, parity, visited) {
                return true;
            }
            visited.pop();
        }
        false
    }
}
