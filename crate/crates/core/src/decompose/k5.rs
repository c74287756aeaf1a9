use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::graph::{Parity, SignedMultigraph};

use super::work::{is_odd, odd_sum};

/// The ten edges of a K5, indexed by vertex labels `0..5`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct K5 {
    pub e: [[usize; 5]; 5],
}

impl K5 {
    /// One edge per label pair, supplied by `e`.
    pub fn new(mut e: impl FnMut(usize, usize) -> Result<usize>) -> Result<Self> {
        let mut t = [[usize::MAX; 5]; 5];
        for i in 0..5 {
            for j in i + 1..5 {
                let x = e(i, j)?;
                t[i][j] = x;
                t[j][i] = x;
            }
        }
        Ok(K5 { e: t })
    }

    fn at(&self, i: usize, j: usize) -> usize {
        self.e[i][j]
    }

    fn all(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(10);
        for i in 0..5 {
            for j in i + 1..5 {
                v.push(self.e[i][j]);
            }
        }
        v
    }
}

/// Hamiltonian cycles of K5 as label sequences starting at 0.
static HAMILTONIAN: Lazy<Vec<[usize; 5]>> = Lazy::new(|| {
    let mut out = Vec::new();
    for a in 1..5 {
        for b in 1..5 {
            for c in 1..5 {
                for d in 1..5 {
                    let s = [a, b, c, d];
                    let distinct = (0..4).all(|i| (i + 1..4).all(|j| s[i] != s[j]));
                    if distinct && a < d {
                        out.push([0, a, b, c, d]);
                    }
                }
            }
        }
    }
    out
});

fn ham_edges(k: &K5, h: &[usize; 5]) -> Vec<usize> {
    (0..5).map(|i| k.at(h[i], h[(i + 1) % 5])).collect()
}

/// An even Hamiltonian cycle and its complement, or `None` when K5 is bad
/// (equivalent to all edges odd).
pub(crate) fn k5_decompose(g: &SignedMultigraph, k: &K5) -> Option<Vec<Vec<usize>>> {
    for h in HAMILTONIAN.iter() {
        let c = ham_edges(k, h);
        if !odd_sum(g, &c) {
            let rest: Vec<usize> = k.all().into_iter().filter(|e| !c.contains(e)).collect();
            if !odd_sum(g, &rest) {
                return Some(vec![c, rest]);
            }
        }
    }
    None
}

pub(crate) fn k5_bad(g: &SignedMultigraph, k: &K5) -> bool {
    k5_decompose(g, k).is_none()
}

/// Figure cycles for K5 with two parallels on `t w`, labels `t a u b w` =
/// `0..5`; `E1`, `E2` stand for the parallels, the pair `(0, 4)` for the
/// straight `t w` edge.
const E1: usize = 100;
const E2: usize = 101;

/// Parallels even after re-signing the K5 part to all odd.
pub(crate) const FIGURE_EVEN: [&[usize]; 3] = [&[0, 1, 2, 3, 4, E1], &[0, 2, 4, E2], &[1, 3, 0, 4]];
/// Parallels odd after re-signing the K5 part to all odd.
pub(crate) const FIGURE_ODD: [&[usize]; 3] = [&[0, 1, 2, 4, E1], &[0, 2, 3, 4, E2], &[1, 3, 0, 4]];

/// Walks a figure cycle: consecutive labels are K5 edges; a parallel marker
/// closes the walk from the label before it back to the start.
fn figure_edges(k: &K5, e1: usize, e2: usize, seq: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let labels: Vec<usize> = seq.iter().copied().filter(|&x| x < 5).collect();
    for w in labels.windows(2) {
        out.push(k.at(w[0], w[1]));
    }
    match seq.last() {
        Some(&E1) => out.push(e1),
        Some(&E2) => out.push(e2),
        _ => out.push(k.at(*labels.last().expect("non-empty"), labels[0])),
    }
    out
}

/// K5 with parallel edges on `t w`. `k` holds the K5 part with its own
/// `t w` edge at pair `(0, 4)`; `parallels` the extra edges. Labels are
/// `t a u b w`.
pub(crate) fn k5plus(g: &SignedMultigraph, k: &K5, parallels: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut tw: Vec<usize> = parallels.to_vec();
    tw.push(k.at(0, 4));
    let mut out = Vec::new();
    let same_pair = |tw: &[usize]| -> Option<(usize, usize)> {
        for i in 0..tw.len() {
            for j in i + 1..tw.len() {
                if is_odd(g, tw[i]) == is_odd(g, tw[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    };
    while tw.len() > 3 {
        let (i, j) = same_pair(&tw).expect("four edges have a same-sign pair");
        out.push(vec![tw[i], tw[j]]);
        tw.remove(j);
        tw.remove(i);
    }
    if tw.len() != 3 {
        return Err(Error::Internal("K5 plus parallels needs an even number of parallels".into()));
    }
    let (i, j) = same_pair(&tw).expect("three edges have a same-sign pair");
    let (e1, e2) = (tw[i], tw[j]);
    let straight = tw[3 - i - j];
    let mut kk = *k;
    kk.e[0][4] = straight;
    kk.e[4][0] = straight;
    if let Some(c) = k5_decompose(g, &kk) {
        out.extend(c);
        out.push(vec![e1, e2]);
        return Ok(out);
    }
    let odd_case = is_odd(g, e1) == is_odd(g, straight);
    let fig = if odd_case { FIGURE_ODD } else { FIGURE_EVEN };
    for seq in fig {
        let c = figure_edges(&kk, e1, e2, seq);
        if odd_sum(g, &c) {
            return Err(Error::Internal("K5 figure cycle is odd".into()));
        }
        out.push(c);
    }
    Ok(out)
}

fn local(parallel_odd: bool) -> (SignedMultigraph, K5, [usize; 2]) {
    let mut g = SignedMultigraph::new();
    for i in 0..5 {
        g.add_vertex(i.to_string()).expect("fresh");
    }
    let k = K5::new(|i, j| Ok(g.add_edge(format!("{i}{j}"), i, j, Parity::Odd).expect("fresh"))).expect("infallible");
    let sign = Parity::from_odd(parallel_odd);
    let p = [g.add_edge("p0", 0, 4, sign).expect("fresh"), g.add_edge("p1", 0, 4, sign).expect("fresh")];
    (g, k, p)
}

/// Both figure cases decompose their own configuration.
pub(crate) fn figure_check() -> std::result::Result<(), String> {
    for odd in [false, true] {
        let (g, k, p) = local(odd);
        let d = k5plus(&g, &k, &p).map_err(|e| e.to_string())?;
        let mut seen: Vec<usize> = d.concat();
        seen.sort_unstable();
        if seen != (0..12).collect::<Vec<_>>() || d.iter().any(|c| odd_sum(&g, c)) {
            return Err(format!("K5 plus two parallels, parallels {}: figure is not an even decomposition", if odd { "odd" } else { "even" }));
        }
    }
    Ok(())
}
