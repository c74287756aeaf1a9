use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::graph::{families, Parity, SignedMultigraph};

use super::split::even_split;
use super::work::{cycle_on, edge_between, is_odd, minus, odd_at, odd_sum};
use super::Ctx;

/// K_{2,n} on `{u, v}` and `xs`: 4-cycles `u x v y`, pairing the vertices
/// where the two edges differ in sign first.
pub(crate) fn k2n(g: &SignedMultigraph, u: usize, v: usize, xs: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut tagged = Vec::with_capacity(xs.len());
    for &x in xs {
        tagged.push((odd_at(g, u, x)? ^ odd_at(g, v, x)?, x));
    }
    if tagged.iter().filter(|t| t.0).count() % 2 == 1 || xs.len() % 2 == 1 {
        return Err(Error::Internal("K2,n block has odd weight".into()));
    }
    tagged.sort_by_key(|t| !t.0);
    tagged
        .chunks(2)
        .map(|p| cycle_on(g, &[u, p[0].1, v, p[1].1]))
        .collect()
}

/// A 4-cycle `a1 b1 a2 b2` of K_{A,B} with the given parity.
pub(crate) fn find_parity_four_cycle(g: &SignedMultigraph, a: &[usize], b: &[usize], target: bool) -> Result<[usize; 4]> {
    let a1 = a[0];
    let s = |x: usize, y: usize| -> Result<bool> { Ok(odd_at(g, x, y)? ^ odd_at(g, a1, y)?) };
    for &a2 in &a[1..] {
        let row: Vec<bool> = b.iter().map(|&y| s(a2, y)).collect::<Result<_>>()?;
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                if row[i] ^ row[j] == target {
                    return Ok([a1, b[i], a2, b[j]]);
                }
            }
        }
    }
    Err(Error::Internal(format!("no {} 4-cycle", if target { "odd" } else { "even" })))
}

/// K_{A,B} with both sides even and at least 2.
pub(crate) fn bipartite(g: &SignedMultigraph, a: &[usize], b: &[usize]) -> Result<Vec<Vec<usize>>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let [a1, b1, a2, b2] = find_parity_four_cycle(g, a, b, false)?;
    let mut out = vec![cycle_on(g, &[a1, b1, a2, b2])?];
    out.extend(minus_c4(g, a, b, [a1, a2], [b1, b2])?);
    Ok(out)
}

fn vertex_parity(g: &SignedMultigraph, x: usize, other: &[usize]) -> Result<bool> {
    let mut p = false;
    for &y in other {
        p ^= odd_at(g, x, y)?;
    }
    Ok(p)
}

/// First pair in `cands` with equal parity towards `other`.
fn equal_pair(g: &SignedMultigraph, cands: &[usize], other: &[usize]) -> Result<[usize; 2]> {
    let ps: Vec<bool> = cands.iter().map(|&x| vertex_parity(g, x, other)).collect::<Result<_>>()?;
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if ps[i] == ps[j] {
                return Ok([cands[i], cands[j]]);
            }
        }
    }
    Err(Error::Internal("no equal-parity pair".into()))
}

/// K_{A,B} minus the 4-cycle on `xa` (in A) and `yb` (in B).
pub(crate) fn minus_c4(g: &SignedMultigraph, a: &[usize], b: &[usize], xa: [usize; 2], yb: [usize; 2]) -> Result<Vec<Vec<usize>>> {
    if a.len() == 2 {
        return k2n(g, a[0], a[1], &minus(b, &yb));
    }
    if b.len() == 2 {
        return k2n(g, b[0], b[1], &minus(a, &xa));
    }
    if a.len() == 4 && b.len() == 4 {
        return base44(g, xa, minus(a, &xa), yb, minus(b, &yb));
    }
    let mut out = Vec::new();
    if b.len() >= 6 {
        let pair = equal_pair(g, &minus(b, &yb), a)?;
        out.extend(k2n(g, pair[0], pair[1], a)?);
        out.extend(minus_c4(g, a, &minus(b, &pair), xa, yb)?);
    } else {
        let pair = equal_pair(g, &minus(a, &xa), b)?;
        out.extend(k2n(g, pair[0], pair[1], b)?);
        out.extend(minus_c4(g, &minus(a, &pair), b, xa, yb)?);
    }
    Ok(out)
}

// Labels of K4,4 minus the 4-cycle a w b x.
const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const W: usize = 4;
const X: usize = 5;
const Y: usize = 6;
const Z: usize = 7;

const K44C4: [(usize, usize); 12] = [
    (A, Y),
    (A, Z),
    (B, Y),
    (B, Z),
    (C, W),
    (C, X),
    (C, Y),
    (C, Z),
    (D, W),
    (D, X),
    (D, Y),
    (D, Z),
];

pub(crate) struct TableEntry {
    pub odd: &'static [(usize, usize)],
    pub cycles: [&'static [usize]; 2],
}

/// The three signatures of K4,4 minus a 4-cycle in which neither
/// complementary 4-cycle is even, with a decomposition for each.
pub(crate) const K44C4_TABLE: [TableEntry; 3] = [
    TableEntry {
        odd: &[(A, Y), (C, W)],
        cycles: [&[A, Y, D, W, C, Z], &[B, Y, C, X, D, Z]],
    },
    TableEntry {
        odd: &[(A, Y), (C, W), (C, Y), (D, Z)],
        cycles: [&[A, Y, D, W, C, Z], &[B, Y, C, X, D, Z]],
    },
    TableEntry {
        odd: &[(A, Y), (C, W), (C, Y), (D, Y)],
        cycles: [&[A, Y, C, X, D, Z], &[Y, B, Z, C, W, D]],
    },
];

fn label_graph() -> SignedMultigraph {
    families::from_pairs(8, &K44C4, Parity::Even)
}

fn pair_index(p: usize, q: usize) -> Option<usize> {
    K44C4.iter().position(|&(x, y)| (x, y) == (p, q) || (x, y) == (q, p))
}

/// Automorphisms of K4,4 minus a 4-cycle, identity first.
static AUTOMORPHISMS: Lazy<Vec<[usize; 8]>> = Lazy::new(|| {
    let mut out = Vec::new();
    let mut perm = [0, 1, 2, 3, 4, 5, 6, 7];
    permutations(&mut perm, 0, &mut out);
    out.sort_by_key(|p| *p != [0, 1, 2, 3, 4, 5, 6, 7]);
    out
});

fn permutations(p: &mut [usize; 8], k: usize, out: &mut Vec<[usize; 8]>) {
    if k == 8 {
        if K44C4.iter().all(|&(x, y)| pair_index(p[x], p[y]).is_some()) {
            out.push(*p);
        }
        return;
    }
    for i in k..8 {
        p.swap(k, i);
        permutations(p, k + 1, out);
        p.swap(k, i);
    }
}

/// Decomposition of the table case matching `odd` (a signature on the
/// labelled edges), as label sequences.
pub(crate) fn table_lookup(odd: &[bool]) -> Result<Option<Vec<Vec<usize>>>> {
    let lg = label_graph().with_signature(odd)?;
    for identity_only in [true, false] {
        for pi in AUTOMORPHISMS.iter() {
            let is_id = *pi == [0, 1, 2, 3, 4, 5, 6, 7];
            if is_id != identity_only {
                continue;
            }
            for entry in &K44C4_TABLE {
                let mut pattern = [false; 12];
                for &(p, q) in entry.odd {
                    pattern[pair_index(pi[p], pi[q]).expect("automorphism")] = true;
                }
                if lg.is_equivalent(&pattern)? {
                    return Ok(Some(entry.cycles.iter().map(|c| c.iter().map(|&l| pi[l]).collect()).collect()));
                }
            }
        }
    }
    Ok(None)
}

/// Labels `[a, b, c, d, w, x, y, z]`; the removed 4-cycle is `a w b x`.
fn base44(g: &SignedMultigraph, xa: [usize; 2], cd: Vec<usize>, yb: [usize; 2], yz: Vec<usize>) -> Result<Vec<Vec<usize>>> {
    let l = [xa[0], xa[1], cd[0], cd[1], yb[0], yb[1], yz[0], yz[1]];
    let c1 = cycle_on(g, &[l[A], l[Y], l[B], l[Z]])?;
    if !odd_sum(g, &c1) {
        let mut out = vec![c1];
        out.extend(k2n(g, l[C], l[D], &[l[W], l[X], l[Y], l[Z]])?);
        return Ok(out);
    }
    let c3 = cycle_on(g, &[l[W], l[C], l[X], l[D]])?;
    if !odd_sum(g, &c3) {
        let mut out = vec![c3];
        out.extend(k2n(g, l[Y], l[Z], &[l[A], l[B], l[C], l[D]])?);
        return Ok(out);
    }
    let host: Vec<usize> = K44C4.iter().map(|&(p, q)| edge_between(g, l[p], l[q])).collect::<Result<_>>()?;
    let odd: Vec<bool> = host.iter().map(|&e| is_odd(g, e)).collect();
    if let Some(cycles) = table_lookup(&odd)? {
        let out: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| cycle_on(g, &c.iter().map(|&x| l[x]).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        if out.iter().all(|c| !odd_sum(g, c)) {
            return Ok(out);
        }
    }
    Ctx::note_fallback();
    even_split(g, &host).ok_or_else(|| Error::Internal("K4,4 minus C4 has no even split".into()))
}

/// Every table entry's cycles are even under its own pattern and
/// partition the twelve edges.
pub(crate) fn table_check() -> std::result::Result<(), String> {
    let lg = label_graph();
    for (i, entry) in K44C4_TABLE.iter().enumerate() {
        let mut odd = vec![false; 12];
        for &(p, q) in entry.odd {
            odd[pair_index(p, q).ok_or("pattern edge missing")?] = true;
        }
        let sg = lg.with_signature(&odd).map_err(|e| e.to_string())?;
        let mut seen = [false; 12];
        for c in entry.cycles {
            let edges = cycle_on(&sg, c).map_err(|e| e.to_string())?;
            if odd_sum(&sg, &edges) {
                return Err(format!("K4,4 minus C4 row {} has an odd cycle", i + 1));
            }
            for e in edges {
                if std::mem::replace(&mut seen[e], true) {
                    return Err(format!("K4,4 minus C4 row {} repeats an edge", i + 1));
                }
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(format!("K4,4 minus C4 row {} misses an edge", i + 1));
        }
    }
    Ok(())
}
