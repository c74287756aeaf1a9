use crate::error::{Error, Result};
use crate::graph::SignedMultigraph;
use crate::recipe::Realized;

use super::bipartite::{bipartite, k2n, minus_c4};
use super::k5::{k5plus, K5};
use super::work::{cycle_on, edge_between, is_odd, minus, odd_at, odd_sum, path_on, Walk, Work};
use super::{almost, Ctx, Piece};

fn parity_to(g: &SignedMultigraph, x: usize, ys: &[usize]) -> Result<bool> {
    let mut p = false;
    for &y in ys {
        p ^= odd_at(g, x, y)?;
    }
    Ok(p)
}

fn ensure_even(g: &SignedMultigraph, cycles: &[Vec<usize>], what: &str) -> Result<()> {
    if cycles.iter().any(|c| odd_sum(g, c)) {
        return Err(Error::Internal(format!("{what}: constructed cycle is odd")));
    }
    Ok(())
}

/// `G_t` plus the clones joined to the neighbourhood: decompose `G_t` for
/// the clone `t` that makes it even, and the rest as a complete bipartite
/// graph.
pub(crate) fn odd_expansion<'a>(
    cx: &Ctx,
    g: &SignedMultigraph,
    g_at: &dyn Fn(usize) -> Result<Piece<'a>>,
    g_rest: &[usize],
    clones: &[usize],
    nbrs: &[usize],
) -> Result<Vec<Vec<usize>>> {
    let base = odd_sum(g, g_rest);
    let mut chosen = None;
    for &t in clones {
        if parity_to(g, t, nbrs)? == base {
            chosen = Some(t);
            break;
        }
    }
    let t = chosen.ok_or_else(|| Error::Internal("no clone gives an even copy".into()))?;
    let mut out = g_at(t)?.decompose(cx, g)?;
    out.extend(bipartite(g, &minus(clones, &[t]), nbrs)?);
    Ok(out)
}

pub(crate) fn odd_expansion_node(cx: &Ctx, re: &Realized, g: &SignedMultigraph) -> Result<Vec<Vec<usize>>> {
    let child = &re.children[0];
    let map = &re.vmaps[0];
    let v = re.pivots[0];
    let clones = &re.added;
    let nbrs: Vec<usize> = child.graph.neighbors(v).into_iter().filter_map(|x| map[x]).collect();
    let g_rest: Vec<usize> = (0..g.edge_count())
        .filter(|&e| !clones.contains(&g.edge(e).u) && !clones.contains(&g.edge(e).v))
        .collect();
    let g_at = |t: usize| {
        let mut vm = map.clone();
        vm[v] = Some(t);
        Piece::embed(child, &vm, g)
    };
    odd_expansion(cx, g, &g_at, &g_rest, clones, &nbrs)
}

pub(crate) fn apex_node(cx: &Ctx, re: &Realized, g: &SignedMultigraph) -> Result<Vec<Vec<usize>>> {
    let child = &re.children[0];
    let map = &re.vmaps[0];
    let vg: Vec<usize> = map.iter().flatten().copied().collect();
    let piece = Piece::embed(child, map, g)?;
    apex(cx, g, &vg, &piece, &re.added)
}

/// The piece on `vg` joined with the independent set `x`.
pub(crate) fn apex(cx: &Ctx, g: &SignedMultigraph, vg: &[usize], piece: &Piece<'_>, x: &[usize]) -> Result<Vec<Vec<usize>>> {
    let pe = piece.edges();
    if !odd_sum(g, &pe) {
        let mut out = piece.decompose(cx, g)?;
        out.extend(bipartite(g, x, vg)?);
        return Ok(out);
    }
    let e = *pe.iter().min().expect("odd piece has edges");
    let (mut out, c) = almost(cx, piece, g, e)?;
    out.extend(apex_reduced(g, &c, vg, x)?);
    Ok(out)
}

/// An odd 4-cycle `x_i p x_j q` through two vertices of `c`: splits `c`
/// with it and finishes with K_{X,VG} minus that 4-cycle.
fn odd_square(g: &SignedMultigraph, c: &[usize], vg: &[usize], x: &[usize]) -> Result<Option<Vec<Vec<usize>>>> {
    let w = Walk::new(g, c)?;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            for pi in 0..w.vertices.len() {
                for qi in pi + 1..w.vertices.len() {
                    let (xi, xj, p, q) = (x[i], x[j], w.vertices[pi], w.vertices[qi]);
                    let d = cycle_on(g, &[xi, p, xj, q])?;
                    if !odd_sum(g, &d) {
                        continue;
                    }
                    let (a1, a2) = w.arcs(p, q)?;
                    let mut c1 = a1.clone();
                    c1.extend(path_on(g, &[q, xi, p])?);
                    let mut c2 = a2.clone();
                    c2.extend(path_on(g, &[p, xj, q])?);
                    if odd_sum(g, &c1) {
                        c1 = a1;
                        c1.extend(path_on(g, &[q, xj, p])?);
                        c2 = a2;
                        c2.extend(path_on(g, &[p, xi, q])?);
                    }
                    let mut out = vec![c1, c2];
                    ensure_even(g, &out, "odd square split")?;
                    out.extend(minus_c4(g, x, vg, [xi, xj], [p, q])?);
                    return Ok(Some(out));
                }
            }
        }
    }
    Ok(None)
}

/// Re-signs so every edge between `c` and `x` is even.
fn even_star(g: &SignedMultigraph, cv: &[usize], x: &[usize]) -> Result<SignedMultigraph> {
    let (p0, x0) = (cv[0], x[0]);
    let mut side = Vec::new();
    for &p in cv {
        if odd_at(g, x0, p)? {
            side.push(p);
        }
    }
    let beta0 = odd_at(g, x0, p0)?;
    for &xx in x {
        if odd_at(g, xx, p0)? ^ beta0 {
            side.push(xx);
        }
    }
    let g2 = g.resign(&side)?;
    for &p in cv {
        for &xx in x {
            if odd_at(&g2, xx, p)? {
                return Err(Error::Internal("re-signing left an odd edge at the apex".into()));
            }
        }
    }
    Ok(g2)
}

/// `c` (an odd cycle) plus isolated vertices on `vg`, joined with `x`.
pub(crate) fn apex_reduced(g: &SignedMultigraph, c: &[usize], vg: &[usize], x: &[usize]) -> Result<Vec<Vec<usize>>> {
    if let Some(out) = odd_square(g, c, vg, x)? {
        return Ok(out);
    }
    let w = Walk::new(g, c)?;
    let g2 = even_star(g, &w.vertices, x)?;
    let free = minus(vg, &w.vertices);
    if x.len() == 2 {
        return if w.len() >= 4 {
            long_cycle_pair(g, &g2, &w, vg, &free, x)
        } else {
            triangle_pair(g, &w, &free, x)
        };
    }
    if !(w.len() == 3 && free.len() == 1) {
        let a = x[0];
        let base = odd_sum(g, c) ^ parity_to(g, a, vg)?;
        let mut chosen = None;
        for &t in &x[1..] {
            if parity_to(g, t, vg)? == base {
                chosen = Some(t);
                break;
            }
        }
        let t = chosen.ok_or_else(|| Error::Internal("no apex vertex balances the cycle".into()))?;
        let mut out = apex_reduced(g, c, vg, &[a, t])?;
        out.extend(bipartite(g, &minus(&x[1..], &[t]), vg)?);
        return Ok(out);
    }
    let mut base = odd_sum(g, c);
    for &a in &x[..3] {
        base ^= parity_to(g, a, vg)?;
    }
    let mut chosen = None;
    for &t in &x[3..] {
        if parity_to(g, t, vg)? == base {
            chosen = Some(t);
            break;
        }
    }
    let t = chosen.ok_or_else(|| Error::Internal("no apex vertex balances the co-claw".into()))?;
    let mut out = bipartite(g, &minus(&x[3..], &[t]), vg)?;
    out.extend(coclaw_four(g, c, vg, [x[0], x[1], x[2], t])?);
    Ok(out)
}

/// `k = 2`, cycle of length at least 4.
fn long_cycle_pair(g: &SignedMultigraph, g2: &SignedMultigraph, w: &Walk, vg: &[usize], free: &[usize], x: &[usize]) -> Result<Vec<Vec<usize>>> {
    let (a, b) = (x[0], x[1]);
    let mut u = None;
    for &s in free {
        if parity_to(g2, s, x)? {
            u = Some(s);
            break;
        }
    }
    let u = u.ok_or_else(|| Error::Internal("no odd isolated vertex".into()))?;
    let (rot, plen) = match w.edges.iter().position(|&e| !is_odd(g2, e)) {
        Some(i) => (w.from(w.vertices[i])?, 1),
        None => (w.clone(), 2),
    };
    let xv = rot.vertices[0];
    let yv = rot.vertices[plen];
    let z = rot.vertices[plen + 1];
    let p1 = rot.edges[..plen].to_vec();
    let p2 = rot.edges[plen..].to_vec();
    let mut d1 = path_on(g, &[xv, b, z, a, yv])?;
    d1.extend(p1);
    let mut d2 = path_on(g, &[xv, a, u, b, yv])?;
    d2.extend(p2);
    let mut out = vec![d1, d2];
    ensure_even(g, &out, "apex on a long odd cycle")?;
    out.extend(k2n(g, a, b, &minus(vg, &[xv, yv, z, u]))?);
    Ok(out)
}

/// `k = 2`, triangle: a K5 with parallels through the isolated vertices.
fn triangle_pair(g: &SignedMultigraph, w: &Walk, free: &[usize], x: &[usize]) -> Result<Vec<Vec<usize>>> {
    if free.len() < 3 {
        return Err(Error::Internal("triangle apex needs three isolated vertices".into()));
    }
    let (a, b) = (x[0], x[1]);
    let l = [a, w.vertices[0], w.vertices[1], w.vertices[2], b];
    let mut wk = Work::new(g);
    let via = |s: usize| -> Result<Vec<usize>> { path_on(g, &[a, s, b]) };
    let mut tw = Some(via(free[0])?);
    let k = K5::new(|i, j| {
        if (i, j) == (0, 4) {
            wk.edge(g, a, b, tw.take().expect("once"))
        } else {
            let e = edge_between(g, l[i], l[j])?;
            wk.copy(g, e)
        }
    })?;
    let mut parallels = Vec::new();
    for &s in &free[1..] {
        parallels.push(wk.edge(g, a, b, via(s)?)?);
    }
    let cycles = k5plus(&wk.g, &k, &parallels)?;
    Ok(wk.lift_cycles(cycles))
}

/// Triangle plus one isolated vertex, joined with four vertices.
fn coclaw_four(g: &SignedMultigraph, c: &[usize], vg: &[usize], x4: [usize; 4]) -> Result<Vec<Vec<usize>>> {
    if let Some(out) = odd_square(g, c, vg, &x4)? {
        return Ok(out);
    }
    let w = Walk::new(g, c)?;
    let g2 = even_star(g, &w.vertices, &x4)?;
    let u = minus(vg, &w.vertices)[0];
    let i = w
        .edges
        .iter()
        .position(|&e| is_odd(&g2, e))
        .ok_or_else(|| Error::Internal("odd triangle without an odd edge".into()))?;
    let rot = w.from(w.vertices[i])?;
    let (xv, yv, zv) = (rot.vertices[0], rot.vertices[1], rot.vertices[2]);
    let xy = rot.edges[0];
    let q = rot.edges[1..].to_vec();
    let [a, b, cc, d] = x4;
    let mut q1 = path_on(g, &[xv, a, u, b, yv])?;
    let mut q2 = path_on(g, &[xv, cc, u, d, yv])?;
    if odd_at(&g2, a, u)? ^ odd_at(&g2, u, b)? {
        q1.push(xy);
        q2.extend(q);
    } else {
        q1.extend(q);
        q2.push(xy);
    }
    let out = vec![q1, q2, cycle_on(g, &[xv, b, zv, d])?, cycle_on(g, &[yv, a, zv, cc])?];
    ensure_even(g, &out, "co-claw apex")?;
    Ok(out)
}

/// G joined with an edge `p q`: a virtual vertex `s` turns `pq` into the
/// path `p s q`, giving G + s joined with `{p, q}`.
pub(crate) fn clique_join_node(cx: &Ctx, re: &Realized, g: &SignedMultigraph) -> Result<Vec<Vec<usize>>> {
    let child = &re.children[0];
    let map = &re.vmaps[0];
    let (p, q) = (re.added[0], re.added[1]);
    let pq = edge_between(g, p, q)?;
    let vg: Vec<usize> = map.iter().flatten().copied().collect();
    let others: Vec<usize> = (0..g.edge_count()).filter(|&e| e != pq).collect();
    let mut wk = Work::new(g);
    wk.copy_all(g, &others)?;
    let piece = Piece::embed(child, map, &wk.g)?;
    clique_join(cx, g, wk, vg, piece, [p, q], vec![pq])
}

/// Shared by the clique join and the degree-2 substitution: `wk` holds
/// everything but the `p q` connection, which lifts to `pq_lift` in
/// `parent`.
pub(crate) fn clique_join(
    cx: &Ctx,
    parent: &SignedMultigraph,
    mut wk: Work,
    mut vg: Vec<usize>,
    piece: Piece<'_>,
    pq: [usize; 2],
    pq_lift: Vec<usize>,
) -> Result<Vec<Vec<usize>>> {
    let [p, q] = pq;
    let s = wk.vertex("s")?;
    wk.edge(parent, p, s, pq_lift)?;
    wk.edge(parent, s, q, Vec::new())?;
    vg.push(s);
    let cycles = apex(cx, &wk.g, &vg, &piece, &[p, q])?;
    Ok(wk.lift_cycles(cycles))
}
