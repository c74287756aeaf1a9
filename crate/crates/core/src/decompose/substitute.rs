use crate::error::{Error, Result};
use crate::graph::SignedMultigraph;
use crate::recipe::Realized;

use super::apex::{apex_reduced, clique_join, odd_expansion};
use super::bipartite::{bipartite, find_parity_four_cycle, k2n, minus_c4};
use super::k5::{k5_bad, k5_decompose, k5plus, K5};
use super::split::even_split;
use super::work::{cycle_on, edge_between, minus, odd_at, odd_sum, path_on, Walk, Work};
use super::{almost, Ctx, Piece};

/// A vertex `v` of G replaced by H, seen from the host graph.
pub(crate) struct Sub<'a, 'f> {
    /// G embedded with `v` placed at the given vertex of H.
    pub g_at: &'f dyn Fn(usize) -> Result<Piece<'a>>,
    /// Edges of G - v.
    pub g_rest: Vec<usize>,
    pub vh: Vec<usize>,
    pub h: Piece<'a>,
    /// Neighbours of `v`.
    pub nbrs: Vec<usize>,
}

/// The twin pair `u v` of G replaced by H.
pub(crate) struct Twin<'a, 'f> {
    /// G embedded with `u` and `v` placed at the given vertices of H.
    pub g_at: &'f dyn Fn(usize, usize) -> Result<Piece<'a>>,
    /// Edges of G - u - v.
    pub g_rest: Vec<usize>,
    pub vh: Vec<usize>,
    pub h: Piece<'a>,
    pub nbrs: Vec<usize>,
}

fn split(g: &SignedMultigraph, parts: &[&[usize]], what: &str) -> Result<Vec<Vec<usize>>> {
    let mut edges: Vec<usize> = parts.concat();
    edges.sort_unstable();
    edges.dedup();
    even_split(g, &edges).ok_or_else(|| Error::Internal(format!("{what}: no even split")))
}

fn star_parity(g: &SignedMultigraph, t: usize, nbrs: &[usize]) -> Result<bool> {
    let mut p = false;
    for &x in nbrs {
        p ^= odd_at(g, t, x)?;
    }
    Ok(p)
}

/// The other ends of the two cycle edges at `v`, and the rest of the cycle.
fn open_at(g: &SignedMultigraph, c: &[usize], v: usize) -> Result<(usize, usize, Vec<usize>)> {
    let w = Walk::new(g, c)?.from(v)?;
    let a = w.vertices[1];
    let b = *w.vertices.last().expect("cycle");
    let p = w.edges[1..w.len() - 1].to_vec();
    Ok((a, b, p))
}

fn host_edges_avoiding(g: &SignedMultigraph, avoid: &[usize]) -> Vec<usize> {
    (0..g.edge_count())
        .filter(|&e| !avoid.contains(&g.edge(e).u) && !avoid.contains(&g.edge(e).v))
        .collect()
}

pub(crate) fn substitute_node(cx: &Ctx, re: &Realized, g: &SignedMultigraph) -> Result<Vec<Vec<usize>>> {
    let (gc, hc) = (&re.children[0], &re.children[1]);
    let (gmap, hmap) = (&re.vmaps[0], &re.vmaps[1]);
    let v = re.pivots[0];
    let vh: Vec<usize> = hmap.iter().flatten().copied().collect();
    let nbrs: Vec<usize> = gc.graph.neighbors(v).into_iter().filter_map(|x| gmap[x]).collect();
    let g_at = |t: usize| {
        let mut vm = gmap.clone();
        vm[v] = Some(t);
        Piece::embed(gc, &vm, g)
    };
    let s = Sub {
        g_at: &g_at,
        g_rest: host_edges_avoiding(g, &vh),
        h: Piece::embed(hc, hmap, g)?,
        vh,
        nbrs,
    };
    substitution(cx, g, &s)
}

pub(crate) fn twin_node(cx: &Ctx, re: &Realized, g: &SignedMultigraph) -> Result<Vec<Vec<usize>>> {
    let (gc, hc) = (&re.children[0], &re.children[1]);
    let (gmap, hmap) = (&re.vmaps[0], &re.vmaps[1]);
    let (cu, cv) = (re.pivots[0], re.pivots[1]);
    let vh: Vec<usize> = hmap.iter().flatten().copied().collect();
    let nbrs: Vec<usize> = gc.graph.neighbors(cu).into_iter().filter_map(|x| gmap[x]).collect();
    let g_at = |x: usize, y: usize| {
        let mut vm = gmap.clone();
        vm[cu] = Some(x);
        vm[cv] = Some(y);
        Piece::embed(gc, &vm, g)
    };
    let t = Twin {
        g_at: &g_at,
        g_rest: host_edges_avoiding(g, &vh),
        h: Piece::embed(hc, hmap, g)?,
        vh,
        nbrs,
    };
    twin(cx, g, &t)
}

pub(crate) fn substitution(cx: &Ctx, g: &SignedMultigraph, s: &Sub<'_, '_>) -> Result<Vec<Vec<usize>>> {
    let he = s.h.edges();
    if !odd_sum(g, &he) {
        let mut out = s.h.decompose(cx, g)?;
        out.extend(odd_expansion(cx, g, s.g_at, &s.g_rest, &s.vh, &s.nbrs)?);
        return Ok(out);
    }
    let (mut out, c) = almost(cx, &s.h, g, *he.iter().min().expect("odd H has edges"))?;
    let cw = Walk::new(g, &c)?;
    let free: Vec<usize> = s.vh.iter().copied().filter(|t| !cw.contains(*t)).collect();
    let rest_base = odd_sum(g, &s.g_rest);
    let weight = |t: usize| -> Result<bool> { Ok(rest_base ^ star_parity(g, t, &s.nbrs)?) };
    let u = match free.first() {
        Some(&u) => u,
        None => {
            let mut found = None;
            for &t in &s.vh {
                if weight(t)? {
                    found = Some(t);
                    break;
                }
            }
            found.ok_or_else(|| Error::Internal("no odd copy of G".into()))?
        }
    };
    let gu = (s.g_at)(u)?;
    let rest_h = minus(&s.vh, &[u]);
    if !weight(u)? {
        let gc = gu.decompose(cx, g)?;
        if s.nbrs.len() >= 4 {
            out.extend(gc);
            out.extend(apex_reduced(g, &c, &rest_h, &s.nbrs)?);
            return Ok(out);
        }
        let (through, others): (Vec<_>, Vec<_>) = gc.into_iter().partition(|cy| {
            cy.iter().any(|&e| g.edge(e).u == u || g.edge(e).v == u)
        });
        out.extend(others);
        let cp = &through[0];
        let (a, b, p) = open_at(g, cp, u)?;
        let mut wk = Work::new(g);
        let mut keep = c.clone();
        for &t in &s.vh {
            for &n in &[a, b] {
                keep.push(edge_between(g, t, n)?);
            }
        }
        let map = wk.copy_all(g, &keep)?;
        let piece = Piece::Cycles(vec![c.clone()]).remap(&map)?;
        out.extend(clique_join(cx, g, wk, s.vh.clone(), piece, [a, b], p)?);
        return Ok(out);
    }
    let e = edge_between(g, u, s.nbrs[0])?;
    let (ev, cp) = almost(cx, &gu, g, e)?;
    out.extend(ev);
    let (a, b, p) = open_at(g, &cp, u)?;
    if free.contains(&u) {
        let cv = &cw.vertices;
        for i in 0..cv.len() {
            for j in i + 1..cv.len() {
                let (z, w) = (cv[i], cv[j]);
                let cpp = cycle_on(g, &[a, z, b, w])?;
                if odd_sum(g, &cpp) {
                    continue;
                }
                out.extend(split(g, &[&c, &cp, &cpp], "substitution, odd copy beside the cycle")?);
                out.extend(minus_c4(g, &s.nbrs, &rest_h, [a, b], [z, w])?);
                return Ok(out);
            }
        }
        return Err(Error::Internal("no even 4-cycle through the cycle".into()));
    }
    on_cycle(cx, g, s, &c, &cp, u, a, b, p, out)
}

/// The odd copy of G sits at a vertex `u` of the odd cycle `c` of H.
#[allow(clippy::too_many_arguments)]
fn on_cycle(
    _cx: &Ctx,
    g: &SignedMultigraph,
    s: &Sub<'_, '_>,
    c: &[usize],
    cp: &[usize],
    u: usize,
    a: usize,
    b: usize,
    p: Vec<usize>,
    mut out: Vec<Vec<usize>>,
) -> Result<Vec<Vec<usize>>> {
    let mut side = Vec::new();
    if odd_at(g, u, a)? {
        side.push(a);
    }
    if odd_at(g, u, b)? {
        side.push(b);
    }
    let g2 = g.resign(&side)?;
    let pa = |t: usize| -> Result<bool> { Ok(odd_at(&g2, t, a)? ^ odd_at(&g2, t, b)?) };
    let cw = Walk::new(g, c)?.from(u)?;
    let rest_h = minus(&s.vh, &[u]);
    if cw.len() == 3 {
        let (t, w) = (cw.vertices[1], cw.vertices[2]);
        let z = minus(&s.nbrs, &[a, b]);
        if z.len() < 2 {
            return Err(Error::Internal("triangle substitution needs degree at least 4".into()));
        }
        let block: Vec<usize> = z
            .iter()
            .flat_map(|&n| [edge_between(g, t, n), edge_between(g, w, n)])
            .collect::<Result<_>>()?;
        let target = odd_sum(g, &block);
        let [_, cc, _, d] = find_parity_four_cycle(g, &[t, w], &z, target)?;
        let cpp = cycle_on(g, &[t, cc, w, d])?;
        if target {
            out.extend(split(g, &[c, &cpp], "triangle substitution")?);
            let square = cycle_on(g, &[a, t, b, w])?;
            out.extend(split(g, &[cp, &square], "triangle substitution")?);
        } else {
            let mut wk = Work::new(g);
            let l = [t, a, u, b, w];
            let mut ab = Some(p);
            let k = K5::new(|i, j| {
                if (l[i], l[j]) == (a, b) {
                    wk.edge(g, a, b, ab.take().expect("once"))
                } else {
                    wk.copy(g, edge_between(g, l[i], l[j])?)
                }
            })?;
            let par = [wk.edge(g, t, w, path_on(g, &[t, cc, w])?)?, wk.edge(g, t, w, path_on(g, &[t, d, w])?)?];
            out.extend(wk.lift_cycles(k5plus(&wk.g, &k, &par)?));
        }
        out.extend(k2n(g, t, w, &minus(&z, &[cc, d]))?);
        return Ok(out);
    }
    let others = &cw.vertices[1..];
    let mut pairs = Vec::new();
    let odd_ts: Vec<usize> = others.iter().copied().filter(|&t| pa(t).unwrap_or(false)).collect();
    if odd_ts.len() >= 2 {
        pairs.push((odd_ts[0], odd_ts[1]));
    } else if cw.len() >= 5 {
        let ev: Vec<usize> = others.iter().copied().filter(|&t| !pa(t).unwrap_or(true)).take(3).collect();
        if ev.len() == 3 {
            pairs.extend([(ev[0], ev[1]), (ev[1], ev[2]), (ev[0], ev[2])]);
        }
    }
    let preferred = pairs.len();
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            if pa(others[i])? == pa(others[j])? {
                pairs.push((others[i], others[j]));
            }
        }
    }
    for (n, &(t, w)) in pairs.iter().enumerate() {
        let (wk, k) = cycle_k5(g, &cw, u, t, w, a, b, &p)?;
        if k5_bad(&wk.g, &k) {
            continue;
        }
        if n >= preferred {
            Ctx::note_fallback();
        }
        let cycles = k5_decompose(&wk.g, &k).expect("not bad");
        out.extend(wk.lift_cycles(cycles));
        out.extend(minus_c4(g, &s.nbrs, &rest_h, [a, b], [t, w])?);
        return Ok(out);
    }
    Err(Error::Internal("no good K5 on the odd cycle".into()))
}

/// K5 on `u t w a b` (`cw` walks from `u`): the three arcs of the cycle, the path `p` for `a b`,
/// and direct edges elsewhere.
#[allow(clippy::too_many_arguments)]
fn cycle_k5(g: &SignedMultigraph, cw: &Walk, u: usize, t: usize, w: usize, a: usize, b: usize, p: &[usize]) -> Result<(Work, K5)> {
    let pos = |x: usize| cw.vertices.iter().position(|&y| y == x).expect("on cycle");
    let (t, w) = if pos(t) < pos(w) { (t, w) } else { (w, t) };
    let ut = cw.edges[..pos(t)].to_vec();
    let tw = cw.edges[pos(t)..pos(w)].to_vec();
    let wu = cw.edges[pos(w)..].to_vec();
    let mut wk = Work::new(g);
    let l = [u, t, w, a, b];
    let k = K5::new(|i, j| {
        let (x, y) = (l[i], l[j]);
        let lift = match (x, y) {
            _ if (x, y) == (u, t) => ut.clone(),
            _ if (x, y) == (t, w) => tw.clone(),
            _ if (x, y) == (u, w) => wu.clone(),
            _ if (x, y) == (a, b) => p.to_vec(),
            _ => vec![edge_between(g, x, y)?],
        };
        wk.edge(g, x, y, lift)
    })?;
    Ok((wk, k))
}

pub(crate) fn twin(cx: &Ctx, g: &SignedMultigraph, s: &Twin<'_, '_>) -> Result<Vec<Vec<usize>>> {
    let he = s.h.edges();
    if !odd_sum(g, &he) {
        let mut out = s.h.decompose(cx, g)?;
        let y0 = s.vh[0];
        let mut rest = s.g_rest.clone();
        for &n in &s.nbrs {
            rest.push(edge_between(g, y0, n)?);
        }
        let g_at = |t: usize| (s.g_at)(t, y0);
        out.extend(odd_expansion(cx, g, &g_at, &rest, &s.vh[1..], &s.nbrs)?);
        return Ok(out);
    }
    let (mut out, ch) = almost(cx, &s.h, g, *he.iter().min().expect("odd H has edges"))?;
    let chw = Walk::new(g, &ch)?;
    if let Some(&wv) = s.vh.iter().find(|&&t| !chw.contains(t)) {
        let mut rest = s.g_rest.clone();
        for &n in &s.nbrs {
            rest.push(edge_between(g, wv, n)?);
        }
        let g_at = |t: usize| (s.g_at)(t, wv);
        let sub = Sub {
            g_at: &g_at,
            g_rest: rest,
            vh: minus(&s.vh, &[wv]),
            h: Piece::Cycles(vec![ch]),
            nbrs: s.nbrs.clone(),
        };
        out.extend(substitution(cx, g, &sub)?);
        return Ok(out);
    }
    let (x, y) = (chw.vertices[0], chw.vertices[2]);
    let tt = minus(&s.vh, &[x, y]);
    let g1 = (s.g_at)(x, y)?;
    if !odd_sum(g, &g1.edges()) {
        let [t1, n1, t2, n2] = find_parity_four_cycle(g, &tt, &s.nbrs, true)?;
        out.extend(g1.decompose(cx, g)?);
        let d = cycle_on(g, &[t1, n1, t2, n2])?;
        out.extend(split(g, &[&ch, &d], "twin substitution, even copy")?);
        out.extend(minus_c4(g, &tt, &s.nbrs, [t1, t2], [n1, n2])?);
        return Ok(out);
    }
    let a = s.nbrs[0];
    let (ev1, c1) = almost(cx, &g1, g, edge_between(g, x, a)?)?;
    let (a1, b, p) = open_at(g, &c1, x)?;
    let (a, b) = if a1 == a { (a, b) } else { (a, a1) };
    let pt = |t: usize| star_parity(g, t, &s.nbrs);
    if s.vh.len() > 4 {
        let mut pair = None;
        'outer: for i in 0..tt.len() {
            for j in i + 1..tt.len() {
                if pt(tt[i])? == pt(tt[j])? {
                    pair = Some((tt[i], tt[j]));
                    break 'outer;
                }
            }
        }
        let (t, w) = pair.ok_or_else(|| Error::Internal("no balanced pair in H".into()))?;
        out.extend(bipartite(g, &minus(&tt, &[t, w]), &s.nbrs)?);
        let mut wk = Work::new(g);
        let mut keep = g1.edges();
        for &z in &[t, w] {
            for &n in &s.nbrs {
                keep.push(edge_between(g, z, n)?);
            }
        }
        let map = wk.copy_all(g, &keep)?;
        let mut special: Vec<usize> = vec![x, t, y, w];
        special.sort_by_key(|&v| chw.vertices.iter().position(|&q| q == v));
        let mut square = Vec::new();
        for i in 0..4 {
            let (p0, q0) = (special[i], special[(i + 1) % 4]);
            let (arc, _) = chw.arcs(p0, q0)?;
            square.push(wk.edge(g, p0, q0, arc)?);
        }
        let g_at = |xx: usize, yy: usize| (s.g_at)(xx, yy)?.remap(&map);
        let g_rest = s.g_rest.iter().map(|&e| map[e].ok_or_else(|| Error::Internal("G edge lost".into()))).collect::<Result<_>>()?;
        let sub = Twin {
            g_at: &g_at,
            g_rest,
            vh: special,
            h: Piece::Cycles(vec![square]),
            nbrs: s.nbrs.clone(),
        };
        let inner = twin(cx, &wk.g, &sub)?;
        out.extend(wk.lift_cycles(inner));
        return Ok(out);
    }
    let (t, w) = (chw.vertices[1], chw.vertices[3]);
    if Walk::new(g, &c1)?.contains(y) {
        // C1 and H are four x-y paths; the K5 lift would visit y twice.
        out.extend(ev1);
        out.extend(split(g, &[&c1, &ch], "twin substitution, C1 through y")?);
        out.extend(k2n(g, t, w, &s.nbrs)?);
        return Ok(out);
    }
    if s.nbrs.len() >= 4 {
        out.extend(ev1);
        let others = minus(&s.nbrs, &[a, b]);
        let pn = |n: usize| star_parity(g, n, &[t, w]);
        let target = pn(a)? ^ pn(b)?;
        let mut pair = None;
        'find: for i in 0..others.len() {
            for j in i + 1..others.len() {
                if pn(others[i])? ^ pn(others[j])? == target {
                    pair = Some((others[i], others[j]));
                    break 'find;
                }
            }
        }
        let (cc, d) = pair.ok_or_else(|| Error::Internal("no balanced neighbour pair".into()))?;
        let c_prime = cycle_on(g, &[cc, t, d, w])?;
        let c_second = cycle_on(g, &[a, t, b, w])?;
        if odd_sum(g, &c_prime) {
            out.extend(split(g, &[&ch, &c_prime], "twin substitution on a 4-cycle")?);
            out.extend(split(g, &[&c1, &c_second], "twin substitution on a 4-cycle")?);
        } else {
            let mut wk = Work::new(g);
            let l = [t, a, x, b, w];
            let mut ab = Some(p.clone());
            let k = K5::new(|i, j| {
                let (p0, q0) = (l[i], l[j]);
                if (p0, q0) == (a, b) {
                    wk.edge(g, a, b, ab.take().expect("once"))
                } else if (p0, q0) == (t, w) {
                    wk.edge(g, t, w, path_on(g, &[t, y, w])?)
                } else {
                    wk.copy(g, edge_between(g, p0, q0)?)
                }
            })?;
            let par = [wk.edge(g, t, w, path_on(g, &[t, cc, w])?)?, wk.edge(g, t, w, path_on(g, &[t, d, w])?)?];
            out.extend(wk.lift_cycles(k5plus(&wk.g, &k, &par)?));
        }
        out.extend(k2n(g, t, w, &minus(&others, &[cc, d]))?);
        return Ok(out);
    }
    let ay = edge_between(g, a, y)?;
    let mut pool = ev1;
    pool.push(c1.clone());
    let i = pool
        .iter()
        .position(|cy| cy.contains(&ay))
        .ok_or_else(|| Error::Internal("edge a-y not covered".into()))?;
    let c2 = pool.remove(i);
    pool.retain(|cy| *cy != c1);
    out.extend(pool);
    out.extend(split(g, &[&c1, &c2, &ch], "twin substitution, degree 2")?);
    out.extend(k2n(g, t, w, &[a, b])?);
    Ok(out)
}
