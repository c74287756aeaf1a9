use crate::error::{Error, Result};
use crate::graph::SignedMultigraph;
use crate::recipe::{Realized, Recipe};

use super::apex::apex;
use super::bipartite::minus_c4;
use super::derived::{run, Names};
use super::split::even_split;
use super::work::{cycle_on, odd_at, odd_sum, Walk};
use super::{almost, Ctx, Piece};

struct Side<'a> {
    pieces: Vec<Piece<'a>>,
    vertices: Vec<usize>,
    edges: usize,
    /// Indices into the join's children.
    children: Vec<usize>,
}

impl Side<'_> {
    fn is_empty_pair(&self) -> bool {
        self.vertices.len() == 2 && self.edges == 0
    }

    /// A triangle plus an isolated vertex. Components are Eulerian, so
    /// three edges on four vertices can only form a triangle.
    fn is_coclaw(&self) -> bool {
        self.vertices.len() == 4 && self.edges == 3
    }
}

pub(crate) fn join_node(cx: &Ctx, re: &Realized, g: &SignedMultigraph) -> Result<Vec<Vec<usize>>> {
    let Recipe::Join { left, .. } = &re.recipe else { unreachable!() };
    let nl = left.len();
    let mut sides = Vec::new();
    for range in [0..nl, nl..re.children.len()] {
        let mut side = Side {
            pieces: Vec::new(),
            vertices: Vec::new(),
            edges: 0,
            children: range.clone().collect(),
        };
        for i in range {
            side.pieces.push(Piece::embed(&re.children[i], &re.vmaps[i], g)?);
            side.vertices.extend(re.vmaps[i].iter().flatten());
            side.edges += re.children[i].graph.edge_count();
        }
        sides.push(side);
    }
    let (l, r) = (&sides[0], &sides[1]);
    if r.is_empty_pair() {
        return k3join(cx, g, &l.pieces, l.vertices.clone(), [r.vertices[0], r.vertices[1]]);
    }
    if l.is_empty_pair() {
        return k3join(cx, g, &r.pieces, r.vertices.clone(), [l.vertices[0], l.vertices[1]]);
    }
    if l.is_coclaw() && r.is_coclaw() {
        return coclaw_pair(cx, g, l, r);
    }
    general(cx, re, g, l, r)
}

/// The side's pieces joined with two independent vertices `x`.
fn k3join(cx: &Ctx, g: &SignedMultigraph, pieces: &[Piece<'_>], mut vg: Vec<usize>, x: [usize; 2]) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut odd_cycles = Vec::new();
    for p in pieces {
        let pe = p.edges();
        if pe.is_empty() {
            continue;
        }
        if odd_sum(g, &pe) {
            let (ev, c) = almost(cx, p, g, *pe.iter().min().expect("non-empty"))?;
            out.extend(ev);
            odd_cycles.push(c);
        } else {
            out.extend(p.decompose(cx, g)?);
        }
    }
    let s = |z: usize| -> Result<bool> { Ok(odd_at(g, x[0], z)? ^ odd_at(g, x[1], z)?) };
    let equal_pair = |c: &[usize]| -> Result<[usize; 2]> {
        let w = Walk::new(g, c)?;
        for i in 0..w.vertices.len() {
            for j in i + 1..w.vertices.len() {
                if s(w.vertices[i])? == s(w.vertices[j])? {
                    return Ok([w.vertices[i], w.vertices[j]]);
                }
            }
        }
        Err(Error::Internal("odd cycle without a balanced pair".into()))
    };
    while odd_cycles.len() >= 2 {
        let c1 = odd_cycles.remove(0);
        let c2 = odd_cycles.remove(0);
        let [p1, q1] = equal_pair(&c1)?;
        let [p2, q2] = equal_pair(&c2)?;
        let mut f = c1;
        f.extend(c2);
        f.extend(cycle_on(g, &[x[0], p1, x[1], q1])?);
        f.extend(cycle_on(g, &[x[0], p2, x[1], q2])?);
        out.extend(even_split(g, &f).ok_or_else(|| Error::Internal("two odd cycles with K2,4 do not split".into()))?);
        vg.retain(|v| ![p1, q1, p2, q2].contains(v));
    }
    let last = Piece::Cycles(odd_cycles);
    out.extend(apex(cx, g, &vg, &last, &x)?);
    Ok(out)
}

fn triangle(side: &Side<'_>) -> Vec<usize> {
    side.pieces.iter().flat_map(|p| p.edges()).collect()
}

/// Two co-claws joined.
fn coclaw_pair(cx: &Ctx, g: &SignedMultigraph, l: &Side<'_>, r: &Side<'_>) -> Result<Vec<Vec<usize>>> {
    let c1 = triangle(l);
    let c2 = triangle(r);
    if !odd_sum(g, &c1) {
        let mut out = vec![c1];
        out.extend(apex(cx, g, &r.vertices, &Piece::Cycles(vec![c2]), &l.vertices)?);
        return Ok(out);
    }
    if !odd_sum(g, &c2) {
        let mut out = vec![c2];
        out.extend(apex(cx, g, &l.vertices, &Piece::Cycles(vec![c1]), &r.vertices)?);
        return Ok(out);
    }
    let w1 = Walk::new(g, &c1)?;
    let w2 = Walk::new(g, &c2)?;
    let (x1, y1) = (w1.vertices[0], w1.vertices[1]);
    for i in 0..3 {
        for j in i + 1..3 {
            let (x2, y2) = (w2.vertices[i], w2.vertices[j]);
            let d = cycle_on(g, &[x1, x2, y1, y2])?;
            if odd_sum(g, &d) {
                continue;
            }
            let mut f = c1.clone();
            f.extend(&c2);
            f.extend(d);
            let mut out = even_split(g, &f).ok_or_else(|| Error::Internal("co-claw pair does not split".into()))?;
            out.extend(minus_c4(g, &l.vertices, &r.vertices, [x1, y1], [x2, y2])?);
            return Ok(out);
        }
    }
    Err(Error::Internal("no even 4-cycle between the triangles".into()))
}

/// Slots one side's components take in a complete bipartite skeleton: one
/// per odd component, two per even one.
fn units(re: &Realized, side: &Side<'_>) -> Vec<(usize, bool)> {
    side.children
        .iter()
        .map(|&i| (i, re.children[i].graph.vertex_count() % 2 == 1))
        .collect()
}

fn size(units: &[(usize, bool)]) -> usize {
    units.iter().map(|&(_, odd)| if odd { 1 } else { 2 }).sum()
}

/// Substitutes each unit into its slots of `cur`, tracking names.
fn substitute_units(re: &Realized, mut cur: Recipe, names: &mut Names, slots: &mut Vec<String>, units: &[(usize, bool)]) -> Result<Recipe> {
    for &(ci, odd) in units {
        let child = &re.children[ci];
        cur = if odd {
            let v = slots.remove(0);
            Recipe::Substitute {
                g: Box::new(cur),
                v,
                h: Box::new(child.recipe.clone()),
            }
        } else {
            let u = slots.remove(0);
            let v = slots.remove(0);
            Recipe::TwinSubstitute {
                g: Box::new(cur),
                twins: [u, v],
                h: Box::new(child.recipe.clone()),
            }
        };
        names.wrap();
        for s in slots.iter_mut() {
            *s = format!("g.{s}");
        }
        for (k, name) in child.graph.vertices().iter().enumerate() {
            let host = re.vmaps[ci][k].ok_or_else(|| Error::Internal("join child vertex unplaced".into()))?;
            names.add(format!("h.{name}"), host);
        }
    }
    Ok(cur)
}

/// Any other join, rebuilt as substitutions into a complete bipartite
/// skeleton with one slot per odd component and two per even one.
fn general(cx: &Ctx, re: &Realized, g: &SignedMultigraph, l: &Side<'_>, r: &Side<'_>) -> Result<Vec<Vec<usize>>> {
    let (ua, ub) = (units(re, l), units(re, r));
    let mut names = Names::default();
    let recipe = if size(&ua) == 2 && size(&ub) == 2 {
        let (s1, u2) = if l.is_coclaw() { (r, &ua) } else { (l, &ub) };
        let g1: Vec<Recipe> = s1.children.iter().map(|&i| re.children[i].recipe.clone()).collect();
        for (k, &ci) in s1.children.iter().enumerate() {
            for (vi, name) in re.children[ci].graph.vertices().iter().enumerate() {
                let host = re.vmaps[ci][vi].ok_or_else(|| Error::Internal("join child vertex unplaced".into()))?;
                names.add(format!("l{k}.{name}"), host);
            }
        }
        let base = Recipe::Join {
            left: g1,
            right: vec![Recipe::odd_clique(1), Recipe::odd_clique(1)],
        };
        let mut slots = vec!["r0.0".to_string(), "r1.0".to_string()];
        substitute_units(re, base, &mut names, &mut slots, u2)?
    } else {
        let first_is_a = size(&ub) >= 4;
        let base = Recipe::bipartite(size(&ua), size(&ub));
        let mut a_slots: Vec<String> = (0..size(&ua)).map(|i| format!("a{i}")).collect();
        let mut b_slots: Vec<String> = (0..size(&ub)).map(|j| format!("b{j}")).collect();
        let (first, second) = if first_is_a { (&ua, &ub) } else { (&ub, &ua) };
        let (fs, ss) = if first_is_a { (&mut a_slots, &mut b_slots) } else { (&mut b_slots, &mut a_slots) };
        let mut cur = base;
        cur = substitute_units_two(re, cur, &mut names, fs, ss, first)?;
        substitute_units(re, cur, &mut names, ss, second)?
    };
    run(cx, g, &recipe, &names)
}

/// As [`substitute_units`], also keeping the other side's slot names in step.
fn substitute_units_two(
    re: &Realized,
    mut cur: Recipe,
    names: &mut Names,
    slots: &mut Vec<String>,
    other: &mut [String],
    units: &[(usize, bool)],
) -> Result<Recipe> {
    for &u in units {
        cur = substitute_units(re, cur, names, slots, &[u])?;
        for s in other.iter_mut() {
            *s = format!("g.{s}");
        }
    }
    Ok(cur)
}
