//! Classes decomposed by rewriting them as another recipe over the same
//! vertices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::SignedMultigraph;
use crate::recipe::{realize, Recipe};

use super::work::{cycle_on, edge_between, odd_sum};
use super::Ctx;

/// Derived vertex names and the host vertices they stand for, kept in step
/// with the wrapping operations.
#[derive(Clone, Debug, Default)]
pub(crate) struct Names {
    pub map: Vec<(String, usize)>,
}

impl Names {
    pub fn add(&mut self, name: String, host: usize) {
        self.map.push((name, host));
    }

    /// Every existing name moves under the `g.` prefix.
    pub fn wrap(&mut self) {
        for (n, _) in &mut self.map {
            *n = format!("g.{n}");
        }
    }

    fn lookup(&self) -> HashMap<&str, usize> {
        self.map.iter().map(|(n, h)| (n.as_str(), *h)).collect()
    }
}

/// Realizes `recipe`, places it on the host through `names`, decomposes it
/// under the host signature and maps the cycles back.
pub(crate) fn run(cx: &Ctx, g: &SignedMultigraph, recipe: &Recipe, names: &Names) -> Result<Vec<Vec<usize>>> {
    let dre = realize(recipe).map_err(|e| Error::Internal(format!("derived recipe: {e}")))?;
    let look = names.lookup();
    let mut vmap = Vec::with_capacity(dre.graph.vertex_count());
    for v in dre.graph.vertices() {
        vmap.push(*look.get(v.as_str()).ok_or_else(|| Error::Internal(format!("derived vertex {v} is not placed")))?);
    }
    let mut emap = Vec::with_capacity(dre.graph.edge_count());
    for e in dre.graph.edges() {
        emap.push(edge_between(g, vmap[e.u], vmap[e.v])?);
    }
    let odd: Vec<bool> = emap.iter().map(|&e| g.edge(e).is_odd()).collect();
    let dg = dre.graph.with_signature(&odd)?;
    let cycles = cx.node(&dre, &dg)?;
    Ok(cycles.into_iter().map(|c| c.into_iter().map(|e| emap[e]).collect()).collect())
}

pub(crate) fn multipartite(cx: &Ctx, g: &SignedMultigraph, parts: &[usize]) -> Result<Vec<Vec<usize>>> {
    let host = |i: usize, j: usize| g.vertex(&format!("p{i}.{j}"));
    let r = parts.len();
    if r == 1 {
        return Ok(Vec::new());
    }
    let mut names = Names::default();
    let recipe;
    if parts.iter().all(|p| p % 2 == 0) {
        let mut cur = Recipe::bipartite(parts[0], parts[1]);
        for j in 0..parts[0] {
            names.add(format!("a{j}"), host(0, j)?);
        }
        for j in 0..parts[1] {
            names.add(format!("b{j}"), host(1, j)?);
        }
        for (i, &k) in parts.iter().enumerate().skip(2) {
            cur = Recipe::Apex { g: Box::new(cur), k };
            names.wrap();
            for j in 0..k {
                names.add(format!("x.{j}"), host(i, j)?);
            }
        }
        recipe = cur;
    } else {
        // Groups of derived names, one per part, with the parts in the
        // order the base recipe lays them out.
        let (mut cur, mut groups, order): (Recipe, Vec<Vec<String>>, Vec<usize>) = if r == 5 {
            let inner = Recipe::Substitute {
                g: Box::new(Recipe::odd_clique(3)),
                v: "0".into(),
                h: Box::new(Recipe::multipartite(&[3, 1, 1])),
            };
            let base = Recipe::Substitute {
                g: Box::new(inner),
                v: "g.1".into(),
                h: Box::new(Recipe::odd_clique(1)),
            };
            let mut order: Vec<usize> = (0..5).collect();
            order.sort_by_key(|&i| std::cmp::Reverse(parts[i]));
            let groups = vec![
                vec!["g.h.p0.0".to_string(), "g.h.p0.1".into(), "g.h.p0.2".into()],
                vec!["g.h.p1.0".into()],
                vec!["g.h.p2.0".into()],
                vec!["h.0".into()],
                vec!["g.g.2".into()],
            ];
            (base, groups, order)
        } else {
            (Recipe::odd_clique(r), (0..r).map(|i| vec![i.to_string()]).collect(), (0..r).collect())
        };
        for slot in 0..r {
            let size = parts[order[slot]];
            let have = groups[slot].len();
            if size == have {
                continue;
            }
            let v = groups[slot].pop().expect("non-empty group");
            let s = size - have + 1;
            cur = Recipe::OddExpansion { g: Box::new(cur), v, s };
            for grp in &mut groups {
                for n in grp.iter_mut() {
                    *n = format!("g.{n}");
                }
            }
            groups[slot].extend((0..s).map(|j| format!("c.{j}")));
        }
        for (slot, grp) in groups.iter().enumerate() {
            for (j, n) in grp.iter().enumerate() {
                names.add(n.clone(), host(order[slot], j)?);
            }
        }
        recipe = cur;
    }
    run(cx, g, &recipe, &names)
}

pub(crate) fn odd_clique(cx: &Ctx, g: &SignedMultigraph, n: usize) -> Result<Vec<Vec<usize>>> {
    match n {
        1 => Ok(Vec::new()),
        3 => Ok(vec![cycle_on(g, &[0, 1, 2])?]),
        7 => {
            let mut tri = None;
            'find: for i in 1..7 {
                for j in i + 1..7 {
                    let c = cycle_on(g, &[0, i, j])?;
                    if !odd_sum(g, &c) {
                        tri = Some((i, j, c));
                        break 'find;
                    }
                }
            }
            let (i, j, c) = tri.ok_or_else(|| Error::Internal("K7 without an even triangle".into()))?;
            let recipe = Recipe::CliqueJoinK2 {
                g: Box::new(Recipe::OddExpansion {
                    g: Box::new(Recipe::odd_clique(3)),
                    v: "0".into(),
                    s: 3,
                }),
            };
            let mut names = Names::default();
            for (k, h) in [0, i, j].into_iter().enumerate() {
                names.add(format!("g.c.{k}"), h);
            }
            let rest: Vec<usize> = (1..7).filter(|&x| x != i && x != j).collect();
            for (name, h) in ["g.g.1", "g.g.2", "k.0", "k.1"].into_iter().zip(rest) {
                names.add(name.to_string(), h);
            }
            let mut out = vec![c];
            out.extend(run(cx, g, &recipe, &names)?);
            Ok(out)
        }
        _ => {
            let recipe = Recipe::CliqueJoinK2 {
                g: Box::new(Recipe::odd_clique(n - 2)),
            };
            let mut names = Names::default();
            for i in 0..n - 2 {
                names.add(format!("g.{i}"), i);
            }
            names.add("k.0".into(), n - 2);
            names.add("k.1".into(), n - 1);
            run(cx, g, &recipe, &names)
        }
    }
}
