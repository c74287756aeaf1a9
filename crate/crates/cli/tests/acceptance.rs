//! Acceptance suite. Prints one PASS/FAIL line per criterion with its
//! runtime against the limit; run with `--nocapture` to see them.

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use evcyc_core::decompose::{decompose_k2n, decompose_k5_plus};
use evcyc_core::graph::families;
use evcyc_core::oracle::{enumerate_signature_classes, oracle_decompose, oracle_is_strongly_ecd, OracleBounds, Verdict};
use evcyc_core::recipe::{random_even_signature, random_recipe, realize};
use evcyc_core::subdivision::{subdivide, SubdivisionProfile};
use evcyc_core::{decompose, validate_certificate, validate_recipe, CycleDecomposition, Parity, Recipe, SignedMultigraph};
use tempfile::TempDir;

type Check = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bounds() -> OracleBounds {
    OracleBounds::default()
}

fn even_classes(g: &SignedMultigraph) -> Result<Vec<Vec<bool>>, String> {
    let reps = enumerate_signature_classes(g, Some(Parity::Even), &bounds()).map_err(|e| e.to_string())?;
    Ok(reps.iter().map(|c| c.odd_mask(g.edge_count())).collect())
}

fn valid(g: &SignedMultigraph, d: &CycleDecomposition) -> Result<(), String> {
    validate_certificate(g, d).map_err(|v| v.to_string())?;
    ensure(d.odd_cycle_index.is_none(), || "certificate carries an odd flag".into())
}

fn oracle_finds(g: &SignedMultigraph) -> Result<bool, String> {
    Ok(oracle_decompose(g, &bounds()).map_err(|e| e.to_string())?.is_some())
}

/// Decomposes, validates and, when asked, requires the oracle to agree.
fn run_recipe(r: &Recipe, odd: &[bool], with_oracle: bool) -> Result<(), String> {
    let g = realize(r).map_err(|e| e.to_string())?.graph.with_signature(odd).map_err(|e| e.to_string())?;
    let d = decompose(r, odd).map_err(|e| format!("{}: {e}", r.name()))?;
    valid(&g, &d)?;
    if with_oracle {
        ensure(oracle_finds(&g)?, || "oracle finds no decomposition".into())?;
    }
    Ok(())
}

fn edge(g: &SignedMultigraph, a: &str, b: &str) -> usize {
    g.edges_between(g.vertex(a).unwrap(), g.vertex(b).unwrap())[0]
}

fn criterion_1() -> Check {
    let k5 = families::complete(5, Parity::Odd);
    ensure(!oracle_finds(&k5)?, || "oracle decomposes K5 with every edge odd".into())?;
    let dir = TempDir::new().map_err(|e| e.to_string())?;
    let path = dir.path().join("k5.json");
    fs::write(&path, Recipe::multipartite(&[1, 1, 1, 1, 1]).to_json()).map_err(|e| e.to_string())?;
    let out = Command::new(env!("CARGO_BIN_EXE_evcyc"))
        .args(["decompose", "--recipe", path.to_str().unwrap()])
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code();
    ensure(code == Some(2), || format!("decompose exited {code:?}"))?;
    Ok("oracle: none; decompose K1,1,1,1,1 exits 2".into())
}

fn criterion_2() -> Check {
    let k5 = families::complete(5, Parity::Even);
    let report = oracle_is_strongly_ecd(&k5, &bounds(), 1).map_err(|e| e.to_string())?;
    let classes = even_classes(&k5)?;
    let mut bad = 0;
    for odd in &classes {
        if !oracle_finds(&k5.with_signature(odd).unwrap())? {
            bad += 1;
        }
    }
    let witness = report.witness_mask(&k5).map_err(|e| e.to_string())?.ok_or("no witness")?;
    let all_odd = families::complete(5, Parity::Odd);
    let equivalent = all_odd.is_equivalent(&witness).map_err(|e| e.to_string())?;
    ensure(
        report.classes_total == 64 && report.classes_even == 32 && classes.len() == 32,
        || format!("{} classes, {} even", report.classes_total, report.classes_even),
    )?;
    ensure(report.verdict == Verdict::Not && bad == 1, || format!("{bad} non-decomposable classes"))?;
    ensure(equivalent, || "witness is not equivalent to the all-odd signature".into())?;
    Ok("64 classes, 32 even, 1 bad, witness ~ all-odd".into())
}

fn criterion_3() -> Check {
    let mut swept = 0;
    for n in [2, 4, 6] {
        let g = realize(&Recipe::bipartite(2, n)).map_err(|e| e.to_string())?.graph;
        for odd in even_classes(&g)? {
            let gs = g.with_signature(&odd).unwrap();
            let d = decompose_k2n(n, &odd).map_err(|e| e.to_string())?;
            valid(&gs, &d)?;
            ensure(oracle_finds(&gs)?, || format!("oracle disagrees on K2,{n}"))?;
            swept += 1;
        }
    }
    Ok(format!("{swept} even classes over K2,2 K2,4 K2,6"))
}

/// Vertices a..d are `a0..a3`, w..z are `b0..b3`; the deleted cycle is a w b x.
fn k44c4_table_check(r: &Recipe, g: &SignedMultigraph) -> Result<(), String> {
    let name = |c: char| match c {
        'a'..='d' => format!("a{}", c as u8 - b'a'),
        _ => format!("b{}", c as u8 - b'w'),
    };
    let e = |p: &str| edge(g, &name(p.as_bytes()[0] as char), &name(p.as_bytes()[1] as char));
    let walk = |w: &str| -> Vec<usize> {
        let v: Vec<char> = w.chars().collect();
        (0..v.len()).map(|i| e(&format!("{}{}", v[i], v[(i + 1) % v.len()]))).collect()
    };
    let rows: [(&[&str], [&str; 2]); 3] = [
        (&["ay", "cw"], ["aydwcz", "bycxdz"]),
        (&["ay", "cw", "cy", "dz"], ["aydwcz", "bycxdz"]),
        (&["ay", "cw", "cy", "dy"], ["aycxdz", "ybzcwd"]),
    ];
    for (i, (odd_pairs, cycles)) in rows.iter().enumerate() {
        let mut odd = vec![false; g.edge_count()];
        for p in odd_pairs.iter() {
            odd[e(p)] = true;
        }
        let gs = g.with_signature(&odd).unwrap();
        let want = CycleDecomposition::from_edge_sets(&gs, cycles.iter().map(|c| walk(c)).collect(), None).map_err(|e| e.to_string())?;
        let got = decompose(r, &odd).map_err(|e| e.to_string())?;
        ensure(got.to_json(&gs) == want.to_json(&gs), || format!("K4,4 minus C4 table row {} differs", i + 1))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    let r = Recipe::CompleteBipartiteMinusC4 {
        n: 4,
        m: 4,
        deleted: [0, 1, 0, 1],
    };
    let g = realize(&r).map_err(|e| e.to_string())?.graph;
    let classes = even_classes(&g)?;
    ensure(classes.len() == 16, || format!("{} even classes", classes.len()))?;
    for odd in &classes {
        run_recipe(&r, odd, true)?;
    }
    k44c4_table_check(&r, &g)?;
    Ok("16 even classes; table rows match".into())
}

/// t = 0, w = 1, a = 2, u = 3, b = 4; the parallels are e10 and e11 and
/// the simple t-w edge is e0.
fn k5_plus_two_table_check(g: &SignedMultigraph) -> Result<(), String> {
    let e = |p: &str, q: &str| if (p, q) == ("0", "1") { 0 } else { edge(g, p, q) };
    let (t, w, a, u, b) = ("0", "1", "2", "3", "4");
    let cases = [
        (false, vec![vec![e(t, a), e(a, u), e(u, b), e(b, w), 10], vec![e(t, u), e(u, w), 11]]),
        (true, vec![vec![e(t, a), e(a, u), e(u, w), 10], vec![e(t, u), e(u, b), e(b, w), 11]]),
    ];
    for (parallels_odd, mut sets) in cases {
        sets.push(vec![e(a, b), e(b, t), e(t, w), e(w, a)]);
        let mut odd = vec![true; 12];
        odd[10] = parallels_odd;
        odd[11] = parallels_odd;
        let gs = g.with_signature(&odd).unwrap();
        let want = CycleDecomposition::from_edge_sets(&gs, sets, None).map_err(|e| e.to_string())?;
        let got = decompose_k5_plus(2, &odd).map_err(|e| e.to_string())?;
        ensure(got.to_json(&gs) == want.to_json(&gs), || format!("K5 plus two table (parallels odd: {parallels_odd}) differs"))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let g = realize(&Recipe::K5PlusM { m: 2, pair: [0, 1] }).map_err(|e| e.to_string())?.graph;
    let classes = even_classes(&g)?;
    ensure(classes.len() == 128, || format!("{} even classes", classes.len()))?;
    for odd in &classes {
        let gs = g.with_signature(odd).unwrap();
        valid(&gs, &decompose_k5_plus(2, odd).map_err(|e| e.to_string())?)?;
        ensure(oracle_finds(&gs)?, || "oracle disagrees".into())?;
    }
    k5_plus_two_table_check(&g)?;
    Ok("128 even classes; both table cases match".into())
}

fn criterion_6() -> Check {
    let (recipes, per) = (500u64, 4u64);
    let mut kinds = std::collections::BTreeSet::new();
    for seed in 0..recipes {
        let r = random_recipe(seed, 16).map_err(|e| e.to_string())?;
        let m = realize(&r).map_err(|e| e.to_string())?.graph.edge_count();
        ensure(m <= 16, || format!("seed {seed} realizes {m} edges"))?;
        kinds.insert(r.name());
        for j in 0..per {
            run_recipe(&r, &random_even_signature(seed * per + j, m), true).map_err(|e| format!("seed {seed}/{j}: {e}"))?;
        }
    }
    Ok(format!("{recipes} recipes x {per} signatures, {} root kinds", kinds.len()))
}

fn criterion_7() -> Check {
    let cases: [(&[usize], bool); 5] = [
        (&[2, 2, 2], true),
        (&[2, 4], true),
        (&[4, 4, 2], false),
        (&[1; 7], false),
        (&[3, 1, 1, 1, 1], false),
    ];
    for (parts, with_oracle) in cases {
        let r = Recipe::multipartite(parts);
        let m = realize(&r).map_err(|e| e.to_string())?.graph.edge_count();
        for seed in 0..100 {
            run_recipe(&r, &random_even_signature(seed, m), with_oracle).map_err(|e| format!("{parts:?} seed {seed}: {e}"))?;
        }
    }
    let k7 = Recipe::odd_clique(7);
    let g = realize(&k7).map_err(|e| e.to_string())?.graph;
    for seed in 0..20 {
        let odd = random_even_signature(1000 + seed, g.edge_count());
        ensure(oracle_finds(&g.with_signature(&odd).unwrap())?, || format!("K7 spot-check {seed}: oracle finds none"))?;
        run_recipe(&k7, &odd, false)?;
    }
    Ok("500 signatures valid; oracle on K2,2,2 K2,4; 20 K7 spot-checks".into())
}

fn criterion_8() -> Check {
    let mut profiles = 0;
    for g in [families::complete_bipartite(2, 2, Parity::Even), families::complete(5, Parity::Even)] {
        let m = g.edge_count();
        for bits in 0u64..1 << m {
            let p = SubdivisionProfile {
                lengths: g.edges().iter().enumerate().map(|(i, e)| (e.id.clone(), 1 + (bits >> i & 1) as usize)).collect(),
            };
            let sub = subdivide(&g, &p).map_err(|e| e.to_string())?;
            let above = oracle_finds(&sub.h)?;
            let below = oracle_finds(&sub.induced)?;
            ensure(above == below, || format!("profile {bits:b}: H {above}, induced {below}"))?;
            profiles += 1;
        }
    }
    Ok(format!("{profiles} profiles agree"))
}

fn coclaw() -> Recipe {
    let g = families::from_pairs(4, &[(0, 1), (1, 2), (2, 0)], Parity::Even);
    let proof = oracle_is_strongly_ecd(&g, &bounds(), 1).expect("co-claw sweep");
    Recipe::ExplicitBase {
        graph: (&g).into(),
        proof,
    }
}

fn criterion_9() -> Check {
    let k1 = || Recipe::odd_clique(1);
    let cases: Vec<(Recipe, &str)> = vec![
        (Recipe::odd_clique(5), "odd cliques: K5 is excluded"),
        (Recipe::multipartite(&[1, 1, 1, 1, 1]), "multipartite: K5 is excluded"),
        (Recipe::K5PlusM { m: 0, pair: [0, 1] }, "K5 plus parallels: m must be even and at least 2"),
        (
            Recipe::Apex {
                g: Box::new(coclaw()),
                k: 2,
            },
            "apex: G is a co-claw and k = 2",
        ),
        (
            Recipe::CliqueJoinK2 {
                g: Box::new(Recipe::odd_clique(3)),
            },
            "clique join: G is a triangle",
        ),
        (
            Recipe::Substitute {
                g: Box::new(Recipe::odd_clique(3)),
                v: "0".into(),
                h: Box::new(Recipe::odd_clique(3)),
            },
            "substitution: H is a triangle and deg(v) = 2",
        ),
        (
            Recipe::TwinSubstitute {
                g: Box::new(Recipe::bipartite(2, 2)),
                twins: ["a0".into(), "a1".into()],
                h: Box::new(coclaw()),
            },
            "twin substitution: H is a co-claw and deg(v) = 2",
        ),
        (
            Recipe::Join {
                left: vec![coclaw()],
                right: vec![k1(), k1()],
            },
            "join: a co-claw joined with the empty graph on two vertices",
        ),
        (
            Recipe::Join {
                left: vec![k1(), k1()],
                right: vec![coclaw()],
            },
            "join: a co-claw joined with the empty graph on two vertices",
        ),
        (
            Recipe::OddExpansion {
                g: Box::new(Recipe::odd_clique(5)),
                v: "0".into(),
                s: 3,
            },
            "odd cliques: K5 is excluded",
        ),
    ];
    for (r, clause) in &cases {
        let report = validate_recipe(r);
        let got = report.first_failure().and_then(|f| f.clause.clone());
        ensure(got.as_deref() == Some(*clause), || format!("{}: got {got:?}", r.name()))?;
    }
    Ok(format!("{} recipes rejected with the expected clause", cases.len()))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("K5 is not decomposable", 1, criterion_1),
        ("K5 signature classification", 5, criterion_2),
        ("K2,n base sweeps", 10, criterion_3),
        ("K4,4 minus C4 sweep and table", 10, criterion_4),
        ("K5 plus two parallels sweep and tables", 60, criterion_5),
        ("composition fuzzing", 300, criterion_6),
        ("complete multipartite graphs", 600, criterion_7),
        ("subdivision correspondence", 60, criterion_8),
        ("boundary rejections", 1, criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(*limit);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; over the time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        println!("{status} {} {name}: {detail} ({:.2} s, limit {limit} s)", i + 1, took.as_secs_f64());
        if status == "FAIL" {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
