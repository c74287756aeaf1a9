use evcyc_core::decompose::{
    almost_decompose, base_tables_valid, decompose, decompose_k2n, decompose_k5_plus, find_parity_four_cycle, k5_is_bad,
};
use evcyc_core::graph::{families, GraphFile};
use evcyc_core::oracle::{oracle_decompose, oracle_is_strongly_ecd, OracleBounds};
use evcyc_core::recipe::{random_even_signature, realize};
use evcyc_core::{validate_certificate, CycleDecomposition, Error, Parity, Recipe, SignedMultigraph};

fn edge(g: &SignedMultigraph, a: &str, b: &str) -> usize {
    let es = g.edges_between(g.vertex(a).unwrap(), g.vertex(b).unwrap());
    assert_eq!(es.len(), 1, "{a}-{b}");
    es[0]
}

fn edges(g: &SignedMultigraph, pairs: &[(&str, &str)]) -> Vec<usize> {
    pairs.iter().map(|&(a, b)| edge(g, a, b)).collect()
}

fn cycle(g: &SignedMultigraph, walk: &[&str]) -> Vec<usize> {
    (0..walk.len()).map(|i| edge(g, walk[i], walk[(i + 1) % walk.len()])).collect()
}

fn mask(m: usize, odd: &[usize]) -> Vec<bool> {
    let mut s = vec![false; m];
    for &e in odd {
        s[e] = true;
    }
    s
}

fn signed(r: &Recipe, sigma: &[bool]) -> SignedMultigraph {
    realize(r).unwrap().graph.with_signature(sigma).unwrap()
}

/// Decomposes and checks the certificate independently of the library's
/// own post-check.
fn checked(r: &Recipe, sigma: &[bool]) -> CycleDecomposition {
    let d = decompose(r, sigma).unwrap();
    let g = signed(r, sigma);
    validate_certificate(&g, &d).unwrap();
    assert!(d.odd_cycle_index.is_none());
    d
}

fn sets(d: &CycleDecomposition) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = d
        .cycles
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.sort_unstable();
            c
        })
        .collect();
    out.sort();
    out
}

/// An explicit base licensed by running the oracle sweep.
fn explicit(g: &SignedMultigraph) -> Recipe {
    let proof = oracle_is_strongly_ecd(g, &OracleBounds::default(), 1).unwrap();
    Recipe::ExplicitBase {
        graph: GraphFile::from(g),
        proof,
    }
}

fn oracle_agrees(r: &Recipe, sigma: &[bool]) {
    let g = signed(r, sigma);
    assert!(oracle_decompose(&g, &OracleBounds::default()).unwrap().is_some());
}

#[test]
fn base_tables_validate() {
    base_tables_valid().unwrap();
}

#[test]
fn k22_empty_signature_is_one_four_cycle() {
    let d = checked(&Recipe::bipartite(2, 2), &[false; 4]);
    assert_eq!(d.cycles.len(), 1);
    assert_eq!(d.cycles[0].len(), 4);
}

#[test]
fn k5_is_rejected_as_a_precondition() {
    let e = decompose(&Recipe::multipartite(&[1, 1, 1, 1, 1]), &[false; 10]).unwrap_err();
    assert!(matches!(e, Error::Precondition(ref m) if m.contains("K5")), "{e}");
    assert!(matches!(decompose(&Recipe::odd_clique(5), &[false; 10]), Err(Error::Precondition(_))));
}

#[test]
fn odd_signatures_are_rejected() {
    assert!(matches!(decompose(&Recipe::bipartite(2, 2), &mask(4, &[0])), Err(Error::OddSignature)));
}

#[test]
fn k2n_pairs_consecutive_vertices() {
    // u = a0, v = a1, x_i = b(i-1).
    let r = Recipe::bipartite(2, 2);
    let g = realize(&r).unwrap().graph;
    let s = mask(4, &edges(&g, &[("a1", "b0"), ("a1", "b1")]));
    let d = decompose_k2n(2, &s).unwrap();
    assert_eq!(sets(&d), sets(&CycleDecomposition::new(vec![cycle(&g, &["a0", "b0", "a1", "b1"])])));

    let r4 = Recipe::bipartite(2, 4);
    let g4 = realize(&r4).unwrap().graph;
    let want = CycleDecomposition::new(vec![cycle(&g4, &["a0", "b0", "a1", "b1"]), cycle(&g4, &["a0", "b2", "a1", "b3"])]);
    let d = decompose_k2n(4, &[false; 8]).unwrap();
    assert_eq!(sets(&d), sets(&want));
    // Re-signing at x1 gives the same cycles, each still even.
    let s = mask(8, &edges(&g4, &[("a0", "b0"), ("a1", "b0")]));
    let d = decompose_k2n(4, &s).unwrap();
    assert_eq!(sets(&d), sets(&want));
    validate_certificate(&g4.with_signature(&s).unwrap(), &d).unwrap();
}

fn four_cycle_parity(n: usize, m: usize, sigma: &[bool], c: [usize; 4]) -> Parity {
    let g = families::complete_bipartite(n, m, Parity::Even).with_signature(sigma).unwrap();
    let walk: Vec<usize> = (0..4).map(|i| edge_by_index(&g, c[i], c[(i + 1) % 4])).collect();
    g.cycle_parity(&walk).unwrap()
}

fn edge_by_index(g: &SignedMultigraph, a: usize, b: usize) -> usize {
    let es = g.edges_between(a, b);
    assert_eq!(es.len(), 1);
    es[0]
}

#[test]
fn parity_four_cycle_examples() {
    let c = find_parity_four_cycle(2, 2, &[false; 4], Parity::Even).unwrap();
    assert_eq!(four_cycle_parity(2, 2, &[false; 4], c), Parity::Even);
    let s = mask(4, &[2]);
    let c = find_parity_four_cycle(2, 2, &s, Parity::Odd).unwrap();
    assert_eq!(four_cycle_parity(2, 2, &s, c), Parity::Odd);
    // Three odd edges at one vertex of K4,4.
    let s = mask(16, &[0, 1, 2]);
    let c = find_parity_four_cycle(4, 4, &s, Parity::Odd).unwrap();
    assert_eq!(four_cycle_parity(4, 4, &s, c), Parity::Odd);
    assert!(matches!(find_parity_four_cycle(2, 2, &[false; 4], Parity::Odd), Err(Error::Precondition(_))));
}

#[test]
fn k26_minus_c4_is_two_four_cycles() {
    let r = Recipe::CompleteBipartiteMinusC4 {
        n: 2,
        m: 6,
        deleted: [0, 1, 0, 1],
    };
    let d = checked(&r, &[false; 8]);
    assert_eq!(d.cycles.len(), 2);
    assert!(d.cycles.iter().all(|c| c.len() == 4));
}

#[test]
fn k44_random_signatures_agree_with_oracle() {
    let r = Recipe::bipartite(4, 4);
    for seed in 0..20 {
        let s = random_even_signature(seed, 16);
        checked(&r, &s);
        oracle_agrees(&r, &s);
    }
}

/// Labels t, a, u, b, w of the figure on K5PlusM(2) with pair {0, 1}:
/// t = 0, w = 1, a = 2, u = 3, b = 4; e1, e2 are the parallels e10, e11.
fn k5_plus_two(parallels_odd: bool) -> (SignedMultigraph, CycleDecomposition) {
    let r = Recipe::K5PlusM { m: 2, pair: [0, 1] };
    let mut s = vec![true; 12];
    s[10] = parallels_odd;
    s[11] = parallels_odd;
    let g = signed(&r, &s);
    let d = decompose_k5_plus(2, &s).unwrap();
    (g, d)
}

#[test]
fn k5_plus_two_parallels_even_matches_table() {
    let (g, d) = k5_plus_two(false);
    let e = |a: &str, b: &str| if (a, b) == ("0", "1") || (a, b) == ("1", "0") { 0 } else { edge(&g, a, b) };
    let (t, w, a, u, b) = ("0", "1", "2", "3", "4");
    let want = vec![
        vec![e(t, a), e(a, u), e(u, b), e(b, w), 10],
        vec![e(t, u), e(u, w), 11],
        vec![e(a, b), e(b, t), e(t, w), e(w, a)],
    ];
    let want = CycleDecomposition::from_edge_sets(&g, want, None).unwrap();
    assert_eq!(d, want);
    assert_eq!(d.to_json(&g), want.to_json(&g));
}

#[test]
fn k5_plus_two_all_odd_matches_table() {
    let (g, d) = k5_plus_two(true);
    let e = |a: &str, b: &str| if (a, b) == ("0", "1") || (a, b) == ("1", "0") { 0 } else { edge(&g, a, b) };
    let (t, w, a, u, b) = ("0", "1", "2", "3", "4");
    let want = vec![
        vec![e(t, a), e(a, u), e(u, w), 10],
        vec![e(t, u), e(u, b), e(b, w), 11],
        vec![e(a, b), e(b, t), e(t, w), e(w, a)],
    ];
    let want = CycleDecomposition::from_edge_sets(&g, want, None).unwrap();
    assert_eq!(d, want);
    assert_eq!(d.to_json(&g), want.to_json(&g));
}

#[test]
fn k5_plus_four_strips_a_two_cycle() {
    let r = Recipe::K5PlusM { m: 4, pair: [0, 1] };
    let mut s = vec![true; 14];
    s[12] = false;
    s[13] = false;
    let d = checked(&r, &s);
    let two: Vec<&Vec<usize>> = d.cycles.iter().filter(|c| c.len() == 2).collect();
    assert_eq!(two.len(), 1);
    assert_eq!(d.cycles.len(), 4);
    let mut s = vec![true; 14];
    s[10] = false;
    s[11] = false;
    let d = checked(&r, &s);
    assert_eq!(d.cycles.iter().filter(|c| c.len() == 2).count(), 1);
}

#[test]
fn k5_badness_examples() {
    assert!(k5_is_bad(&[true; 10]).unwrap());
    assert!(!k5_is_bad(&[false; 10]).unwrap());
    let k5 = families::complete(5, Parity::Odd);
    let flipped = k5.resign(&[0]).unwrap().odd_mask();
    assert!(k5_is_bad(&flipped).unwrap());
    let d = checked(&Recipe::odd_clique(3), &[false; 3]);
    assert_eq!(d.cycles.len(), 1);
}

#[test]
fn almost_decomposition_examples() {
    let d = almost_decompose(&Recipe::bipartite(2, 2), &mask(4, &[1]), 1).unwrap();
    assert_eq!((d.cycles.len(), d.odd_cycle_index), (1, Some(0)));
    let d = almost_decompose(&Recipe::odd_clique(3), &mask(3, &[2]), 2).unwrap();
    assert_eq!((d.cycles.len(), d.odd_cycle_index), (1, Some(0)));
    let r = Recipe::bipartite(2, 4);
    let s = mask(8, &[5]);
    let d = almost_decompose(&r, &s, 5).unwrap();
    assert_eq!(d.cycles.len(), 2);
    let i = d.odd_cycle_index.unwrap();
    assert!(d.cycles[i].contains(&5));
    validate_certificate(&signed(&r, &s), &d).unwrap();
    assert!(matches!(almost_decompose(&r, &[false; 8], 0), Err(Error::EvenSignature)));
}

#[test]
fn odd_expansion_examples() {
    let r = Recipe::OddExpansion {
        g: Box::new(Recipe::bipartite(2, 2)),
        v: "a0".into(),
        s: 3,
    };
    let d = checked(&r, &[false; 8]);
    assert_eq!(d.cycles.len(), 2);
    assert!(d.cycles.iter().all(|c| c.len() == 4));
    let g = realize(&r).unwrap().graph;
    let fan = edges(&g, &[("c.0", "g.b0"), ("c.1", "g.b0")]);
    let s = mask(8, &fan);
    checked(&r, &s);
    oracle_agrees(&r, &s);

    let one = Recipe::OddExpansion {
        g: Box::new(Recipe::bipartite(2, 2)),
        v: "a0".into(),
        s: 1,
    };
    assert_eq!(checked(&one, &[false; 4]).cycles.len(), 1);
}

fn triangle_plus(isolated: usize) -> SignedMultigraph {
    families::from_pairs(3 + isolated, &[(0, 1), (1, 2), (2, 0)], Parity::Even)
}

#[test]
fn apex_examples() {
    let r = Recipe::Apex {
        g: Box::new(Recipe::bipartite(2, 2)),
        k: 2,
    };
    let d = checked(&r, &[false; 12]);
    assert!(d.cycles.len() >= 2);

    // Triangle plus three isolated vertices, triangle odd: the K5-plus path.
    let r = Recipe::Apex {
        g: Box::new(explicit(&triangle_plus(3))),
        k: 2,
    };
    let m = realize(&r).unwrap().graph.edge_count();
    let s = mask(m, &[0, 3]);
    checked(&r, &s);
    oracle_agrees(&r, &s);

    // A 6-cycle child with odd weight.
    let r = Recipe::Apex {
        g: Box::new(explicit(&families::cycle(6, Parity::Even))),
        k: 2,
    };
    for seed in 0..30 {
        let mut s = random_even_signature(seed, 18);
        if s[..6].iter().filter(|&&x| x).count() % 2 == 0 {
            s[0] = !s[0];
            s[6] = !s[6];
        }
        checked(&r, &s);
    }
}

#[test]
fn clique_join_examples() {
    let r = Recipe::CliqueJoinK2 {
        g: Box::new(Recipe::odd_clique(1)),
    };
    for s in [mask(3, &[]), mask(3, &[0, 1]), mask(3, &[1, 2]), mask(3, &[0, 2])] {
        let d = checked(&r, &s);
        assert_eq!(d.cycles.len(), 1);
        oracle_agrees(&r, &s);
    }
    // K5 minus a triangle.
    let child = families::from_pairs(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], Parity::Even);
    let r = Recipe::CliqueJoinK2 {
        g: Box::new(explicit(&child)),
    };
    let m = realize(&r).unwrap().graph.edge_count();
    for seed in 0..30 {
        let s = random_even_signature(seed, m);
        checked(&r, &s);
        oracle_agrees(&r, &s);
    }
    let k3 = Recipe::CliqueJoinK2 {
        g: Box::new(Recipe::odd_clique(3)),
    };
    assert!(matches!(decompose(&k3, &[false; 10]), Err(Error::Precondition(_))));
}

#[test]
fn substitution_examples() {
    let id = Recipe::Substitute {
        g: Box::new(Recipe::bipartite(2, 2)),
        v: "a0".into(),
        h: Box::new(Recipe::odd_clique(1)),
    };
    for seed in 0..8 {
        checked(&id, &random_even_signature(seed, 4));
    }

    let r = Recipe::Substitute {
        g: Box::new(Recipe::bipartite(2, 2)),
        v: "a0".into(),
        h: Box::new(Recipe::odd_clique(3)),
    };
    assert!(matches!(decompose(&r, &[false; 11]), Err(Error::Precondition(_))));

    // Degree four keeps the triangle allowed; odd weight on the triangle copy.
    let r = Recipe::Substitute {
        g: Box::new(Recipe::bipartite(2, 4)),
        v: "a0".into(),
        h: Box::new(Recipe::odd_clique(3)),
    };
    let g = realize(&r).unwrap().graph;
    let tri = edges(&g, &[("h.0", "h.1"), ("h.1", "h.2"), ("h.2", "h.0")]);
    let m = g.edge_count();
    for seed in 0..30 {
        let mut s = random_even_signature(seed, m);
        if tri.iter().filter(|&&e| s[e]).count() % 2 == 0 {
            s[tri[0]] = !s[tri[0]];
            let other = (0..m).find(|e| !tri.contains(e)).unwrap();
            s[other] = !s[other];
        }
        checked(&r, &s);
        oracle_agrees(&r, &s);
    }

    let r = Recipe::Substitute {
        g: Box::new(Recipe::bipartite(4, 4)),
        v: "a0".into(),
        h: Box::new(Recipe::odd_clique(3)),
    };
    let m = realize(&r).unwrap().graph.edge_count();
    for seed in 0..60 {
        checked(&r, &random_even_signature(seed, m));
    }
}

#[test]
fn twin_substitution_examples() {
    let r = Recipe::TwinSubstitute {
        g: Box::new(Recipe::bipartite(2, 2)),
        twins: ["a0".into(), "a1".into()],
        h: Box::new(Recipe::bipartite(2, 2)),
    };
    let m = realize(&r).unwrap().graph.edge_count();
    checked(&r, &vec![false; m]);
    oracle_agrees(&r, &vec![false; m]);
    for seed in 0..40 {
        let s = random_even_signature(seed, m);
        checked(&r, &s);
        oracle_agrees(&r, &s);
    }

    let coclaw = explicit(&triangle_plus(1));
    let bad = Recipe::TwinSubstitute {
        g: Box::new(Recipe::bipartite(2, 2)),
        twins: ["a0".into(), "a1".into()],
        h: Box::new(coclaw.clone()),
    };
    assert!(matches!(decompose(&bad, &[false; 11]), Err(Error::Precondition(_))));

    // Degree four twins with a 4-cycle H of odd weight.
    let r = Recipe::TwinSubstitute {
        g: Box::new(Recipe::bipartite(2, 4)),
        twins: ["a0".into(), "a1".into()],
        h: Box::new(explicit(&families::cycle(4, Parity::Even))),
    };
    let g = realize(&r).unwrap().graph;
    let h_edge = edge(&g, "h.0", "h.1");
    for seed in 0..60 {
        let mut s = random_even_signature(seed, g.edge_count());
        if [("h.0", "h.1"), ("h.1", "h.2"), ("h.2", "h.3"), ("h.3", "h.0")]
            .iter()
            .filter(|&&(a, b)| s[edge(&g, a, b)])
            .count()
            % 2
            == 0
        {
            s[h_edge] = !s[h_edge];
            s[edge(&g, "h.0", "g.b0")] ^= true;
        }
        checked(&r, &s);
    }
    let with_coclaw = Recipe::TwinSubstitute {
        g: Box::new(Recipe::bipartite(2, 4)),
        twins: ["a0".into(), "a1".into()],
        h: Box::new(coclaw),
    };
    let m = realize(&with_coclaw).unwrap().graph.edge_count();
    for seed in 0..30 {
        checked(&with_coclaw, &random_even_signature(seed, m));
    }
}

#[test]
fn join_examples() {
    let tri_k1 = || vec![Recipe::odd_clique(3), Recipe::odd_clique(1)];
    let r = Recipe::Join {
        left: tri_k1(),
        right: tri_k1(),
    };
    let g = realize(&r).unwrap().graph;
    let m = g.edge_count();
    let t1 = edge(&g, "l0.0", "l0.1");
    let t2 = edge(&g, "r0.0", "r0.1");
    for seed in 0..40 {
        let mut s = random_even_signature(seed, m);
        for (tri, pref) in [(t1, "l0"), (t2, "r0")] {
            let weight = [("0", "1"), ("1", "2"), ("2", "0")]
                .iter()
                .filter(|&&(a, b)| s[edge(&g, &format!("{pref}.{a}"), &format!("{pref}.{b}"))])
                .count();
            if weight % 2 == 0 {
                s[tri] = !s[tri];
            }
        }
        if s.iter().filter(|&&x| x).count() % 2 == 1 {
            let cross = edge(&g, "l1.0", "r1.0");
            s[cross] = !s[cross];
        }
        checked(&r, &s);
    }

    let k1 = || vec![Recipe::odd_clique(1), Recipe::odd_clique(1)];
    let d = checked(&Recipe::Join { left: k1(), right: k1() }, &[false; 4]);
    assert_eq!(d.cycles.len(), 1);

    let r = Recipe::Join {
        left: vec![Recipe::bipartite(2, 2)],
        right: k1(),
    };
    let m = realize(&r).unwrap().graph.edge_count();
    for seed in 0..30 {
        let s = random_even_signature(seed, m);
        checked(&r, &s);
        oracle_agrees(&r, &s);
    }

    let bad = Recipe::Join {
        left: vec![Recipe::odd_clique(3), Recipe::odd_clique(1)],
        right: k1(),
    };
    assert!(matches!(decompose(&bad, &[false; 11]), Err(Error::Precondition(_))));
}

#[test]
fn odd_clique_examples() {
    let d = checked(&Recipe::odd_clique(3), &[false; 3]);
    assert_eq!(d.cycles.len(), 1);
    assert!(matches!(decompose(&Recipe::odd_clique(5), &[false; 10]), Err(Error::Precondition(_))));
    checked(&Recipe::odd_clique(7), &[false; 21]);
    for seed in 0..20 {
        checked(&Recipe::odd_clique(7), &random_even_signature(seed, 21));
        checked(&Recipe::odd_clique(9), &random_even_signature(seed, 36));
    }
}

#[test]
fn multipartite_examples() {
    let d = checked(&Recipe::multipartite(&[2, 2]), &[false; 4]);
    assert_eq!(d.cycles.len(), 1);
    assert!(matches!(
        decompose(&Recipe::multipartite(&[1, 1, 1, 1, 1]), &[false; 10]),
        Err(Error::Precondition(_))
    ));
    let r = Recipe::multipartite(&[3, 1, 1, 1, 1]);
    let m = realize(&r).unwrap().graph.edge_count();
    for seed in 0..20 {
        checked(&r, &random_even_signature(seed, m));
    }
    assert!(matches!(decompose(&Recipe::multipartite(&[2, 1]), &[false; 2]), Err(Error::Precondition(_))));
}
