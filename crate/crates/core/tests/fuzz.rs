use evcyc_core::decompose::decompose_with_stats;
use evcyc_core::recipe::{random_recipe, realize};
use evcyc_core::validate_certificate;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn even_signature(rng: &mut ChaCha8Rng, m: usize) -> Vec<bool> {
    let mut s: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
    if s.iter().filter(|&&x| x).count() % 2 == 1 {
        s[0] = !s[0];
    }
    s
}

#[test]
fn random_recipes_decompose_without_fallback() {
    let mut failures = Vec::new();
    for seed in 0..600u64 {
        let r = random_recipe(seed, 48).unwrap();
        let re = realize(&r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..12 {
            let s = even_signature(&mut rng, re.graph.edge_count());
            match decompose_with_stats(&r, &s) {
                Ok((d, st)) => {
                    let g = re.graph.with_signature(&s).unwrap();
                    if let Err(v) = validate_certificate(&g, &d) {
                        failures.push(format!("seed {seed}: {v}"));
                    } else if st.fallbacks > 0 {
                        failures.push(format!("seed {seed}: {} fallbacks", st.fallbacks));
                    }
                }
                Err(e) => failures.push(format!("seed {seed}: {e}")),
            }
        }
    }
    assert!(failures.is_empty(), "{} failures, first: {:?}", failures.len(), &failures[..failures.len().min(10)]);
}

#[test]
fn equivalent_signatures_both_decompose() {
    for seed in 0..150u64 {
        let r = random_recipe(seed, 32).unwrap();
        let re = realize(&r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let s = even_signature(&mut rng, re.graph.edge_count());
        let g = re.graph.with_signature(&s).unwrap();
        let side: Vec<usize> = (0..g.vertex_count()).filter(|_| rng.gen()).collect();
        let h = g.resign(&side).unwrap();
        for sig in [g.odd_mask(), h.odd_mask()] {
            let d = evcyc_core::decompose(&r, &sig).unwrap();
            let gs = re.graph.with_signature(&sig).unwrap();
            assert!(validate_certificate(&gs, &d).is_ok(), "seed {seed}");
        }
    }
}
