mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{adjacency_oracle, char_poly, rel_close};
use hyperee::bounds::check_ee_lower_spectral;
use hyperee::families::{attach_pendant, cycle, random_uniform};
use hyperee::format::{parse_auto, to_json, to_text};
use hyperee::hypergraph::KSubsets;
use hyperee::matrix::{trace_power, IntMatrix};
use hyperee::orderings::verify_ordering_lemmas;
use hyperee::spectral::spectrum;
use hyperee::{estrada_index, Hypergraph};

fn uniform() -> impl Strategy<Value = (Hypergraph, usize)> {
    (2usize..=4, 0usize..=5, any::<u64>(), 0.0f64..0.7).prop_map(|(k, extra, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (random_uniform(k + extra, k, p, &mut rng).unwrap(), k)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution((h, k) in uniform()) {
        let c = h.complement_uniform(k).unwrap();
        prop_assert_eq!(c.m() + h.m(), KSubsets::new(h.n(), k).count());
        prop_assert_eq!(c.complement_uniform(k).unwrap(), h);
    }

    #[test]
    fn degree_sum_is_km((h, k) in uniform()) {
        prop_assert_eq!(h.degrees().iter().sum::<usize>(), k * h.m());
    }

    #[test]
    fn spectrum_moments_match_walk_traces((h, _k) in uniform()) {
        let s = spectrum(&h).unwrap();
        let a = IntMatrix::adjacency(&h);
        prop_assert!(s.moment(1).abs() <= 1e-9 * s.abs_moment(1).max(1.0));
        for t in 2..=4u32 {
            let exact = trace_power(&a, t as usize).unwrap() as f64;
            prop_assert!(rel_close(s.moment(t), exact, 1e-9), "t={} {} vs {}", t, s.moment(t), exact);
        }
    }

    #[test]
    fn eigenvalues_are_roots_of_the_char_poly((h, _k) in uniform()) {
        let p = char_poly(&adjacency_oracle(&h));
        let s = spectrum(&h).unwrap();
        // Σλ = −c₁ and Σλ² = c₁² − 2c₂
        prop_assert!(rel_close(s.moment(1), -(p[1] as f64), 1e-9));
        if p.len() > 2 {
            prop_assert!(rel_close(s.moment(2), (p[1] * p[1] - 2 * p[2]) as f64, 1e-9));
        }
    }

    #[test]
    fn perron_root_dominates((h, _k) in uniform()) {
        let s = spectrum(&h).unwrap();
        let l1 = s.lambda1();
        prop_assert!(s.eigenvalues().iter().all(|x| x.abs() <= l1 + 1e-9));
        prop_assert!(l1 >= -1e-9);
    }

    #[test]
    fn ee_lower_spectral_holds((h, _k) in uniform()) {
        prop_assert!(check_ee_lower_spectral(&h).unwrap().holds);
    }

    #[test]
    fn adding_an_edge_raises_ee((h, k) in uniform(), pick in any::<prop::sample::Index>()) {
        let absent: Vec<Vec<usize>> = KSubsets::new(h.n(), k).filter(|e| !h.contains_edge(e)).collect();
        prop_assume!(!absent.is_empty());
        let e = &absent[pick.index(absent.len())];
        let bigger = h.add_edge(e).unwrap();
        prop_assert!(estrada_index(&h).unwrap() < estrada_index(&bigger).unwrap());
    }

    #[test]
    fn coalescence_sizes((h, _k) in uniform(), m in 2usize..5) {
        let (c, _) = cycle(m, 3).unwrap();
        let glued = h.coalesce(0, &c, 0).unwrap();
        prop_assert_eq!(glued.n(), h.n() + c.n() - 1);
        prop_assert_eq!(glued.m(), h.m() + c.m());
    }

    #[test]
    fn formats_round_trip((h, _k) in uniform()) {
        prop_assert_eq!(parse_auto(&to_text(&h)).unwrap(), h.clone());
        prop_assert_eq!(parse_auto(&to_json(&h)).unwrap(), h);
    }

    #[test]
    fn pendant_attachment_keeps_unicyclic_shape(m in 2usize..5, at in 0usize..6) {
        let (c, _) = cycle(m, 3).unwrap();
        let at = at % c.n();
        let (g, e) = attach_pendant(&c, at, 3).unwrap();
        prop_assert_eq!(g.n(), c.n() + 2);
        prop_assert!(g.is_connected());
        prop_assert!(g.contains_edge(&e));
    }
}

#[test]
fn consolidation_for_k4_beyond_sixteen_vertices() {
    // the smallest C3(1,1,1) for k = 4 has 18 vertices
    let reports = verify_ordering_lemmas(4, 18).unwrap();
    let consolidation = reports
        .iter()
        .find(|r| r.lemma_id == "c3-consolidation")
        .unwrap();
    assert_eq!(consolidation.instances.len(), 2);
    assert!(reports.iter().all(|r| r.all_strict()));
}
