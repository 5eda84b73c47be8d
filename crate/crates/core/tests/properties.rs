mod common;

use common::*;
use mcrd_core::{
    attach_pendants, brute_force_mcrd, collect_mcrd, gen_extremal, gen_random_connected_bipartite,
    gen_random_convex, intervals_from_adjacency, is_red_dominating, label_and_count,
    label_and_count_queue, lex_convex_sort, lift_to_original, mcrd_summary, residual_edge_count,
    validate_connected, verify_pes, ConvexBipartiteGraph, ExtremalParams, Interval, RandomParams,
};
use proptest::prelude::*;

fn arb_convex() -> impl Strategy<Value = ConvexBipartiteGraph> {
    (1usize..=12, 1usize..=16, any::<u64>(), 1usize..=12).prop_map(|(n_y, n_x, seed, max)| {
        let mut p = RandomParams::new(n_x, n_y, seed);
        p.lengths = mcrd_core::LengthDistribution::Uniform { max: max.min(n_y) };
        gen_random_convex(p).unwrap()
    })
}

proptest! {
    #[test]
    fn sort_yields_lex_convex_permutation(g in arb_convex()) {
        let (s, perm) = lex_convex_sort(&g);
        prop_assert!(s.is_lex_convex());
        for new in 1..=s.n_x() {
            prop_assert_eq!(s.interval(new), g.interval(perm.old_of(new)));
            prop_assert_eq!(perm.new_of(perm.old_of(new)), new);
        }
        let mut a = g.intervals().to_vec();
        let mut b = s.intervals().to_vec();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn sort_is_stable_on_ties(g in arb_convex()) {
        let (s, perm) = lex_convex_sort(&g);
        for new in 1..s.n_x() {
            if s.interval(new) == s.interval(new + 1) {
                prop_assert!(perm.old_of(new) < perm.old_of(new + 1));
            }
        }
    }

    #[test]
    fn shuffled_sorted_instance_recovers_sequence(g in arb_convex(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let (sorted, _) = lex_convex_sort(&g);
        let mut iv = sorted.intervals().to_vec();
        iv.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let shuffled = ConvexBipartiteGraph::from_intervals(iv, g.n_y()).unwrap();
        let (again, _) = lex_convex_sort(&shuffled);
        prop_assert_eq!(again.intervals(), sorted.intervals());
    }

    #[test]
    fn expand_then_collapse_is_identity(g in arb_convex()) {
        prop_assert_eq!(intervals_from_adjacency(&g.to_general()).unwrap(), g);
    }

    #[test]
    fn sweep_matches_queue(g in arb_convex()) {
        let (g, _) = lex_convex_sort(&g);
        let sweep = label_and_count(&g).unwrap();
        let queue = label_and_count_queue(&g).unwrap();
        prop_assert_eq!(sweep.labels(), queue.labels());
        prop_assert_eq!(sweep.counts(), queue.counts());
        prop_assert!(sweep.scan_steps() <= g.edge_count() as u64);
        // Deterministic: a second run gives identical tables.
        prop_assert_eq!(label_and_count(&g).unwrap(), sweep);
    }

    #[test]
    fn labelling_invariants_hold(g in arb_convex()) {
        let (g, _) = lex_convex_sort(&g);
        let t = label_and_count(&g).unwrap();
        prop_assert_eq!(check_zero_labels(&g, &t), Ok(()));
        prop_assert_eq!(check_min_predecessor(&g, &t), Ok(()));
        let chain: Vec<_> = t.labels().iter().map(|l| l.value()).collect();
        prop_assert_eq!(chain, chain_labels(&g));
    }

    #[test]
    fn enumeration_matches_oracle(g in arb_convex()) {
        let (g, _) = lex_convex_sort(&g);
        prop_assert!(cross_check(&g).is_ok(), "{:?}", cross_check(&g));
    }

    #[test]
    fn emitted_sets_are_dominating_and_structured(g in arb_convex()) {
        let (g, _) = lex_convex_sort(&g);
        let t = label_and_count(&g).unwrap();
        let k = mcrd_summary(&g, &t).k.unwrap();
        let general = g.to_general();
        let (sets, _) = collect_mcrd(&g, &t).unwrap();
        for s in &sets {
            prop_assert_eq!(s.len(), k);
            prop_assert!(is_red_dominating(&general, s).unwrap());
            prop_assert_eq!(check_set_structure(&g, s), Ok(()));
        }
    }

    #[test]
    fn oracle_is_self_consistent(g in arb_convex()) {
        let general = g.to_general();
        let r = brute_force_mcrd(&general).unwrap();
        for s in &r.sets {
            prop_assert!(is_red_dominating(&general, s).unwrap());
        }
        prop_assert!(r.sets.windows(2).all(|w| w[0] < w[1]));
        // Theorem-style bound on the number of minimum sets.
        prop_assert!((r.sets.len() as f64) <= (general.max_y_degree() as f64).powi(r.k as i32));
        if r.k > 1 {
            let smaller = mcrd_core::brute_force_mcrd_capped(&general, 20).unwrap();
            prop_assert_eq!(smaller.k, r.k);
        }
    }

    #[test]
    fn reduction_preserves_domination_number(
        n_x in 1usize..=7,
        n_y in 1usize..=7,
        seed in any::<u64>(),
    ) {
        let g = gen_random_connected_bipartite(RandomParams::new(n_x, n_y, seed)).unwrap();
        prop_assert!(validate_connected(&g));
        let r = attach_pendants(&g).unwrap();
        prop_assert_eq!(r.g_p.n_x(), n_x + n_y);
        prop_assert!(verify_pes(&r.g_p, &r.scheme).unwrap().is_valid());
        prop_assert_eq!(residual_edge_count(&r.g_p, &r.scheme, r.scheme.len()), 0);
        prop_assert!(residual_edge_count(&r.g_p, &r.scheme, r.scheme.len() - 1) > 0);

        let base = brute_force_mcrd(&g).unwrap();
        let padded = brute_force_mcrd(&r.g_p).unwrap();
        prop_assert_eq!(base.k, padded.k);
        for s in &base.sets {
            prop_assert!(is_red_dominating(&r.g_p, s).unwrap());
        }
        for s in &padded.sets {
            let lifted = lift_to_original(&g, &r, s);
            prop_assert!(lifted.len() <= s.len());
            prop_assert!(is_red_dominating(&g, &lifted).unwrap());
        }
    }
}

#[test]
fn extremal_family_small_parameters() {
    for d in 3..=4 {
        for k in 1..=3 {
            let g = gen_extremal(ExtremalParams::new(d, k)).unwrap();
            let general = g.to_general();
            assert_eq!(general.max_y_degree(), if k > 1 { d } else { d - 1 });
            let r = brute_force_mcrd(&general).unwrap();
            assert_eq!(r.k, k);
            assert_eq!(r.sets.len(), (d - 1).pow(k as u32));
            // One vertex per block.
            for s in &r.sets {
                let blocks: Vec<usize> = s.members().iter().map(|&x| (x - 1) / (d - 1)).collect();
                assert_eq!(blocks, (0..k).collect::<Vec<_>>());
            }
        }
    }
    let g = gen_extremal(ExtremalParams::new(4, 3)).unwrap();
    let t = label_and_count(&g).unwrap();
    assert_eq!(mcrd_summary(&g, &t).total, 27u32.into());
}

#[test]
fn extremal_disconnected_variant_reaches_d_to_the_k() {
    for (d, k) in [(2usize, 3usize), (3, 2), (3, 3)] {
        let p = ExtremalParams {
            d,
            k,
            disconnected: true,
        };
        let g = gen_extremal(p).unwrap().to_general();
        assert!(!validate_connected(&g));
        assert_eq!(g.max_y_degree(), d);
        let r = brute_force_mcrd(&g).unwrap();
        assert_eq!((r.k, r.sets.len()), (k, d.pow(k as u32)));
    }
}

#[test]
fn generators_are_reproducible() {
    for seed in 0..20 {
        let p = RandomParams::new(9, 7, seed);
        assert_eq!(gen_random_convex(p).unwrap(), gen_random_convex(p).unwrap());
        assert_eq!(
            gen_random_connected_bipartite(p).unwrap(),
            gen_random_connected_bipartite(p).unwrap()
        );
    }
    // Different seeds should not all collapse to one graph.
    let a = gen_random_convex(RandomParams::new(9, 7, 1)).unwrap();
    let b = gen_random_convex(RandomParams::new(9, 7, 2)).unwrap();
    assert_ne!(a, b);
    assert_eq!(
        gen_random_convex(RandomParams::new(1, 3, 7))
            .unwrap()
            .intervals(),
        &[Interval::new(1, 3)]
    );
}

#[test]
fn label_order_and_shared_left_endpoints_can_disagree() {
    let g = convex_fixture("label_order.convex");
    let t = label_and_count(&g).unwrap();
    assert_eq!(labels_as_strings(&t), ["0", "0", "1", "2", "1"]);
    let queue = label_and_count_queue(&g).unwrap();
    assert_eq!((queue.labels(), queue.counts()), (t.labels(), t.counts()));
    assert!(check_label_order(&g, &t).is_err());
    assert!(check_shared_left(&g, &t).is_err());
    assert_eq!(check_zero_labels(&g, &t), Ok(()));
    assert_eq!(check_min_predecessor(&g, &t), Ok(()));
    assert_eq!(cross_check(&g).map(|(k, n, _)| (k, n)), Ok((2, 1)));
}

#[test]
fn nine_vertex_predecessors() {
    let g = convex_fixture("nine_vertex.convex");
    let t = label_and_count(&g).unwrap();
    let p8 = mcrd_core::predecessor_candidates(&g, &t, 8).unwrap();
    assert!(p8.contains(&4) && !p8.contains(&3));
    assert_eq!(
        mcrd_core::predecessor_candidates(&g, &t, 7).unwrap(),
        vec![3, 4]
    );
}
