mod common;

use blockhc::prelude::*;
use proptest::prelude::*;

use common::{brute_matrix, dfs_longest_path};

fn arb_graph(max_p: usize) -> impl Strategy<Value = BlockGraph> {
    (any::<u64>(), 2..=max_p, 2usize..=5, 2usize..=4)
        .prop_map(|(seed, p, b, c)| gen_random_block_graph(seed, p, b, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn blocks_on_path_reverses(g in arb_graph(40), a in any::<usize>(), b in any::<usize>()) {
        let (u, v) = (a % g.order(), b % g.order());
        prop_assume!(u != v);
        let mut forward = g.blocks_on_path(u, v).unwrap();
        forward.reverse();
        prop_assert_eq!(forward, g.blocks_on_path(v, u).unwrap());
    }

    #[test]
    fn every_edge_lies_in_one_block(g in arb_graph(30)) {
        for u in 0..g.order() {
            for v in g.neighbors(u) {
                let owners = g.blocks().iter().filter(|b| b.contains(&u) && b.contains(&v)).count();
                prop_assert_eq!(owners, 1);
            }
        }
        let sum: usize = g.blocks().iter().map(|b| b.len() * (b.len() - 1) / 2).sum();
        prop_assert_eq!(sum, g.edge_count());
    }

    #[test]
    fn graph_file_round_trips(g in arb_graph(40)) {
        let text = g.to_file().to_json();
        let back = GraphFile::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
        prop_assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn detour_distance_is_a_metric(g in arb_graph(40), a in any::<usize>(), b in any::<usize>(), c in any::<usize>()) {
        let p = g.order();
        let (u, v, w) = (a % p, b % p, c % p);
        let d = |x, y| detour_distance(&g, x, y);
        prop_assert_eq!(d(u, v), d(v, u));
        prop_assert_eq!(d(u, v) == 0, u == v);
        prop_assert!(d(u, w) <= d(u, v) + d(v, w));
        prop_assert!(d(u, v) < p as u64);
    }

    #[test]
    fn detour_distance_matches_dfs(g in arb_graph(10)) {
        let brute = brute_matrix(&g);
        for u in 0..g.order() {
            for v in 0..g.order() {
                prop_assert_eq!(detour_distance(&g, u, v), brute[u][v]);
            }
        }
    }

    #[test]
    fn random_generation_is_deterministic(seed in any::<u64>()) {
        let a = gen_random_block_graph(seed, 30, 4, 3);
        let b = gen_random_block_graph(seed, 30, 4, 3);
        prop_assert!(a.order() >= 2 && a.order() <= 30);
        prop_assert!(a.blocks().iter().all(|b| b.len() >= 2 && b.len() <= 4));
        prop_assert!((0..a.order()).all(|v| a.blocks_of(v).len() <= 3));
        prop_assert_eq!(a, b);
    }

    #[test]
    fn lower_bound_never_exceeds_greedy(g in arb_graph(30)) {
        let prof = DetourProfile::compute(&g);
        let ord = greedy_ordering(&g, &prof);
        let c = greedy_min_coloring_for_ordering(&g, &ord).unwrap();
        prop_assert!(is_valid_coloring(&g, &c.colors));
        prop_assert!(lower_bound(&g, &prof) <= c.span());
    }

    #[test]
    fn coloring_from_ordering_telescopes(g in arb_graph(30), seed in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let prof = DetourProfile::compute(&g);
        let mut order: Vec<Vertex> = (0..g.order()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let ord = VertexOrdering::new(order, g.order()).unwrap();
        match coloring_from_ordering(&g, &prof, &ord) {
            Ok(c) => prop_assert_eq!(c.span() as i64, telescoped_span(&g, &prof, &ord)),
            Err(e) => prop_assert!(matches!(e, ColoringError::NegativeGap { .. }), "{}", e),
        }
    }
}

#[test]
fn symmetric_levels_are_depth_times_block_weight() {
    for (m, kappa, d) in [(3, 2, 5), (4, 3, 4), (5, 2, 3), (2, 3, 6)] {
        let spec = SymmetricSpec::new(m, kappa, d).unwrap();
        let (g, coords) = gen_symmetric(spec).unwrap();
        let prof = DetourProfile::compute(&g);
        for v in 0..g.order() {
            assert_eq!(prof.level(v), (coords.coords[v].depth * spec.n()) as u64, "{spec} vertex {v}");
        }
    }
}

#[test]
fn path_detour_equals_index_distance() {
    let g = gen_path(12).unwrap();
    for u in 0..12 {
        for v in 0..12 {
            assert_eq!(detour_distance(&g, u, v), dfs_longest_path(&g, u, v));
        }
    }
}
