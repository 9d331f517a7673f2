//! Derived values checked against independent computations: detour distances
//! come from adjacency DFS and colorings from direct enumeration.

mod common;

use blockhc::prelude::*;

use common::{brute_matrix, dfs_longest_path, for_each_coloring};

fn brute_profile(g: &BlockGraph) -> (Vec<Vertex>, u64, Vec<u64>) {
    let dist = brute_matrix(g);
    let ecc: Vec<u64> = dist.iter().map(|row| *row.iter().max().unwrap()).collect();
    let radius = *ecc.iter().min().unwrap();
    let center: Vec<Vertex> = (0..g.order()).filter(|&v| ecc[v] == radius).collect();
    let level = (0..g.order()).map(|v| center.iter().map(|&c| dist[v][c]).min().unwrap()).collect();
    (center, radius, level)
}

fn brute_hc(g: &BlockGraph, upper: u64) -> u64 {
    let dist = brute_matrix(g);
    let mut best = u64::MAX;
    for_each_coloring(&dist, upper, |c| best = best.min(*c.iter().max().unwrap()));
    best
}

#[test]
fn sym_424_totals_by_direct_summation() {
    let (g, _) = gen_symmetric(SymmetricSpec::new(4, 2, 4).unwrap()).unwrap();
    assert_eq!(g.order(), 25);
    let (center, _, level) = brute_profile(&g);
    assert_eq!(center.len(), 1);
    assert_eq!(level.iter().sum::<u64>(), 126);

    let prof = DetourProfile::compute(&g);
    assert_eq!(prof.total_level, 126);
    assert_eq!(prof.level, level);

    // smallest level over vertices whose branches differ, by direct scan
    let p = g.order();
    let xi = (0..p)
        .flat_map(|u| (0..p).map(move |v| (u, v)))
        .filter(|&(u, v)| {
            u != v
                && !prof.is_central(u)
                && !prof.is_central(v)
                && dfs_longest_path(&g, u, v) == level[u] + level[v]
        })
        .map(|(u, v)| level[u].max(level[v]))
        .min()
        .unwrap();
    assert_eq!(xi, 3);
    assert_eq!(prof.xi, 3);
}

#[test]
fn sym_324_profile_and_span() {
    let (g, coords) = gen_symmetric(SymmetricSpec::new(3, 2, 4).unwrap()).unwrap();
    assert_eq!(g.order(), 13);
    let (_, _, level) = brute_profile(&g);
    assert_eq!(level.iter().sum::<u64>(), 40);
    let prof = DetourProfile::compute(&g);
    let ord = sym_ordering(&g, &coords, &prof).unwrap();
    let c = coloring_from_ordering(&g, &prof, &ord).unwrap();
    assert_eq!(c.span(), 66);
    assert!(is_valid_coloring(&g, &c.colors));
}

#[test]
fn detour_center_matches_brute_force() {
    for seed in 0..60 {
        let g = gen_random_block_graph(seed, 10, 2 + (seed % 4) as usize, 3);
        let (center, radius, level) = brute_profile(&g);
        let prof = DetourProfile::compute(&g);
        assert_eq!(prof.center, center, "seed {seed}");
        assert_eq!(prof.omega, center.len());
        assert_eq!(prof.level, level, "seed {seed}");
        assert_eq!(*prof.ecc.iter().min().unwrap(), radius);
    }
}

#[test]
fn union_colorings_are_valid() {
    for (n, k, span) in [(3, 4, 34u64), (4, 3, 30), (3, 2, 4), (5, 2, 16)] {
        let g = gen_union(n, k).unwrap();
        let c = union_coloring(n, k).unwrap();
        assert_eq!(c.span(), span, "union({n},{k})");
        assert!(is_valid_coloring(&g, &c.colors), "union({n},{k})");
        assert_eq!(family_hc(FamilyKind::Union { n, k }).unwrap().value, span);
    }
}

#[test]
fn two_block_union_repeats_colors_only_on_hamiltonian_pairs() {
    for n in 3..=6 {
        let g = gen_union(n, 2).unwrap();
        let c = union_coloring(n, 2).unwrap();
        let p = g.order() as u64;
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                if c.colors[u] == c.colors[v] {
                    assert_eq!(dfs_longest_path(&g, u, v), p - 1);
                }
            }
        }
    }
}

#[test]
fn greedy_spans_on_strict_examples() {
    let k42 = gen_union(4, 2).unwrap();
    let prof = DetourProfile::compute(&k42);
    let c = greedy_min_coloring_for_ordering(&k42, &greedy_ordering(&k42, &prof)).unwrap();
    assert_eq!(c.span(), 9);
    assert_eq!(brute_hc(&k42, 9), 9);

    let p5 = gen_path(5).unwrap();
    let prof = DetourProfile::compute(&p5);
    let greedy = greedy_min_coloring_for_ordering(&p5, &greedy_ordering(&p5, &prof)).unwrap();
    assert!(greedy.span() >= 6);
    let best = exact_hc(&p5, &SearchBudget::default()).unwrap();
    let c = greedy_min_coloring_for_ordering(&p5, &best.ordering).unwrap();
    assert_eq!(c.span(), 6);
    assert!(is_valid_coloring(&p5, &c.colors));
    assert_eq!(brute_hc(&p5, 6), 6);
}

#[test]
fn greedy_ordering_is_valid_on_symmetric_graph() {
    let (g, _) = gen_symmetric(SymmetricSpec::new(4, 2, 4).unwrap()).unwrap();
    let prof = DetourProfile::compute(&g);
    let ord = greedy_ordering(&g, &prof);
    let c = greedy_min_coloring_for_ordering(&g, &ord).unwrap();
    assert!(is_valid_coloring(&g, &c.colors));
    assert!(c.span() >= 327);
}

#[test]
fn star_values_from_enumeration() {
    for (leaves, hc) in [(2, 1u64), (3, 4), (4, 9), (5, 16)] {
        let g = gen_star(leaves).unwrap();
        assert_eq!(brute_hc(&g, hc + 1), hc, "star({leaves})");
        let prof = DetourProfile::compute(&g);
        let greedy = greedy_min_coloring_for_ordering(&g, &greedy_ordering(&g, &prof)).unwrap();
        assert!(greedy.span() >= hc);
    }
}

#[test]
fn path_values_from_enumeration() {
    for (p, hc) in [(5, 6u64), (6, 10), (7, 14)] {
        let g = gen_path(p).unwrap();
        assert_eq!(brute_hc(&g, hc + 1), hc, "path({p})");
        assert_eq!(family_hc(FamilyKind::Path { p }).unwrap().value, hc);
    }
}

#[test]
fn branch_relations_on_odd_graph() {
    let (g, coords) = gen_symmetric(SymmetricSpec::new(3, 3, 3).unwrap()).unwrap();
    let prof = DetourProfile::compute(&g);
    assert_eq!(prof.omega, 3);
    let leaves_of = |t: usize| coords.descendants(t);
    let (a, b) = (leaves_of(1), leaves_of(2));
    assert_eq!(prof.relation(a[0], b[0]), BranchRelation::Opposite);
    // children alternate between the two child blocks of a root
    assert_eq!(prof.relation(a[0], a[1]), BranchRelation::Different);
    assert_eq!(prof.relation(a[0], a[2]), BranchRelation::Same);
    assert_eq!(prof.relation(coords.roots[0], a[0]), BranchRelation::InvolvesCentral);
}

#[test]
fn branch_relations_on_even_graph() {
    let (g, coords) = gen_symmetric(SymmetricSpec::new(4, 2, 4).unwrap()).unwrap();
    let prof = DetourProfile::compute(&g);
    assert_eq!(prof.omega, 1);
    let roots = &coords.roots;
    // roots sharing a central block are in the same branch, others differ
    let same_block: Vec<_> = roots.iter().filter(|&&r| g.common_block(r, roots[0]).is_some()).collect();
    assert_eq!(same_block.len(), 3);
    for &r in &roots[1..] {
        let rel = prof.relation(roots[0], r);
        let expected = if g.common_block(r, roots[0]).is_some() && !prof.is_central(r) {
            let shared = g.common_block(r, roots[0]).unwrap();
            if g.block(shared).contains(&coords.center.unwrap()) {
                BranchRelation::Same
            } else {
                BranchRelation::Different
            }
        } else {
            BranchRelation::Different
        };
        assert_eq!(rel, expected);
    }
}

#[test]
fn profile_json_fields() {
    let (g, _) = gen_symmetric(SymmetricSpec::new(4, 2, 4).unwrap()).unwrap();
    let json = DetourProfile::compute(&g).to_json();
    assert_eq!(json["omega"], 1);
    assert_eq!(json["xi"], 3);
    assert_eq!(json["total_level"], 126);
    assert_eq!(json["levels"].as_array().unwrap().len(), 25);
}

#[test]
fn exact_solver_agrees_with_enumeration() {
    for seed in 0..40 {
        let g = gen_random_block_graph(seed, 7, 3, 3);
        let exact = exact_hc(&g, &SearchBudget { stop_at_lower_bound: false, ..Default::default() }).unwrap();
        assert_eq!(brute_hc(&g, exact.value), exact.value, "seed {seed}");
    }
}

#[test]
fn symmetric_trees_match_tree_formula() {
    for kappa in 3..=4 {
        for d in 3..=6 {
            let spec = SymmetricSpec::new(2, kappa, d).unwrap();
            let (g, coords) = gen_symmetric(spec).unwrap();
            let (center, _, level) = brute_profile(&g);
            let p = g.order() as i64;
            let eps = center.len() as i64 - 1;
            let total: i64 = level.iter().sum::<u64>() as i64;
            let tree = (p - 1) * (p - 1 - eps) + (1 - eps) - 2 * total;

            let prof = DetourProfile::compute(&g);
            let ord = sym_ordering(&g, &coords, &prof).unwrap();
            let c = coloring_from_ordering(&g, &prof, &ord).unwrap();
            assert_eq!(sym_hc(&spec).unwrap() as i64, tree, "{spec}");
            assert_eq!(c.span() as i64, tree, "{spec}");
            assert!(is_valid_coloring(&g, &c.colors), "{spec}");
        }
    }
}
