//! Test-only oracles. Nothing here calls the detour-distance formula: longest
//! paths are found by walking adjacency, and colorings are enumerated
//! directly.

#![allow(dead_code)]

use blockhc::prelude::*;

/// Longest simple `u`–`v` path by DFS over adjacency, with no size cap.
pub fn dfs_longest_path(g: &BlockGraph, u: Vertex, v: Vertex) -> u64 {
    fn walk(adj: &[Vec<Vertex>], at: Vertex, to: Vertex, len: u64, seen: &mut [bool], best: &mut u64) {
        for &x in &adj[at] {
            if x == to {
                *best = (*best).max(len + 1);
            } else if !seen[x] {
                seen[x] = true;
                walk(adj, x, to, len + 1, seen, best);
                seen[x] = false;
            }
        }
    }
    if u == v {
        return 0;
    }
    let adj: Vec<Vec<Vertex>> = (0..g.order()).map(|x| g.neighbors(x).collect()).collect();
    let mut seen = vec![false; g.order()];
    seen[u] = true;
    let mut best = 0;
    walk(&adj, u, v, 0, &mut seen, &mut best);
    best
}

pub fn brute_matrix(g: &BlockGraph) -> Vec<Vec<u64>> {
    let p = g.order();
    (0..p).map(|u| (0..p).map(|v| dfs_longest_path(g, u, v)).collect()).collect()
}

/// Calls `visit` on every hamiltonian coloring with colors in `0..=max_span`
/// and minimum color 0, using the given distance matrix.
pub fn for_each_coloring(dist: &[Vec<u64>], max_span: u64, mut visit: impl FnMut(&[u64])) {
    fn assign(
        dist: &[Vec<u64>],
        max_span: u64,
        colors: &mut Vec<u64>,
        visit: &mut dyn FnMut(&[u64]),
    ) {
        let p = dist.len();
        let i = colors.len();
        if i == p {
            if colors.contains(&0) {
                visit(colors);
            }
            return;
        }
        let need = p as u64 - 1;
        for c in 0..=max_span {
            let ok = (0..i).all(|j| dist[i][j] + c.abs_diff(colors[j]) >= need);
            if ok {
                colors.push(c);
                assign(dist, max_span, colors, visit);
                colors.pop();
            }
        }
    }
    let mut colors = Vec::with_capacity(dist.len());
    assign(dist, max_span, &mut colors, &mut visit);
}

/// The symmetric parameter grid: `m ∈ 3..=5, κ ∈ 2..=4, d ∈ 3..=7` plus the
/// tree rows `m = 2, κ ∈ {3, 4}`, limited to `p ≤ max_p`.
pub fn sym_grid(max_p: usize) -> Vec<SymmetricSpec> {
    let mut specs = Vec::new();
    for m in 2..=5 {
        for kappa in 2..=4 {
            if m == 2 && kappa == 2 {
                continue;
            }
            for d in 3..=7 {
                let spec = SymmetricSpec::new(m, kappa, d).unwrap();
                if sym_order_count(&spec).unwrap() as usize <= max_p {
                    specs.push(spec);
                }
            }
        }
    }
    specs
}

/// The seeded random block graphs used across suites (`p ≤ 9`), varying
/// block size and cut degree limits with the seed.
pub fn random_graph(seed: u64) -> BlockGraph {
    gen_random_block_graph(seed, 9, 2 + (seed % 4) as usize, 2 + (seed % 3) as usize)
}
