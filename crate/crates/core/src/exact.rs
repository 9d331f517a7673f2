//! Small-scale ground truth.
//!
//! The exact solver enumerates vertex orderings rather than color
//! assignments: for a fixed ordering the cheapest coloring that is
//! nondecreasing along it is obtained greedily, and every coloring is
//! dominated by the greedy coloring of the ordering it induces. So
//! `hc(G)` is the minimum greedy span over all `p!` orderings.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::coloring::{greedy_ordering, ColoringError, HamColoring, VertexOrdering};
use crate::detour::{distance_matrix, DetourProfile};
use crate::formulas::lower_bound;
use crate::graph::{BlockGraph, Vertex};

/// Instances above this order are always refused.
pub const HARD_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("no coloring with span at most the supplied incumbent {0}")]
    IncumbentTooLow(u64),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_p: usize,
    pub time_limit: Option<Duration>,
    /// Known achievable span; the search only looks for colorings at most
    /// this large.
    pub incumbent: Option<u64>,
    /// Stop as soon as a coloring meets the general lower bound.
    pub stop_at_lower_bound: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_p: 10, time_limit: None, incumbent: None, stop_at_lower_bound: true }
    }
}

impl SearchBudget {
    fn admit(&self, p: usize) -> Result<(), ExactError> {
        let cap = self.max_p.min(HARD_CAP);
        if p > cap {
            return Err(ExactError::BudgetExceeded(format!("p = {p} exceeds limit {cap}")));
        }
        Ok(())
    }
}

/// Longest simple `u`–`v` path by exhaustive DFS.
pub fn brute_longest_path(
    g: &BlockGraph,
    u: Vertex,
    v: Vertex,
    budget: &SearchBudget,
) -> Result<u64, ExactError> {
    budget.admit(g.order())?;
    if u == v {
        return Ok(0);
    }
    let adj: Vec<Vec<Vertex>> = (0..g.order()).map(|x| g.neighbors(x).collect()).collect();
    let mut on_path = vec![false; g.order()];
    on_path[u] = true;
    let mut best = None;
    extend_path(&adj, u, v, 0, &mut on_path, &mut best);
    Ok(best.expect("block graphs are connected"))
}

fn extend_path(
    adj: &[Vec<Vertex>],
    at: Vertex,
    target: Vertex,
    len: u64,
    on_path: &mut [bool],
    best: &mut Option<u64>,
) {
    for &next in &adj[at] {
        if next == target {
            *best = Some(best.map_or(len + 1, |b| b.max(len + 1)));
        } else if !on_path[next] {
            on_path[next] = true;
            extend_path(adj, next, target, len + 1, on_path, best);
            on_path[next] = false;
        }
    }
}

/// Smallest coloring nondecreasing along `ordering`:
/// `c(u₀) = 0`, `c(uᵢ₊₁) = max(c(uᵢ), max_{j ≤ i} c(uⱼ) + p - 1 - D(uⱼ, uᵢ₊₁))`.
pub fn greedy_min_coloring_for_ordering(
    g: &BlockGraph,
    ordering: &VertexOrdering,
) -> Result<HamColoring, ColoringError> {
    let p = g.order();
    let order = VertexOrdering::new(ordering.as_slice().to_vec(), p)?;
    let dist = distance_matrix(g);
    Ok(HamColoring::new(greedy_colors(&dist, order.as_slice())))
}

fn greedy_colors(dist: &[Vec<u64>], order: &[Vertex]) -> Vec<u64> {
    let need = dist.len().saturating_sub(1) as u64;
    let mut colors = vec![0u64; dist.len()];
    for i in 1..order.len() {
        let x = order[i];
        let mut c = colors[order[i - 1]];
        for &y in &order[..i] {
            c = c.max((colors[y] + need).saturating_sub(dist[y][x]));
        }
        colors[x] = c;
    }
    colors
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub value: u64,
    pub witness: HamColoring,
    pub ordering: VertexOrdering,
    pub lower_bound: u64,
    /// Search nodes expanded, summed over workers.
    pub nodes: u64,
}

impl ExactResult {
    pub fn bound_gap(&self) -> u64 {
        self.value - self.lower_bound
    }
}

struct Search<'a> {
    p: usize,
    need: u64,
    dist: &'a [Vec<u64>],
    /// `p - 1 - ecc(v)`: the least color increase on entering `v`.
    entry_cost: Vec<u64>,
    shared_best: &'a AtomicU64,
    stop_at: &'a AtomicUsize,
    lower_bound: u64,
    stop_at_lower_bound: bool,
    deadline: Option<Instant>,
}

struct Subtree {
    first: Vertex,
    best: u64,
    order: Vec<Vertex>,
    nodes: u64,
    timed_out: bool,
}

impl Search<'_> {
    fn run(&self, first: Vertex) -> Subtree {
        let mut sub =
            Subtree { first, best: u64::MAX, order: Vec::new(), nodes: 0, timed_out: false };
        let mut order = vec![first];
        let mut colors = vec![0u64; self.p];
        let used = 1u32 << first;
        let remaining: u64 = (0..self.p).filter(|&v| v != first).map(|v| self.entry_cost[v]).sum();
        if self.p == 1 {
            sub.best = 0;
            sub.order = order;
            return sub;
        }
        self.dfs(&mut order, &mut colors, used, remaining, &mut sub);
        sub
    }

    fn aborted(&self, sub: &Subtree) -> bool {
        self.stop_at.load(AtomicOrdering::Relaxed) < sub.first
    }

    fn dfs(
        &self,
        order: &mut Vec<Vertex>,
        colors: &mut [u64],
        used: u32,
        remaining: u64,
        sub: &mut Subtree,
    ) {
        sub.nodes += 1;
        if sub.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    sub.timed_out = true;
                }
            }
        }
        if sub.timed_out || self.aborted(sub) {
            return;
        }
        let first = order[0];
        let last_color = colors[*order.last().expect("non-empty")];
        for x in 0..self.p {
            if used & (1 << x) != 0 {
                continue;
            }
            let left = self.p - order.len() - 1;
            // Reversing a coloring keeps its span, so fix u₀ < u_{p-1}.
            if left == 0 && x < first {
                continue;
            }
            let mut c = last_color;
            for &y in order.iter() {
                c = c.max((colors[y] + self.need).saturating_sub(self.dist[y][x]));
            }
            let rest = remaining - self.entry_cost[x];
            let bound = c + rest;
            if bound >= sub.best || bound > self.shared_best.load(AtomicOrdering::Relaxed) {
                continue;
            }
            if left == 0 {
                sub.best = c;
                order.push(x);
                sub.order = order.clone();
                order.pop();
                self.shared_best.fetch_min(c, AtomicOrdering::Relaxed);
                if self.stop_at_lower_bound && c <= self.lower_bound {
                    self.stop_at.fetch_min(sub.first, AtomicOrdering::Relaxed);
                    return;
                }
                continue;
            }
            colors[x] = c;
            order.push(x);
            self.dfs(order, colors, used | (1 << x), rest, sub);
            order.pop();
            if sub.timed_out || self.aborted(sub) {
                return;
            }
            if self.stop_at_lower_bound && sub.best <= self.lower_bound {
                return;
            }
        }
    }
}

/// Exact hamiltonian chromatic number with one optimal witness.
///
/// The search is split over the first vertex of the ordering. Results do
/// not depend on scheduling: the witness is the first optimal ordering in
/// DFS order under the smallest optimal first vertex.
pub fn exact_hc(g: &BlockGraph, budget: &SearchBudget) -> Result<ExactResult, ExactError> {
    let p = g.order();
    budget.admit(p)?;
    let profile = DetourProfile::compute(g);
    let bound = lower_bound(g, &profile);
    let dist = distance_matrix(g);
    let need = p.saturating_sub(1) as u64;
    let entry_cost: Vec<u64> = (0..p)
        .map(|v| need.saturating_sub(dist[v].iter().copied().max().unwrap_or(0)))
        .collect();

    let seed = greedy_ordering(g, &profile);
    let seed_span = *greedy_colors(&dist, seed.as_slice()).iter().max().unwrap_or(&0);
    let start = budget.incumbent.map_or(seed_span, |inc| inc.min(seed_span));

    let shared_best = AtomicU64::new(start);
    let stop_at = AtomicUsize::new(usize::MAX);
    let search = Search {
        p,
        need,
        dist: &dist,
        entry_cost,
        shared_best: &shared_best,
        stop_at: &stop_at,
        lower_bound: bound,
        stop_at_lower_bound: budget.stop_at_lower_bound,
        deadline: budget.time_limit.map(|t| Instant::now() + t),
    };
    let subtrees: Vec<Subtree> = (0..p).into_par_iter().map(|first| search.run(first)).collect();

    if subtrees.iter().any(|s| s.timed_out) {
        return Err(ExactError::BudgetExceeded("time limit reached".into()));
    }
    let nodes = subtrees.iter().map(|s| s.nodes).sum();
    let cutoff = stop_at.load(AtomicOrdering::Relaxed);
    let best = subtrees
        .into_iter()
        .filter(|s| s.first <= cutoff && !s.order.is_empty())
        .min_by_key(|s| (s.best, s.first))
        .ok_or(ExactError::IncumbentTooLow(start))?;
    let ordering = VertexOrdering::new(best.order, p)?;
    let witness = HamColoring::new(greedy_colors(&dist, ordering.as_slice()));
    Ok(ExactResult { value: best.best, witness, ordering, lower_bound: bound, nodes })
}
