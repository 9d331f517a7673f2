//! Vertex orderings, the colorings they induce, and validity checking.
//!
//! A coloring with `0 = c(u₀) ≤ c(u₁) ≤ .. ≤ c(u_{p-1})` is determined up to
//! slack by the ordering `u₀..u_{p-1}`. [`coloring_from_ordering`] assigns
//! each consecutive pair the gap `p - 1 - 𝓛(uᵢ) - 𝓛(uᵢ₊₁) - ω + 1`; for
//! orderings passing [`check_ordering_conditions`] the result is a valid
//! coloring whose span meets [`crate::formulas::lower_bound`].

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detour::{detour_distance, BranchRelation, DetourProfile};
use crate::families::SymmetricCoordinates;
use crate::graph::{BlockGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("ordering is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("negative gap {gap} between positions {index} and {}", index + 1)]
    NegativeGap { index: usize, gap: i64 },
    #[error("expected {expected} colors, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("not a symmetric block graph: {0}")]
    NotSymmetric(String),
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
}

/// A permutation `u₀..u_{p-1}` of the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexOrdering(Vec<Vertex>);

impl VertexOrdering {
    pub fn new(order: Vec<Vertex>, p: usize) -> Result<Self, ColoringError> {
        let mut seen = vec![false; p];
        if order.len() != p {
            return Err(ColoringError::NotAPermutation(p));
        }
        for &v in &order {
            if v >= p || std::mem::replace(&mut seen[v], true) {
                return Err(ColoringError::NotAPermutation(p));
            }
        }
        Ok(VertexOrdering(order))
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Vertex {
        self.0[0]
    }

    pub fn last(&self) -> Vertex {
        self.0[self.0.len() - 1]
    }

    pub fn reversed(&self) -> Self {
        VertexOrdering(self.0.iter().rev().copied().collect())
    }

    /// Orders vertices by color, ties by vertex id.
    pub fn from_coloring(colors: &[u64]) -> Self {
        let mut order: Vec<Vertex> = (0..colors.len()).collect();
        order.sort_by_key(|&v| (colors[v], v));
        VertexOrdering(order)
    }
}

/// Colors indexed by vertex id. JSON form: `{"colors": [..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamColoring {
    pub colors: Vec<u64>,
}

impl HamColoring {
    pub fn new(colors: Vec<u64>) -> Self {
        HamColoring { colors }
    }

    /// Shifts colors so the smallest is 0.
    pub fn normalized(mut self) -> Self {
        if let Some(&min) = self.colors.iter().min() {
            self.colors.iter_mut().for_each(|c| *c -= min);
        }
        self
    }

    pub fn span(&self) -> u64 {
        let max = self.colors.iter().copied().max().unwrap_or(0);
        let min = self.colors.iter().copied().min().unwrap_or(0);
        max - min
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("coloring serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// A pair violating `D(u, v) + |c(u) - c(v)| ≥ p - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub distance: u64,
    pub color_gap: u64,
    pub deficit: u64,
}

/// Checks every pair; returns all violations sorted by `(u, v)`.
pub fn validate_coloring(g: &BlockGraph, colors: &[u64]) -> Result<Vec<Violation>, ColoringError> {
    let p = g.order();
    if colors.len() != p {
        return Err(ColoringError::SizeMismatch { expected: p, got: colors.len() });
    }
    let need = p.saturating_sub(1) as u64;
    let violations = (0..p)
        .into_par_iter()
        .flat_map_iter(|u| {
            (u + 1..p).filter_map(move |v| {
                let distance = detour_distance(g, u, v);
                let color_gap = colors[u].abs_diff(colors[v]);
                let have = distance + color_gap;
                (have < need).then(|| Violation { u, v, distance, color_gap, deficit: need - have })
            })
        })
        .collect();
    Ok(violations)
}

pub fn is_valid_coloring(g: &BlockGraph, colors: &[u64]) -> bool {
    validate_coloring(g, colors).is_ok_and(|v| v.is_empty())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EndpointCheck {
    pub pass: bool,
    pub first_level: u64,
    pub last_level: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchCheck {
    pub pass: bool,
    /// Index `i` of the first pair `(uᵢ, uᵢ₊₁)` in the wrong relation.
    pub first_violation: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HalfOrderViolation {
    pub index: usize,
    pub distance: u64,
    pub p: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HalfOrderCheck {
    pub pass: bool,
    pub violations: Vec<HalfOrderViolation>,
}

/// Outcome of the three sufficient conditions for an ordering to reach the
/// lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    /// `𝓛(u₀) = 0` and `𝓛(u_{p-1}) = ξ` (both 0 when `ω ≥ 2`).
    pub endpoints: EndpointCheck,
    /// Consecutive non-central vertices lie in different branches (`ω = 1`)
    /// or opposite branches (`ω ≥ 2`). Pairs with a central vertex are exempt.
    pub branches: BranchCheck,
    /// `2·D(uᵢ, uᵢ₊₁) ≤ p` for every consecutive pair.
    pub half_order: HalfOrderCheck,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.endpoints.pass && self.branches.pass && self.half_order.pass
    }
}

pub fn check_ordering_conditions(
    g: &BlockGraph,
    profile: &DetourProfile,
    ordering: &VertexOrdering,
) -> Result<ConditionReport, ColoringError> {
    let p = g.order();
    let order = VertexOrdering::new(ordering.0.clone(), p)?;
    let first_level = profile.level(order.first());
    let last_level = profile.level(order.last());
    let expected_last = if profile.omega == 1 { profile.xi } else { 0 };
    let endpoints = EndpointCheck {
        pass: first_level == 0 && last_level == expected_last,
        first_level,
        last_level,
    };

    let wanted = if profile.omega == 1 { BranchRelation::Different } else { BranchRelation::Opposite };
    let first_violation = order.0.windows(2).position(|w| {
        let rel = profile.relation(w[0], w[1]);
        rel != BranchRelation::InvolvesCentral && rel != wanted
    });
    let branches = BranchCheck { pass: first_violation.is_none(), first_violation };

    let violations: Vec<HalfOrderViolation> = order
        .0
        .windows(2)
        .enumerate()
        .filter_map(|(index, w)| {
            let distance = detour_distance(g, w[0], w[1]);
            (2 * distance > p as u64).then_some(HalfOrderViolation { index, distance, p })
        })
        .collect();
    let half_order = HalfOrderCheck { pass: violations.is_empty(), violations };
    Ok(ConditionReport { endpoints, branches, half_order })
}

/// Colors `u₀ = 0`, `c(uᵢ₊₁) = c(uᵢ) + p - 1 - 𝓛(uᵢ) - 𝓛(uᵢ₊₁) - ω + 1`.
///
/// Fails with [`ColoringError::NegativeGap`] rather than clamping.
pub fn coloring_from_ordering(
    g: &BlockGraph,
    profile: &DetourProfile,
    ordering: &VertexOrdering,
) -> Result<HamColoring, ColoringError> {
    let p = g.order();
    let order = VertexOrdering::new(ordering.0.clone(), p)?;
    let mut colors = vec![0u64; p];
    let mut current: i64 = 0;
    for (index, w) in order.0.windows(2).enumerate() {
        let gap = (p as i64 - 1)
            - profile.level(w[0]) as i64
            - profile.level(w[1]) as i64
            - profile.omega as i64
            + 1;
        if gap < 0 {
            return Err(ColoringError::NegativeGap { index, gap });
        }
        current += gap;
        colors[w[1]] = current as u64;
    }
    Ok(HamColoring::new(colors))
}

/// `(p-1)(p-ω) - 2𝓛(G) + 𝓛(u₀) + 𝓛(u_{p-1})`: the span
/// [`coloring_from_ordering`] produces for any ordering it accepts.
pub fn telescoped_span(g: &BlockGraph, profile: &DetourProfile, ordering: &VertexOrdering) -> i64 {
    let p = g.order() as i64;
    (p - 1) * (p - profile.omega as i64) - 2 * profile.total_level as i64
        + profile.level(ordering.first()) as i64
        + profile.level(ordering.last()) as i64
}

/// The ordering of the optimal constructions for symmetric block graphs.
///
/// Branch roots `vᵗ` are the top-level list (even diameter) or the central
/// vertices (odd diameter). Each root's descendants are listed deepest level
/// first, and within a level by child tuple read with `i₁` least
/// significant. The ordering starts at a central vertex, deals the
/// descendant lists out round-robin over the roots, and ends with the roots
/// themselves (for odd diameter all central vertices except the starting
/// one).
pub fn sym_ordering(
    g: &BlockGraph,
    coords: &SymmetricCoordinates,
    profile: &DetourProfile,
) -> Result<VertexOrdering, ColoringError> {
    let spec = coords.spec;
    if coords.coords.len() != g.order() {
        return Err(ColoringError::NotSymmetric("coordinates do not match graph order".into()));
    }
    if spec.d < 3 {
        return Err(ColoringError::InvalidSpec(format!("{spec}: diameter must be at least 3")));
    }
    let expected_center: Vec<Vertex> = match coords.center {
        Some(w) => vec![w],
        None => {
            let mut c = coords.roots.clone();
            c.sort_unstable();
            c
        }
    };
    if profile.center != expected_center {
        return Err(ColoringError::NotSymmetric("coordinates disagree with detour center".into()));
    }

    let roots = coords.roots.len();
    let lists: Vec<Vec<Vertex>> = (1..=roots)
        .map(|t| {
            let mut desc = coords.descendants(t);
            desc.sort_by(|&a, &b| {
                let (ca, cb) = (&coords.coords[a], &coords.coords[b]);
                cb.depth
                    .cmp(&ca.depth)
                    .then_with(|| ca.tuple.iter().rev().cmp(cb.tuple.iter().rev()))
            });
            desc
        })
        .collect();
    let per_root = lists[0].len();
    if lists.iter().any(|l| l.len() != per_root) {
        return Err(ColoringError::NotSymmetric("branches differ in size".into()));
    }

    let mut order = Vec::with_capacity(g.order());
    let tail: &[Vertex] = match coords.center {
        Some(w) => {
            order.push(w);
            &coords.roots
        }
        None => {
            order.push(coords.roots[roots - 1]);
            &coords.roots[..roots - 1]
        }
    };
    for s in 0..per_root {
        for list in &lists {
            order.push(list[s]);
        }
    }
    order.extend_from_slice(tail);
    VertexOrdering::new(order, g.order())
}

/// Explicit optimal colorings of `K_n^k` in the vertex layout of
/// [`crate::families::gen_union`].
///
/// `k = 2`: `c(z) = 0`, `c(xᵢ) = c(yᵢ) = i(n-1)`. `k ≥ 3`: `c(w) = 0`, then
/// the other vertices taken round-robin over the blocks receive
/// `(k-1)(n-1)` followed by steps of `(k-2)(n-1)`.
pub fn union_coloring(n: usize, k: usize) -> Result<HamColoring, ColoringError> {
    if n < 2 || k < 2 {
        return Err(ColoringError::InvalidSpec(format!("union needs n, k >= 2; got {n}, {k}")));
    }
    let n1 = (n - 1) as u64;
    let vertex = |i: usize, j: usize| 1 + j * (n - 1) + i;
    let mut colors = vec![0u64; k * (n - 1) + 1];
    if k == 2 {
        for i in 0..n - 1 {
            let c = (i as u64 + 1) * n1;
            colors[vertex(i, 0)] = c;
            colors[vertex(i, 1)] = c;
        }
    } else {
        let step = (k as u64 - 2) * n1;
        let mut c = (k as u64 - 1) * n1;
        for i in 0..n - 1 {
            for j in 0..k {
                colors[vertex(i, j)] = c;
                c += step;
            }
        }
    }
    Ok(HamColoring::new(colors))
}

/// Best-effort ordering for arbitrary block graphs: start at a central
/// vertex, repeatedly take the deepest unused vertex in the right branch
/// relation to the previous one (falling back to the deepest unused vertex),
/// and finish with the remaining central vertices. Ties go to the smaller id.
pub fn greedy_ordering(g: &BlockGraph, profile: &DetourProfile) -> VertexOrdering {
    let p = g.order();
    let wanted = if profile.omega == 1 { BranchRelation::Different } else { BranchRelation::Opposite };
    let mut pool: Vec<Vertex> = (0..p).filter(|&v| !profile.is_central(v)).collect();
    pool.sort_by_key(|&v| (std::cmp::Reverse(profile.level(v)), v));

    let mut order = vec![profile.center[0]];
    while !pool.is_empty() {
        let prev = *order.last().expect("non-empty");
        let pick = pool
            .iter()
            .position(|&v| profile.is_central(prev) || profile.relation(prev, v) == wanted)
            .unwrap_or(0);
        order.push(pool.remove(pick));
    }
    order.extend(profile.center.iter().skip(1));
    VertexOrdering::new(order, p).expect("greedy ordering covers every vertex once")
}
