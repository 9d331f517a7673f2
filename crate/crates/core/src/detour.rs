//! Detour distance and the measurements built on it: eccentricity, detour
//! center, detour levels, `ω`, `ξ` and branch relations.
//!
//! In a block graph a longest `u`–`v` path cannot leave the unique chain of
//! blocks between `u` and `v` (re-entering would repeat a cut vertex), and
//! inside each block it can visit every vertex. So
//! `D(u, v) = Σ (|B| - 1)` over that chain, which the incidence tree answers
//! with one LCA query.

use serde::Serialize;

use crate::graph::{BlockGraph, BlockId, TreeNode, Vertex};

/// Length (in edges) of a longest simple `u`–`v` path.
pub fn detour_distance(g: &BlockGraph, u: Vertex, v: Vertex) -> u64 {
    if u == v {
        return 0;
    }
    let lca = g.incidence_lca(u, v);
    let own = match lca {
        TreeNode::Block(b) => g.block(b).len() as u64 - 1,
        TreeNode::Vertex(_) => 0,
    };
    g.root_weight(TreeNode::Vertex(u)) + g.root_weight(TreeNode::Vertex(v))
        - 2 * g.root_weight(lca)
        + own
}

/// Dense `p × p` table of detour distances, for small graphs.
pub fn distance_matrix(g: &BlockGraph) -> Vec<Vec<u64>> {
    let p = g.order();
    (0..p)
        .map(|u| (0..p).map(|v| detour_distance(g, u, v)).collect())
        .collect()
}

fn farthest_from(g: &BlockGraph, x: Vertex) -> Vertex {
    (0..g.order())
        .max_by_key(|&v| (detour_distance(g, x, v), std::cmp::Reverse(v)))
        .unwrap_or(x)
}

/// Detour eccentricity of every vertex.
///
/// Detour distance is a tree metric on the incidence tree (block nodes
/// weighted, vertex nodes not), so every vertex's farthest vertex is an end
/// of a diametral pair found by a double sweep.
pub fn eccentricities(g: &BlockGraph) -> Vec<u64> {
    let a = farthest_from(g, 0);
    let b = farthest_from(g, a);
    (0..g.order())
        .map(|x| detour_distance(g, x, a).max(detour_distance(g, x, b)))
        .collect()
}

/// Vertices of minimum detour eccentricity, ascending, and their count `ω`.
pub fn detour_center(g: &BlockGraph) -> (Vec<Vertex>, usize) {
    center_from_ecc(&eccentricities(g))
}

fn center_from_ecc(ecc: &[u64]) -> (Vec<Vertex>, usize) {
    let min = ecc.iter().copied().min().unwrap_or(0);
    let center: Vec<Vertex> = (0..ecc.len()).filter(|&v| ecc[v] == min).collect();
    let omega = center.len();
    (center, omega)
}

/// Branch membership of a non-central vertex: the nearest central vertex and
/// the first block on the path from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Branch {
    pub owner: Vertex,
    pub block: BlockId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchRelation {
    Same,
    Different,
    Opposite,
    InvolvesCentral,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetourProfile {
    pub ecc: Vec<u64>,
    pub center: Vec<Vertex>,
    pub omega: usize,
    pub xi: u64,
    pub level: Vec<u64>,
    pub total_level: u64,
    pub branch: Vec<Option<Branch>>,
    pub diameter: u64,
}

impl DetourProfile {
    pub fn compute(g: &BlockGraph) -> Self {
        let ecc = eccentricities(g);
        let (center, omega) = center_from_ecc(&ecc);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let mut is_central = vec![false; g.order()];
        for &w in &center {
            is_central[w] = true;
        }

        let mut level = vec![0u64; g.order()];
        let mut branch = vec![None; g.order()];
        for u in 0..g.order() {
            if is_central[u] {
                continue;
            }
            let (dist, owner) = center
                .iter()
                .map(|&w| (detour_distance(g, w, u), w))
                .min()
                .expect("center is non-empty");
            level[u] = dist;
            let first = g.blocks_on_path(owner, u).expect("u is not central")[0];
            branch[u] = Some(Branch { owner, block: first });
        }
        let total_level = level.iter().sum();

        let mut profile = DetourProfile {
            ecc,
            center,
            omega,
            xi: 0,
            level,
            total_level,
            branch,
            diameter,
        };
        profile.xi = xi(g, &profile);
        profile
    }

    pub fn is_central(&self, v: Vertex) -> bool {
        self.branch[v].is_none()
    }

    pub fn level(&self, v: Vertex) -> u64 {
        self.level[v]
    }

    pub fn relation(&self, u: Vertex, v: Vertex) -> BranchRelation {
        match (self.branch[u], self.branch[v]) {
            (None, _) | (_, None) => BranchRelation::InvolvesCentral,
            (Some(a), Some(b)) if a == b => BranchRelation::Same,
            (Some(a), Some(b)) if a.owner == b.owner => BranchRelation::Different,
            _ => BranchRelation::Opposite,
        }
    }

    /// JSON dump used by the `bound` command.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "omega": self.omega,
            "xi": self.xi,
            "center": self.center,
            "levels": self.level,
            "total_level": self.total_level,
        })
    }
}

/// `ξ`: with a single central vertex, the smallest `|B| - 1` over blocks
/// containing it; zero when `ω ≥ 2`.
pub fn xi(g: &BlockGraph, profile: &DetourProfile) -> u64 {
    if profile.omega != 1 {
        return 0;
    }
    let w = profile.center[0];
    g.blocks_of(w)
        .iter()
        .map(|&b| g.block(b).len() as u64 - 1)
        .min()
        .unwrap_or(0)
}

pub fn detour_level(profile: &DetourProfile, u: Vertex) -> u64 {
    profile.level[u]
}

pub fn total_detour_level(profile: &DetourProfile) -> u64 {
    profile.total_level
}

pub fn branch_relation(profile: &DetourProfile, u: Vertex, v: Vertex) -> BranchRelation {
    profile.relation(u, v)
}
