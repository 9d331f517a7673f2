//! Generators for the block graph families used throughout the crate.
//!
//! # Symmetric block graphs
//!
//! `sym(m, κ, d)` has every block of size `m`, every cut vertex in exactly
//! `κ` blocks and all end vertices at the same eccentricity, with diameter
//! `d`. Writing `n = m - 1`, `k = κ - 1`, `r = ⌊d/2⌋`:
//!
//! * even `d`: a single central vertex (id 0) lies in `κ` blocks; its
//!   `κn` neighbours form the top-level list `v¹..v^{κn}` with ids `1..=κn`,
//!   dealt round-robin over the `κ` central blocks.
//! * odd `d`: the central block is ids `0..=n`, `vᵗ` being id `t - 1`.
//!
//! Every non-central cut vertex has `kn` children spread round-robin over
//! its `k` child blocks, so consecutive children sit in different blocks.
//! Remaining ids are assigned by branch, then depth, then child tuple in
//! lexicographic order.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::detour::DetourProfile;
use crate::graph::{BlockGraph, BlockId, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family parameters: {0}")]
    InvalidSpec(String),
    #[error("graph is not a symmetric block graph: {0}")]
    NotSymmetric(String),
}

/// Parameters of `sym(m, κ, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymmetricSpec {
    /// Block size.
    pub m: usize,
    /// Number of blocks through each cut vertex.
    pub kappa: usize,
    /// Diameter.
    pub d: usize,
}

impl SymmetricSpec {
    pub fn new(m: usize, kappa: usize, d: usize) -> Result<Self, FamilyError> {
        let spec = SymmetricSpec { m, kappa, d };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        if self.m < 2 || self.kappa < 2 || self.d < 2 {
            return Err(FamilyError::InvalidSpec(format!(
                "need block size >= 2, cut degree >= 2, diameter >= 2; got {self}"
            )));
        }
        Ok(())
    }

    /// `m - 1`, the number of new vertices each block contributes.
    pub fn n(&self) -> usize {
        self.m - 1
    }

    /// `κ - 1`, the number of child blocks at a non-central cut vertex.
    pub fn k(&self) -> usize {
        self.kappa - 1
    }

    pub fn r(&self) -> usize {
        self.d / 2
    }

    pub fn is_even(&self) -> bool {
        self.d.is_multiple_of(2)
    }

    /// Number of branch roots `vᵗ`: `κn` for even diameter, `n + 1` for odd.
    pub fn root_count(&self) -> usize {
        if self.is_even() {
            self.kappa * self.n()
        } else {
            self.m
        }
    }
}

impl std::fmt::Display for SymmetricSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "sym({},{},{})", self.m, self.kappa, self.d)
    }
}

/// Position of a vertex relative to the detour center of a symmetric block
/// graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coord {
    /// Number of blocks between the vertex and the center.
    pub depth: usize,
    /// 1-based index `t` of the branch root `vᵗ` above (or equal to) this
    /// vertex; `None` only for the even-diameter central vertex.
    pub root: Option<usize>,
    /// Child indices `(i₁, .., i_l)` below the branch root, each in `0..kn`.
    pub tuple: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricCoordinates {
    pub spec: SymmetricSpec,
    pub coords: Vec<Coord>,
    /// `roots[t - 1]` is the vertex `vᵗ`.
    pub roots: Vec<Vertex>,
    /// The even-diameter central vertex.
    pub center: Option<Vertex>,
}

impl SymmetricCoordinates {
    /// Recovers `(m, κ, d)` and canonical coordinates from the graph
    /// structure, or explains why the graph is not symmetric.
    pub fn derive(g: &BlockGraph, profile: &DetourProfile) -> Result<Self, FamilyError> {
        let not = |why: String| Err(FamilyError::NotSymmetric(why));
        if g.blocks().len() < 2 {
            return not("fewer than two blocks".into());
        }
        let m = g.block(0).len();
        if let Some(b) = g.blocks().iter().find(|b| b.len() != m) {
            return not(format!("block {b:?} has size {} but block 0 has size {m}", b.len()));
        }
        let p = g.order();
        let mut coords: Vec<Option<Coord>> = vec![None; p];
        // (vertex, block it was reached through)
        let mut frontier: Vec<(Vertex, Option<BlockId>)> = Vec::new();
        let roots: Vec<Vertex>;
        let center;
        let kappa;

        if profile.omega == 1 {
            let w = profile.center[0];
            kappa = g.blocks_of(w).len();
            roots = interleave_children(g, w, None);
            coords[w] = Some(Coord { depth: 0, root: None, tuple: Vec::new() });
            for (i, &v) in roots.iter().enumerate() {
                coords[v] = Some(Coord { depth: 1, root: Some(i + 1), tuple: Vec::new() });
                frontier.push((v, g.common_block(w, v)));
            }
            center = Some(w);
        } else {
            let central = g.common_block(profile.center[0], profile.center[1]);
            let Some(cb) = central.filter(|&b| g.block(b) == profile.center.as_slice()) else {
                return not("detour center is not a whole block".into());
            };
            roots = profile.center.clone();
            kappa = g.blocks_of(roots[0]).len();
            for (i, &v) in roots.iter().enumerate() {
                coords[v] = Some(Coord { depth: 0, root: Some(i + 1), tuple: Vec::new() });
                frontier.push((v, Some(cb)));
            }
            center = None;
        }
        if kappa < 2 {
            return not("central vertices lie in a single block".into());
        }

        let mut leaf_depth: Option<usize> = None;
        while let Some((x, via)) = frontier.pop() {
            let here = coords[x].clone().expect("frontier vertices have coordinates");
            let degree = g.blocks_of(x).len();
            if degree == 1 {
                match leaf_depth {
                    None => leaf_depth = Some(here.depth),
                    Some(dep) if dep != here.depth => {
                        return not(format!("end vertices at depths {dep} and {}", here.depth));
                    }
                    _ => {}
                }
                continue;
            }
            if degree != kappa {
                return not(format!("cut vertex {x} lies in {degree} blocks, expected {kappa}"));
            }
            for (i, c) in interleave_children(g, x, via).into_iter().enumerate() {
                let mut tuple = here.tuple.clone();
                tuple.push(i);
                coords[c] = Some(Coord { depth: here.depth + 1, root: here.root, tuple });
                frontier.push((c, g.common_block(x, c)));
            }
        }
        let r = leaf_depth.expect("a finite tree has leaves");
        let d = if center.is_some() { 2 * r } else { 2 * r + 1 };
        let coords: Vec<Coord> = coords
            .into_iter()
            .map(|c| c.expect("connected graph reaches every vertex"))
            .collect();
        Ok(SymmetricCoordinates { spec: SymmetricSpec { m, kappa, d }, coords, roots, center })
    }

    /// Descendants of root `t` (1-based), excluding the root itself.
    pub fn descendants(&self, t: usize) -> Vec<Vertex> {
        (0..self.coords.len())
            .filter(|&v| self.coords[v].root == Some(t) && !self.coords[v].tuple.is_empty())
            .collect()
    }
}

/// Non-parent neighbours of `x`, dealt round-robin across its child blocks
/// (blocks in canonical order, members ascending).
fn interleave_children(g: &BlockGraph, x: Vertex, via: Option<BlockId>) -> Vec<Vertex> {
    let lists: Vec<Vec<Vertex>> = g
        .blocks_of(x)
        .iter()
        .filter(|&&b| Some(b) != via)
        .map(|&b| g.block(b).iter().copied().filter(|&v| v != x).collect())
        .collect();
    let width = lists.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = Vec::new();
    for pos in 0..width {
        for list in &lists {
            if let Some(&v) = list.get(pos) {
                out.push(v);
            }
        }
    }
    out
}

/// Builds `sym(m, κ, d)` with the documented id layout.
pub fn gen_symmetric(spec: SymmetricSpec) -> Result<(BlockGraph, SymmetricCoordinates), FamilyError> {
    spec.validate()?;
    let (n, k, kappa, r) = (spec.n(), spec.k(), spec.kappa, spec.r());
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut next: Vertex;
    // (root vertex, number of child levels below it)
    let roots: Vec<Vertex>;
    let levels;
    if spec.is_even() {
        roots = (1..=kappa * n).collect();
        for b in 0..kappa {
            let mut block = vec![0];
            block.extend(roots.iter().copied().filter(|&t| (t - 1) % kappa == b));
            blocks.push(block);
        }
        next = kappa * n + 1;
        levels = r - 1;
    } else {
        roots = (0..=n).collect();
        blocks.push(roots.clone());
        next = n + 1;
        levels = r;
    }
    for &root in &roots {
        let mut frontier = vec![root];
        for _ in 0..levels {
            let mut deeper = Vec::with_capacity(frontier.len() * k * n);
            for &x in &frontier {
                let children: Vec<Vertex> = (next..next + k * n).collect();
                next += k * n;
                for j in 0..k {
                    let mut block = vec![x];
                    block.extend(children.iter().skip(j).step_by(k));
                    blocks.push(block);
                }
                deeper.extend(children);
            }
            frontier = deeper;
        }
    }
    let g = BlockGraph::new(next, blocks).expect("generated layout is a block graph");
    let profile = DetourProfile::compute(&g);
    let coords = SymmetricCoordinates::derive(&g, &profile)?;
    debug_assert_eq!(coords.spec, spec);
    Ok((g, coords))
}

/// One-point union `K_n^k`: `k` cliques of size `n` sharing vertex 0.
pub fn gen_union(n: usize, k: usize) -> Result<BlockGraph, FamilyError> {
    if n < 2 || k < 2 {
        return Err(FamilyError::InvalidSpec(format!("union needs n, k >= 2; got n={n}, k={k}")));
    }
    let blocks = (0..k)
        .map(|j| {
            let mut b = vec![0];
            b.extend(1 + j * (n - 1)..1 + (j + 1) * (n - 1));
            b
        })
        .collect();
    Ok(BlockGraph::new(k * (n - 1) + 1, blocks).expect("union layout is valid"))
}

/// Path `P_p` as a chain of edge blocks `0-1-..-(p-1)`.
pub fn gen_path(p: usize) -> Result<BlockGraph, FamilyError> {
    if p < 2 {
        return Err(FamilyError::InvalidSpec(format!("path needs p >= 2; got {p}")));
    }
    Ok(BlockGraph::new(p, (0..p - 1).map(|i| vec![i, i + 1]).collect()).expect("path is valid"))
}

/// Star `K_{1,leaves}` with center 0.
pub fn gen_star(leaves: usize) -> Result<BlockGraph, FamilyError> {
    if leaves < 2 {
        return Err(FamilyError::InvalidSpec(format!("star needs >= 2 leaves; got {leaves}")));
    }
    Ok(BlockGraph::new(leaves + 1, (1..=leaves).map(|v| vec![0, v]).collect())
        .expect("star is valid"))
}

/// Random block graph grown as a random block-cut tree, with vertex ids
/// shuffled. Deterministic in `seed`.
pub fn gen_random_block_graph(
    seed: u64,
    max_p: usize,
    max_block_size: usize,
    max_blocks_per_cut: usize,
) -> BlockGraph {
    let max_p = max_p.max(2);
    let max_block_size = max_block_size.max(2);
    let max_blocks_per_cut = max_blocks_per_cut.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.gen_range(2..=max_p);

    let first = rng.gen_range(2..=max_block_size.min(target));
    let mut blocks: Vec<Vec<Vertex>> = vec![(0..first).collect()];
    let mut membership = vec![1usize; first];
    let mut p = first;
    while p < target {
        let open: Vec<Vertex> =
            (0..p).filter(|&v| membership[v] < max_blocks_per_cut).collect();
        let Some(&at) = open.choose(&mut rng) else { break };
        let size = rng.gen_range(2..=max_block_size.min(target - p + 1));
        let mut block = vec![at];
        block.extend(p..p + size - 1);
        membership[at] += 1;
        membership.extend(std::iter::repeat_n(1, size - 1));
        p += size - 1;
        blocks.push(block);
    }

    let mut relabel: Vec<Vertex> = (0..p).collect();
    relabel.shuffle(&mut rng);
    let blocks = blocks
        .into_iter()
        .map(|b| b.into_iter().map(|v| relabel[v]).collect())
        .collect();
    BlockGraph::new(p, blocks).expect("random block-cut tree is a block graph")
}
