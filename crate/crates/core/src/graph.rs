//! Block graphs: connected graphs in which every block is a clique.
//!
//! A [`BlockGraph`] is described by its vertex count and its list of blocks.
//! Construction validates the block structure and precomputes a rooted
//! vertex/block incidence tree, which answers block-path and lowest common
//! ancestor queries in `O(log p)`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Vertex = usize;
pub type BlockId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for p = {p}")]
    VertexOutOfRange { vertex: usize, p: usize },
    #[error("block {0:?} has fewer than two distinct vertices")]
    BlockTooSmall(Vec<Vertex>),
    #[error("blocks {0:?} and {1:?} share two or more vertices")]
    OverlappingBlocks(Vec<Vertex>, Vec<Vertex>),
    #[error("vertex {0} belongs to no block")]
    DanglingVertex(Vertex),
    #[error("block structure contains a cycle through block {0:?}")]
    CyclicBlockStructure(Vec<Vertex>),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("u and v are the same vertex ({0})")]
    SameVertex(Vertex),
}

/// Node of the rooted incidence tree: graph vertices are `0..p`, blocks are
/// `p..p + blocks.len()`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeNode {
    Vertex(Vertex),
    Block(BlockId),
}

#[derive(Debug, Clone)]
pub struct BlockGraph {
    p: usize,
    blocks: Vec<Vec<Vertex>>,
    vertex_blocks: Vec<Vec<BlockId>>,
    // rooted incidence tree over p + b nodes, rooted at vertex 0
    parent: Vec<usize>,
    depth: Vec<u32>,
    // sum of (|B| - 1) over the block nodes on the root path, inclusive
    weight: Vec<u64>,
    up: Vec<Vec<usize>>,
}

impl BlockGraph {
    /// Validates `blocks` over vertices `0..p` and builds the derived indices.
    ///
    /// Duplicate members inside one block are collapsed. Blocks are stored in
    /// canonical order (members ascending, blocks sorted by their member
    /// lists), so block ids do not depend on input order.
    pub fn new(p: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        if p == 0 {
            return Err(GraphError::Empty);
        }
        let mut blocks: Vec<Vec<Vertex>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        for b in &blocks {
            if let Some(&v) = b.iter().find(|&&v| v >= p) {
                return Err(GraphError::VertexOutOfRange { vertex: v, p });
            }
            if b.len() < 2 {
                return Err(GraphError::BlockTooSmall(b.clone()));
            }
        }
        blocks.sort();

        let mut vertex_blocks = vec![Vec::new(); p];
        for (id, b) in blocks.iter().enumerate() {
            for &v in b {
                vertex_blocks[v].push(id);
            }
        }
        if p > 1 {
            if let Some(v) = vertex_blocks.iter().position(|bs| bs.is_empty()) {
                return Err(GraphError::DanglingVertex(v));
            }
        }

        // Two blocks overlap iff some block meets another one in >= 2 vertices.
        let mut shared: HashMap<BlockId, usize> = HashMap::new();
        for (id, b) in blocks.iter().enumerate() {
            shared.clear();
            for &v in b {
                for &other in &vertex_blocks[v] {
                    if other > id {
                        let c = shared.entry(other).or_insert(0);
                        *c += 1;
                        if *c >= 2 {
                            return Err(GraphError::OverlappingBlocks(
                                b.clone(),
                                blocks[other].clone(),
                            ));
                        }
                    }
                }
            }
        }

        // The vertex/block incidence graph must be a tree. With pairwise
        // overlaps of at most one vertex this also makes every block a
        // maximal clique: a clique meeting two blocks would close a cycle.
        let nodes = p + blocks.len();
        let mut dsu = Dsu::new(nodes);
        for (id, b) in blocks.iter().enumerate() {
            for &v in b {
                if !dsu.union(v, p + id) {
                    return Err(GraphError::CyclicBlockStructure(b.clone()));
                }
            }
        }
        let root = dsu.find(0);
        if (0..p).any(|v| dsu.find(v) != root) {
            return Err(GraphError::Disconnected);
        }

        let mut g = BlockGraph {
            p,
            blocks,
            vertex_blocks,
            parent: Vec::new(),
            depth: Vec::new(),
            weight: Vec::new(),
            up: Vec::new(),
        };
        g.root_incidence_tree();
        Ok(g)
    }

    fn root_incidence_tree(&mut self) {
        let n = self.p + self.blocks.len();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0u32; n];
        let mut weight = vec![0u64; n];
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        parent[0] = 0;
        while let Some(x) = stack.pop() {
            let children: Vec<usize> = if x < self.p {
                self.vertex_blocks[x].iter().map(|&b| self.p + b).collect()
            } else {
                self.blocks[x - self.p].clone()
            };
            for y in children {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                parent[y] = x;
                depth[y] = depth[x] + 1;
                weight[y] = weight[x]
                    + if y >= self.p { self.blocks[y - self.p].len() as u64 - 1 } else { 0 };
                stack.push(y);
            }
        }
        let levels = (usize::BITS - n.leading_zeros()).max(1) as usize;
        let mut up = vec![parent.clone()];
        for k in 1..levels {
            let prev = &up[k - 1];
            let next: Vec<usize> = (0..n).map(|x| prev[prev[x]]).collect();
            up.push(next);
        }
        self.parent = parent;
        self.depth = depth;
        self.weight = weight;
        self.up = up;
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.p
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    pub fn block(&self, id: BlockId) -> &[Vertex] {
        &self.blocks[id]
    }

    /// Blocks containing `v`, ascending.
    pub fn blocks_of(&self, v: Vertex) -> &[BlockId] {
        &self.vertex_blocks[v]
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.vertex_blocks[v].len() >= 2
    }

    pub fn cut_vertices(&self) -> Vec<Vertex> {
        (0..self.p).filter(|&v| self.is_cut_vertex(v)).collect()
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.vertex_blocks[v]
            .iter()
            .flat_map(move |&b| self.blocks[b].iter().copied())
            .filter(move |&w| w != v)
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.vertex_blocks[u].iter().any(|b| self.vertex_blocks[v].contains(b))
    }

    pub fn edge_count(&self) -> usize {
        self.blocks.iter().map(|b| b.len() * (b.len() - 1) / 2).sum()
    }

    /// The block shared by `u` and `v`, if they are adjacent.
    pub fn common_block(&self, u: Vertex, v: Vertex) -> Option<BlockId> {
        self.vertex_blocks[u]
            .iter()
            .copied()
            .find(|b| self.vertex_blocks[v].contains(b))
    }

    fn node_id(&self, node: TreeNode) -> usize {
        match node {
            TreeNode::Vertex(v) => v,
            TreeNode::Block(b) => self.p + b,
        }
    }

    fn node_of(&self, id: usize) -> TreeNode {
        if id < self.p {
            TreeNode::Vertex(id)
        } else {
            TreeNode::Block(id - self.p)
        }
    }

    fn lca_id(&self, mut a: usize, mut b: usize) -> usize {
        if self.depth[a] < self.depth[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let mut diff = self.depth[a] - self.depth[b];
        let mut k = 0;
        while diff > 0 {
            if diff & 1 == 1 {
                a = self.up[k][a];
            }
            diff >>= 1;
            k += 1;
        }
        if a == b {
            return a;
        }
        for k in (0..self.up.len()).rev() {
            if self.up[k][a] != self.up[k][b] {
                a = self.up[k][a];
                b = self.up[k][b];
            }
        }
        self.parent[a]
    }

    /// Lowest common ancestor of two vertices in the incidence tree rooted
    /// at vertex 0.
    pub fn incidence_lca(&self, u: Vertex, v: Vertex) -> TreeNode {
        self.node_of(self.lca_id(u, v))
    }

    /// `Σ (|B| - 1)` over the blocks between the root and `node`.
    pub fn root_weight(&self, node: TreeNode) -> u64 {
        self.weight[self.node_id(node)]
    }

    /// The unique sequence of blocks every `u`–`v` path traverses, ordered
    /// from `u` to `v`.
    pub fn blocks_on_path(&self, u: Vertex, v: Vertex) -> Result<Vec<BlockId>, GraphError> {
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        let a = self.lca_id(u, v);
        let mut front = Vec::new();
        let mut x = u;
        while x != a {
            if x >= self.p {
                front.push(x - self.p);
            }
            x = self.parent[x];
        }
        let mut back = Vec::new();
        let mut y = v;
        while y != a {
            if y >= self.p {
                back.push(y - self.p);
            }
            y = self.parent[y];
        }
        if a >= self.p {
            front.push(a - self.p);
        }
        front.extend(back.into_iter().rev());
        Ok(front)
    }

    pub fn block_cut_tree(&self) -> BlockCutTree {
        BlockCutTree::new(self)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile { p: self.p, blocks: self.blocks.clone(), meta: None }
    }
}

impl PartialEq for BlockGraph {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.blocks == other.blocks
    }
}

impl Eq for BlockGraph {}

impl fmt::Display for BlockGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlockGraph(p={}, blocks={})", self.p, self.blocks.len())
    }
}

/// Convenience wrapper around [`BlockGraph::new`].
pub fn build_block_graph(p: usize, blocks: Vec<Vec<Vertex>>) -> Result<BlockGraph, GraphError> {
    BlockGraph::new(p, blocks)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BctNode {
    Block(BlockId),
    Cut(Vertex),
}

/// Bipartite tree of blocks and cut vertices. Block nodes come first in
/// canonical block order, followed by cut vertices in ascending id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    pub nodes: Vec<BctNode>,
    /// `(cut node index, block node index)` incidences.
    pub edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl BlockCutTree {
    fn new(g: &BlockGraph) -> Self {
        let mut nodes: Vec<BctNode> = (0..g.blocks.len()).map(BctNode::Block).collect();
        let mut edges = Vec::new();
        for v in g.cut_vertices() {
            let idx = nodes.len();
            nodes.push(BctNode::Cut(v));
            for &b in g.blocks_of(v) {
                edges.push((idx, b));
            }
        }
        let mut adj = vec![Vec::new(); nodes.len()];
        for &(c, b) in &edges {
            adj[c].push(b);
            adj[b].push(c);
        }
        BlockCutTree { nodes, edges, adj }
    }

    pub fn block_count(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, BctNode::Block(_))).count()
    }

    pub fn cut_count(&self) -> usize {
        self.nodes.len() - self.block_count()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    /// Node path between two tree nodes (inclusive), found by BFS.
    pub fn node_path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut prev = vec![usize::MAX; self.nodes.len()];
        let mut queue = std::collections::VecDeque::from([from]);
        prev[from] = from;
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &y in &self.adj[x] {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let mut path = vec![to];
        let mut x = to;
        while x != from {
            x = prev[x];
            path.push(x);
        }
        path.reverse();
        path
    }
}

/// Optional family tags stored with a serialized graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GraphMeta {
    Sym { block_size: usize, cut_degree: usize, diameter: usize },
    Union { n: usize, k: usize },
    Star { leaves: usize },
    Path { p: usize },
    Random { seed: u64, max_p: usize },
}

/// On-disk JSON form: `{"p": .., "blocks": [[..], ..], "meta": {..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub p: usize,
    pub blocks: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<GraphMeta>,
}

impl GraphFile {
    pub fn with_meta(g: &BlockGraph, meta: GraphMeta) -> Self {
        GraphFile { meta: Some(meta), ..g.to_file() }
    }

    pub fn to_graph(&self) -> Result<BlockGraph, GraphError> {
        BlockGraph::new(self.p, self.blocks.clone())
    }

    /// Canonical JSON text. Blocks are written in canonical order, so a
    /// parse/serialize cycle is byte-identical.
    pub fn to_json(&self) -> String {
        let mut canon = self.clone();
        for b in &mut canon.blocks {
            b.sort_unstable();
            b.dedup();
        }
        canon.blocks.sort();
        serde_json::to_string(&canon).expect("graph file serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
