//! Simple connected graphs, vertex orderings and first-in trees.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::search::SearchState;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex {vertex} out of range for n = {n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderingError {
    #[error("sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("vertex {0} has no earlier neighbour")]
    NotConnectedOrdering(usize),
}

/// An immutable simple connected undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Validates and builds a graph. Rejects self-loops, repeated edges and
    /// disconnected inputs.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let g = Self::build_unchecked_connectivity(n, edges)?;
        if !g.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(g)
    }

    pub(crate) fn build_unchecked_connectivity(
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let words = n.div_ceil(64);
        let mut rows = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if rows[u * words + v / 64] >> (v % 64) & 1 == 1 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            adj,
            words,
            rows,
            m: edges.len(),
        })
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Open neighbourhood as a bit mask. Only for graphs with at most 64 vertices.
    pub fn nmask(&self, v: usize) -> u64 {
        assert!(self.n <= 64, "bit-mask access needs n <= 64");
        self.rows[v]
    }

    /// Closed neighbourhood as a bit mask.
    pub fn cmask(&self, v: usize) -> u64 {
        self.nmask(v) | 1 << v
    }

    pub fn all_mask(&self) -> u64 {
        assert!(self.n <= 64);
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Graph after relabelling vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges).expect("relabelling preserves validity")
    }
}

/// Whether a vertex set (as a mask) induces a connected subgraph. Empty sets count as connected.
pub(crate) fn mask_connected(g: &Graph, set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let mut reach = 1u64 << set.trailing_zeros();
    loop {
        let mut next = reach;
        let mut rest = reach;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= g.nmask(v) & set;
        }
        if next == reach {
            return reach == set;
        }
        reach = next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Paradigm {
    Gs,
    Bfs,
    Lbfs,
}

impl Paradigm {
    pub const ALL: [Paradigm; 3] = [Paradigm::Gs, Paradigm::Bfs, Paradigm::Lbfs];
}

impl fmt::Display for Paradigm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Paradigm::Gs => "gs",
            Paradigm::Bfs => "bfs",
            Paradigm::Lbfs => "lbfs",
        })
    }
}

impl FromStr for Paradigm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gs" => Ok(Paradigm::Gs),
            "bfs" => Ok(Paradigm::Bfs),
            "lbfs" => Ok(Paradigm::Lbfs),
            other => Err(format!("unknown paradigm '{other}'")),
        }
    }
}

/// A permutation of the vertex set together with its inverse.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ordering {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl fmt::Debug for Ordering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.seq)
    }
}

impl Ordering {
    pub fn new(seq: Vec<usize>) -> Result<Self, OrderingError> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(OrderingError::NotAPermutation(n));
            }
            pos[v] = i;
        }
        Ok(Ordering { seq, pos })
    }

    pub fn identity(n: usize) -> Self {
        Ordering {
            seq: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    /// `prefix` followed by the remaining vertices in ascending id order.
    pub fn with_prefix(n: usize, prefix: &[usize]) -> Result<Self, OrderingError> {
        let mut used = vec![false; n];
        let mut seq = Vec::with_capacity(n);
        for &v in prefix {
            if v >= n || used[v] {
                return Err(OrderingError::NotAPermutation(n));
            }
            used[v] = true;
            seq.push(v);
        }
        seq.extend((0..n).filter(|&v| !used[v]));
        Ordering::new(seq)
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn pos(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.seq
    }
}

/// First-in tree of an ordering: every vertex hangs below its leftmost neighbour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl FTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Children in ordering position order.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Leaves exclude the root by convention, even when it has no children.
    pub fn is_leaf(&self, v: usize) -> bool {
        v != self.root && self.children[v].is_empty()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn internal(&self) -> Vec<usize> {
        (0..self.parent.len()).filter(|&v| !self.is_leaf(v)).collect()
    }

    pub fn leaf_count(&self) -> usize {
        (0..self.parent.len()).filter(|&v| self.is_leaf(v)).count()
    }

    pub fn internal_count(&self) -> usize {
        self.parent.len() - self.leaf_count()
    }
}

pub fn ftree_from_ordering(g: &Graph, sigma: &Ordering) -> Result<FTree, OrderingError> {
    let n = g.n();
    if sigma.len() != n {
        return Err(OrderingError::NotAPermutation(n));
    }
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    for &v in &sigma.seq()[1..] {
        let p = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| sigma.pos(w) < sigma.pos(v))
            .min_by_key(|&w| sigma.pos(w))
            .ok_or(OrderingError::NotConnectedOrdering(v))?;
        parent[v] = Some(p);
    }
    for &v in sigma.seq() {
        if let Some(p) = parent[v] {
            children[p].push(v);
        }
    }
    Ok(FTree {
        root: sigma.seq()[0],
        parent,
        children,
    })
}

/// BFS distance layers from a fixed root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPartition {
    root: usize,
    layers: Vec<Vec<usize>>,
    index: Vec<usize>,
}

impl LayerPartition {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &[usize] {
        &self.layers[i]
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn index_of(&self, v: usize) -> usize {
        self.index[v]
    }

    pub fn max_layer_size(&self) -> usize {
        self.layers.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every edge stays within a layer or joins consecutive layers.
    pub fn is_edge_local(&self, g: &Graph) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| self.index[u].abs_diff(self.index[v]) <= 1)
    }
}

/// Layers sorted by vertex id within each layer.
pub fn bfs_layers(g: &Graph, root: usize) -> LayerPartition {
    let mut index = vec![usize::MAX; g.n()];
    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([root]);
    index[root] = 0;
    while let Some(v) = queue.pop_front() {
        let d = index[v];
        if layers.len() <= d {
            layers.push(Vec::new());
        }
        layers[d].push(v);
        for &w in g.neighbors(v) {
            if index[w] == usize::MAX {
                index[w] = d + 1;
                queue.push_back(w);
            }
        }
    }
    for layer in &mut layers {
        layer.sort_unstable();
    }
    LayerPartition {
        root,
        layers,
        index,
    }
}

pub fn ordering_bandwidth(g: &Graph, sigma: &Ordering) -> usize {
    g.edges()
        .iter()
        .map(|&(u, v)| sigma.pos(u).abs_diff(sigma.pos(v)))
        .max()
        .unwrap_or(0)
}

/// Whether `sigma` can be produced by the given search paradigm.
///
/// The check replays the search: each vertex must lie in the candidate set
/// the paradigm allows at its step (frontier for GS, head discoverer group of
/// the BFS queue, label-maximal vertices for LBFS).
pub fn validate_ordering(g: &Graph, sigma: &Ordering, paradigm: Paradigm) -> bool {
    if sigma.len() != g.n() {
        return false;
    }
    let mut state = SearchState::new(g, paradigm);
    let mut eligible = Vec::new();
    for &v in sigma.seq() {
        state.eligible(&mut eligible);
        if !eligible.contains(&v) {
            return false;
        }
        state.push(v);
    }
    true
}
