//! Simple undirected graphs stored as adjacency bitsets.

mod corpus;
mod cut;
mod distance;
mod generators;
mod graph6;
mod stats;

pub use corpus::{corpus, named, parse_corpus, NamedGraph};
pub(crate) use corpus::normalize as normalize_name;
pub use cut::{cut_metrics, CutResult};
pub use distance::{distances, DistanceMatrix};
pub use generators::{
    cartesian_product, complement, complete, complete_bipartite, complete_split, cycle,
    disjoint_union, generate, gm_switch, graph_power, grassmann, hamming, hypercube, johnson,
    path, Family,
};
pub use graph6::{parse_graph6, to_graph6};
pub use stats::{common_neighbor_stats, NeighborStats};

use crate::error::{input, Result};

pub(crate) const WORD: usize = 64;

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Row `v` of the adjacency structure is a bitset of the neighbours of `v`.
/// The optional name is a label only and takes no part in equality.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u}, {v}) has a vertex outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            name: None,
        }
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] &= !(1 << (v % WORD));
        self.rows[v * self.words + u / WORD] &= !(1 << (u % WORD));
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Graph {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    pub fn words(&self) -> usize {
        self.words
    }

    /// Adjacency bitset of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// The common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Row `v` as a single word. Only meaningful for `n <= 64`.
    pub(crate) fn row64(&self, v: usize) -> u64 {
        self.rows[v * self.words]
    }

    /// Number of edges with exactly one end in `set`.
    pub fn boundary(&self, set: &[usize]) -> usize {
        let mask = self.mask(set);
        set.iter()
            .map(|&v| {
                self.row(v)
                    .iter()
                    .zip(&mask)
                    .map(|(r, m)| (r & !m).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum()
    }

    /// Bitset of `set`; vertices are assumed in range.
    pub(crate) fn mask(&self, set: &[usize]) -> Vec<u64> {
        let mut mask = vec![0u64; self.words];
        for &v in set {
            mask[v / WORD] |= 1 << (v % WORD);
        }
        mask
    }

    /// Checks that `set` is a duplicate-free list of vertices.
    pub(crate) fn check_set(&self, set: &[usize]) -> Result<()> {
        let mut seen = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return input(format!("vertex {v} outside 0..{}", self.n));
            }
            if seen[v] {
                return input(format!("vertex {v} repeated in set"));
            }
            seen[v] = true;
        }
        Ok(())
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for u in 0..n {
            for v in self.neighbors(u) {
                a[u * n + v] = 1.0;
            }
        }
        a
    }
}

/// Iterates the set bits of a multi-word bitset.
pub(crate) fn bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * WORD + b)
        })
    })
}
