//! Dense simple graphs.
//!
//! Adjacency is kept as a row-major bit matrix: the workloads in this crate
//! are all O(n²) passes over graphs whose minimum degree is a large fraction
//! of `n - 1`, so neighbor lists would buy nothing.

mod edge_list;
mod generators;

use std::collections::VecDeque;

pub use edge_list::{read_edge_list, write_edge_list};
pub use generators::{
    circulant_graph, complete_graph, random_min_degree_graph, GeneratorSpec, RANDOM_GRAPH_ALGORITHM,
};

/// Errors raised while building or loading a [`Graph`].
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GraphError {
    #[error("invalid graph size n = {0}: need at least 2 vertices")]
    InvalidSize(usize),
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge list line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

const WORD: usize = 64;

/// A simple undirected graph stored as a symmetric bit matrix with empty
/// diagonal. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    degrees: Vec<usize>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edge_count())
            .field("min_degree", &self.min_degree())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n < 2 {
            return Err(GraphError::InvalidSize(n));
        }
        let words_per_row = n.div_ceil(WORD);
        Ok(Self {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
            degrees: vec![0; n],
        })
    }

    /// Builds a graph from undirected edges. Endpoint order within a pair does
    /// not matter, but self-loops and repeated pairs are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(GraphError::VertexOutOfRange(i, j, n));
            }
            if i == j {
                return Err(GraphError::SelfLoop(i));
            }
            if g.has_edge(i, j) {
                let (a, b) = (i.min(j), i.max(j));
                return Err(GraphError::DuplicateEdge(a, b));
            }
            g.set(i, j, true);
        }
        Ok(g)
    }

    #[inline]
    fn index(&self, i: usize, j: usize) -> (usize, u64) {
        (i * self.words_per_row + j / WORD, 1u64 << (j % WORD))
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, on: bool) {
        debug_assert!(i != j);
        if self.has_edge(i, j) == on {
            return;
        }
        for (a, b) in [(i, j), (j, i)] {
            let (w, mask) = self.index(a, b);
            self.bits[w] ^= mask;
        }
        if on {
            self.degrees[i] += 1;
            self.degrees[j] += 1;
        } else {
            self.degrees[i] -= 1;
            self.degrees[j] -= 1;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let (w, mask) = self.index(i, j);
        self.bits[w] & mask != 0
    }

    /// Adjacency entry `a_ij` as 0.0 or 1.0.
    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        if self.has_edge(i, j) {
            1.0
        } else {
            0.0
        }
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    /// Density `μ = min_i deg(i) / (n - 1)`.
    pub fn min_degree_fraction(&self) -> f64 {
        self.min_degree() as f64 / (self.n - 1) as f64
    }

    /// Largest number of non-neighbors of any vertex, i.e. `(1 - μ)(n - 1)`
    /// as an exact integer.
    pub fn max_non_neighbors(&self) -> usize {
        self.n - 1 - self.min_degree()
    }

    pub fn is_complete(&self) -> bool {
        self.min_degree() == self.n - 1
    }

    /// Neighbors of `i` in increasing order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&j| self.has_edge(i, j))
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| ((i + 1)..self.n).filter(move |&j| self.has_edge(i, j)).map(move |j| (i, j)))
    }

    /// Row-major dense `0/1` adjacency matrix.
    pub fn dense_adjacency(&self) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = self.weight(i, j);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == self.n
    }
}
