//! Simple undirected graphs stored as symmetric arc pairs.
//!
//! Edge `e` (0-based, in insertion order) owns arcs `2e` and `2e + 1`, so the
//! arc involution is `a ^ 1`. Arc `2e` runs from the smaller endpoint to the
//! larger one.

mod analysis;
mod fixtures;
mod formats;

use std::collections::BTreeSet;

use thiserror::Error;

pub use analysis::{analyze, Extent, GraphReport};
pub use fixtures::{builtin, BUILTIN_NAMES};
pub use formats::{encode_graph6, parse_adjlist, parse_graph6, parse_lcf, to_adjlist, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("unknown builtin graph {0:?}")]
    UnknownBuiltin(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    origin: Vec<usize>,
    terminus: Vec<usize>,
    // sorted neighbour lists
    adjacency: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertex_count)
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    /// Builds a simple graph; rejects loops, repeated edges and ids `>= vertex_count`.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut seen = BTreeSet::new();
        let mut origin = Vec::new();
        let mut terminus = Vec::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange { vertex: w, count: vertex_count });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (lo, hi) = if u < v { (u, v) } else { (v, u) };
            if !seen.insert((lo, hi)) {
                return Err(GraphError::DuplicateEdge(lo, hi));
            }
            origin.extend([lo, hi]);
            terminus.extend([hi, lo]);
            adjacency[lo].push(hi);
            adjacency[hi].push(lo);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph { vertex_count, origin, terminus, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn arc_count(&self) -> usize {
        self.origin.len()
    }

    #[inline]
    pub fn origin(&self, arc: usize) -> usize {
        self.origin[arc]
    }

    #[inline]
    pub fn terminus(&self, arc: usize) -> usize {
        self.terminus[arc]
    }

    #[inline]
    pub fn inverse(&self, arc: usize) -> usize {
        arc ^ 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Undirected edges as `(smaller, larger)` in arc-pair order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.edge_count()).map(move |e| (self.origin[2 * e], self.terminus[2 * e]))
    }

    /// Arcs ending at `v`.
    pub fn arcs_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arc_count()).filter(move |&a| self.terminus[a] == v)
    }

    /// Common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&v).is_ok()
    }
}
