use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Graph;

/// A length that may be infinite (girth of a forest, diameter of a
/// disconnected graph).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Extent {
    Finite(usize),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<usize> {
        match self {
            Extent::Finite(v) => Some(v),
            Extent::Infinite => None,
        }
    }

    /// `self > bound`, treating `Infinite` as larger than everything.
    pub fn exceeds(self, bound: usize) -> bool {
        match self {
            Extent::Finite(v) => v > bound,
            Extent::Infinite => true,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(v) => write!(f, "{v}"),
            Extent::Infinite => f.write_str("infinity"),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extent::Finite(v) => s.serialize_u64(*v as u64),
            Extent::Infinite => s.serialize_str("infinity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphReport {
    pub vertices: usize,
    pub edges: usize,
    pub degree_min: usize,
    pub degree_max: usize,
    pub is_regular: bool,
    pub regularity_k: Option<usize>,
    pub girth: Extent,
    pub diameter: Extent,
}

impl fmt::Display for GraphReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "edges: {}", self.edges)?;
        writeln!(f, "degree: {}..{}", self.degree_min, self.degree_max)?;
        match self.regularity_k {
            Some(k) => writeln!(f, "regular: yes (k = {k})")?,
            None => writeln!(f, "regular: no")?,
        }
        writeln!(f, "girth: {}", self.girth)?;
        writeln!(f, "diameter: {}", self.diameter)
    }
}

pub fn analyze(g: &Graph) -> GraphReport {
    let n = g.vertex_count();
    let degrees = (0..n).map(|v| g.degree(v));
    let degree_min = degrees.clone().min().unwrap_or(0);
    let degree_max = degrees.max().unwrap_or(0);
    let regularity_k = g.regular_degree();

    let mut girth = usize::MAX;
    let mut ecc = 0usize;
    let mut connected = true;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.fill(usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    reached += 1;
                    ecc = ecc.max(dist[w]);
                    queue.push_back(w);
                } else if parent[u] != w {
                    // non-tree edge closes a cycle through (or near) root;
                    // the minimum over all roots is exact
                    girth = girth.min(dist[u] + dist[w] + 1);
                }
            }
        }
        if reached < n {
            connected = false;
        }
    }

    GraphReport {
        vertices: n,
        edges: g.edge_count(),
        degree_min,
        degree_max,
        is_regular: regularity_k.is_some(),
        regularity_k,
        girth: if girth == usize::MAX { Extent::Infinite } else { Extent::Finite(girth) },
        diameter: if connected { Extent::Finite(ecc) } else { Extent::Infinite },
    }
}
