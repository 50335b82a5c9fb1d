//! Simple undirected graphs and the generators for paths, cycles and fans.

use alloc::vec::Vec;
use core::fmt;

/// An edge as an unordered pair of 0-based vertex indices.
pub type Edge = (usize, usize);

/// Reasons a vertex count and edge list do not form a simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// An endpoint is not below the vertex count.
    EndpointOutOfRange { edge: usize, vertex: usize, p: usize },
    /// An edge joins a vertex to itself.
    SelfLoop { edge: usize, vertex: usize },
    /// Two edges join the same pair of vertices.
    DuplicateEdge { first: usize, second: usize },
    /// A generator parameter is below its minimum.
    InvalidParameter { name: &'static str, value: usize, min: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EndpointOutOfRange { edge, vertex, p } => {
                write!(f, "edge {edge}: endpoint {vertex} out of range for {p} vertices")
            }
            GraphError::SelfLoop { edge, vertex } => {
                write!(f, "edge {edge}: self-loop on vertex {vertex}")
            }
            GraphError::DuplicateEdge { first, second } => {
                write!(f, "edge {second} duplicates edge {first}")
            }
            GraphError::InvalidParameter { name, value, min } => {
                write!(f, "parameter {name} = {value} must be at least {min}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph: `p` vertices and an ordered edge list.
///
/// Edge order is significant. Labelings are aligned with it, so two graphs
/// with the same edge set in a different order are different values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    p: usize,
    edges: Vec<Edge>,
}

impl Graph {
    /// Validates and builds a graph.
    pub fn new(p: usize, edges: Vec<Edge>) -> Result<Self, GraphError> {
        let mut seen: Vec<(usize, usize, usize)> = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= p {
                    return Err(GraphError::EndpointOutOfRange { edge: i, vertex, p });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge: i, vertex: u });
            }
            seen.push((u.min(v), u.max(v), i));
        }
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0].0 == w[1].0 && w[0].1 == w[1].1) {
            let (first, second) = (w[0].2.min(w[1].2), w[0].2.max(w[1].2));
            return Err(GraphError::DuplicateEdge { first, second });
        }
        Ok(Graph { p, edges })
    }

    /// Vertex count.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Edge count.
    pub fn q(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.p];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Edge indices incident to each vertex, ascending.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = alloc::vec![Vec::new(); self.p];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        inc
    }

    /// Edge set with each pair ordered `(min, max)` and the list sorted.
    pub fn canonical_edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        out.sort_unstable();
        out
    }
}

/// The path `P_n` on vertices `0..n`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidParameter { name: "n", value: n, min: 1 });
    }
    Ok(Graph { p: n, edges: (1..n).map(|i| (i - 1, i)).collect() })
}

/// The cycle `C_n`, edges `(i, i+1 mod n)` in index order.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidParameter { name: "n", value: n, min: 3 });
    }
    Ok(Graph { p: n, edges: (0..n).map(|i| (i, (i + 1) % n)).collect() })
}

/// The fan `F_{m,n}`: the join of `m` independent hub vertices with `P_n`.
///
/// Hubs are `0..m`, the path is `m..m+n` in order. Hub-to-path edges come
/// first (hub-major), followed by the path edges.
pub fn fan(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 1 {
        return Err(GraphError::InvalidParameter { name: "m", value: m, min: 1 });
    }
    if n < 1 {
        return Err(GraphError::InvalidParameter { name: "n", value: n, min: 1 });
    }
    let mut edges = Vec::with_capacity(m * n + n - 1);
    for hub in 0..m {
        edges.extend((m..m + n).map(|v| (hub, v)));
    }
    edges.extend((m + 1..m + n).map(|v| (v - 1, v)));
    Ok(Graph { p: m + n, edges })
}
