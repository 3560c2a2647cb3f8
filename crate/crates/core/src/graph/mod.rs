//! Simple undirected graphs, degree statistics, connected components and the
//! graph6 / DIMACS text formats.

mod dimacs;
mod graph6;

pub use dimacs::{emit_dimacs, parse_dimacs};
pub use graph6::{emit_graph6, parse_graph6};

use num_integer::Integer;
use serde::Serialize;

use crate::error::GraphError;

/// Vertex index. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

/// An immutable simple undirected graph.
///
/// Neighbor lists are kept sorted, so membership tests are a binary search and
/// iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges (in
    /// either orientation) are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
        })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Sorted neighborhood of `v`.
    ///
    /// Panics if `v` is out of range.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_edgeless(&self) -> bool {
        self.edge_count == 0
    }

    /// Two-colors the graph if it is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        let mut stack = Vec::new();
        for root in 0..n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            stack.push(root);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        stack.push(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub degrees: Vec<usize>,
    /// Minimum degree; 0 for the graph on zero vertices.
    pub min_degree: usize,
    /// Minimum over vertices of positive degree. `None` iff the graph is edgeless.
    pub min_positive_degree: Option<usize>,
    /// gcd of all positive degrees. `None` iff the graph is edgeless.
    pub degree_gcd: Option<usize>,
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    let degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let positive = degrees.iter().copied().filter(|&d| d > 0);
    let min_positive_degree = positive.clone().min();
    let degree_gcd = positive.reduce(|a, b| a.gcd(&b));
    DegreeStats {
        degrees,
        min_degree,
        min_positive_degree,
        degree_gcd,
    }
}

/// Vertex sets of the connected components, each sorted, listed by smallest
/// contained vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentDecomposition {
    pub components: Vec<Vec<Vertex>>,
}

impl ComponentDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Component index of every vertex.
    pub fn labels(&self, n: usize) -> Vec<usize> {
        let mut labels = vec![0; n];
        for (i, comp) in self.components.iter().enumerate() {
            for &v in comp {
                labels[v] = i;
            }
        }
        labels
    }
}

pub fn connected_components(g: &Graph) -> ComponentDecomposition {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut stack = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        stack.push(root);
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    ComponentDecomposition { components }
}
