//! Deterministic constructors for the graph families used by the theorem
//! reproduction harness. Every family has a fixed vertex labeling, documented
//! on its constructor, and closed-form order and size.

use std::fmt;

use crate::error::GeneratorError;
use crate::graph::Graph;

fn domain(family: &'static str, constraint: &'static str) -> GeneratorError {
    GeneratorError::Domain { family, constraint }
}

fn clique_edges(start: usize, size: usize) -> impl Iterator<Item = (usize, usize)> {
    (start..start + size).flat_map(move |u| (u + 1..start + size).map(move |v| (u, v)))
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `n` isolated vertices.
pub fn edgeless(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(domain("edgeless", "n >= 1"));
    }
    Ok(Graph::empty(n))
}

/// `count` disjoint copies of `K_size`; clique `i` occupies
/// `i*size .. (i+1)*size`.
pub fn disjoint_cliques(count: usize, size: usize) -> Result<Graph, GeneratorError> {
    if count == 0 || size == 0 {
        return Err(domain("disjoint-cliques", "count >= 1 and size >= 1"));
    }
    let edges = (0..count).flat_map(|i| clique_edges(i * size, size));
    Ok(Graph::from_edges(count * size, edges).expect("valid clique edges"))
}

/// `l1 - 1` disjoint copies of `K_l1` followed by one `K_l2`, for `1 < l1 < l2`.
pub fn cliques_mixed(l1: usize, l2: usize) -> Result<Graph, GeneratorError> {
    if l1 <= 1 || l2 <= l1 {
        return Err(domain("cliques-mixed", "1 < L1 < L2"));
    }
    let small = l1 - 1;
    let n = small * l1 + l2;
    let edges = (0..small)
        .flat_map(|i| clique_edges(i * l1, l1))
        .chain(clique_edges(small * l1, l2));
    Ok(Graph::from_edges(n, edges).expect("valid clique edges"))
}

/// `K_{n,n}` minus a perfect matching. Vertex `x_i` is `i - 1` and `y_i` is
/// `n + i - 1`; `x_i y_j` is an edge iff `i != j`.
pub fn crown(n: usize) -> Result<Graph, GeneratorError> {
    if n < 2 {
        return Err(domain("crown", "n >= 2"));
    }
    let edges = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, n + j)));
    Ok(Graph::from_edges(2 * n, edges).expect("valid crown edges"))
}

/// `K_n` on `w_0 .. w_{n-1}` (vertices `0..n`) with `(n - 1) / 2` triangles
/// hanging off each `w_i`. Triangle `j` of `w_i` uses `u = n + 2(i h + j)` and
/// `v = u + 1` where `h = (n - 1) / 2`. Requires odd `n >= 3`.
pub fn pendant_triangles(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(domain("pendant-triangles", "n odd and n >= 3"));
    }
    let h = (n - 1) / 2;
    let mut edges: Vec<(usize, usize)> = clique_edges(0, n).collect();
    for i in 0..n {
        for j in 0..h {
            let u = n + 2 * (i * h + j);
            let v = u + 1;
            edges.extend([(i, u), (i, v), (u, v)]);
        }
    }
    Ok(Graph::from_edges(n * n, edges).expect("valid pendant-triangle edges"))
}

/// `K_n` on `0..n` plus vertex `n` pendant to vertex `0`. Requires `n >= 3`.
pub fn clique_with_pendant(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(domain("clique-with-pendant", "n >= 3"));
    }
    let edges = clique_edges(0, n).chain([(0, n)]);
    Ok(Graph::from_edges(n + 1, edges).expect("valid clique edges"))
}

/// A named family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Edgeless { n: usize },
    DisjointCliques { count: usize, size: usize },
    CliquesMixed { l1: usize, l2: usize },
    Crown { n: usize },
    PendantTriangles { n: usize },
    CliqueWithPendant { n: usize },
}

impl FamilySpec {
    pub const NAMES: [&'static str; 6] = [
        "edgeless",
        "disjoint-cliques",
        "cliques-mixed",
        "crown",
        "pendant-triangles",
        "clique-with-pendant",
    ];

    /// Parses a family name (dashes or underscores) and a `key=value,...`
    /// parameter list, e.g. `("disjoint-cliques", "count=3,size=2")`.
    pub fn parse(family: &str, params: &str) -> Result<Self, GeneratorError> {
        let mut values: Vec<(String, usize)> = Vec::new();
        for pair in params.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| GeneratorError::BadParams(format!("`{pair}` is not key=value")))?;
            let value = value
                .trim()
                .parse()
                .map_err(|_| GeneratorError::BadParams(format!("`{value}` is not an integer")))?;
            values.push((key.trim().to_ascii_lowercase(), value));
        }
        let normalized = family.trim().to_ascii_lowercase().replace('_', "-");
        let name = Self::NAMES
            .iter()
            .copied()
            .find(|n| *n == normalized)
            .ok_or_else(|| GeneratorError::UnknownFamily(family.to_string()))?;
        let get = |param: &'static str| {
            values
                .iter()
                .find(|(k, _)| k == param)
                .map(|&(_, v)| v)
                .ok_or(GeneratorError::MissingParam {
                    family: name,
                    param,
                })
        };
        let spec = match name {
            "edgeless" => FamilySpec::Edgeless { n: get("n")? },
            "disjoint-cliques" => FamilySpec::DisjointCliques {
                count: get("count")?,
                size: get("size")?,
            },
            "cliques-mixed" => FamilySpec::CliquesMixed {
                l1: get("l1")?,
                l2: get("l2")?,
            },
            "crown" => FamilySpec::Crown { n: get("n")? },
            "pendant-triangles" => FamilySpec::PendantTriangles { n: get("n")? },
            "clique-with-pendant" => FamilySpec::CliqueWithPendant { n: get("n")? },
            _ => unreachable!(),
        };
        let allowed: &[&str] = match spec {
            FamilySpec::DisjointCliques { .. } => &["count", "size"],
            FamilySpec::CliquesMixed { .. } => &["l1", "l2"],
            _ => &["n"],
        };
        if let Some((k, _)) = values.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
            return Err(GeneratorError::BadParams(format!(
                "unexpected parameter `{k}` for {name}"
            )));
        }
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Edgeless { .. } => "edgeless",
            FamilySpec::DisjointCliques { .. } => "disjoint-cliques",
            FamilySpec::CliquesMixed { .. } => "cliques-mixed",
            FamilySpec::Crown { .. } => "crown",
            FamilySpec::PendantTriangles { .. } => "pendant-triangles",
            FamilySpec::CliqueWithPendant { .. } => "clique-with-pendant",
        }
    }

    pub fn build(&self) -> Result<Graph, GeneratorError> {
        match *self {
            FamilySpec::Edgeless { n } => edgeless(n),
            FamilySpec::DisjointCliques { count, size } => disjoint_cliques(count, size),
            FamilySpec::CliquesMixed { l1, l2 } => cliques_mixed(l1, l2),
            FamilySpec::Crown { n } => crown(n),
            FamilySpec::PendantTriangles { n } => pendant_triangles(n),
            FamilySpec::CliqueWithPendant { n } => clique_with_pendant(n),
        }
    }

    /// Closed-form vertex count.
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Edgeless { n } => n,
            FamilySpec::DisjointCliques { count, size } => count * size,
            FamilySpec::CliquesMixed { l1, l2 } => (l1 - 1) * l1 + l2,
            FamilySpec::Crown { n } => 2 * n,
            FamilySpec::PendantTriangles { n } => n * n,
            FamilySpec::CliqueWithPendant { n } => n + 1,
        }
    }

    /// Closed-form edge count.
    pub fn size(&self) -> usize {
        match *self {
            FamilySpec::Edgeless { .. } => 0,
            FamilySpec::DisjointCliques { count, size } => count * binom2(size),
            FamilySpec::CliquesMixed { l1, l2 } => (l1 - 1) * binom2(l1) + binom2(l2),
            FamilySpec::Crown { n } => n * (n - 1),
            FamilySpec::PendantTriangles { n } => 2 * n * (n - 1),
            FamilySpec::CliqueWithPendant { n } => binom2(n) + 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::DisjointCliques { count, size } => {
                write!(f, "disjoint-cliques(count={count},size={size})")
            }
            FamilySpec::CliquesMixed { l1, l2 } => write!(f, "cliques-mixed(l1={l1},l2={l2})"),
            FamilySpec::Edgeless { n }
            | FamilySpec::Crown { n }
            | FamilySpec::PendantTriangles { n }
            | FamilySpec::CliqueWithPendant { n } => write!(f, "{}(n={n})", self.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_components, degree_stats};

    #[test]
    fn crown_labeling() {
        let g = crown(5).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 20));
        assert!(!g.has_edge(0, 5));
        assert!(g.has_edge(0, 6));
        assert!(!g.has_edge(0, 1));
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        assert!(g.bipartition().is_some());
        // n = 2 degenerates into two disjoint edges
        let two = crown(2).unwrap();
        assert_eq!(two.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn pendant_triangle_degrees() {
        let g = pendant_triangles(5).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (25, 40));
        let s = degree_stats(&g);
        assert!(s.degrees[..5].iter().all(|&d| d == 8));
        assert!(s.degrees[5..].iter().all(|&d| d == 2));
        assert_eq!((s.min_degree, s.degree_gcd), (2, Some(2)));
        // first triangle of w_0 is (0, 5, 6)
        assert!(g.has_edge(0, 5) && g.has_edge(0, 6) && g.has_edge(5, 6));
        assert_eq!(connected_components(&g).count(), 1);
    }

    #[test]
    fn small_families() {
        let g = disjoint_cliques(3, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 3));
        assert_eq!(connected_components(&g).count(), 3);

        let k4 = disjoint_cliques(1, 4).unwrap();
        assert_eq!(k4.edge_count(), 6);

        let mixed = cliques_mixed(2, 3).unwrap();
        assert_eq!((mixed.vertex_count(), mixed.edge_count()), (5, 4));
        assert_eq!(
            connected_components(&mixed).components,
            vec![vec![0, 1], vec![2, 3, 4]]
        );

        let p = clique_with_pendant(3).unwrap();
        assert_eq!((p.vertex_count(), p.edge_count()), (4, 4));
        assert_eq!(degree_stats(&p).min_degree, 1);

        assert_eq!(edgeless(1).unwrap(), Graph::empty(1));
    }

    #[test]
    fn domain_errors() {
        assert!(edgeless(0).is_err());
        assert!(disjoint_cliques(0, 3).is_err());
        assert!(cliques_mixed(1, 3).is_err());
        assert!(cliques_mixed(3, 3).is_err());
        assert!(crown(1).is_err());
        assert!(pendant_triangles(4).is_err());
        assert!(pendant_triangles(1).is_err());
        assert!(clique_with_pendant(2).is_err());
    }

    #[test]
    fn spec_parsing() {
        assert_eq!(
            FamilySpec::parse("crown", "n=5"),
            Ok(FamilySpec::Crown { n: 5 })
        );
        assert_eq!(
            FamilySpec::parse("disjoint_cliques", "count=3, size=2"),
            Ok(FamilySpec::DisjointCliques { count: 3, size: 2 })
        );
        assert_eq!(
            FamilySpec::parse("cliques-mixed", "L1=2,L2=4"),
            Ok(FamilySpec::CliquesMixed { l1: 2, l2: 4 })
        );
        assert!(matches!(
            FamilySpec::parse("wheel", "n=5"),
            Err(GeneratorError::UnknownFamily(_))
        ));
        assert!(matches!(
            FamilySpec::parse("crown", ""),
            Err(GeneratorError::MissingParam { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("crown", "n=5,m=2"),
            Err(GeneratorError::BadParams(_))
        ));
        assert!(matches!(
            FamilySpec::parse("crown", "n=five"),
            Err(GeneratorError::BadParams(_))
        ));
    }

    #[test]
    fn closed_forms_match() {
        let specs = [
            FamilySpec::Edgeless { n: 4 },
            FamilySpec::DisjointCliques { count: 4, size: 3 },
            FamilySpec::CliquesMixed { l1: 3, l2: 5 },
            FamilySpec::Crown { n: 7 },
            FamilySpec::PendantTriangles { n: 7 },
            FamilySpec::CliqueWithPendant { n: 6 },
        ];
        for spec in specs {
            let g = spec.build().unwrap();
            assert_eq!(g.vertex_count(), spec.order(), "{spec}");
            assert_eq!(g.edge_count(), spec.size(), "{spec}");
            let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
            assert_eq!(degree_sum, 2 * g.edge_count());
            assert_eq!(spec.build().unwrap(), g);
        }
    }
}
