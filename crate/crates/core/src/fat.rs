//! FAT (fair and tolerant) colorings.
//!
//! A partition `V_1, ..., V_k` of the vertex set into nonempty classes is a FAT
//! k-coloring when two fractions `alpha, beta` in `[0, 1]` exist such that every
//! vertex `v` has exactly `alpha * deg(v)` neighbors in each class not
//! containing it and exactly `beta * deg(v)` neighbors in its own class.
//! Every check here is done in exact integer arithmetic.

use std::collections::HashMap;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{FormatError, GraphError, PartitionError};
use crate::graph::{connected_components, Graph, Vertex};
use crate::rational::Rational;

/// Ordered list of nonempty, pairwise disjoint vertex blocks covering `0..n`.
///
/// Blocks are kept in canonical form: each block sorted, blocks ordered by
/// their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<Vertex>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<Vertex>>) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        for block in &blocks {
            for &v in block {
                if v >= n {
                    return Err(PartitionError::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(PartitionError::Overlap { vertex: v });
                }
            }
        }
        if let Some(block) = blocks.iter().position(Vec::is_empty) {
            return Err(PartitionError::EmptyBlock { block });
        }
        if let Some(vertex) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::Uncovered { vertex });
        }
        Ok(Self::canonical(n, blocks))
    }

    /// Groups vertices by label; `labels[v]` is the color of vertex `v`.
    pub fn from_labels<L: Eq + std::hash::Hash>(labels: &[L]) -> Self {
        let mut index: HashMap<&L, usize> = HashMap::new();
        let mut blocks: Vec<Vec<Vertex>> = Vec::new();
        for (v, label) in labels.iter().enumerate() {
            let next = blocks.len();
            let b = *index.entry(label).or_insert(next);
            if b == next {
                blocks.push(Vec::new());
            }
            blocks[b].push(v);
        }
        Self::canonical(labels.len(), blocks)
    }

    /// The one-block partition.
    pub fn whole(n: usize) -> Self {
        Partition {
            n,
            blocks: if n == 0 {
                Vec::new()
            } else {
                vec![(0..n).collect()]
            },
        }
    }

    fn canonical(n: usize, mut blocks: Vec<Vec<Vertex>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Partition { n, blocks }
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        &self.blocks
    }

    /// Block index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                labels[v] = i;
            }
        }
        labels
    }
}

/// A partition together with parameters that make it a FAT coloring.
///
/// Only obtainable from [`verify_fat`], [`infer_fat_parameters`] or
/// [`component_coloring`], so every value in existence has been checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FatWitness {
    partition: Partition,
    alpha: Rational,
    beta: Rational,
}

impl FatWitness {
    pub fn k(&self) -> usize {
        self.partition.k()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn blocks(&self) -> &[Vec<Vertex>] {
        self.partition.blocks()
    }

    pub fn alpha(&self) -> Rational {
        self.alpha
    }

    pub fn beta(&self) -> Rational {
        self.beta
    }

    /// `beta + (k - 1) * alpha == 1`.
    pub fn satisfies_identity(&self) -> bool {
        let k = self.k() as u64;
        // a/b + (k-1) c/d == 1  <=>  a d + (k-1) c b == b d
        let (a, b) = (u128::from(self.beta.numer()), u128::from(self.beta.denom()));
        let (c, d) = (
            u128::from(self.alpha.numer()),
            u128::from(self.alpha.denom()),
        );
        a * d + u128::from(k.saturating_sub(1)) * c * b == b * d
    }

    pub fn to_record(&self) -> WitnessRecord {
        WitnessRecord {
            k: self.k(),
            blocks: self.blocks().to_vec(),
            alpha: self.alpha,
            beta: self.beta,
        }
    }
}

impl Serialize for FatWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_record().serialize(serializer)
    }
}

/// Serialized witness: `{"k", "blocks", "alpha": "p/q", "beta": "p/q"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub k: usize,
    pub blocks: Vec<Vec<Vertex>>,
    pub alpha: Rational,
    pub beta: Rational,
}

impl WitnessRecord {
    /// Re-checks the record against `g`.
    pub fn certify(&self, g: &Graph) -> Result<Verdict, PartitionError> {
        let p = Partition::new(g.vertex_count(), self.blocks.clone())?;
        if p.k() != self.k {
            return Err(PartitionError::BlockCountMismatch {
                declared: self.k,
                actual: p.k(),
            });
        }
        verify_fat(g, &p, self.alpha, self.beta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Alpha,
    Beta,
}

impl std::fmt::Display for Param {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Param::Alpha => "alpha",
            Param::Beta => "beta",
        })
    }
}

/// First failing `(vertex, block)` pair of a FAT check with fixed parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: Vertex,
    pub block: usize,
    /// `Beta` when `vertex` lies in `block`.
    pub parameter: Param,
    pub value: Rational,
    /// `e(vertex, block)`.
    pub observed: usize,
    pub degree: usize,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "e({}, V{}) = {} but {} * deg = {} * {} = {}",
            self.vertex,
            self.block,
            self.observed,
            self.parameter,
            self.value,
            self.degree,
            self.value.scale(self.degree as u64)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted(FatWitness),
    Rejected(Violation),
}

impl Verdict {
    pub fn is_accepted(&self) -> bool {
        matches!(self, Verdict::Accepted(_))
    }
}

/// Where a parameter value was first forced during inference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Pin {
    pub vertex: Vertex,
    pub block: usize,
    pub value: Rational,
}

/// Two `(vertex, block)` pairs that force different values on one parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Conflict {
    pub parameter: Param,
    pub vertex: Vertex,
    pub block: usize,
    pub observed: usize,
    pub degree: usize,
    /// `observed / degree`.
    pub ratio: Rational,
    /// The value `parameter` was already pinned to.
    pub pinned: Pin,
}

impl std::fmt::Display for Conflict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "vertex {} forces {} = {} via block {}, but vertex {} forces {} = {} via block {}",
            self.pinned.vertex,
            self.parameter,
            self.pinned.value,
            self.pinned.block,
            self.vertex,
            self.parameter,
            self.ratio,
            self.block
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InferenceOutcome {
    Witness(FatWitness),
    Conflict(Conflict),
}

/// `e(v, S)`: number of neighbors of `v` inside `s`.
pub fn neighbor_count(g: &Graph, v: Vertex, s: &[Vertex]) -> Result<usize, GraphError> {
    if v >= g.vertex_count() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.vertex_count(),
        });
    }
    Ok(s.iter().filter(|&&u| g.has_edge(v, u)).count())
}

/// For each vertex, the number of its neighbors in each block.
fn block_counts(g: &Graph, p: &Partition) -> (Vec<usize>, Vec<usize>) {
    let k = p.k();
    let labels = p.labels();
    let mut counts = vec![0usize; g.vertex_count() * k];
    for v in g.vertices() {
        for &w in g.neighbors(v) {
            counts[v * k + labels[w]] += 1;
        }
    }
    (labels, counts)
}

fn check_sizes(g: &Graph, p: &Partition) -> Result<(), PartitionError> {
    if p.vertex_count() != g.vertex_count() {
        return Err(PartitionError::SizeMismatch {
            partition: p.vertex_count(),
            graph: g.vertex_count(),
        });
    }
    Ok(())
}

fn check_unit(name: &'static str, value: Rational) -> Result<(), PartitionError> {
    if value > Rational::ONE {
        return Err(PartitionError::ParameterOutOfRange {
            name,
            value: value.to_string(),
        });
    }
    Ok(())
}

/// Checks the FAT condition for fixed `alpha`, `beta`. Pairs are scanned in
/// `(vertex, block)` order; the first failure is reported.
pub fn verify_fat(
    g: &Graph,
    p: &Partition,
    alpha: Rational,
    beta: Rational,
) -> Result<Verdict, PartitionError> {
    check_sizes(g, p)?;
    check_unit("alpha", alpha)?;
    check_unit("beta", beta)?;
    let k = p.k();
    let (labels, counts) = block_counts(g, p);
    for v in g.vertices() {
        let degree = g.degree(v);
        for block in 0..k {
            let observed = counts[v * k + block];
            let (parameter, value) = if labels[v] == block {
                (Param::Beta, beta)
            } else {
                (Param::Alpha, alpha)
            };
            if !value.matches(observed as u64, degree as u64) {
                return Ok(Verdict::Rejected(Violation {
                    vertex: v,
                    block,
                    parameter,
                    value,
                    observed,
                    degree,
                }));
            }
        }
    }
    Ok(Verdict::Accepted(FatWitness {
        partition: p.clone(),
        alpha,
        beta,
    }))
}

/// Derives `(alpha, beta)` from the partition alone.
///
/// Every positive-degree vertex pins `beta` through its own block and, when
/// `k >= 2`, `alpha` through every other block. Unpinned parameters default to
/// `alpha = 0`, `beta = 1` (the one-block coloring, and edgeless graphs).
pub fn infer_fat_parameters(g: &Graph, p: &Partition) -> Result<InferenceOutcome, PartitionError> {
    check_sizes(g, p)?;
    let k = p.k();
    let (labels, counts) = block_counts(g, p);
    let mut alpha: Option<Pin> = None;
    let mut beta: Option<Pin> = None;
    for v in g.vertices() {
        let degree = g.degree(v);
        if degree == 0 {
            continue;
        }
        for block in 0..k {
            let observed = counts[v * k + block];
            let ratio = Rational::new(observed as u64, degree as u64);
            let (parameter, slot) = if labels[v] == block {
                (Param::Beta, &mut beta)
            } else {
                (Param::Alpha, &mut alpha)
            };
            match slot {
                None => {
                    *slot = Some(Pin {
                        vertex: v,
                        block,
                        value: ratio,
                    })
                }
                Some(pin) if pin.value != ratio => {
                    return Ok(InferenceOutcome::Conflict(Conflict {
                        parameter,
                        vertex: v,
                        block,
                        observed,
                        degree,
                        ratio,
                        pinned: *pin,
                    }));
                }
                Some(_) => {}
            }
        }
    }
    let alpha = alpha.map_or(Rational::ZERO, |pin| pin.value);
    let beta = beta.map_or(Rational::ONE, |pin| pin.value);
    match verify_fat(g, p, alpha, beta)? {
        Verdict::Accepted(w) => Ok(InferenceOutcome::Witness(w)),
        Verdict::Rejected(v) => unreachable!("consistent pins failed verification: {v:?}"),
    }
}

/// One block per connected component, `alpha = 0`, `beta = 1`.
pub fn component_coloring(g: &Graph) -> FatWitness {
    let comps = connected_components(g);
    let partition = Partition {
        n: g.vertex_count(),
        blocks: comps.components,
    };
    match verify_fat(g, &partition, Rational::ZERO, Rational::ONE) {
        Ok(Verdict::Accepted(w)) => w,
        other => unreachable!("component coloring rejected: {other:?}"),
    }
}

/// Parses a coloring file: one `vertex label` pair per line, 0-based vertex
/// indices, arbitrary labels. Blank lines and lines starting with `#` are
/// skipped. Every vertex of the graph must appear exactly once.
pub fn parse_coloring(text: &str, n: usize) -> Result<Partition, FormatError> {
    let err = |line: usize, reason: String| FormatError::Coloring { line, reason };
    let mut labels: Vec<Option<String>> = vec![None; n];
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let (Some(vertex), Some(label), None) = (fields.next(), fields.next(), fields.next())
        else {
            return Err(err(line, "expected `vertex label`".into()));
        };
        let vertex: usize = vertex
            .parse()
            .map_err(|_| err(line, format!("invalid vertex `{vertex}`")))?;
        if vertex >= n {
            return Err(err(line, format!("vertex {vertex} outside 0..{n}")));
        }
        if labels[vertex].replace(label.to_string()).is_some() {
            return Err(err(line, format!("vertex {vertex} colored twice")));
        }
    }
    let labels: Vec<String> = labels
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| err(0, format!("vertex {v} has no color"))))
        .collect::<Result<_, _>>()?;
    Ok(Partition::from_labels(&labels))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert_eq!(
            Partition::new(3, vec![vec![0], vec![], vec![1, 2]]),
            Err(PartitionError::EmptyBlock { block: 1 })
        );
        assert_eq!(
            Partition::new(3, vec![vec![0, 1], vec![1, 2]]),
            Err(PartitionError::Overlap { vertex: 1 })
        );
        assert_eq!(
            Partition::new(3, vec![vec![0, 2]]),
            Err(PartitionError::Uncovered { vertex: 1 })
        );
        assert_eq!(
            Partition::new(3, vec![vec![3]]),
            Err(PartitionError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        let p = Partition::new(4, vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(p, Partition::from_labels(&["a", "b", "a", "b"]));
    }

    #[test]
    fn neighbor_counts_on_triangle() {
        assert_eq!(neighbor_count(&k3(), 0, &[1, 2]), Ok(2));
        assert_eq!(neighbor_count(&k3(), 0, &[0]), Ok(0));
        assert!(neighbor_count(&k3(), 3, &[0]).is_err());
    }

    #[test]
    fn triangle_conflict_names_both_pins() {
        let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let InferenceOutcome::Conflict(c) = infer_fat_parameters(&k3(), &p).unwrap() else {
            panic!("expected a conflict");
        };
        assert_eq!(c.parameter, Param::Alpha);
        assert_eq!((c.vertex, c.block, c.ratio), (2, 0, Rational::ONE));
        assert_eq!(
            c.pinned,
            Pin {
                vertex: 0,
                block: 1,
                value: Rational::new(1, 2)
            }
        );
        // evidence re-checks through neighbor_count
        let g = k3();
        assert_eq!(neighbor_count(&g, 2, &p.blocks()[0]).unwrap(), c.observed);
        assert_eq!(neighbor_count(&g, 0, &p.blocks()[1]).unwrap(), 1);
    }

    #[test]
    fn single_block_gets_unit_beta() {
        let g = k3();
        let InferenceOutcome::Witness(w) = infer_fat_parameters(&g, &Partition::whole(3)).unwrap()
        else {
            panic!()
        };
        assert_eq!(
            (w.k(), w.alpha(), w.beta()),
            (1, Rational::ZERO, Rational::ONE)
        );
    }

    #[test]
    fn edgeless_graph_defaults() {
        let g = Graph::empty(3);
        let p = Partition::from_labels(&[0, 1, 2]);
        let InferenceOutcome::Witness(w) = infer_fat_parameters(&g, &p).unwrap() else {
            panic!()
        };
        assert_eq!((w.alpha(), w.beta()), (Rational::ZERO, Rational::ONE));
        for (a, b) in [(1, 3), (2, 2), (0, 5)] {
            let verdict = verify_fat(&g, &p, Rational::new(a, 4), Rational::new(b, 5)).unwrap();
            assert!(verdict.is_accepted());
        }
    }

    #[test]
    fn parameter_range_is_checked() {
        let g = k3();
        assert!(matches!(
            verify_fat(&g, &Partition::whole(3), Rational::new(3, 2), Rational::ONE),
            Err(PartitionError::ParameterOutOfRange { name: "alpha", .. })
        ));
        let short = Partition::whole(2);
        assert!(matches!(
            verify_fat(&g, &short, Rational::ZERO, Rational::ONE),
            Err(PartitionError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn singleton_coloring_of_triangle() {
        let p = Partition::from_labels(&[0, 1, 2]);
        let verdict = verify_fat(&k3(), &p, Rational::new(1, 2), Rational::ZERO).unwrap();
        let Verdict::Accepted(w) = verdict else {
            panic!()
        };
        assert!(w.satisfies_identity());
        let json = serde_json::to_value(&w).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"k": 3, "blocks": [[0], [1], [2]], "alpha": "1/2", "beta": "0/1"})
        );
        let record: WitnessRecord = serde_json::from_value(json).unwrap();
        assert_eq!(record.certify(&k3()).unwrap(), Verdict::Accepted(w));
    }

    #[test]
    fn coloring_file() {
        let p = parse_coloring("# demo\n0 red\n1 red\n\n2 blue\n", 3).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2]]);
        assert!(matches!(
            parse_coloring("0 a\n0 b\n1 a\n", 2),
            Err(FormatError::Coloring { line: 2, .. })
        ));
        assert!(matches!(
            parse_coloring("0 a\n", 2),
            Err(FormatError::Coloring { line: 0, .. })
        ));
        assert!(matches!(
            parse_coloring("5 a\n", 2),
            Err(FormatError::Coloring { line: 1, .. })
        ));
        assert!(matches!(
            parse_coloring("0\n", 1),
            Err(FormatError::Coloring { line: 1, .. })
        ));
    }
}
