use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6 byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },
    #[error("DIMACS line {line}: {reason}")]
    Dimacs { line: usize, reason: String },
    #[error("coloring line {line}: {reason}")]
    Coloring { line: usize, reason: String },
}

/// Structural problems with a candidate partition or parameter pair.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("block {block} is empty")]
    EmptyBlock { block: usize },
    #[error("vertex {vertex} appears in more than one block")]
    Overlap { vertex: usize },
    #[error("vertex {vertex} is not covered by any block")]
    Uncovered { vertex: usize },
    #[error("partition covers {partition} vertices but the graph has {graph}")]
    SizeMismatch { partition: usize, graph: usize },
    #[error("witness declares k = {declared} but lists {actual} blocks")]
    BlockCountMismatch { declared: usize, actual: usize },
    #[error("parameter {name} = {value} is outside [0, 1]")]
    ParameterOutOfRange { name: &'static str, value: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{family}: {constraint}")]
    Domain {
        family: &'static str,
        constraint: &'static str,
    },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family}: missing parameter `{param}`")]
    MissingParam {
        family: &'static str,
        param: &'static str,
    },
    #[error("bad parameter list: {0}")]
    BadParams(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("k = {k} outside 1..={n}")]
    KOutOfRange { k: usize, n: usize },
    #[error("candidate alphas need k >= 2, got {0}")]
    KTooSmall(usize),
    #[error("candidate alphas are undefined for an edgeless graph")]
    Edgeless,
    #[error("graph has {n} vertices, above the cap of {cap} for this operation")]
    CapExceeded { n: usize, cap: usize },
    #[error("could not build thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReproduceError {
    #[error("{theorem}: parameters violate the hypothesis {constraint}")]
    Hypothesis {
        theorem: &'static str,
        constraint: &'static str,
    },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}
