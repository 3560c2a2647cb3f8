//! Exact solver for the FAT (fair and tolerant) chromatic number.
//!
//! ```
//! use fatchroma_core::{generators, solver};
//!
//! let g = generators::crown(5).unwrap();
//! let report = solver::chi_fat(&g, &solver::SolveOptions::default()).unwrap();
//! assert_eq!(report.value(), Some(5));
//! ```

pub mod error;
pub mod fat;
pub mod generators;
pub mod graph;
pub mod rational;
pub mod reproduce;
pub mod solver;

pub use error::{
    FormatError, GeneratorError, GraphError, PartitionError, ReproduceError, SolveError,
};
pub use fat::{
    component_coloring, infer_fat_parameters, neighbor_count, verify_fat, FatWitness,
    InferenceOutcome, Partition, Verdict,
};
pub use graph::{connected_components, degree_stats, Graph};
pub use rational::Rational;
