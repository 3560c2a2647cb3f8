use std::io::Read;

use fatchroma_core::error::{
    FormatError, GeneratorError, PartitionError, ReproduceError, SolveError,
};
use fatchroma_core::graph::{emit_dimacs, emit_graph6, parse_dimacs, parse_graph6};
use fatchroma_core::Graph;
use thiserror::Error;

use crate::Format;

/// Everything that ends a run with the input-error exit code.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error("{path} line {line}: {source}")]
    Graph6Line {
        path: String,
        line: usize,
        source: FormatError,
    },
    #[error("{0}")]
    Coloring(#[from] FormatError),
    #[error("{0}")]
    Partition(#[from] PartitionError),
    #[error("{0}")]
    Generator(#[from] GeneratorError),
    #[error("{0}")]
    Solve(#[from] SolveError),
    #[error("{0}")]
    Reproduce(#[from] ReproduceError),
    #[error("{0}")]
    Usage(String),
}

pub fn read_text(path: &str) -> Result<String, InputError> {
    let io = |source| InputError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// graph6 files hold one graph per nonblank line; a DIMACS file is one graph.
pub fn read_graphs(path: &str, format: Format) -> Result<Vec<Graph>, InputError> {
    let text = read_text(path)?;
    let graphs = match format {
        Format::Dimacs => vec![parse_dimacs(&text).map_err(|source| InputError::Format {
            path: path.to_string(),
            source,
        })?],
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                parse_graph6(l.trim()).map_err(|source| InputError::Graph6Line {
                    path: path.to_string(),
                    line: i + 1,
                    source,
                })
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    if graphs.is_empty() {
        return Err(InputError::Usage(format!("{path}: no graph found")));
    }
    Ok(graphs)
}

pub fn read_single_graph(path: &str, format: Format) -> Result<Graph, InputError> {
    let mut graphs = read_graphs(path, format)?;
    if graphs.len() > 1 {
        return Err(InputError::Usage(format!(
            "{path}: expected one graph, found {}",
            graphs.len()
        )));
    }
    Ok(graphs.remove(0))
}

pub fn encode(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => format!("{}\n", emit_graph6(g)),
        Format::Dimacs => emit_dimacs(g),
    }
}
