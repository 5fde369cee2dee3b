use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph on {n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not planar")]
    NotPlanar,

    #[error("minor search exceeded its budget of {budget} node expansions")]
    SearchBudgetExceeded { budget: u64 },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("line {line}: {source}")]
    CorpusLine { line: usize, source: Graph6Error },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
