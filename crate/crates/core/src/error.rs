use thiserror::Error;

/// Errors raised by hypergraph construction, spectral computation and the
/// family generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("edge {edge:?} has fewer than two vertices")]
    EdgeTooSmall { edge: Vec<usize> },

    #[error("edge {edge:?} contains vertex {vertex}, but the hypergraph has only {n} vertices")]
    VertexOutOfRange {
        edge: Vec<usize>,
        vertex: usize,
        n: usize,
    },

    #[error("edge {edge:?} appears more than once")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("vertex {vertex} is not a vertex of a hypergraph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("edge index {index} out of range ({m} edges)")]
    InvalidEdgeIndex { index: usize, m: usize },

    #[error("hypergraph is not {k}-uniform")]
    NotUniform { k: usize },

    #[error("hypergraph is not uniform")]
    NonUniform,

    #[error("uniformity k = {k} is out of range for {n} vertices")]
    UniformityOutOfRange { k: usize, n: usize },

    #[error("vertex {vertex} is not contained in edge {edge:?}")]
    VertexNotInEdge { vertex: usize, edge: Vec<usize> },

    #[error("vertex {vertex} is already contained in edge {edge:?}")]
    VertexAlreadyInEdge { vertex: usize, edge: Vec<usize> },

    #[error("edge {edge:?} is not present")]
    MissingEdge { edge: Vec<usize> },

    #[error("edge swap precondition violated: {0}")]
    SwapPrecondition(String),

    #[error("hypergraph is disconnected")]
    Disconnected,

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix has non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("matrix rows have inconsistent length")]
    Ragged,

    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("Estrada index overflows f64 (largest eigenvalue {lambda1})")]
    EstradaOverflow { lambda1: f64 },

    #[error("integer overflow while counting walks of length {length}")]
    WalkOverflow { length: usize },

    #[error("t = {t} is out of range 2..={n}")]
    TOutOfRange { t: usize, n: usize },

    #[error("invalid family parameters: {0}")]
    FamilyParameters(String),

    #[error("family grammar error at column {column}: {message}")]
    Grammar { column: usize, message: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Json(String),

    #[error("inconsistent two-eigenvalue characterization: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
