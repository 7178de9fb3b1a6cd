use thiserror::Error;

/// Errors raised by the graph model, the solvers and the constructive algorithms.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("field {field}: {msg}")]
    Field { field: String, msg: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("vertex {0} has no coordinate")]
    MissingCoordinate(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("work bound exceeded: search needs {needed:.1} bits, bound is {bound:.1}")]
    WorkBound { needed: f64, bound: f64 },
    #[error("graph is not degree-2 contractible")]
    NotContractible,
    #[error("graph is not outerplanar")]
    NotOuterplanar,
    #[error("graph contains a triangle")]
    Triangle,
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
