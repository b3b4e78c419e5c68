use thiserror::Error;

/// Errors produced by the construction and verification routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("degenerate segment: both endpoints are {0}")]
    DegenerateSegment(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {0} for this operation")]
    UnsupportedDimension(usize),

    #[error("inconsistent residue system: x = {r1} (mod {m1}) conflicts with x = {r2} (mod {m2})")]
    Infeasible {
        r1: String,
        m1: String,
        r2: String,
        m2: String,
    },

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not planar")]
    NotPlanar,

    #[error("improper coloring: edge {0}-{1} is monochromatic")]
    ImproperColoring(usize, usize),

    #[error("internal certification failed: {0}")]
    Certification(String),

    #[error("malformed input: {0}")]
    Input(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
