use thiserror::Error;

/// Errors reported by the algebraic kernel and the layers above it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("operands live on different variable sets ({left} vs {right})")]
    VarSetMismatch { left: String, right: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("matrix is not square")]
    NonSquareMatrix,

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("the zero polynomial was given where a nonzero one is required")]
    ZeroPolynomial,

    #[error("polynomial is not univariate")]
    NotUnivariate,

    #[error("basis size ceiling exceeded: {size} polynomials (limit {limit})")]
    BasisCeiling { size: usize, limit: usize },

    #[error("total degree ceiling exceeded: degree {degree} (limit {limit})")]
    DegreeCeiling { degree: u32, limit: u32 },

    #[error("system is positive-dimensional; no finite solution enumeration exists")]
    PositiveDimensional,

    #[error("specialized system is degenerate: {0}")]
    DegenerateSpecialization(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid trajectory: {0}")]
    InvalidTrajectory(String),

    #[error("invalid working mode `{0}`")]
    InvalidMode(String),

    #[error("interval refinement did not converge: {0}")]
    RefinementStalled(String),

    #[error("verdict undecided at maximum subdivision depth")]
    Undecided,

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
