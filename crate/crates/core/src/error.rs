use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid Dynkin type {0}")]
    InvalidType(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("operands belong to different algebras or module sides")]
    AlgebraMismatch,
    #[error("invalid vertex {vertex} (algebra has {count} vertices)")]
    InvalidVertex { vertex: usize, count: usize },
    #[error("could not split module of dimension {0}: no splitting endomorphism found")]
    SplitFailure(usize),
    #[error("module is not absolutely indecomposable over F_{0}")]
    NotAbsolutelyIndecomposable(u32),
    #[error("registry cap exceeded ({0}); the algebra is suspected to be representation-infinite")]
    RepresentationInfinite(String),
    #[error("module summand is not registered: dimension vector {0:?}")]
    UnknownSummand(Vec<usize>),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
