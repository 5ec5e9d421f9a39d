use thiserror::Error;

use crate::models::Membership;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("arity mismatch: expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("polynomial has degree zero in `{0}`")]
    DegreeZero(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("parameter lies on the discriminant ({0:?})")]
    DiscriminantParameter(Membership),
    #[error("boundary crosses the curve at a fold point; perturb the parameter within its component")]
    NonGenericConfiguration,
    #[error("seed perturbation did not reach the requested type; shrink epsilon and delta")]
    SeedNotSmallEnough,
    #[error("no realized catalog available for this class")]
    CatalogMissing,
    #[error("invalid root signature p={p}, q={q} for mu={mu}")]
    InvalidSignature { p: usize, q: usize, mu: usize },
    #[error("segment endpoint lies on the discriminant")]
    DiscriminantEndpoint,
    #[error("endpoints have different lower-set types")]
    TypeMismatch,
    #[error("no certified path found within a budget of {budget} segment checks (inconclusive)")]
    NotFound { budget: usize },
    #[error("viewport is empty or undersampled")]
    EmptyViewport,
    #[error("bad slice axes: {0}")]
    BadAxes(String),
}

pub type Result<T> = std::result::Result<T, Error>;
