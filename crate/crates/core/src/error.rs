use thiserror::Error;

use crate::ring::RingDescriptor;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingDescriptor, RingDescriptor),
    #[error("dimension mismatch in {entity}: {detail}")]
    Dimension { entity: String, detail: String },
    #[error("side mismatch: {0}")]
    SideMismatch(String),
    #[error("coalgebra mismatch: {0}")]
    CoalgebraMismatch(String),
    #[error("map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("carrier of {0} must be free")]
    NonFreeCarrier(String),
    #[error("induced coaction does not land in the cotensor: {0}")]
    PurityObstruction(String),
    #[error("{operation} requires a quasi-Frobenius ring (field or Z/n), got {ring}")]
    UnsupportedRing { ring: RingDescriptor, operation: &'static str },
    #[error("associativity unavailable: {0}")]
    AssociativityUnavailable(String),
    #[error("context has not been verified: {0}")]
    UnverifiedContext(String),
    #[error("hypothesis not certified: {0}")]
    HypothesisNotCertified(String),
    #[error("exactness not certified: {0}")]
    ExactnessNotCertified(String),
    #[error("coendomorphism coalgebra is not isomorphic to the target: {0}")]
    CoendMismatch(String),
    #[error("probe is not a short exact sequence: {0}")]
    NonExactProbe(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("computation cancelled")]
    Cancelled,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err(entity: impl Into<String>, detail: impl Into<String>) -> Error {
    Error::Dimension { entity: entity.into(), detail: detail.into() }
}
