use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("not a complex: {0}")]
    NotAComplex(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ideal is not monomial: {0}")]
    NotMonomial(String),
    #[error("cannot certify: {0}")]
    NotCertifiable(String),
    #[error("prime is not certified maximal: {0}")]
    NotMaximal(String),
    #[error("DVR ambient mismatch: {left} vs {right}")]
    AmbientMismatch { left: String, right: String },
    #[error("entry requires an m-adically complete ambient: {0}")]
    IncompleteAmbient(String),
    #[error("not tabulated: {0}")]
    NotTabulated(String),
    #[error("unsupported ideal: {0}")]
    UnsupportedIdeal(String),
    #[error("adic finiteness conditions disagree: {0}")]
    ConditionDisagreement(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
