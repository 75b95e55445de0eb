use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("not a unit: {0}")]
    NotAUnit(String),

    #[error("cannot parse literal {literal:?}: {reason}")]
    Parse { literal: String, reason: String },

    #[error("degree {requested} exceeds precision {precision}")]
    InsufficientPrecision { requested: usize, precision: usize },

    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    #[error("invalid substitution: {0}")]
    InvalidSubstitution(String),

    #[error("degenerate quadratic form: {0}")]
    Degenerate(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeOverflow { degree: usize, bound: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("identity {check} failed: {detail}")]
    IdentityFailure { check: String, detail: String },

    #[error("element has nonzero residue: {0}")]
    NonZeroResidue(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn identity_failure(check: &str, detail: impl Into<String>) -> Error {
    Error::IdentityFailure {
        check: check.to_string(),
        detail: detail.into(),
    }
}
