use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: expected length {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("fiber type `{0}` is already registered")]
    DuplicateType(String),
    #[error("unknown fiber type `{0}`")]
    UnknownType(String),
    #[error("fiber type `{0}` is not a surface")]
    NotASurface(String),
    #[error("classifier has no assignment for type `{0}`")]
    MissingAssignment(String),
    #[error("classifier assignment for `{id}` has length {got}, group needs {expected}")]
    AssignmentShape {
        id: String,
        expected: usize,
        got: usize,
    },
    #[error("complex failed validation:\n{0}")]
    Invalid(crate::complex::ValidationReport),
    #[error("quotient is not compatible with the complex: boundary does not vanish at face `{face}`")]
    IncompatibleQuotient { face: String },
    #[error("classifier is not compatible: relation at `{site}` maps to a nonzero group element")]
    IncompatibleClassifier { site: String },
    #[error("quotient was built over a different registry (ambient rank {quotient} vs {registry} types)")]
    RegistryMismatch { quotient: usize, registry: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("scene error: {0}")]
    Scene(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
