use thiserror::Error;

/// Errors raised by the kernel's constructions and evaluators.
///
/// `ArityOverflow` is kept distinct from the other variants: it signals that
/// a computation left a truncated presentation, not that an axiom failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("index {index} out of range 1..={bound}")]
    OutOfRange { index: usize, bound: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),

    #[error("arity {arity} exceeds the truncation bound {bound}")]
    ArityOverflow { arity: usize, bound: usize },

    #[error("morphisms are not composable: {0}")]
    NotComposable(String),

    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("unknown builtin kind `{0}`")]
    UnknownKind(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// True when the error marks a truncation boundary rather than a defect.
    pub fn is_truncation(&self) -> bool {
        matches!(self, Error::ArityOverflow { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
