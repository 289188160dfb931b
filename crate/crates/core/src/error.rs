use thiserror::Error;

/// Errors raised by the analysis library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence too short: need at least {needed} entries, got {got}")]
    SequenceTooShort { needed: usize, got: usize },

    #[error("generator index {index} out of range (algebra has {count} generators)")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("dimension mismatch: expected {expected} components, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A presentation that violates a structural invariant. `path` names the
    /// offending field in the JSON input layout.
    #[error("invalid spec at {path}: {message}")]
    InvalidSpec { path: String, message: String },

    #[error("weight vector must be strictly positive")]
    NonPositiveWeight,

    #[error("relation {relation}: lower-order term does not drop below the leading weight under the given weights")]
    LeadingTermViolation { relation: usize },

    #[error("operation not supported for algebra kind {kind}")]
    UnsupportedKind { kind: String },

    #[error("sequence is zero at every sampled index")]
    ZeroSequence,

    #[error("denominator must satisfy q(0) = 1")]
    BadDenominator,

    #[error("denominator is not of the form (1 - t^s)^d")]
    NotPureForm,

    #[error("residue class {residue} has {got} samples past the onset, need {needed}")]
    TooFewSamples {
        residue: usize,
        got: usize,
        needed: usize,
    },

    #[error("no polynomial fit for {which}: the dimension sequence did not stabilise on the sampled range")]
    Inconclusive { which: String },

    #[error("no holonomic number known for algebra kind {kind}")]
    UnknownHolonomy { kind: String },

    #[error("precondition unmet: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
