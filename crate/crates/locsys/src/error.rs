use thiserror::Error;

/// Errors surfaced by the exact-algebra kernels and the tower engine.
///
/// Mathematical *negative results* (a verifier that fails, a theorem
/// check that is undetermined on a finite prefix) are not errors; they
/// are reported through [`crate::tower::VerificationReport`]. Errors are
/// reserved for violated preconditions and malformed input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("mixed-field input: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("characteristic too small: field has characteristic {p}, need 0 or p > {dim}")]
    CharacteristicTooSmall { p: u64, dim: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("subspace is not multiplicatively closed")]
    NotClosed,

    #[error("algebra is not semisimple (radical has dimension {0})")]
    NotSemisimple(usize),

    #[error("algebra is not perfect (perfect core has dimension {0} of {1})")]
    NotPerfect(usize, usize),

    #[error("component is not split over the ground field: {0}")]
    NonSplit(String),

    #[error("generator set is empty")]
    EmptyGenerators,

    #[error("generator subspace is zero")]
    ZeroGenerator,

    #[error("diagonal signature needs at least one copy")]
    ZeroCopies,

    #[error("size budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("unknown node id {0}")]
    UnknownNode(u32),

    #[error("edge {from}->{to} is not an embedding: {reason}")]
    BadEmbedding { from: u32, to: u32, reason: String },

    #[error("restriction of edge {from}->{to} leaves the designated subspace: {reason}")]
    RestrictionFailed { from: u32, to: u32, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("internal postcondition failed: {0}")]
    Postcondition(String),
}

impl Error {
    /// Process exit code of the error class: every error here is an
    /// input or precondition failure (exit 3); mathematical failures and
    /// undetermined verdicts carry their own codes on the report side.
    pub fn exit_code(&self) -> i32 {
        3
    }
}
