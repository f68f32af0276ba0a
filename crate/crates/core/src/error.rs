use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("extension polynomial is reducible over the base field")]
    ReduciblePolynomial,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar: {0:?}")]
    ParseScalar(String),
    #[error("{context} requires characteristic != {characteristic}")]
    BadCharacteristic { context: String, characteristic: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("elements belong to different groups")]
    GroupMismatch,
    #[error("homomorphism does not respect generator orders")]
    BadHomomorphism,
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("map is not nilpotent of index <= 3")]
    NotNilpotent,
    #[error("basis is not closed under the bracket")]
    NotClosed,
    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),
    #[error("grading axiom fails: deg({i}) * deg({j}) does not cover basis vector {k}")]
    NotAGrading { i: usize, j: usize, k: usize },
    #[error("grading has not been verified")]
    UnverifiedGrading,
    #[error("degree propagation conflict at basis vector {0}")]
    PropagationConflict(usize),
    #[error("degree propagation incomplete: basis vector {0} never received a degree")]
    PropagationIncomplete(usize),
    #[error("field does not contain a square root of -1")]
    MissingSqrtMinusOne,
    #[error("field does not contain a primitive cube root of unity")]
    MissingCubeRoot,
    #[error("related-triple construction failed: {0}")]
    RelatedTriple(String),
    #[error("derivation-space decomposition failed: {0}")]
    Decomposition(String),
    #[error("unknown catalog entry: {0}")]
    UnknownEntry(String),
    #[error("entry {name} is unavailable over this field: {reason}")]
    EntryUnavailable { name: String, reason: String },
    #[error("registry mismatch for {name}: {detail}")]
    RegistryMismatch { name: String, detail: String },
    #[error("coarsening search exhausted without a match")]
    SearchExhausted,
    #[error("malformed parameter tuple: {0}")]
    MalformedTuple(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
