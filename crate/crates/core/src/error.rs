use alloc::string::String;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Axiom violations found by verifiers are not errors; they are reported as
/// [`crate::report::Report`] content.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("closure exceeded cap of {cap} elements ({found} found so far)")]
    CapExceeded { cap: usize, found: usize },

    #[error("size guard exceeded: {size} > {limit}")]
    SizeGuard { size: usize, limit: usize },

    #[error("not closed: {0}")]
    NotClosed(String),

    #[error("not a normal Clifford subsemigroup: {clause} ({witness})")]
    NotNormalClifford { clause: String, witness: String },

    #[error("cross-section is not order-preserving: {0}")]
    NotOrderPreserving(String),

    #[error("no order-preserving cross-section exists: {0}")]
    NoOrderPreservingSection(String),

    #[error("quotient is not F-tilde inverse: {0}")]
    NotFTilde(String),

    #[error("ideal is not basis-aligned: {0}")]
    NotBasisAligned(String),

    #[error("no identity element: {0}")]
    NoIdentity(String),

    #[error("singular linear map: {0}")]
    Singular(String),

    #[error("action failed verification: {0}")]
    Unverified(String),

    #[error("carrier mismatch")]
    CarrierMismatch,
}

pub type Result<T> = core::result::Result<T, Error>;
