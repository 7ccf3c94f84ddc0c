//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by invariant computations and exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Data that violates a structural identity (Noether, signature
    /// integrality, cross-checks between two computation routes).
    #[error("inconsistent invariants: {0}")]
    Inconsistent(String),

    /// The operation's geometric hypotheses are not satisfied, so no
    /// conclusion can be drawn.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    /// Requested Laurent pole order does not match the denominator.
    #[error("pole order mismatch: {0}")]
    PoleOrderMismatch(String),

    /// A series or prefactor failed the normalization required by the
    /// operation (constant term, residual pi power, prefactor mismatch).
    #[error("normalization error: {0}")]
    Normalization(String),

    /// Manifold outside the classifiable range (not simply connected, b2 = 0).
    #[error("not classifiable: {0}")]
    NotClassifiable(String),

    /// Curve data with negative genus; no smooth representative exists.
    #[error("not smoothable: {0}")]
    NotSmoothable(String),

    /// A derived quantity left the fixed-width integer range.
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
