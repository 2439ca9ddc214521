use thiserror::Error;

use crate::arith::Int;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library reports. Input errors name the violated
/// precondition; `Inconsistent` marks a disagreement between two routes
/// that must agree, which is a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd({0},{1}) ≠ 1")]
    NotCoprime(Int, Int),

    #[error("q < 2 (got q={0})")]
    WrappingTooSmall(Int),

    #[error("b ≤ 0 (got b={0})")]
    NonPositiveModulus(Int),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("slope (0,0) is not a slope")]
    ZeroSlope,

    #[error("slope {0}/0 is ∞; no surgery operation accepts it")]
    InfiniteSlope(Int),

    #[error("m = 0: {0}")]
    ZeroSurgery(&'static str),

    #[error("unsupported orientation normalization: m < 0 (got m={0})")]
    NegativeSurgery(Int),

    #[error("f(1) ∉ {{+1,−1}} (got f(1)={0})")]
    NotUnitAtOne(Int),

    #[error("no symmetrizing shift exists")]
    NotSymmetrizable,

    #[error("non-normalized input: {0}")]
    NotNormalized(&'static str),

    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("opaque companion `{name}` lacks {what}")]
    MissingOpaqueData { name: String, what: &'static str },

    #[error(
        "trivial companion: K is the unknot, so K_{{p,q}} is a torus knot; use check-iterated"
    )]
    TrivialCompanion,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported Seifert piece shape: {0}")]
    UnsupportedShape(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

impl Error {
    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// True for errors caused by the caller's input (as opposed to internal bugs).
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Inconsistent(_))
    }
}
