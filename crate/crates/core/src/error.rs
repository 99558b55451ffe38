//! Error taxonomy shared by every module in the crate.

use thiserror::Error;

/// Typed failures surfaced by the library.
///
/// Messages start with a stable kebab-case tag so callers (and the CLI) can
/// classify failures without matching on free-form text.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An operation required at least one observation.
    #[error("empty-sample")]
    EmptySample,
    /// A non-finite value (NaN or infinity) reached a constructor.
    #[error("non-finite-input: {context}")]
    NonFiniteInput { context: String },
    /// A query vector did not match the data dimension.
    #[error("dimension-mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// Two paired inputs differ in length.
    #[error("length-mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    /// Fewer observations than the operation can work with.
    #[error("insufficient-points: need {need}, have {have}")]
    InsufficientPoints { need: usize, have: usize },
    /// The median radius at the reference centre is zero, so no ratio exists.
    #[error("degenerate-scale")]
    DegenerateScale,
    /// The sample covariance is numerically singular.
    #[error("singular-covariance")]
    SingularCovariance,
    /// A depth ratio exceeded 1 by more than the optimizer-tolerance clamp.
    #[error("center-not-minimal: ratio {ratio} exceeds 1 beyond tolerance")]
    CenterNotMinimal { ratio: f64 },
    /// Every sampled projection direction had zero scale.
    #[error("all-directions-degenerate")]
    AllDirectionsDegenerate,
    /// A correlation input had zero variance.
    #[error("constant-input")]
    ConstantInput,
    /// Weights summed to zero, so no weighted average exists.
    #[error("zero-total-weight")]
    ZeroTotalWeight,
    /// A parameter was outside its documented domain.
    #[error("invalid-parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
