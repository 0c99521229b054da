//! Structured errors for domain violations and numerical failures.
//!
//! Leaving the physical region `1 + a.p/E_p > 0` is a modeling error, not a
//! numerical one, so the map and residual operations report it instead of
//! clamping.

use crate::kinematics::GeometryKind;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The square-root argument `1 + a.p/E_p` of the nonlinear map is not
    /// positive at the given momentum.
    #[error("momentum outside the physical domain: deformation denominator {denominator} <= 0")]
    DomainViolation { denominator: f64 },

    /// The Magueijo-Smolin denominator `1 - E/E_p` vanishes at the given energy.
    #[error("Magueijo-Smolin invariant evaluated at its pole E = E_p")]
    MsPole,

    /// Magueijo-Smolin branches degenerate: the quadratic's leading
    /// coefficient `1 - eps^2` is not positive.
    #[error("Magueijo-Smolin spectrum degenerate: eps = {eps} >= 1")]
    MsDegenerate { eps: f64 },

    /// Guard for a negative radicand in a branch formula. Unreachable for
    /// valid parameters; kept as a checked error rather than a NaN.
    #[error("negative discriminant in branch formula")]
    NegativeDiscriminant,

    /// Operation invoked for a geometry it is not defined for.
    #[error("operation defined for {expected}, got {got}")]
    WrongGeometry {
        expected: &'static str,
        got: GeometryKind,
    },

    /// Both covector components vanish; no causal class exists.
    #[error("null covector (0, 0) has no causal classification")]
    NullCovector,

    /// Hermite degree above the supported cap.
    #[error("Hermite degree {degree} exceeds supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    /// A special-function evaluation overflowed the floating-point range.
    #[error("value out of floating-point range in {context}")]
    RangeOverflow { context: &'static str },

    /// Truncated basis dimension below the minimum of 2.
    #[error("basis dimension {dim} too small (need >= 2)")]
    InvalidDimension { dim: usize },

    /// Invalid argument outside the physics domain checks.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A matrix that must be invertible (similarity map, metric) is singular
    /// at working precision.
    #[error("singular matrix: {0}")]
    SingularMatrix(&'static str),

    /// An iterative routine failed to converge.
    #[error("{what} did not converge within {iterations} iterations")]
    NonConvergence { what: &'static str, iterations: usize },
}

pub(crate) fn invalid_arg(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
