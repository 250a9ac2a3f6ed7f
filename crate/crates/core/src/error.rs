//! Error type shared by all modules.
//!
//! Variants fall into two groups: violations of a theorem hypothesis
//! (threshold not met, polarization not ample, ...) and structural
//! problems with the input (dimension mismatch, degenerate pairing,
//! ...). Every variant carries a stable machine-readable [`code`]
//! suitable for serialized error reports.
//!
//! [`code`]: Error::code

use thiserror::Error;

use crate::picard::Case;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `make_surface` called with a `k` outside the legal range of the case.
    #[error("case {case} requires k >= {min}, got k = {k}")]
    InvalidSurface { case: Case, k: i64, min: i64 },

    /// The nef-cone theorem hypothesis fails for these parameters, so the
    /// cone of the Hilbert scheme is not certified by this crate.
    #[error("nef threshold not met for case {case}, k = {k}, n = {n}: requires {hypothesis}")]
    ThresholdNotMet {
        case: Case,
        k: i64,
        n: i64,
        hypothesis: String,
    },

    /// No `n` satisfies the nef threshold for these parameters.
    #[error("nef threshold unattainable for case {case} with k = {k}: requires k >= 3")]
    ThresholdUnattainable { case: Case, k: i64 },

    /// The candidate Gieseker wall cannot be certified as largest because
    /// its radius drops below the rank-one lower bound.
    #[error(
        "Gieseker wall not certified for k = {k}, n = {n}: requires 8(n - k) >= k, i.e. n >= 9k/8"
    )]
    BelowThreshold { k: i64, n: i64 },

    /// The polarization of a stability slice must be ample, i.e. pair
    /// strictly positively with every effective class.
    #[error("polarization is not ample: H must pair strictly positively with w1 and w2")]
    NotAmple,

    /// Slope of a rank-zero class is undefined.
    #[error("slope undefined: class has rank zero")]
    ZeroRank,

    /// Two classes of equal slope bound no numerical wall.
    #[error("no wall: the two classes have equal slope")]
    EqualSlopes,

    /// The tilt slope is undefined where the central charge is real.
    #[error("tilt slope undefined: Im Z = 0 (vertical wall)")]
    VerticalWall,

    /// Points of the stability half-plane have t > 0.
    #[error("stability parameter t^2 must be positive, got {got}")]
    NonPositiveTSquared { got: String },

    /// A wall computation degenerated (`L.H = 0`).
    #[error("degenerate wall: L.H = 0")]
    DegenerateWall,

    /// Cones are supported in ambient dimension 2 and 3 only.
    #[error("unsupported cone dimension {dim}: expected 2 or 3")]
    UnsupportedDimension { dim: usize },

    /// A vector's length does not match the ambient dimension.
    #[error("dimension mismatch: expected vectors of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Generator lists are capped at 6 rays.
    #[error("too many rays: at most {max} supported, got {got}")]
    TooManyRays { max: usize, got: usize },

    /// The bilinear pairing is degenerate, so duality is undefined.
    #[error("degenerate pairing: the Gram matrix is singular")]
    DegeneratePairing,

    /// The dual cone contains a line and has no extremal-ray description.
    #[error("dual cone is not pointed: the input rays do not span the ambient space")]
    NotPointed,

    /// Catch-all for an operation-specific precondition.
    #[error("precondition violated: requires {requirement}, got {got}")]
    Precondition { requirement: String, got: String },
}

impl Error {
    /// Stable machine-readable identifier for this error.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidSurface { .. } => "invalid_surface",
            Error::ThresholdNotMet { .. } => "threshold_not_met",
            Error::ThresholdUnattainable { .. } => "threshold_unattainable",
            Error::BelowThreshold { .. } => "below_threshold",
            Error::NotAmple => "not_ample",
            Error::ZeroRank => "zero_rank",
            Error::EqualSlopes => "equal_slopes",
            Error::VerticalWall => "vertical_wall",
            Error::NonPositiveTSquared { .. } => "nonpositive_t_squared",
            Error::DegenerateWall => "degenerate_wall",
            Error::UnsupportedDimension { .. } => "unsupported_dimension",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::TooManyRays { .. } => "too_many_rays",
            Error::DegeneratePairing => "degenerate_pairing",
            Error::NotPointed => "not_pointed",
            Error::Precondition { .. } => "precondition",
        }
    }

    /// The violated hypothesis in symbolic form, when the error is the
    /// failure of a theorem hypothesis rather than a structural problem.
    pub fn hypothesis(&self) -> Option<String> {
        match self {
            Error::InvalidSurface { min, .. } => Some(format!("k >= {min}")),
            Error::ThresholdNotMet { hypothesis, .. } => Some(hypothesis.clone()),
            Error::ThresholdUnattainable { .. } => Some("k >= 3".to_string()),
            Error::BelowThreshold { .. } => Some("8(n - k) >= k".to_string()),
            Error::Precondition { requirement, .. } => Some(requirement.clone()),
            _ => None,
        }
    }
}
