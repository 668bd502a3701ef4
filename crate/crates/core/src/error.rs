use thiserror::Error;

use crate::localize::IsolationCase;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(&'static str),
    #[error("degree {degree} is below the minimum of {min}")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("constant coefficient is zero")]
    ZeroConstantTerm,
    #[error("polynomial does not have a single sign change (Cauchy form)")]
    NotCauchyType,
    #[error("polynomial does not have exactly one negative coefficient (Pellet form)")]
    NotPelletType,
    #[error("coefficient {index} is zero or singular")]
    CoefficientZero { index: usize },
    #[error("index {k} outside 1..={max}")]
    InvalidIndex { k: usize, max: usize },
    #[error("scale parameter must be positive, got {0}")]
    InvalidScale(f64),
    #[error("operation requires case a2_second, report has {0:?}")]
    WrongCase(IsolationCase),
    #[error("leading 2x2 block is not diagonalizable")]
    NotDiagonalizable,
    #[error("soundness check failed: {0}")]
    SoundnessViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
