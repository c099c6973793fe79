use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FkaError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parameters violate a+2<k>+N>2 (got D = {0})")]
    NonPositiveD(f64),
    #[error("divergent integral: {0}")]
    Divergent(String),
    #[error("tail tolerance violated: {0}")]
    Tail(String),
    #[error("oscillation budget exceeded: {needed} nodes needed, budget {budget}")]
    Oscillation { needed: usize, budget: usize },
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("pole: sinh z = 0")]
    Pole,
    #[error("inversion formula unavailable for a = {0}")]
    UnsupportedA(f64),
    #[error("constraint violated: {0}")]
    Constraint(String),
    #[error("inadmissible: {0}")]
    Inadmissible(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("family too small: {got} profiles, need at least {need}")]
    FamilyTooSmall { got: usize, need: usize },
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, FkaError>;
