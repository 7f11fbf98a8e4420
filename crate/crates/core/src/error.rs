use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("group element is {distance:.3e} from the identity, outside the principal logarithm region")]
    FarFromIdentity { distance: f64 },

    #[error("group spec mismatch: {left} vs {right}")]
    SpecMismatch { left: String, right: String },

    #[error("invalid group element: {0}")]
    InvalidElement(String),

    #[error("invalid algebra element: {0}")]
    InvalidAlgebra(String),

    #[error("path endpoints do not match: end of first operand {end:?}, start of second {start:?}")]
    EndpointMismatch { end: Vec<f64>, start: Vec<f64> },

    #[error("reparametrization is not monotone: {0}")]
    NotMonotone(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },

    #[error("basepoint mismatch: expected {expected:?}, got {got:?}")]
    BasepointMismatch { expected: Vec<f64>, got: Vec<f64> },

    #[error("the analytic backend needs an abelian group, got {0}")]
    NonAbelian(String),

    #[error("finite-difference step too large: {0}")]
    StepTooLarge(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
