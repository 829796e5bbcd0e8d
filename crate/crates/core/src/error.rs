use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("lattice basis is degenerate (zero determinant)")]
    DegenerateLattice,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("translate list is empty")]
    EmptyTranslates,
    #[error("periodic sets have different period bases")]
    LatticeMismatch,
    #[error("ell must be at least 1")]
    InvalidEll,
    #[error("unknown tiling identifier {0:?}")]
    UnknownTiling(String),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("falsification: {0}")]
    Falsified(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}
