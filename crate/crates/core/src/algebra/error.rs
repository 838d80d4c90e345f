use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands use different field modes")]
    ModeMismatch,
    #[error("generator {0} only exists for inhomogeneous fields")]
    InhomogeneousGenerator(String),
    #[error("unsupported in the inhomogeneous dialect: {0}")]
    UnsupportedInhomogeneous(String),
    #[error("the potential V can only be multiplied by scalars; commutators go through commute_with_v")]
    PotentialProduct,
    #[error("malformed expression: {0}")]
    Malformed(String),
}
