use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("incompatible coefficient rings: torsion {0} vs {1}")]
    TorsionMismatch(u64, u64),
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("sign convention mismatch")]
    ConventionMismatch,
    #[error("composition position {position} out of range for arity {arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("{0:?} is not a permutation of 1..{n}", n = .0.len())]
    InvalidPermutation(Vec<usize>),
    #[error("element is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("invalid basis element: {0}")]
    InvalidBasis(String),
    #[error("invalid request: {0}")]
    InvalidRequest(String),
}
