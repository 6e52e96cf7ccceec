use crate::algebra::AlgebraError;
use crate::sigcore::SigError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Signature(#[from] SigError),
    #[error("empty input system")]
    EmptyInput,
    #[error("generator {index} is not homogeneous")]
    NotHomogeneous { index: usize },
    #[error("store size cap of {0} entries exceeded")]
    StoreCapExceeded(usize),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("{0} needs n >= {1}")]
    BenchmarkSize(&'static str, usize),
}
