use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("side mismatch: {0}")]
    SideMismatch(String),
    #[error("structure constants are not associative at (e_{i} e_{j}) e_{k}")]
    NonAssociative { i: usize, j: usize, k: usize },
    #[error("unit vector fails the unit law at basis element e_{0}")]
    NotUnital(usize),
    #[error("d^{succ} d^{degree} != 0")]
    NotAComplex { degree: i64, succ: i64 },
    #[error("not a chain map: commutativity fails in degree {0}")]
    NotAChainMap(i64),
    #[error("map is not a module homomorphism: fails for basis element e_{0}")]
    NotLinear(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
