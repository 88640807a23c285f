use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("exact division failed: {0}")]
    NotDivisible(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements belong to different algebras")]
    ContextMismatch,
    #[error("generator index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("the Bernstein degree of the zero element is undefined")]
    DegreeOfZero,
    #[error("element is not central: {0}")]
    NotCentral(String),
    #[error("{0}")]
    DivisionFailure(#[from] ScalarError),
    #[error("endomorphism has not been validated")]
    Unvalidated,
    #[error("endomorphism does not preserve the defining relations: {0}")]
    InvalidEndomorphism(String),
    #[error("substituted degree {degree} exceeds the bound {bound}")]
    DegreeBound { degree: u64, bound: u64 },
    #[error("no exact root available: {0}")]
    NoExactRoot(String),
    #[error("no representation realizes this point: {0}")]
    InconsistentPoint(String),
    #[error("{0}")]
    Unsupported(String),
}
