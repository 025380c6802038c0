use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("zero input")]
    ZeroInput,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("no polynomial solution within degree bound {0}")]
    NoPolynomialSolution(u32),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid marks: {0}")]
    InvalidMarks(String),
    #[error("invalid eigenvalue: {0}")]
    InvalidEigenvalue(String),
    #[error("invalid transpose: {0}")]
    InvalidTranspose(String),
    #[error("{0} is self-transpose")]
    SelfTranspose(String),
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("bad ordering: {0}")]
    BadOrdering(String),
    #[error("elimination left a non-square relation matrix ({rows}x{cols})")]
    NonSquareResult { rows: usize, cols: usize },
    #[error("determinant is not a unit times a z-monomial")]
    NotZMonomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
