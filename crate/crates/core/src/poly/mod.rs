//! Exact sparse multivariate polynomials and the linear algebra around them.

pub mod integer;
pub mod linalg;
pub mod matrix;
pub mod monomial;
pub mod polynomial;
pub mod ring;
pub mod text;
pub mod vars;

use alloc::string::String;

use thiserror::Error;

pub use integer::Integer;
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use polynomial::{Polynomial, TermAccumulator};
pub use ring::{Field, IntegerRing, PrimeField, RationalField, Ring, RingTag, QQ, ZZ};
pub use text::{parse_polynomial, ParseError, PriorityDisplay};
pub use vars::VariableSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials live over different coefficient rings")]
    RingMismatch,
    #[error("polynomials live over different variable sets")]
    VariableMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` listed twice")]
    DuplicateVariable(String),
    #[error("`{0}` is not a valid variable name")]
    BadVariableName(String),
    #[error("monomial uses `{0}`, which is outside the extraction subset")]
    OutsideSubset(String),
    #[error("intermediate result exceeded the budget of {limit} terms")]
    BudgetExceeded { limit: usize },
    #[error("matrix is not square ({rows} rows, row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant of dimension {0} is beyond the supported bound")]
    TooLarge(usize),
    #[error("a coefficient has no image modulo {0}")]
    NotReducible(u64),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
