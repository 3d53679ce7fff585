//! Error type shared across the crate.
//!
//! The CLI maps these onto process exit codes: input and expression problems
//! exit 2, guardrail refusals exit 3, internal invariant violations exit 4.

use std::fmt;

#[derive(Debug)]
pub enum Error {
    /// The modulus handed to [`crate::linalg::PrimeModulus::new`] failed the
    /// primality check.
    NotPrime(u64),
    /// Inversion of the zero scalar.
    DivisionByZero,
    /// Operands disagree on ring, degree, or matrix dimensions.
    ShapeMismatch(String),
    /// Expression text could not be parsed; `pos` is a byte offset into the
    /// input.
    Parse { pos: usize, msg: String },
    /// A parsed expression mixes monomials of different total degrees.
    DegreeMixture { degrees: Vec<u64> },
    /// A documented operation precondition does not hold for these arguments.
    Precondition(String),
    /// The requested computation exceeds the configured size limit.
    /// `estimate` is the predicted working-set size that tripped the check.
    Guardrail { estimate: u128, limit: u128, what: String },
    /// An internal invariant failed; always a bug in this crate.
    Internal(String),
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::DivisionByZero => write!(f, "division by zero in F_p"),
            Error::ShapeMismatch(msg) => write!(f, "shape mismatch: {msg}"),
            Error::Parse { pos, msg } => write!(f, "parse error at byte {pos}: {msg}"),
            Error::DegreeMixture { degrees } => {
                write!(f, "expression is not homogeneous: term degrees {degrees:?}")
            }
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Guardrail { estimate, limit, what } => write!(
                f,
                "refusing {what}: predicted size {estimate} exceeds limit {limit} \
                 (pass --force to override)"
            ),
            Error::Internal(msg) => write!(f, "internal invariant violated: {msg}"),
            Error::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
