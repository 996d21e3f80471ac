use alloc::string::String;
use core::fmt;

/// Every failure the algebra layer can report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands live in rings with different variable counts.
    VariableMismatch { left: usize, right: usize },
    /// An exponent left the `u32` range.
    ExponentOverflow,
    /// Text did not match the polynomial grammar.
    Parse { position: usize, message: String },
    /// A relation or element is not homogeneous for the weights.
    Inhomogeneous { what: String, degrees: String },
    /// A step or basis-size cap was hit.
    BudgetExceeded { resource: &'static str, limit: u64 },
    /// A precondition on the input failed.
    InvalidInput(String),
    /// A computed object contradicts a proven identity.
    Inconsistent(String),
    /// The Hilbert-basis enumeration cap is below the proven bound.
    EnumerationCap { cap: u32, needed: u32 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VariableMismatch { left, right } => {
                write!(f, "variable-list mismatch: {left} vs {right} variables")
            }
            Error::ExponentOverflow => write!(f, "exponent overflow"),
            Error::Parse { position, message } => {
                write!(f, "parse error at byte {position}: {message}")
            }
            Error::Inhomogeneous { what, degrees } => {
                write!(f, "inhomogeneous {what}: term degrees {degrees}")
            }
            Error::BudgetExceeded { resource, limit } => {
                write!(f, "budget exceeded: {resource} limit {limit}")
            }
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::Inconsistent(m) => write!(f, "internal consistency failure: {m}"),
            Error::EnumerationCap { cap, needed } => {
                write!(f, "enumeration cap {cap} below required bound {needed}")
            }
        }
    }
}

impl core::error::Error for Error {}
