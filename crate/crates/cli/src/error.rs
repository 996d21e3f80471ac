use std::fmt;

/// Exit codes: computed verdicts, negative ones included, exit 0.
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Io(String, std::io::Error),
    Spec(String),
    Options(String),
    Core(qflop_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(qflop_core::Error::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Core(qflop_core::Error::Inconsistent(_)) => EXIT_INTERNAL,
            _ => EXIT_INVALID,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "cannot read {p}: {e}"),
            CliError::Spec(m) => write!(f, "invalid ring document: {m}"),
            CliError::Options(m) => write!(f, "invalid options: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<qflop_core::Error> for CliError {
    fn from(e: qflop_core::Error) -> Self {
        CliError::Core(e)
    }
}
