use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} qubits, got {found}")]
    Dimension { expected: usize, found: usize },

    #[error("parse error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },

    #[error("operators {0} and {1} do not commute")]
    NonCommuting(usize, usize),

    #[error("-I lies in the span of the generators")]
    MinusIdentity,

    #[error("operator {0} is not Hermitian (imaginary phase)")]
    NonHermitian(usize),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("index {index} out of range for {len} qubits")]
    OutOfRange { index: usize, len: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: Option<usize>, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
