use eidos_core::canon::CanonError;
use eidos_core::rational::RationalParseError;
use eidos_core::{LedgerError, MeasureError, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Rational(#[from] RationalParseError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Measure(#[from] MeasureError),
    #[error(transparent)]
    Ledger(#[from] LedgerError),
    #[error("{0}")]
    Usage(String),
    #[error("scenario: {0}")]
    Scenario(String),
    #[error("step `{step}`: expected {field} = {expected}, found {found}")]
    Expectation {
        step: String,
        field: String,
        expected: String,
        found: String,
    },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Rational(_) => "rational",
            CliError::Canon(_) => "canon",
            CliError::Measure(_) => "measure",
            CliError::Ledger(_) => "ledger",
            CliError::Usage(_) => "usage",
            CliError::Scenario(_) => "scenario",
            CliError::Expectation { .. } => "expectation",
            CliError::Io { .. } => "io",
        }
    }
}
