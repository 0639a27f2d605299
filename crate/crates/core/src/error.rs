use crate::profile::Candidate;
use thiserror::Error;

/// Errors raised by profile construction, voting methods, checkers and I/O.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown candidate {0}")]
    UnknownCandidate(Candidate),

    #[error("invalid ballot: {0}")]
    InvalidBallot(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("candidate sets differ")]
    CandidateMismatch,

    #[error("invalid margin graph: {0}")]
    InvalidMarginGraph(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("cycle enumeration is limited to {cap} candidates, got {k}")]
    DirectCapExceeded { k: usize, cap: usize },

    #[error("ranked pairs search exceeded {budget} nodes; winners found so far: {partial:?}")]
    BudgetExceeded { budget: u64, partial: Vec<Candidate> },

    #[error("{method} is not supported here: {reason}")]
    Unsupported { method: String, reason: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: unsupported format: {message}")]
    UnsupportedFormat { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors that describe bad input rather than a limit of the implementation.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::DirectCapExceeded { .. } | Error::BudgetExceeded { .. } | Error::Unsupported { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
