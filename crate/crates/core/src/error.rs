use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("anchor set is empty")]
    EmptyAnchor,

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("entry count mismatch: header says {expected}, found {got}")]
    CountMismatch { expected: usize, got: usize },

    #[error("{what}: budget of {limit} exhausted")]
    BudgetExceeded { what: String, limit: u64 },

    #[error("{label}: no terminating value found up to cap {cap}")]
    NonTermination { label: String, cap: usize },

    #[error("no witness found with at most {cap} vertices")]
    WitnessNotFoundWithinCap { cap: usize },

    #[error("comparison undecided after {depth} refinement steps")]
    Undecided { depth: u32 },

    #[error("cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }

    pub(crate) fn budget(what: impl Into<String>, limit: u64) -> Self {
        Error::BudgetExceeded { what: what.into(), limit }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
