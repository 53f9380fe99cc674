use std::path::PathBuf;

use lomat_core::Error;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_PRECONDITION: u8 = 65;
pub const EXIT_VERIFICATION: u8 = 66;
pub const EXIT_EXHAUSTED: u8 = 69;
pub const EXIT_IO: u8 = 74;

/// Failures that stop a verb before a report can be produced.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },

    #[error("cannot write {path}: {source}")]
    Output { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Input { .. } => EXIT_USAGE,
            CliError::Output { .. } => EXIT_IO,
        }
    }
}

/// Exit status for a core error surfaced by a verb.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::DimensionMismatch { .. } | Error::IndexOutOfRange { .. } => EXIT_USAGE,
        Error::VerificationFailed(_) | Error::InternalCheckFailed(_) => EXIT_VERIFICATION,
        Error::ResourceExhausted(_) => EXIT_EXHAUSTED,
        Error::Domain(_)
        | Error::NotAUnit { .. }
        | Error::NegativeEntry { .. }
        | Error::NotInvertible(_)
        | Error::NotABasis
        | Error::PreconditionFailed(_)
        | Error::IdentityNotPositive { .. }
        | Error::AssertionFailed(_)
        | Error::UnrecognizedD => EXIT_PRECONDITION,
    }
}

/// Variant name, as written to reports.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "Domain",
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::Parse(_) => "Parse",
        Error::NotAUnit { .. } => "NotAUnit",
        Error::NegativeEntry { .. } => "NegativeEntry",
        Error::NotInvertible(_) => "NotInvertible",
        Error::NotABasis => "NotABasis",
        Error::PreconditionFailed(_) => "PreconditionFailed",
        Error::IdentityNotPositive { .. } => "IdentityNotPositive",
        Error::AssertionFailed(_) => "AssertionFailed",
        Error::UnrecognizedD => "UnrecognizedD",
        Error::VerificationFailed(_) => "VerificationFailed",
        Error::InternalCheckFailed(_) => "InternalCheckFailed",
        Error::ResourceExhausted(_) => "ResourceExhausted",
    }
}
