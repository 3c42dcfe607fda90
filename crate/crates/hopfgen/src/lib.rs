//! File formats, command implementations and the self-test suite behind the
//! `hopfgen` binary. The algebra lives in [`hopfgen_core`]; this crate only
//! adds IO on top of it.

pub mod cli;
pub mod commands;
pub mod formats;
pub mod select;
pub mod selftest;

use hopfgen_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 2 for bad input, 1 for a computation that could not be completed.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Format(_) => 2,
            CliError::Core(e) => match e {
                Error::Parse { .. }
                | Error::UnknownLabel(_)
                | Error::GroupTooLarge { .. }
                | Error::Range(_)
                | Error::InvalidGroup(_)
                | Error::InvalidAction(_)
                | Error::Datum(_)
                | Error::InvalidStructure(_)
                | Error::UnsupportedFamily(_)
                | Error::UnsupportedKind(_)
                | Error::WordTooLong { .. }
                | Error::NotDegreeZero(_)
                | Error::OutOfLocalization(_)
                | Error::FieldMismatch(..) => 2,
                _ => 1,
            },
        }
    }
}
