use std::fmt;
use std::process::ExitCode;

use hypermap_core::perm::PermError;
use hypermap_core::Error;

/// Exit status classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verification = 1,
    BadParameters = 2,
    Cap = 3,
    Parse = 4,
    Precondition = 5,
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn new(status: Status, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }

    pub fn bad(message: impl Into<String>) -> Self {
        Self::new(Status::BadParameters, message)
    }

    pub fn parse(message: impl Into<String>) -> Self {
        Self::new(Status::Parse, message)
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.status as u8)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::NotPrime(_) | Error::BadDivisor { .. } | Error::SpecViolation(_) | Error::ParityMismatch { .. } => {
                Status::BadParameters
            }
            Error::CapExceeded { .. } => Status::Cap,
            Error::Perm(_) | Error::NoGenerators | Error::BadIndex(_) => Status::Parse,
            Error::NotInvolution { .. } | Error::NotGenerating { .. } => Status::Precondition,
            Error::Verification(_) | Error::Internal(_) => Status::Verification,
        };
        Self::new(status, e.to_string())
    }
}

impl From<PermError> for Failure {
    fn from(e: PermError) -> Self {
        Self::parse(e.to_string())
    }
}

pub type CliResult<T> = Result<T, Failure>;
