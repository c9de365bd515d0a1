use partlab_core::{Error, SetSpecError};
use thiserror::Error;

/// Failures mapped onto process exit codes.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed arguments or input text; exit 1.
    #[error("{0}")]
    Usage(String),
    /// Well-formed input describing an invalid set; exit 2.
    #[error("{0}")]
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Semantic(_) => 2,
        }
    }
}

impl From<SetSpecError> for CliError {
    fn from(e: SetSpecError) -> Self {
        match e {
            SetSpecError::Syntax { .. } | SetSpecError::Io { .. } | SetSpecError::InvalidEpsilon(_) => {
                CliError::Usage(e.to_string())
            }
            _ => CliError::Semantic(e.to_string()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SetSpec(s) => s.into(),
            Error::NotCoprime(_) | Error::NoPositiveElement | Error::SetExhausted(_) => {
                CliError::Semantic(e.to_string())
            }
            Error::BruteForceCap { .. } | Error::Overflow(_) | Error::Domain(_) => {
                CliError::Usage(e.to_string())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let syntax = SetSpecError::Syntax { position: 0, message: "x".into() };
        assert_eq!(CliError::from(syntax).exit_code(), 1);
        assert_eq!(CliError::from(SetSpecError::ZeroInPartSet).exit_code(), 2);
        assert_eq!(CliError::from(Error::NotCoprime(2)).exit_code(), 2);
        assert_eq!(CliError::from(Error::Domain("n".into())).exit_code(), 1);
        assert_eq!(CliError::from(Error::SetSpec(SetSpecError::EmptyFinite)).exit_code(), 2);
    }
}
