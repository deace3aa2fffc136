use morse_core::Error;

/// Failure that ends the run. Exit status 2 for bad input, 3 for numerical
/// trouble.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if is_numerical(&e) {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

pub fn is_numerical(e: &Error) -> bool {
    matches!(e, Error::NoConvergence { .. } | Error::ZeroFunction | Error::GridTooCoarse { .. })
}

/// Short tag used in the status column of result rows.
pub fn status_of(e: &Error) -> &'static str {
    match e {
        Error::InvalidParameter { .. } => "InvalidParameter",
        Error::InvalidGrid(_) => "InvalidGrid",
        Error::NoSuchBoundState { .. } => "NoSuchBoundState",
        Error::NoConvergence { .. } => "NoConvergence",
        Error::GridTooCoarse { .. } => "GridTooCoarse",
        Error::ZeroFunction => "ZeroFunction",
        Error::GridMismatch => "GridMismatch",
        Error::LevelMismatch { .. } => "LevelMismatch",
        Error::NotNormalized { .. } => "NotNormalized",
        Error::ZeroDipole { .. } => "ZeroDipole",
    }
}
