use thiserror::Error;

/// Command failures, split by the exit code they map to: 2 for unreadable or
/// invalid input, 3 for names the input file does not define. Property
/// failures in `verify` exit 1 without going through this type.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("unknown name {0:?} (not defined in the input file)")]
    UnknownName(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::UnknownName(_) => 3,
        }
    }
}

impl From<superprob::Error> for CliError {
    fn from(err: superprob::Error) -> Self {
        CliError::Input(err.to_string())
    }
}
