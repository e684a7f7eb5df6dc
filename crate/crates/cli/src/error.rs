use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad config, unknown key or precondition failure; exit code 2.
    #[error("invalid config: {0}")]
    Validation(String),
    /// Failure while running a valid config; exit code 1.
    #[error("runtime error: {0}")]
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Validation(_) => 2,
            Self::Runtime(_) => 1,
        }
    }
}

impl From<harmonia::Error> for CliError {
    fn from(e: harmonia::Error) -> Self {
        Self::Runtime(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Runtime(e.to_string())
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Wrap a core error raised while checking a config.
pub fn invalid(e: harmonia::Error) -> CliError {
    CliError::Validation(e.to_string())
}
