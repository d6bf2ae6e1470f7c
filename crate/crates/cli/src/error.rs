use thiserror::Error;

use tamari_core::Error as CoreError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;
pub const EXIT_INVALID: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("check failed: {0}")]
    Failed(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                CoreError::CapExceeded { .. } => EXIT_CAP,
                CoreError::InvalidPath(_)
                | CoreError::InvalidLabelling(_)
                | CoreError::InvalidParkingFunction(_)
                | CoreError::NotInPoset(_)
                | CoreError::Incomparable { .. }
                | CoreError::InvalidPointed(_)
                | CoreError::EmptyInterval
                | CoreError::RepeatedPoints => EXIT_INVALID,
                _ => EXIT_MISMATCH,
            },
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Failed(_) => EXIT_MISMATCH,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => EXIT_IO,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
