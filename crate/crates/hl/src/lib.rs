//! Identity harness, report formats and the `hl` command-line tool built on
//! [`hl_core`].

pub mod cli;
pub mod report;
pub mod verify;

pub use hl_core;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hl_core::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 2 for anything the caller got wrong, 1 for numerical failures.
    pub fn exit_code(&self) -> i32 {
        use hl_core::Error as E;
        match self {
            CliError::Usage(_) | CliError::Json(_) => 2,
            CliError::Core(E::Domain(_) | E::Pole { .. } | E::Branch(_) | E::DegenerateOrder(_) | E::InvalidControl(_) | E::Contour(_)) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
