use std::path::PathBuf;

/// Errors surfaced by the command-line front end.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] insdel_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for malformed input, 3 for domain errors, 4 for capacity errors.
    pub fn exit_code(&self) -> i32 {
        use insdel_core::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::Capacity { .. } => 4,
                E::Domain(_)
                | E::OutOfRegime(_)
                | E::Infeasible(_)
                | E::InvalidRadius { .. }
                | E::UndefinedMinDistance
                | E::UnsupportedField(_)
                | E::NotACodeword => 3,
                _ => 2,
            },
            CliError::Io { .. } | CliError::Json { .. } | CliError::Usage(_) => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
