use taukit::algebra::AlgebraError;
use taukit::repmod::ModuleError;
use taukit::splitext::SplitError;
use taukit::tautilt::TauError;

/// Exit codes are part of the interface.
pub mod code {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const HYPOTHESIS_FAILED: i32 = 2;
    pub const INPUT: i32 = 3;
    pub const LIMIT: i32 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Limit(String),
    #[error("{0}")]
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => code::INPUT,
            CliError::Limit(_) => code::LIMIT,
            CliError::CheckFailed(_) => code::CHECK_FAILED,
        }
    }
}

impl From<TauError> for CliError {
    fn from(e: TauError) -> Self {
        match e {
            TauError::LimitExceeded { .. } => CliError::Limit(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<SplitError> for CliError {
    fn from(e: SplitError) -> Self {
        match e {
            SplitError::Tau(t) => t.into(),
            SplitError::NotAMorphism(_) | SplitError::NotSplit(_) => CliError::CheckFailed(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}
