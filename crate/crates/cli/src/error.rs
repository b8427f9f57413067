use std::io;

use sqcolor::color::ColorError;
use sqcolor::discharge::DischargeError;
use sqcolor::game::GameError;
use sqcolor::generators::GenError;
use sqcolor::io::FormatError;
use sqcolor::kernel::KernelError;
use sqcolor::reduction::ReductionError;
use sqcolor::twocliques::TwoCliqueError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{source_name}: {error}")]
    Format { source_name: String, error: FormatError },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("size guard: {0} (see --force)")]
    Guard(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) | CliError::Format { .. } | CliError::Io(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl From<ColorError> for CliError {
    fn from(e: ColorError) -> Self {
        match e {
            ColorError::TooLarge { .. } => CliError::Guard(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        match e {
            GameError::TooLarge { .. } => CliError::Guard(e.to_string()),
            GameError::Color(c) => c.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<KernelError> for CliError {
    fn from(e: KernelError) -> Self {
        match e {
            KernelError::TooLarge { .. } => CliError::Guard(e.to_string()),
            KernelError::BadArc(..) => CliError::Usage(e.to_string()),
            KernelError::PreconditionViolated(_) => CliError::Domain(e.to_string()),
        }
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<DischargeError> for CliError {
    fn from(e: DischargeError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<TwoCliqueError> for CliError {
    fn from(e: TwoCliqueError) -> Self {
        CliError::Domain(e.to_string())
    }
}
