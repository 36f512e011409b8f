use std::fmt;
use std::path::PathBuf;

use facimean_core::Error;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse {
        origin: String,
        line: usize,
        message: String,
    },
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    Core(Error),
}

impl CliError {
    /// 2 usage/parse, 3 domain/degenerate, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 2,
            CliError::Io { .. } => 4,
            CliError::Core(e) => match e {
                Error::Io { .. } => 4,
                Error::Json { .. } | Error::InvalidConfig(_) => 2,
                _ => 3,
            },
        }
    }

    /// Stable name of the failure, printed ahead of the message.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "UsageError",
            CliError::Parse { .. } => "ParseError",
            CliError::Io { .. } => "IoError",
            CliError::Core(e) => match e {
                Error::TooFewObservations { .. } => "TooFewObservations",
                Error::DegenerateSample(_) => "DegenerateSample",
                Error::DegenerateWeights => "DegenerateWeights",
                Error::ZeroTimeIndex { .. } => "ZeroTimeIndex",
                Error::DegenerateWeightedCenter => "DegenerateWeightedCenter",
                Error::Domain(_) => "DomainError",
                Error::LengthMismatch { .. } => "LengthMismatch",
                Error::UnsupportedDesign(_) => "UnsupportedDesign",
                Error::InvalidConfig(_) | Error::Json { .. } => "ConfigError",
                Error::Io { .. } => "IoError",
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Parse {
                origin,
                line,
                message,
            } => write!(f, "{origin}:{line}: {message}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}
