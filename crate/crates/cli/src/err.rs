use std::fmt;

/// Failures after argument parsing, split by exit code: input that does not
/// parse (3) versus input that parses but is mathematically invalid (4).
/// Usage errors exit with 2 via clap before any of this runs.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Domain(orbitcover_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 3,
            CliError::Domain(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Parse(msg) => write!(f, "{msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<orbitcover_core::Error> for CliError {
    fn from(e: orbitcover_core::Error) -> Self {
        CliError::Domain(e)
    }
}
