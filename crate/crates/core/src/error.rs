use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {value} ({reason})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no unique steady state: rate matrix is singular after trace substitution")]
    NoUniqueSteadyState,

    #[error("steady-state population {index} = {value:e} is below the roundoff floor")]
    NegativePopulation { index: usize, value: f64 },

    #[error("need at least {required} sweep points, got {got}")]
    InsufficientGrid { required: usize, got: usize },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("no sign change of {quantity} on [{lo}, {hi}]")]
    Bracket {
        quantity: &'static str,
        lo: f64,
        hi: f64,
    },

    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    #[error("solver failed at T_M = {t_m}: {source}")]
    AtTemperature {
        t_m: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("{origin}:{line}: {message}")]
    Config {
        origin: String,
        line: usize,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Process exit code used by the `qtt` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameter { .. }
            | Error::InvalidGrid(_)
            | Error::InsufficientGrid { .. }
            | Error::UnsupportedConfiguration(_)
            | Error::Config { .. } => 2,
            Error::Domain(_)
            | Error::NoUniqueSteadyState
            | Error::NegativePopulation { .. }
            | Error::Bracket { .. } => 3,
            Error::AtTemperature { source, .. } => source.exit_code(),
            Error::Io { .. } => 4,
        }
    }

    pub(crate) fn config(
        origin: impl Into<String>,
        line: usize,
        message: impl Into<String>,
    ) -> Self {
        Error::Config {
            origin: origin.into(),
            line,
            message: message.into(),
        }
    }
}
