use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument is not finite: {0}")]
    NonFinite(f64),

    #[error("invalid state index: {0}")]
    Index(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("Airy zero {n} did not converge (last iterate {last})")]
    ZeroConvergence { n: u64, last: f64 },

    #[error("quadrature did not converge: error estimate {estimate:e} exceeds target {target:e}")]
    Quadrature { estimate: f64, target: f64 },

    #[error("malformed constants file, line {line}: {msg}")]
    ConfigParse { line: usize, msg: String },

    #[error("invalid value for `{key}`: {msg}")]
    ConfigValue { key: String, msg: String },

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status for the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ZeroConvergence { .. } | Error::Quadrature { .. } => 3,
            _ => 2,
        }
    }
}
