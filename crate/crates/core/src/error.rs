use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parameter {name} = {value} outside the valid range {range}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        range: String,
    },

    #[error("classes live on different rings: {0} vs {1}")]
    SpecMismatch(String, String),

    #[error("quotient-ring oracle limited to rings of rank <= {limit}, got {rank}")]
    OracleScale { rank: u64, limit: u64 },

    #[error("link not smooth at this codimension: i = {codim}, smooth range is {lo} <= i < {hi}")]
    NonSmoothLink { codim: i64, lo: i64, hi: i64 },

    /// A computed invariant violated a property that must hold if the sign
    /// and normalization conventions are right.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("cache {path}: {message}")]
    Cache { path: PathBuf, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status for this error: 3 for requests outside the
    /// mathematical domain, 4 for internal consistency failures, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParameters(_)
            | Error::OutOfRange { .. }
            | Error::NonSmoothLink { .. }
            | Error::OracleScale { .. } => 3,
            Error::Consistency(_) | Error::SpecMismatch(..) => 4,
            Error::Cache { .. } | Error::Io(_) => 1,
        }
    }

    pub(crate) fn out_of_range(name: &'static str, value: i64, range: impl Into<String>) -> Self {
        Error::OutOfRange {
            name,
            value,
            range: range.into(),
        }
    }
}
