use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason} (got {value})")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("empty sample")]
    EmptySample,

    #[error("degenerate fit: lambda_hat = 0 (all observations are zero)")]
    DegenerateFit,

    #[error("tail maximum requires lambda <= m + 1 (lambda = {lambda}, m = {m})")]
    TailMaxDomain { lambda: f64, m: u32 },

    #[error("cannot parse alternative spec `{input}`: {reason}")]
    ParseSpec { input: String, reason: String },

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),

    #[error("empty replicate list")]
    EmptyReplicates,

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("fisher index undefined: {0}")]
    FisherIndexUndefined(&'static str),

    #[error("csv error: {0}")]
    Csv(String),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}
