use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("vertex {vertex} out of range for a forest on {size} vertices")]
    VertexOutOfRange { vertex: usize, size: usize },

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("labeling has an odd number of negative labels")]
    OddSignCount,

    #[error("statistic `{stat}` is not defined for {mode} labelings")]
    IncompatibleMode { stat: String, mode: String },

    #[error("statistic `{0}` is a permutation statistic, not a forest statistic")]
    NotForestStatistic(String),

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown sign mode `{0}`")]
    UnknownMode(String),

    #[error("substitution produced negative q-exponent for monomial t^{t}q^{q}")]
    NegativeExponent { t: u32, q: u32 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
