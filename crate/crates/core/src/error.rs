use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("depth k={k} out of range for n={n} (need 1 <= k <= n)")]
    DepthOutOfRange { n: u32, k: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("weight {weight} exceeds the symmetric-function weight cap {cap}")]
    WeightExceedsCap { weight: usize, cap: usize },
    #[error("multiple zeta value {0:?} diverges: first argument must be at least 2")]
    Inadmissible(Vec<u32>),
    #[error("series has zero constant term and is not invertible")]
    NotInvertible,
    #[error("singular linear system")]
    Singular,
    #[error("cannot parse pi-value {input:?}: {reason}")]
    Parse { input: String, reason: String },
}
