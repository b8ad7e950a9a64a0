use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input point set")]
    EmptyInput,
    #[error("point {index} has a non-finite coordinate")]
    NonFinite { index: usize },
    #[error("points are not a skyline (x must increase and y decrease strictly)")]
    NotASkyline,
    #[error("k and the group size must be at least 1")]
    InvalidK,
    #[error("epsilon must lie strictly between 0 and 1, got {0}")]
    InvalidEpsilon(f64),
    #[error("rank {rank} outside 1..={max}")]
    RankOutOfRange { rank: usize, max: usize },
    #[error("the two span endpoints coincide")]
    DegenerateSpan,
    #[error("predicate is false on every candidate value")]
    NotFound,
    #[error("instance too large for brute force: {what} = {size} exceeds {limit}")]
    InstanceTooLarge {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
