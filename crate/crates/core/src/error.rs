use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus of the reduced curve must be non-negative, got {0}")]
    NegativeReducedGenus(i64),

    #[error("local index {0} is not positive")]
    NonPositiveIndex(i64),

    #[error("degree {d} minus index {b} is odd")]
    ParityViolation { d: i64, b: i64 },

    #[error("polarization degree must be at least 1, got {0}")]
    InvalidPolarization(i64),

    #[error("split type ({a}, {b}) does not sum to degree {e}")]
    SplitDegreeMismatch { e: i64, a: i64, b: i64 },

    #[error("rank-2 bundles on a rational curve need a split type")]
    MissingSplitType,

    #[error("stability of the rank-2 bundle is unspecified")]
    UnspecifiedStability,

    #[error("descriptor is unstable; no Gr-class or tangent identification")]
    Unstable,

    #[error("point is not stable: {0}")]
    NotStable(String),

    #[error("there are no stable rank-2 bundles on the reduced curve (genus {gbar})")]
    NoStableBundles { gbar: i64 },

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: i64, got: i64 },

    #[error("h0 of End(E) twisted by the conormal dual must be non-negative, got {0}")]
    NegativeHEnd(i64),

    #[error("{0} is not an odd prime below 2^31")]
    InvalidPrime(u64),

    #[error("all generators are zero")]
    ZeroIdeal,

    #[error("ideal does not have finite colength")]
    RankDeficient,

    #[error("ideals live over different primes ({0} vs {1})")]
    PrimeMismatch(u64, u64),

    #[error("parameter t must be a nonzero field element")]
    ZeroParameter,

    #[error("truncation {trunc} is below the required bound {required}")]
    TruncationTooSmall { trunc: usize, required: usize },

    #[error("truncations {low} and {high} disagree ({dim_low} vs {dim_high})")]
    NotStabilized {
        low: usize,
        high: usize,
        dim_low: usize,
        dim_high: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
