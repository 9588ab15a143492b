use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field of order {p}^{r} exceeds the configured maximum {max}")]
    FieldTooLarge { p: u64, r: u32, max: u64 },
    #[error("F_{sub} is not a subfield of F_{sup}")]
    NotASubfield { sub: u64, sup: u64 },
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("arithmetic between elements of different fields")]
    FieldMismatch,
    #[error("division by the zero series")]
    DivisionByZeroSeries,
    #[error("polynomial degree {degree} exceeds reflection degree {d0}")]
    DegreeExceedsD0 { degree: u64, d0: u64 },
    #[error("polynomial division was not exact: {0}")]
    DivisionNotExact(String),
    #[error("|beta| = {size} exceeds m = {m}")]
    BetaTooLarge { size: u32, m: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("bad composition: {0}")]
    BadComposition(String),
    #[error("group closure exceeds bound {bound}")]
    TooLarge { bound: usize },
    #[error("problem too large: {0}")]
    ProblemTooLarge(String),
    #[error("cofixed computation needs generator inverses")]
    InversesMissing,
    #[error("{count} vectors exceed the enumeration bound {bound}")]
    TooManyVectors { count: u64, bound: u64 },
    #[error("limit at t = 1 is not finite")]
    LimitNotFinite,
    #[error("limit at t = 1 is not an integer: {num}/{den}")]
    NonIntegralLimit { num: String, den: String },
    #[error("invalid config: {0}")]
    ConfigInvalid(String),
    #[error("corrupt cache entry: {0}")]
    CacheCorrupt(String),
    #[error("unknown object: {0}")]
    UnknownObject(String),
}
