use thiserror::Error;

/// Errors produced by the exact-arithmetic pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("polynomial is not a perfect {0}-th power of a rational polynomial")]
    NotAPerfectPower(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different number fields")]
    MismatchedFields,
    #[error("polynomial is not a divisor of the ambient polynomial")]
    NotADivisor,
    #[error("too many irreducible factors ({found}) for subset enumeration (cap {cap})")]
    CombinatorialBlowup { found: usize, cap: usize },
    #[error("no input datum qualifies for bounding m")]
    NoUsablePrimes,
    #[error("curve has bad reduction at {p}")]
    BadReduction { p: u64 },
    #[error("field of size {p}^{r} exceeds the enumeration cap {cap}")]
    FieldTooLarge { p: u64, r: u32, cap: u64 },
    #[error("point counts are inconsistent: {0}")]
    InconsistentCounts(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
