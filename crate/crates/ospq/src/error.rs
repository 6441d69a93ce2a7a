use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor carries a power of ln q")]
    LambdaDivisor,
    #[error("divisor mixes several radical monomials")]
    MixedRadicalDivisor,
    #[error("divisor has a non-cyclotomic factor")]
    NonCyclotomicDivisor,
    #[error("square root is not expressible over K-brackets")]
    NotASquare,
    #[error("radical argument {0} outside the supported range 2..=127")]
    RadicalOutOfRange(i64),
    #[error("negative argument {0}")]
    NegativeArgument(i64),
    #[error("residual pole of order {0} at q = 1")]
    ResidualPole(i64),
    #[error("value at q = 1 is not a rational number")]
    NotRational,
    #[error("q sample {0} must lie strictly inside (0, 1)")]
    SampleOutOfRange(f64),
    #[error("invalid index: {0}")]
    InvalidIndex(&'static str),
    #[error("index out of range: {0}")]
    IndexOutOfRange(alloc::string::String),
    #[error("element is not in the span of the dual basis (k-power present)")]
    NotInDualSpan,
    #[error("triangle inequality violated for ({0}, {1}, {2})")]
    Triangle(u32, u32, u32),
    #[error("series does not terminate: upper parameter is not a non-positive power of the base")]
    NonTerminating,
    #[error("pole in the lower parameter of the series at term {0}")]
    SeriesPole(u32),
}

pub type Result<T> = core::result::Result<T, Error>;
