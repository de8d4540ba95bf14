use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("moduli not coprime: gcd = {witness}")]
    NotCoprime { witness: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole in truncated series at k = {0}")]
    Pole(usize),
    #[error("instance out of domain: {0}")]
    OutOfDomain(String),
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("index k = {k} outside summation range 0..={max}")]
    OutOfRange { k: u64, max: u64 },
    #[error("denominator shares factor with modulus")]
    NonInvertible,
    #[error("pole order mismatch: numerator not divisible by (1-a)^2")]
    PoleOrderMismatch,
    #[error("denominator vanishes at a = 1")]
    DenominatorVanishes,
    #[error("oracle bounds exceeded (m <= 3, N <= 12)")]
    OracleBounds,
    #[error("empty modulus specification")]
    EmptyModulus,
    #[error("precision cap: {0}")]
    PrecisionCap(String),
    #[error("{0} is not a p-adic integer")]
    NotPadicInteger(String),
    #[error("p-integrality violated: {0}")]
    NotPIntegral(String),
    #[error("modulus degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("field tower invalid: {0}")]
    InvalidTower(String),
}
