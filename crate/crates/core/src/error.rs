use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("exponent {exponent} times {power} is not an integer")]
    NonClearingDenominator { exponent: String, power: u32 },
    #[error("fractional exponent {0} left at evaluation time")]
    FractionalExponent(String),
    #[error("evaluation at z = 0 with a negative exponent")]
    ZeroBase,
    #[error("invalid Cartan type {letter}{rank}")]
    InvalidCartanType { letter: char, rank: usize },
    #[error("dual fundamental weight {0} is not minuscule")]
    NotMinuscule(usize),
    #[error("index {0} is not in O*")]
    NotInOStar(usize),
    #[error("weight space is empty")]
    EmptyWeightSpace,
    #[error("tensor factors over different sl_N: {0} vs {1}")]
    MixedRank(usize, usize),
    #[error("pole: {0}")]
    Pole(String),
    #[error("trigonometric R-matrix evaluated at z = 1")]
    PoleAtOne,
    #[error("resonant lambda in ABRR solve: {0}")]
    ResonantLambda(String),
    #[error("truncated Verma depth {have} too shallow, need {need}")]
    TruncationTooShallow { have: usize, need: usize },
    #[error("weight is not generic: {0}")]
    NonGenericWeight(String),
    #[error("sample points z_{0} and z_{1} coincide or vanish")]
    CoincidingPoints(usize, usize),
    #[error("no integer solution: {0}")]
    NoIntegerSolution(String),
    #[error("operation needs a type A root system")]
    NotTypeA,
}

impl Error {
    /// Errors that a fresh random sample point would plausibly avoid.
    pub fn is_resample(&self) -> bool {
        matches!(
            self,
            Error::Pole(_)
                | Error::PoleAtOne
                | Error::ResonantLambda(_)
                | Error::CoincidingPoints(..)
                | Error::SingularMatrix
        )
    }
}
