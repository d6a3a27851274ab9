use thiserror::Error;

/// Errors reported by polynomial, q-object and congruence operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division requested with a divisor whose leading coefficient is not 1.
    #[error("divisor is not monic")]
    NonMonicDivisor,

    /// A rational function with a zero denominator was constructed or divided by.
    #[error("division by the zero rational function")]
    DivisionByZeroFunction,

    /// Evaluation point is a genuine pole of the rational function.
    #[error("rational function has a pole at the evaluation point")]
    PoleAtPoint,

    /// A modulus base that is not an odd prime.
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),

    /// A q-Fermat quotient or related object with p dividing the base m.
    #[error("prime {p} divides the base {m}")]
    PrimeDividesBase { p: u64, m: u64 },

    /// The reduced denominator of a congruence side is divisible by [p]_q,
    /// so the side has no meaning modulo a power of [p]_q.
    #[error("denominator is not coprime to [p]_q")]
    DenominatorNotCoprime,

    /// Classical congruence side whose denominator is divisible by p.
    #[error("denominator is divisible by p = {0}")]
    DenominatorDivisibleByP(u64),

    /// No admissible oracle prime was found within the retry budget.
    #[error("could not find an admissible oracle prime")]
    BadOraclePrime,

    /// Statement instance outside its applicability range.
    #[error("statement is not applicable to this instance: {0}")]
    NotApplicable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
