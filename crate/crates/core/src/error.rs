use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is not invertible modulo {modulus}: the prime divides it")]
    NotInvertible { value: String, modulus: String },

    #[error("division by a p-adic zero (known to precision p^{0})")]
    DivisionByZero(i64),

    #[error("operands live over different primes ({0} and {1})")]
    PrimeMismatch(u64, u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("denominator divisible by p = {0}")]
    DenominatorDivisible(u64),

    #[error("ambiguous quadratic form representation for p = {p}: {candidates}")]
    AmbiguousForm { p: u64, candidates: String },

    #[error("unknown id `{0}`")]
    UnknownId(String),

    #[error("precision shortfall: needed p^{needed}, achieved p^{achieved}")]
    PrecisionShortfall { needed: i64, achieved: i64 },

    #[error("series `{id}` does not converge geometrically: observed term ratio {ratio} >= declared bound")]
    SlowConvergence { id: String, ratio: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
