use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Long division left a nonzero remainder.
    #[error("exact division failed: nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not a perfect square on the half-exponent lattice")]
    NotPerfectSquare,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid q-base: {d} does not divide {s}")]
    InvalidBase { s: u64, d: u64 },
    #[error("n and l must be coprime (got n={n}, l={l})")]
    NotCoprime { n: u64, l: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
