use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {p} is rejected ({reason}); the modulus must be an odd prime")]
    InvalidModulus { p: u64, reason: &'static str },

    #[error("residue {value} is not invertible modulo {p}")]
    ResidueNotInvertible { value: u64, p: u64 },

    #[error("{element} is not invertible: {classification}")]
    NotInvertible {
        element: String,
        classification: String,
    },

    #[error("operands live over different moduli ({left} and {right})")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("residue {value} is not a canonical residue modulo {p}")]
    NonCanonicalResidue { value: u64, p: u64 },

    #[error("automorphism id must be one of 1..=6, got {0}")]
    InvalidAutomorphismId(u64),

    #[error("skew polynomials belong to different rings: {0}")]
    ContextMismatch(String),

    #[error("cannot divide: {0}")]
    NotDivisible(String),

    #[error("internal consistency check failed: {0}")]
    InternalMismatch(String),

    #[error("generator does not right-divide x^{n} - 1 (remainder {remainder})")]
    NotRightDivisor { n: usize, remainder: String },

    #[error("generator polynomial must be monic")]
    NonMonicGenerator,

    #[error("generator degree {degree} must be smaller than the code length {n}")]
    GeneratorDegree { degree: usize, n: usize },

    #[error("order {order} of theta does not divide the code length {n}")]
    OrderMismatch { order: usize, n: usize },

    #[error("message degree {degree} must be smaller than the rank {k}")]
    MessageTooLong { degree: usize, k: usize },

    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error(
        "exhaustive enumeration needs {p}^{exponent} codewords, exceeding the budget of {budget}"
    )]
    BudgetExceeded {
        p: u64,
        exponent: usize,
        budget: u128,
    },

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
}

impl Error {
    /// Errors caused by malformed input rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidModulus { .. }
                | Error::NonCanonicalResidue { .. }
                | Error::InvalidAutomorphismId(_)
                | Error::LengthMismatch { .. }
                | Error::Parse { .. }
        )
    }
}
