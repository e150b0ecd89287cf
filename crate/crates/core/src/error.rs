use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the generators contain 1, so the ideal is the whole ring")]
    UnitIdeal,

    #[error("the zero ideal has no irreducible components")]
    ZeroIdeal,

    #[error("empty list: {0}")]
    Empty(&'static str),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("{what} exceeds cap ({size} > {cap})")]
    CapExceeded {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("face {face} is outside the domain of beta (needs b(i) < r_i wherever b(i) is finite)")]
    OutsideBeta { face: String },

    #[error("exponent {value} of variable {var} exceeds the polarization bound {bound}")]
    ExceedsBound { var: usize, value: u32, bound: u32 },

    #[error("interval lower endpoint {0} has an infinite coordinate")]
    InfiniteLowerEndpoint(String),

    #[error("interval [{lo}, {hi}] is not a Stanley interval")]
    NonStanleyInterval { lo: String, hi: String },

    #[error("interval [{lo}, {hi}] has lo not below hi")]
    InvertedInterval { lo: String, hi: String },

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("not a prime: {0}")]
    NotPrime(u64),

    #[error("monomial is not in the ideal: {0}")]
    NotInIdeal(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
