use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lambda must exceed -1/2, got {0}")]
    LambdaOutOfRange(String),

    #[error("degree must be at least {min}, got {n}")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("abscissa must satisfy x >= 1, got {0}")]
    AbscissaBelowOne(String),

    #[error("parameter t must lie in [0, 1/2), got {0}")]
    ConjugateOutOfRange(String),

    #[error("index k = {k} outside 0..={n}")]
    IndexOutOfRange { n: usize, k: usize },

    #[error("the zero polynomial has no finite root count")]
    ZeroPolynomial,

    #[error("interval ({a}, {b}] is empty")]
    EmptyInterval { a: String, b: String },

    #[error("{bound} is not valid here: requires {requirement}")]
    OutsideValidity {
        bound: &'static str,
        requirement: &'static str,
    },

    #[error("bound {0} has a vanishing denominator at this point")]
    SingularBound(&'static str),

    #[error("method {0} is not available in exact arithmetic")]
    MethodUnavailable(&'static str),

    #[error("value {0} is zero where a nonzero divisor is required")]
    DivisionByZero(&'static str),

    #[error("zero refinement stalled at width {achieved} (requested {requested})")]
    NotConverged { achieved: String, requested: String },

    #[error("interlacing bracket lost its sign change near zero {index} of degree {n}")]
    BracketLost { n: usize, index: usize },

    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
