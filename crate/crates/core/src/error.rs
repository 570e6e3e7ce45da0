//! Error types shared by all evaluators.

/// Everything that can go wrong while evaluating series, theta functions,
/// Appell sums, or catalog expressions.
///
/// Evaluators return these instead of panicking so that the verification
/// engine can report a degenerate parameter set as an `error` entry rather
/// than a silent pass or fail.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Inversion of the zero element of Q(zeta3).
    #[error("division by zero in Q(zeta3)")]
    DivisionByZero,

    /// Series inversion of a series with no nonzero coefficient up to its
    /// validity order.
    #[error("cannot invert a series that is zero to its validity order")]
    ZeroSeries,

    /// An operation demanded more exact coefficients than the operand carries.
    #[error("insufficient validity order: needed {needed}, have {have}")]
    InsufficientOrder { needed: i64, have: i64 },

    /// Infinite q-Pochhammer product whose factors do not tend to 1
    /// (base exponent < 1 or argument exponent < 0).
    #[error("divergent infinite product")]
    DivergentProduct,

    /// Geometric expansion of 1/(1 - w*q^g) with g = 0 and w = 1.
    #[error("pole at 1 - q^0: non-generic parameters")]
    PoleAtOne,

    /// Appell function with j(z;q) identically zero.
    #[error("degenerate z: j(z;q) is the zero series")]
    DegenerateZ,

    /// Some bilateral index makes an Appell denominator vanish at q^0.
    #[error("non-generic pole in Appell sum at n = {0}")]
    NonGenericPole(i64),

    /// Requested an Appell form for a mock theta function that has none
    /// recorded.
    #[error("no Appell form recorded for {0}")]
    UnsupportedForm(&'static str),

    /// Division in an expression tree by a series that is zero at the
    /// probe order.
    #[error("zero denominator in expression")]
    ZeroDenominator,

    /// Structurally invalid input (bad substitution exponent, bad theta
    /// base, out-of-range parameter).
    #[error("invalid argument: {0}")]
    BadArgument(String),
}

impl Error {
    /// Short machine-readable tag used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "DivisionByZero",
            Error::ZeroSeries => "ZeroSeries",
            Error::InsufficientOrder { .. } => "InsufficientOrder",
            Error::DivergentProduct => "DivergentProduct",
            Error::PoleAtOne => "PoleAtOne",
            Error::DegenerateZ => "DegenerateZ",
            Error::NonGenericPole(_) => "NonGenericPole",
            Error::UnsupportedForm(_) => "UnsupportedForm",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::BadArgument(_) => "BadArgument",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
