use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    Domain(&'static str),
    /// `f(lo)·f(hi) >= 0` for a bracketed root search.
    Bracket { lo: f64, hi: f64 },
    /// A Möbius denominator vanished.
    Pole,
    /// Schur parameter `σ₁` is undetermined because `|σ₀| = 1`.
    Degenerate,
    /// A coefficient pair is not in the coefficient body.
    NotMember,
    /// Series composition that needs a re-expansion we do not implement.
    UnsupportedComposition,
    /// Series orders of the operands differ.
    OrderMismatch { left: usize, right: usize },
    /// Division by a series whose constant term vanishes.
    SeriesDivision,
    /// Branch selection and formula disagree; indicates a bug.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Bracket { lo, hi } => {
                write!(f, "root not bracketed by [{lo}, {hi}]")
            }
            Error::Pole => f.write_str("evaluation at a pole"),
            Error::Degenerate => f.write_str("sigma1 undetermined: |sigma0| = 1"),
            Error::NotMember => f.write_str("pair is not in the coefficient body"),
            Error::UnsupportedComposition => {
                f.write_str("composition with nonzero inner constant needs a Mobius outer map")
            }
            Error::OrderMismatch { left, right } => {
                write!(f, "series orders differ ({left} vs {right})")
            }
            Error::SeriesDivision => f.write_str("divisor series has zero constant term"),
            Error::Internal(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
