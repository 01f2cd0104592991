use core::fmt;

/// Errors raised by the rate-region computations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vector's length does not match the number of users.
    DimensionMismatch { expected: usize, found: usize },
    /// A transmit power lies outside `[0, p_max]`.
    PowerOutOfRange { index: usize, value: f64 },
    /// An operation defined only for a fixed number of users was given another.
    WrongDimension { expected: usize, found: usize },
    /// A direct gain is zero (or non-positive) and the instance is not flagged degenerate.
    DegenerateChannel,
    /// A gain, noise level or power value is non-finite or has the wrong sign.
    InvalidParameter(&'static str),
    /// User index out of `0..n`.
    IndexOutOfRange { index: usize, n: usize },
    /// A rate lies outside the domain of the requested frontier segment.
    OutOfDomain { value: f64, lo: f64, hi: f64 },
    /// The cross gain that the formula divides by is zero.
    NoInterference,
    /// The rate pair cannot be reached by any power pair in the box.
    Infeasible,
    /// A time-sharing vector is not on the probability simplex.
    SimplexViolation,
    /// A rate target is not inside the crystallized region.
    OutsideHull,
    /// A scaling direction is zero or has a negative entry.
    ZeroDirection,
    /// The requested size exceeds a hard cap.
    CapExceeded { requested: u64, cap: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::PowerOutOfRange { index, value } => {
                write!(f, "power p{} = {value} outside [0, p_max]", index + 1)
            }
            Error::WrongDimension { expected, found } => {
                write!(f, "operation requires n = {expected} users, got {found}")
            }
            Error::DegenerateChannel => write!(f, "degenerate channel: a direct gain is zero"),
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::IndexOutOfRange { index, n } => {
                write!(f, "user index {} out of range 1..={n}", index + 1)
            }
            Error::OutOfDomain { value, lo, hi } => {
                write!(f, "rate {value} outside domain [{lo}, {hi}]")
            }
            Error::NoInterference => write!(f, "cross gain is zero; frontier is undefined"),
            Error::Infeasible => write!(f, "rate pair is not achievable by power control"),
            Error::SimplexViolation => write!(f, "time-sharing vector is not on the simplex"),
            Error::OutsideHull => write!(f, "target lies outside the crystallized region"),
            Error::ZeroDirection => write!(f, "direction must be non-negative and non-zero"),
            Error::CapExceeded { requested, cap } => {
                write!(f, "requested size {requested} exceeds cap {cap}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
