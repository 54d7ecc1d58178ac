use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An integer parameter is outside its admissible range.
    OutOfRange { name: &'static str, value: i64, min: i64, max: i64 },
    InvalidParameter(&'static str),
    /// The character does not have mean value zero over one period.
    NonzeroMean { sum: i64 },
    /// A power series with a non-invertible constant term was inverted.
    NotInvertible,
    Parse(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutOfRange { name, value, min, max } => {
                write!(f, "{name} = {value} is outside {min}..={max}")
            }
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NonzeroMean { sum } => {
                write!(f, "character has nonzero mean (period sum {sum})")
            }
            Error::NotInvertible => f.write_str("series constant term is not invertible"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
