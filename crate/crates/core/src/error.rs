use alloc::string::String;
use core::fmt;

/// Errors reported by generators, algorithms, and oracles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside its admissible range. The message names the field.
    Parameter(String),
    /// An input structure (graph, report, session set) is malformed for the operation.
    Input(String),
    /// The instance exceeds the size limit of an exact oracle.
    TooLarge(String),
    /// A report failed the independent replay audit. The message is the diagnostic.
    Audit(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parameter(msg) => write!(f, "parameter error: {msg}"),
            Error::Input(msg) => write!(f, "input error: {msg}"),
            Error::TooLarge(msg) => write!(f, "size error: {msg}"),
            Error::Audit(msg) => write!(f, "audit failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! param_err {
    ($($arg:tt)*) => {
        $crate::error::Error::Parameter(alloc::format!($($arg)*))
    };
}

macro_rules! input_err {
    ($($arg:tt)*) => {
        $crate::error::Error::Input(alloc::format!($($arg)*))
    };
}

pub(crate) use input_err;
pub(crate) use param_err;
