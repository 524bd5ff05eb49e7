use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("family index must be at least 1, got {0}")]
    InvalidFamily(i64),

    #[error(
        "family {family} has {count} structures; pass --force to enumerate families above {limit}"
    )]
    EnumerationGuard {
        family: u32,
        count: String,
        limit: u32,
    },

    #[error("cannot parse note name {0:?}")]
    NoteParse(String),

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error(
        "step {position} of the scale is neither the tone nor the semitone of family {family}"
    )]
    NotAStep { family: u32, position: usize },

    #[error("invalid scale: {0}")]
    InvalidScale(String),

    #[error("rotation index {index} out of range for a {p}-note type")]
    RotationOutOfRange { index: usize, p: usize },

    #[error("unknown type {label:?} for family {family}")]
    UnknownType { family: u32, label: String },

    #[error("unknown scale {0:?}")]
    UnknownScale(String),

    #[error("{0}")]
    Usage(String),

    #[error("line {line} of .scl input: {message}")]
    SclParse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
