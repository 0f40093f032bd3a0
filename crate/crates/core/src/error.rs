use std::fmt;

use thiserror::Error;

/// Errors raised by the algebra, structure, congruence and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("carrier of {0} elements exceeds the supported maximum of {max}", max = crate::algebra::MAX_ORDER)]
    TooLarge(usize),
    #[error("arrow table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("element index {index} out of range for carrier of size {n}")]
    BadElement { index: usize, n: usize },
    #[error("zero and one coincide in a carrier of {0} elements")]
    ConstantsCoincide(usize),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("invalid element name `{0}`")]
    InvalidName(String),
    #[error("subset width {got} does not match carrier size {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("exhaustive enumeration over {n} elements exceeds the gate of {gate}")]
    GateExceeded { n: usize, gate: usize },
    #[error("generating set is empty")]
    EmptyGenerators,
    #[error("subset is not a {family}: {reason}")]
    NotInFamily { family: &'static str, reason: String },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("algebra is not a quantum-Wajsberg algebra: {0}")]
    NotQw(String),
    #[error("partition is not a congruence: {0}")]
    NotCongruence(String),
    #[error("partition labels are invalid: {0}")]
    BadPartition(String),
    #[error("algebras have different orders ({0} vs {1})")]
    OrderMismatch(usize, usize),
    /// A machine-checked statement failed on a concrete instance.
    #[error("falsification: {0}")]
    Falsified(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingSection(&'static str),
    UnexpectedToken { expected: &'static str, found: String },
    DuplicateElement(String),
    UnknownName(String),
    RowLength { expected: usize, got: usize },
    MissingConstant(&'static str),
    TrailingInput(String),
    Invalid(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: ", self.line, self.column)?;
        match &self.kind {
            ParseErrorKind::MissingSection(s) => write!(f, "missing `{s}` section"),
            ParseErrorKind::UnexpectedToken { expected, found } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::DuplicateElement(n) => write!(f, "duplicate element `{n}`"),
            ParseErrorKind::UnknownName(n) => write!(f, "unknown element `{n}`"),
            ParseErrorKind::RowLength { expected, got } => {
                write!(f, "arrow row has {got} entries, expected {expected}")
            }
            ParseErrorKind::MissingConstant(c) => write!(f, "missing constant `{c}`"),
            ParseErrorKind::TrailingInput(t) => write!(f, "unexpected trailing input `{t}`"),
            ParseErrorKind::Invalid(m) => f.write_str(m),
        }
    }
}
