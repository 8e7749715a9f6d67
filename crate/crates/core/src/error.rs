use std::fmt;

use crate::orbit::OddCondition;

/// Errors shared by all modules of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A size precondition between a shape and a content/degree failed.
    SizeMismatch { expected: usize, found: usize, what: &'static str },
    /// A shape precondition failed (e.g. splitting off a non-rectangular block).
    ShapeError(String),
    /// An input outside the mathematical domain of the operation.
    DegenerateInput(String),
    /// The binomial condition required for odd degrees does not hold.
    ConditionFailed(OddCondition),
    /// A tableau that must be regular has a repeated entry in some column.
    NotRegular { row: usize, col: usize },
    /// The content of a tableau is not divisible by the degree.
    ContentNotDivisible { entry: u32, count: usize, degree: u32 },
    /// An enumeration exceeded its configured budget.
    BudgetExceeded { budget: u64, explored: u64 },
    /// A tableau entry addresses a column that the matrix does not have.
    IndexError { entry: u32, cols: usize },
    /// A grid that is not a Latin square.
    InvalidSquare(String),
    /// Cache or certificate file could not be read or written.
    IoError(String),
    /// Cache or certificate file is syntactically or semantically invalid.
    FormatError { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SizeMismatch { expected, found, what } => {
                write!(f, "SizeMismatch: {what}: expected {expected}, found {found}")
            }
            Error::ShapeError(msg) => write!(f, "ShapeError: {msg}"),
            Error::DegenerateInput(msg) => write!(f, "DegenerateInput: {msg}"),
            Error::ConditionFailed(cond) => write!(
                f,
                "ConditionFailed: binomial(2({d}-1),{d}-1) = {b} < 2({m}-1)",
                d = cond.degree,
                m = cond.m,
                b = cond.binomial
            ),
            Error::NotRegular { row, col } => {
                write!(f, "NotRegular: repeated entry in column {col} (row {row})")
            }
            Error::ContentNotDivisible { entry, count, degree } => write!(
                f,
                "ContentNotDivisible: entry {entry} appears {count} times, not a multiple of {degree}"
            ),
            Error::BudgetExceeded { budget, explored } => {
                write!(f, "BudgetExceeded: explored {explored} of budget {budget}")
            }
            Error::IndexError { entry, cols } => {
                write!(f, "IndexError: entry {entry} exceeds matrix with {cols} columns")
            }
            Error::InvalidSquare(msg) => write!(f, "InvalidSquare: {msg}"),
            Error::IoError(msg) => write!(f, "IoError: {msg}"),
            Error::FormatError { line, message } => {
                write!(f, "FormatError: line {line}: {message}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
