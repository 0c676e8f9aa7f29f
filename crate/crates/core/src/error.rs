use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count {n} out of range (expected 1..={max})")]
    InvalidVariableCount { n: u32, max: u32 },

    #[error("variable counts differ: {left} vs {right}")]
    VariableCountMismatch { left: u32, right: u32 },

    #[error("operation requires an even variable count, got {n}")]
    OddVariableCount { n: u32 },

    #[error("function is not bent{}", detail_suffix(.detail))]
    NotBent { detail: String },

    #[error("truth table has {got} entries, expected {expected}")]
    BadTableLength { expected: usize, got: usize },

    #[error("field degree {m} out of range (expected 2..={max})")]
    InvalidFieldDegree { m: u32, max: u32 },

    #[error("modulus {modulus:#x} does not have degree {m}")]
    BadModulusDegree { modulus: u32, m: u32 },

    #[error("modulus {modulus:#x} is reducible (divisible by {factor:#x})")]
    ModulusReducible { modulus: u32, factor: u32 },

    #[error("modulus {modulus:#x} is irreducible but not primitive (x has order {order})")]
    ModulusNotPrimitive { modulus: u32, order: u32 },

    #[error("element {value:#x} is not in the field of degree {m}")]
    NotInField { value: u32, m: u32 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("exponent {d} is not coprime with the group order {order}")]
    ExponentNotCoprime { d: u64, order: u32 },

    #[error("map is not a permutation{}", detail_suffix(.detail))]
    NotPermutation { detail: String },

    #[error("map sizes differ: m = {left} vs m = {right}")]
    MapSizeMismatch { left: u32, right: u32 },

    /// A named theorem hypothesis or construction precondition failed.
    #[error("{name} failed: {detail}")]
    Hypothesis { name: &'static str, detail: String },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn detail_suffix(detail: &str) -> String {
    if detail.is_empty() {
        String::new()
    } else {
        format!(" ({detail})")
    }
}

impl Error {
    pub fn hypothesis(name: &'static str, detail: impl Into<String>) -> Self {
        Error::Hypothesis {
            name,
            detail: detail.into(),
        }
    }

    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
