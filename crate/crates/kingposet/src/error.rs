use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("duplicate entry {0}")]
    DuplicateEntry(u32),
    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: u32, n: usize },
    #[error("position {pos} out of range 1..={n}")]
    PositionOutOfRange { pos: usize, n: usize },
    #[error("positions must be distinct, got {0} twice")]
    EqualPositions(usize),
    #[error("positions must satisfy i < j, got i={i}, j={j}")]
    UnorderedPositions { i: usize, j: usize },
    #[error("k={k} out of range 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("permutation {perm} is not in {class}")]
    NotInClass { perm: String, class: String },
    #[error("{pattern} is not strictly contained in {perm}")]
    NotContained { pattern: String, perm: String },
    #[error("definitional oracle too large: n={0} > 16")]
    OracleTooLarge(usize),
    #[error("max_n={got} below the minimum {min} for this suite")]
    MaxNTooSmall { got: usize, min: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
