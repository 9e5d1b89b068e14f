use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("length mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("entry {value} out of range 1..={n}")]
    EntryOutOfRange { value: u64, n: u64 },

    #[error("slot {slot} out of range 1..={n}")]
    SlotOutOfRange { slot: u64, n: u64 },

    #[error("radius {r} out of range 0..={n}")]
    RadiusOutOfRange { r: usize, n: usize },

    #[error("enumeration requires {required} items, exceeding budget {budget}")]
    BudgetExceeded { required: String, budget: u64 },

    #[error("{0} is not a unit modulo f (shares a factor with f)")]
    NotAUnit(String),

    #[error("invalid parameters: {0}")]
    BadParams(String),

    #[error("construction hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("minimum distance undefined for a codebook with fewer than two members")]
    VacuousBook,

    #[error("codebook contains duplicate members")]
    DuplicateMembers,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
