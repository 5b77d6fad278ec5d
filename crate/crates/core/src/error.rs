use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("non-expandable in declared region: {0}")]
    NonExpandable(String),
    #[error("incompatible variable orders: {0:?} vs {1:?}")]
    IncompatibleVariables(Vec<String>, Vec<String>),
    #[error("coefficient at {0:?} lies outside the exact window")]
    OutsideWindow(Vec<i64>),
    #[error("rewrite step cap {cap} exceeded while straightening {word}")]
    StepCap { cap: usize, word: String },
    #[error("multi-color input is not supported by the quantum engine")]
    MultiColor,
    #[error("bracket depth {depth} exceeds maximum depth {max}")]
    DepthOverflow { depth: usize, max: usize },
    #[error("root {0} is outside the computed range; increase the ladder count")]
    OutOfRange(String),
    #[error("word is not reduced: root {0} repeats in the ladder")]
    NonReduced(String),
    #[error("word is not an admissible translation: {0}")]
    NotTranslation(String),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
