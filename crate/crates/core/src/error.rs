use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("argument must be a positive integer, got 0")]
    ZeroArgument,
    #[error("index {index} is out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has nonzero constant term")]
    NonzeroConstantTerm,
    #[error("denominator has zero constant term")]
    ZeroDenominatorConstant,
    #[error("coefficient at {index} is not an integer: {value}")]
    NonIntegral { index: String, value: String },
    #[error("term z^{n} u^{m} lies outside the triangle m <= n")]
    OutsideTriangle { n: usize, m: usize },
    #[error("empty composition")]
    EmptyComposition,
    #[error("empty word")]
    EmptyWord,
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid forbidden block set: {0}")]
    InvalidForbidden(String),
    #[error("shift of finite type has no admissible {0}-blocks")]
    DegenerateSft(usize),
    #[error("distinguished set is empty")]
    EmptyDistinguishedSet,
    #[error("vertex shift is reducible")]
    Reducible,
    #[error("enumeration exceeded the cap of {cap} generated words")]
    EnumerationCap { cap: usize },
    #[error("oracle cost guard exceeded: {0}")]
    CostGuard(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("morphism seed `{0}` is not prolongable")]
    NotProlongable(String),
    #[error("block language did not stabilize within {cap} iterations (trace: {trace})")]
    NotStabilized { cap: usize, trace: String },
    #[error("scale decomposition violated: {0}")]
    DecompositionViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
