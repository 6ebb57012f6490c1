use thiserror::Error;

use crate::cardinal::{CardinalBound, CardinalValue};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bound mismatch: {left} vs {right}")]
    BoundMismatch {
        left: CardinalBound,
        right: CardinalBound,
    },

    #[error("finite cardinal bound must be at least 1")]
    InvalidBound,

    #[error("value {value} does not fit bound {bound}")]
    ValueOutOfBound {
        value: CardinalValue,
        bound: CardinalBound,
    },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("duplicate carrier element `{0}`")]
    DuplicateElement(String),

    #[error("carrier must be nonempty")]
    EmptyCarrier,

    #[error("invalid element name `{0}`: names must be nonempty and must not contain `|`")]
    InvalidElementName(String),

    #[error("word too short: length {0}, need at least 2")]
    WordTooShort(usize),

    #[error("carrier mismatch: operands live on different carriers")]
    CarrierMismatch,

    #[error("not finitary: {0}")]
    NotFinitary(String),

    #[error("multisemigroup is not associative (first failing triple: {a}, {b}, {c})")]
    NotAssociative { a: String, b: String, c: String },

    #[error("carrier size {size} exceeds the search cap {cap}")]
    CarrierTooLarge { size: usize, cap: usize },

    #[error("max multiplicity {value} exceeds the search cap {cap}")]
    MultiplicityTooLarge { value: u64, cap: u64 },

    #[error("max multiplicity must be at least 1")]
    InvalidMaxMultiplicity,

    #[error("parameter {name} = {value} out of range {min}..={max}")]
    ParameterOutOfRange {
        name: &'static str,
        value: u64,
        min: u64,
        max: u64,
    },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("negative structure constant {value} for ({s}, {t}) at {r}; this indicates an internal bug")]
    NegativeCoefficient {
        s: String,
        t: String,
        r: String,
        value: i64,
    },

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error("{0}")]
    Parse(String),

    #[error("json syntax error at line {line}, column {column}: {message}")]
    JsonSyntax {
        line: usize,
        column: usize,
        message: String,
    },
}
