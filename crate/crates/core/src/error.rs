use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain value {value} out of range for a domain of size {k}")]
    EntryOutOfRange { value: usize, k: usize },
    #[error("tuple has length {found}, expected {expected}")]
    TupleLength { expected: usize, found: usize },
    #[error("table has length {found}, expected {expected}")]
    TableLength { expected: usize, found: usize },
    #[error("label index {index} out of range for {labels} labels")]
    LabelIndex { index: usize, labels: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("empty label list")]
    NoLabels,
    #[error("domain size must be at least 1")]
    EmptyDomain,
    #[error("arity {found} too small, need at least {needed}")]
    ArityTooSmall { needed: usize, found: usize },
    #[error("position {position} out of range for arity {arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("invalid couple {{{i},{j}}}")]
    InvalidCouple { i: usize, j: usize },
    #[error("map value {value} out of range for target arity {arity}")]
    MapValueOutOfRange { value: usize, arity: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("functions have different shapes or label lists")]
    ShapeMismatch,
    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded { what: &'static str, value: u128, bound: u128 },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("empty tuple")]
    EmptyTuple,
    #[error("missing key {0}")]
    MissingKey(String),
    #[error("key {0} outside the reachable key space")]
    KeyOutOfRange(String),
    #[error("invalid order relation: {0}")]
    InvalidOrder(String),
    #[error("lambda needs 1 <= ell <= k with ell = k mod 2, got ell={ell}, k={k}")]
    LambdaParameters { ell: usize, k: usize },
    #[error("label constraint violated: {0}")]
    LabelConstraint(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
