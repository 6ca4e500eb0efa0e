//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input: a diagram needs at least one crossing")]
    Empty,
    #[error("line {line}: malformed crossing token `{token}`")]
    MalformedToken { line: usize, token: String },
    #[error("line {line}: crossing needs exactly four arc labels")]
    WrongArity { line: usize },
    #[error("arc label {arc} occurs {count} times; every arc must occur exactly twice")]
    BadArcCount { arc: usize, count: usize },
    #[error("arc labels must cover 1..={expected}; label {found} is out of range")]
    LabelOutOfRange { expected: usize, found: usize },
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("component containing arc {arc} does not carry consecutive labels")]
    NonConsecutiveComponent { arc: usize },
    #[error("crossing {crossing}: under-strand must run from the first to the third tuple entry")]
    UnderConvention { crossing: usize },
    #[error("crossing {crossing}: over-strand arcs are not consistently oriented")]
    OverOrientation { crossing: usize },
    #[error("rotation system is not planar: {faces} faces where Euler requires {expected}")]
    NotPlanar { faces: usize, expected: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("operation requires an alternating diagram")]
    NotAlternating,
    #[error("operation requires a reduced diagram (no nugatory crossings)")]
    NotReduced,
    #[error("twist region {region} is cyclic; augmentation is undefined for (2,n)-torus style rows")]
    CyclicTwist { region: usize },
    #[error("crossing budget exceeded: diagram has {crossings} crossings, limit is {limit}")]
    CrossingBudget { crossings: usize, limit: usize },
    #[error("Jones exponents are half-integers (even-component link); not supported")]
    HalfIntegerExponents,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("exponent {exp} is not divisible by {by} during variable change")]
    ExponentNotDivisible { exp: i64, by: i64 },
    #[error("malformed polynomial term `{0}`")]
    Malformed(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtractError {
    #[error("polynomial span {span} is too small; head/tail extraction needs span >= 2")]
    SpanTooSmall { span: i64 },
    #[error("zero polynomial has no head or tail")]
    ZeroPolynomial,
    #[error("coefficient signs violate the alternating head/tail pattern (mirror or convention bug?)")]
    SignPattern,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read table: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("missing or malformed header; expected `name,crossings,pd,volume,provenance`")]
    BadHeader,
    #[error("duplicate knot name `{0}`")]
    DuplicateName(String),
}
