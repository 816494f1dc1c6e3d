use thiserror::Error;

/// Errors surfaced by context ingestion, expression parsing and lattice queries.
#[derive(Debug, Error)]
pub enum Error {
    #[error("context parse error at line {line}: {msg}")]
    ContextParse { line: usize, msg: String },

    #[error("expression error at position {pos}: {msg}")]
    ExprParse { pos: usize, msg: String },

    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("attribute count {count} exceeds cap {cap}")]
    AttributeCapExceeded { count: usize, cap: usize },

    #[error("invalid attribute name `{0}`: must be an identifier (letter, then letters/digits/underscore)")]
    InvalidAttributeName(String),

    #[error("object name `{0}` uses the reserved `_f` prefix")]
    ReservedObjectName(String),

    #[error("invalid object name `{0}`")]
    InvalidObjectName(String),

    #[error("full enumeration needs 2^{n_f} nodes, above the cap of 2^{cap}")]
    EnumerationTooLarge { n_f: usize, cap: u32 },

    #[error("object set {0} is not a union of discernible classes")]
    NotAGeneralExtent(String),

    #[error("mask has {got} bits, expected {expected}")]
    MaskWidth { got: usize, expected: usize },

    #[error("invalid mask `{0}`: use characters 0 and 1 only")]
    InvalidMask(String),

    #[error("forbidden minterm {0} is occupied by an object class")]
    ForbiddenMintermOccupied(usize),

    #[error("alphabet of {0} attributes is too large for exhaustive verification (max {1})")]
    AlphabetTooLarge(usize, usize),

    #[error("attribute selection is empty")]
    EmptyRestriction,

    #[error("rule must contain `->` or `<->`: {0}")]
    MalformedRule(String),

    #[error("constraints error: {0}")]
    Constraints(String),
}

pub type Result<T> = std::result::Result<T, Error>;
