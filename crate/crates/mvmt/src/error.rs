use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a truth value chain needs at least 2 values, got {0}")]
    InvalidChainSize(usize),

    #[error("invalid lattice description: {0}")]
    InvalidLattice(String),

    #[error("value {value} is not on the grid of {lattice}")]
    NotOnGrid { value: f64, lattice: String },

    #[error("domain mismatch: expected {expected}, got {found}")]
    DomainMismatch { expected: String, found: String },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("invalid domain: {0}")]
    InvalidDomain(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("relation is not reflexive at `{0}`")]
    NotReflexive(String),

    #[error("enumeration would visit {candidates} candidates, above the limit {limit}")]
    SizeLimit { candidates: f64, limit: f64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("type error{}: {msg}", pos.map(|p| format!(" at byte {p}")).unwrap_or_default())]
    Sort { pos: Option<usize>, msg: String },

    #[error("atom `{0}` has no interpretation in the model")]
    UninterpretedAtom(String),

    #[error("{0}")]
    SideMismatch(String),

    #[error("operation is only defined on {0} lattices")]
    UnsupportedLattice(&'static str),

    #[error("invalid input file: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
