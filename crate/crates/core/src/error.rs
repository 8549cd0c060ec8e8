use thiserror::Error;

/// Errors raised by group construction and the algebraic operations built on top of it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed group spec `{spec}`: {reason}")]
    MalformedSpec { spec: String, reason: String },

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("action is not an automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("amalgamated subgroup is not central: {0}")]
    AmalgamNotCentral(String),

    #[error("frobenius:{q}:{p} requires q prime and q = 1 mod p")]
    BadFrobeniusParameters { q: u64, p: u64 },

    #[error("element {0} is not in the subgroup")]
    NotInSubgroup(usize),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup must be proper and nontrivial")]
    NotProperNontrivial,

    #[error("group order {0} is not a prime power")]
    NotPrimePower(usize),

    #[error("{what}: size {size} exceeds the configured cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("partition is not an S-ring: {0}")]
    NotSRing(Box<crate::sring::Rejection>),

    #[error("input is not a partition of the group: {0}")]
    NotPartition(String),

    #[error("set must be nonempty")]
    EmptySet,

    #[error("{0} is not an A-subgroup")]
    NotASubgroup(&'static str),

    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },

    #[error("permutation group does not contain the right regular representation")]
    MissingRegular,

    #[error("permutation group is not regular")]
    NotRegular,

    #[error("permutation group is not contained in Aut(A)")]
    NotInAutomorphismGroup,

    #[error("no isomorphism between the regular subgroup and the target group")]
    NoIsomorphism,

    #[error("S-rings are over different groups")]
    GroupMismatch,

    #[error("operation not applicable: {0}")]
    NotApplicable(String),

    #[error("structural claim falsified: {0}")]
    Falsified(String),

    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
