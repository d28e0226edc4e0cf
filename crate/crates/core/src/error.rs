use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("closure exceeded the cap of {cap} elements")]
    ClosureOverflow { cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group of order {order} exceeds the subgroup lattice cap of {cap}")]
    LatticeOverflow { order: usize, cap: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("{p} does not divide the group order {order}")]
    PNotDividing { p: usize, order: usize },
    #[error("{0} is not a prime")]
    NotPrime(usize),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group has even order {0}")]
    EvenOrder(usize),
    #[error("group has odd order {0}")]
    OddOrder(usize),
    #[error("construction does not apply to {0}")]
    ExceptionalGroup(String),
    #[error("no proper nontrivial normal subgroup found in a non-cyclic group of order {0}")]
    NoNormalSeries(usize),
    #[error("orbit partition conflict at element {0}")]
    PartitionConflict(usize),
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("elementary abelian quotient has rank {0}, need at least 2")]
    RankTooSmall(usize),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("set is not product-free")]
    NotProductFree,
    #[error("product-free measurable set has measure {0} > 1/2")]
    MeasureExceedsHalf(String),
    #[error("search needs {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("map is not surjective onto the target group")]
    NotSurjective,
    #[error("charts belong to different source groups")]
    SourceMismatch,
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
