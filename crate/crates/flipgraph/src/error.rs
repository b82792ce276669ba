use crate::polygon::Diagonal;

/// Errors shared by every module of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    PolygonTooSmall(usize),

    #[error("({a}, {b}) is not a diagonal of a polygon on {n} vertices")]
    InvalidDiagonal { a: usize, b: usize, n: usize },

    #[error("vertex {vertex} out of range for a polygon on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("a triangulation of a polygon on {n} vertices has {expected} diagonals, got {got}")]
    WrongDiagonalCount {
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("duplicate diagonal {0}")]
    DuplicateDiagonal(Diagonal),

    #[error("diagonals {0} and {1} cross")]
    CrossingDiagonals(Diagonal, Diagonal),

    #[error("unknown diagonal {0}")]
    UnknownDiagonal(Diagonal),

    #[error("diagonal {0} is not flippable: its two faces have different colours")]
    NotFlippable(Diagonal),

    #[error("need at least one colour")]
    NoColours,

    #[error("sigma {0:?} is not a permutation of 0..{1}")]
    InvalidPermutation(Vec<usize>, usize),

    #[error("expected one colour per face ({expected}), got {got}")]
    WrongColourCount { expected: usize, got: usize },

    #[error("colour {colour} out of range 0..{m}")]
    ColourOutOfRange { colour: usize, m: usize },

    #[error("colour counts differ: {0} vs {1}")]
    ColourCountMismatch(usize, usize),

    #[error("polygon sizes differ: {0} vs {1}")]
    PolygonMismatch(usize, usize),

    #[error("operation requires exactly 2 colours, got {0}")]
    TwoColoursRequired(usize),

    #[error("operation requires an even colour count, got {0}")]
    EvenColoursRequired(usize),

    #[error("step {index}: {source}")]
    InvalidStep {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("node budget exceeded: needs {needed} nodes, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("state space for n={n}, m={m} is too large to index")]
    StateSpaceTooLarge { n: usize, m: usize },

    #[error("expected one value per {what} ({expected}), got {got}")]
    WrongLength {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("diagonals {0} and {1} do not have disjoint quadrilaterals")]
    NotIndependent(Diagonal, Diagonal),

    #[error("commuting-flip check failed: {0}")]
    CommutationFailure(String),

    #[error("invariant violated: {0}")]
    InvariantViolated(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
