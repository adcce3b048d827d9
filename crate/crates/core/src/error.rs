use thiserror::Error;

/// Errors raised when constructing or parsing relations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("universe size {0} is out of range (1..={max})", max = crate::relation::MAX_UNIVERSE)]
    InvalidUniverse(usize),
    #[error("expected a vector, got a relation with a partially filled row")]
    NotAVector,
    #[error("expected a point")]
    NotAPoint,
    #[error("expected a nonempty vector")]
    EmptyVector,
    #[error("expected a forest (a mapping whose non-loop part is acyclic)")]
    NotAForest,
    #[error("matrix parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Errors raised while executing an annotated program.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProgramError {
    #[error("{program}: precondition {assertion} violated")]
    PreconditionViolated { program: String, assertion: String },
    #[error("{program}: assertion {assertion} failed at iteration {iteration} of loop {loop_name}")]
    AssertionFailed {
        program: String,
        loop_name: String,
        assertion: String,
        iteration: usize,
    },
    #[error("{program}: postcondition {assertion} failed")]
    PostconditionFailed { program: String, assertion: String },
    #[error(
        "{program}: variant did not decrease at iteration {iteration} of loop {loop_name} ({prev} -> {cur})"
    )]
    VariantNotDecreasing {
        program: String,
        loop_name: String,
        iteration: usize,
        prev: u64,
        cur: u64,
    },
    #[error("{program}: loop {loop_name} exceeded the iteration cap {cap}; input is not a forest")]
    IterationCapExceeded {
        program: String,
        loop_name: String,
        cap: usize,
    },
    #[error("{program}: missing binding {name}")]
    MissingBinding { program: String, name: String },
    #[error("{program}: rank increment overflowed the number range")]
    RankOverflow { program: String },
    #[error("{program}: state carries no rank array")]
    MissingRank { program: String },
    #[error("unknown program {0}")]
    UnknownProgram(String),
    #[error(transparent)]
    Relation(#[from] RelationError),
}
