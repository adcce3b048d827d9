//! Finite Kleene relation algebra over bit-packed Boolean matrices,
//! disjoint-set-forest programs executed directly on relations with every
//! Hoare assertion checked at runtime, and a classical index-based
//! union-find oracle for cross-validation.
//!
//! The main pieces:
//!
//! - [`relation`]: the `Relation` carrier with lattice, composition,
//!   transposition and star operations, plus the text matrix format.
//! - [`classify`]: derived predicates (vector, point, mapping, forest, ...).
//! - [`array`]: relational read and write on associative arrays.
//! - [`components`]: components, roots and ancestors.
//! - [`peano`]: relational numbers modulo m and the rank invariant.
//! - [`forest`] / [`programs`] / [`trace`]: the annotated while-programs
//!   and their checked execution.
//! - [`oracle`] / [`abstraction`] / [`crossval`]: the index-based oracle
//!   and lockstep differential testing.
//! - [`laws`]: the named law suites with counterexample reporting.
//! - [`mutants`]: deliberately broken variants used to demonstrate that the
//!   suites catch single-line faults.

pub mod abstraction;
pub mod array;
pub mod classify;
pub mod components;
pub mod crossval;
pub mod error;
pub mod forest;
pub mod gen;
pub mod laws;
pub mod mutants;
pub mod oracle;
pub mod peano;
pub mod programs;
pub mod relation;
pub mod trace;

pub use classify::{classify, PredicateReport};
pub use error::{ProgramError, RelationError};
pub use forest::{AssertionName, ForestState};
pub use oracle::{FindStrategy, OracleForest, Partition};
pub use peano::PeanoCtx;
pub use programs::{ProgramInputs, ProgramName, ProgramRun};
pub use relation::Relation;
pub use trace::{CheckMode, ProgramTrace};
