//! Differential testing: the same seeded operation sequence is applied in
//! lockstep to the relational programs and to the index-based oracle, and
//! the two states are compared after every operation.
//!
//! Three comparisons run each step: partition equality, the parent array
//! lifted to a relation, and the rank array lifted to a relation. Parent
//! agreement is strictly stronger than partition agreement and pins down
//! the exact effect of each compression strategy.

use std::fmt;

use rand::Rng;

use crate::abstraction::{abstract_forest, lift_parents, lift_ranks};
use crate::error::ProgramError;
use crate::forest::ForestState;
use crate::gen::rng_from_seed;
use crate::oracle::{FindStrategy, OracleForest};
use crate::peano::{build_peano, PeanoCtx};
use crate::programs;
use crate::relation::Relation;
use crate::trace::CheckMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Find(usize),
    Union(usize, usize),
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Op::Find(i) => write!(f, "find {i}"),
            Op::Union(i, j) => write!(f, "union {i} {j}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CrossvalConfig {
    pub n: usize,
    pub ops: usize,
    pub strategy: FindStrategy,
    pub by_rank: bool,
    pub seed: u64,
}

/// A reproducing prefix for a disagreement between the two engines.
#[derive(Debug, Clone)]
pub struct Divergence {
    pub op_index: usize,
    pub kind: String,
    pub prefix: Vec<Op>,
}

impl fmt::Display for Divergence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "divergence at op {}: {}", self.op_index, self.kind)?;
        writeln!(f, "reproducer:")?;
        for op in &self.prefix {
            writeln!(f, "  {op}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct CrossvalOutcome {
    pub ops_executed: usize,
    pub max_rank: usize,
    pub divergence: Option<Divergence>,
}

impl CrossvalOutcome {
    pub fn agreed(&self) -> bool {
        self.divergence.is_none()
    }
}

/// Generates the seeded op sequence for a configuration.
pub fn op_sequence(cfg: &CrossvalConfig) -> Vec<Op> {
    let mut rng = rng_from_seed(cfg.seed);
    (0..cfg.ops)
        .map(|_| {
            if rng.random::<bool>() {
                Op::Find(rng.random_range(0..cfg.n))
            } else {
                Op::Union(rng.random_range(0..cfg.n), rng.random_range(0..cfg.n))
            }
        })
        .collect()
}

struct Lockstep {
    state: ForestState,
    oracle: OracleForest,
    ctx: PeanoCtx,
    strategy: FindStrategy,
    by_rank: bool,
    max_rank: usize,
}

impl Lockstep {
    fn new(cfg: &CrossvalConfig) -> Result<Lockstep, ProgramError> {
        // Both engines start from freshly initialised singletons; ranks are
        // kept on both sides even in plain mode so the rank lift is always
        // comparable.
        let (state, _) = programs::init_ranks(cfg.n, CheckMode::Off)?;
        Ok(Lockstep {
            state,
            oracle: OracleForest::new(cfg.n),
            ctx: build_peano(cfg.n)?,
            strategy: cfg.strategy,
            by_rank: cfg.by_rank,
            max_rank: 0,
        })
    }

    fn apply(&mut self, op: Op) -> Result<Option<String>, ProgramError> {
        let n = self.state.size();
        match op {
            Op::Find(i) => {
                let x = Relation::point(n, i);
                let relational_root = match self.strategy {
                    FindStrategy::Naive => {
                        let (y, _) = programs::find_set(&self.state, &x, CheckMode::Off)?;
                        y
                    }
                    FindStrategy::Compress => {
                        let (y, next, _) = programs::find_set_path_compression(
                            &self.state,
                            &x,
                            CheckMode::Off,
                        )?;
                        self.state = next;
                        y
                    }
                    FindStrategy::Split => {
                        let (y, next, _) =
                            programs::find_path_splitting(&self.state, &x, CheckMode::Off)?;
                        self.state = next;
                        y
                    }
                    FindStrategy::Halve => {
                        let (y, next, _) =
                            programs::find_path_halving(&self.state, &x, CheckMode::Off)?;
                        self.state = next;
                        y
                    }
                };
                let oracle_root = self.oracle.find(i, self.strategy);
                if relational_root.point_index()? != oracle_root {
                    return Ok(Some(format!(
                        "find root mismatch (relational {} vs oracle {oracle_root})",
                        relational_root.point_index()?
                    )));
                }
            }
            Op::Union(i, j) => {
                let x = Relation::point(n, i);
                let y = Relation::point(n, j);
                if self.by_rank {
                    let (next, _) = programs::union_sets_by_rank(
                        &self.state,
                        &x,
                        &y,
                        &self.ctx,
                        CheckMode::Off,
                    )?;
                    self.state = next;
                } else {
                    let (next, _) = programs::union_sets(&self.state, &x, &y, CheckMode::Off)?;
                    self.state = next;
                }
                self.oracle.union(i, j, self.by_rank);
            }
        }
        self.max_rank = self.max_rank.max(self.oracle.max_rank());
        self.compare()
    }

    fn compare(&self) -> Result<Option<String>, ProgramError> {
        if self.state.p != lift_parents(&self.oracle) {
            return Ok(Some("parent-lift mismatch".to_string()));
        }
        if let Some(rank) = &self.state.rank {
            if *rank != lift_ranks(&self.oracle) {
                return Ok(Some("rank-lift mismatch".to_string()));
            }
        }
        let relational_partition = abstract_forest(&self.state.p)?;
        if relational_partition != self.oracle.partition() {
            return Ok(Some("partition mismatch".to_string()));
        }
        Ok(None)
    }
}

/// Runs a full lockstep sequence, stopping at the first divergence.
pub fn run(cfg: &CrossvalConfig) -> Result<CrossvalOutcome, ProgramError> {
    let ops = op_sequence(cfg);
    run_ops(cfg, &ops)
}

/// Lockstep over an explicit op list (used to replay reproducers).
pub fn run_ops(cfg: &CrossvalConfig, ops: &[Op]) -> Result<CrossvalOutcome, ProgramError> {
    let mut lockstep = Lockstep::new(cfg)?;
    for (idx, &op) in ops.iter().enumerate() {
        if let Some(kind) = lockstep.apply(op)? {
            return Ok(CrossvalOutcome {
                ops_executed: idx + 1,
                max_rank: lockstep.max_rank,
                divergence: Some(Divergence {
                    op_index: idx,
                    kind,
                    prefix: ops[..=idx].to_vec(),
                }),
            });
        }
    }
    Ok(CrossvalOutcome {
        ops_executed: ops.len(),
        max_rank: lockstep.max_rank,
        divergence: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_agree() {
        for strategy in FindStrategy::ALL {
            for by_rank in [false, true] {
                let cfg = CrossvalConfig {
                    n: 8,
                    ops: 200,
                    strategy,
                    by_rank,
                    seed: 7,
                };
                let outcome = run(&cfg).unwrap();
                assert!(
                    outcome.agreed(),
                    "diverged: {strategy} by_rank={by_rank}: {}",
                    outcome.divergence.unwrap()
                );
                assert_eq!(outcome.ops_executed, 200);
                assert!(outcome.max_rank < 8);
            }
        }
    }

    #[test]
    fn singleton_universe_trivially_agrees() {
        let cfg = CrossvalConfig {
            n: 1,
            ops: 50,
            strategy: FindStrategy::Compress,
            by_rank: true,
            seed: 3,
        };
        assert!(run(&cfg).unwrap().agreed());
    }

    #[test]
    fn op_sequences_are_deterministic() {
        let cfg = CrossvalConfig {
            n: 16,
            ops: 100,
            strategy: FindStrategy::Halve,
            by_rank: false,
            seed: 11,
        };
        assert_eq!(op_sequence(&cfg), op_sequence(&cfg));
    }
}
