//! Named law suites: every algebraic fact the engine relies on, checked
//! exhaustively on small universes and on seeded constrained-random
//! operands on larger ones, with the first counterexample reported.

mod appendix;
mod arrays;
mod basic;
mod forest_laws;
mod hoare;
mod peano_laws;
mod wccfc;

use rand_chacha::ChaCha8Rng;

use crate::gen::{all_relations, rng_from_seed};
use crate::relation::Relation;

/// How hard to drive a law: exhaustive enumeration happens on universes up
/// to each law's own cap (usually 2), seeded random sampling covers the
/// sizes above it up to `n_max` with `samples` qualifying tuples per size.
#[derive(Debug, Clone)]
pub struct LawConfig {
    pub n_max: usize,
    pub samples: u64,
    pub seed: u64,
}

impl Default for LawConfig {
    fn default() -> LawConfig {
        LawConfig {
            n_max: 4,
            samples: 1000,
            seed: 0,
        }
    }
}

/// First failing operand tuple of a law run.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub n: usize,
    pub operands: Vec<(String, Relation)>,
    pub note: String,
}

impl Counterexample {
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("counterexample (n={}): {}\n", self.n, self.note));
        for (name, value) in &self.operands {
            out.push_str(&format!("{name} =\n{value}"));
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct LawReport {
    pub suite: &'static str,
    pub name: &'static str,
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn full_name(&self) -> String {
        format!("{}/{}", self.suite, self.name)
    }
}

pub(crate) type Sampler = Box<dyn Fn(&mut ChaCha8Rng, usize) -> Vec<Relation>>;
pub(crate) type Qualifier = Box<dyn Fn(&[Relation]) -> bool>;
pub(crate) type Check = Box<dyn Fn(usize, &[Relation]) -> bool>;
type Runner = Box<dyn Fn(&LawConfig) -> (u64, Option<Counterexample>)>;

/// A named, runnable law.
pub struct Law {
    pub suite: &'static str,
    pub name: &'static str,
    runner: Runner,
}

impl Law {
    pub fn full_name(&self) -> String {
        format!("{}/{}", self.suite, self.name)
    }

    pub fn run(&self, cfg: &LawConfig) -> LawReport {
        let (cases, counterexample) = (self.runner)(cfg);
        LawReport {
            suite: self.suite,
            name: self.name,
            cases,
            counterexample,
        }
    }
}

/// Builder for fully custom laws; the closure returns cases run and an
/// optional counterexample.
pub(crate) fn custom(
    suite: &'static str,
    name: &'static str,
    run: impl Fn(&LawConfig) -> (u64, Option<Counterexample>) + 'static,
) -> Law {
    Law {
        suite,
        name,
        runner: Box::new(run),
    }
}

/// Builder for the common equational shape: fixed operand names, a
/// dedicated joint sampler, a qualifier re-checked on every tuple, and the
/// law body itself.
pub(crate) struct EquationLaw {
    pub suite: &'static str,
    pub name: &'static str,
    pub operands: &'static [&'static str],
    /// Largest universe enumerated exhaustively (bounded by the config).
    pub exhaustive_max: usize,
    pub sampler: Sampler,
    pub qualifier: Qualifier,
    pub check: Check,
}

pub(crate) fn equation(spec: EquationLaw) -> Law {
    let EquationLaw {
        suite,
        name,
        operands,
        exhaustive_max,
        sampler,
        qualifier,
        check,
    } = spec;
    let seed_salt = name_hash(suite, name);

    custom(suite, name, move |cfg| {
        let mut cases = 0u64;
        let fail = |n: usize, tuple: &[Relation], phase: &str| Counterexample {
            n,
            operands: operands
                .iter()
                .zip(tuple)
                .map(|(name, r)| (name.to_string(), r.clone()))
                .collect(),
            note: format!("law violated ({phase} phase)"),
        };

        if operands.is_empty() {
            for n in 1..=cfg.n_max {
                cases += 1;
                if !check(n, &[]) {
                    return (cases, Some(fail(n, &[], "direct")));
                }
            }
            return (cases, None);
        }

        let exhaustive_cap = exhaustive_max.min(cfg.n_max);
        for n in 1..=exhaustive_cap {
            let space = all_relations(n);
            let mut found = None;
            for_each_tuple(&space, operands.len(), |tuple| {
                if qualifier(tuple) {
                    cases += 1;
                    if !check(n, tuple) {
                        found = Some(fail(n, tuple, "exhaustive"));
                        return false;
                    }
                }
                true
            });
            if let Some(ce) = found {
                return (cases, Some(ce));
            }
        }

        let mut rng = rng_from_seed(cfg.seed ^ seed_salt);
        for n in (exhaustive_cap + 1).max(3)..=cfg.n_max {
            let mut accepted = 0u64;
            let mut attempts = 0u64;
            let attempt_cap = cfg.samples.saturating_mul(50).max(1000);
            while accepted < cfg.samples && attempts < attempt_cap {
                attempts += 1;
                let tuple = sampler(&mut rng, n);
                if !qualifier(&tuple) {
                    continue;
                }
                accepted += 1;
                cases += 1;
                if !check(n, &tuple) {
                    return (cases, Some(fail(n, &tuple, "random")));
                }
            }
        }
        (cases, None)
    })
}

fn for_each_tuple(space: &[Relation], arity: usize, mut visit: impl FnMut(&[Relation]) -> bool) {
    let mut idx = vec![0usize; arity];
    let mut tuple: Vec<Relation> = idx.iter().map(|&i| space[i].clone()).collect();
    loop {
        if !visit(&tuple) {
            return;
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < space.len() {
                tuple[pos] = space[idx[pos]].clone();
                break;
            }
            idx[pos] = 0;
            tuple[pos] = space[0].clone();
        }
    }
}

fn name_hash(suite: &str, name: &str) -> u64 {
    // FNV-1a over the full name; only used to decorrelate per-law streams
    let mut h = 0xcbf29ce484222325u64;
    for b in suite.bytes().chain("/".bytes()).chain(name.bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

/// The full registry, in deterministic order.
pub fn registry() -> Vec<Law> {
    let mut laws = Vec::new();
    laws.extend(basic::laws());
    laws.extend(wccfc::laws());
    laws.extend(arrays::laws());
    laws.extend(appendix::laws());
    laws.extend(forest_laws::laws());
    laws.extend(peano_laws::laws());
    laws.extend(hoare::laws());
    laws
}

/// Suite names present in the registry, in registry order.
pub fn suite_names() -> Vec<&'static str> {
    let mut names = Vec::new();
    for law in registry() {
        if !names.contains(&law.suite) {
            names.push(law.suite);
        }
    }
    names
}

/// Runs the laws of one suite (or all suites for "all").
pub fn run_suite(suite: &str, cfg: &LawConfig) -> Result<Vec<LawReport>, String> {
    let laws: Vec<Law> = registry()
        .into_iter()
        .filter(|l| suite == "all" || l.suite == suite)
        .collect();
    if laws.is_empty() {
        return Err(format!(
            "unknown suite {suite:?}; known suites: all, {}",
            suite_names().join(", ")
        ));
    }
    Ok(laws.iter().map(|l| l.run(cfg)).collect())
}
