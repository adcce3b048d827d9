//! Deliberately broken single-line variants of core operations, each paired
//! with the suite that catches it. They exist to demonstrate that the law
//! suites and the cross-validation harness detect real faults, not just to
//! confirm correct code.

use std::fmt;
use std::str::FromStr;

use crate::abstraction::lift_parents;
use crate::array::awrite;
use crate::classify::is_equivalence;
use crate::components::ancestors;
use crate::forest::{self, ForestState};
use crate::gen::all_relations;
use crate::laws::Counterexample;
use crate::oracle::OracleForest;
use crate::peano::build_peano;
use crate::programs;
use crate::relation::Relation;
use crate::trace::CheckMode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutantName {
    /// wcc computed without the transpose: star of x alone.
    WccDropTranspose,
    /// Array read without the transpose: x · y instead of xᵀ · y.
    AreadDropTranspose,
    /// Star missing the reflexive part: transitive closure only.
    StarMissingIdentity,
    /// Path halving that repoints every visited node, not every second one.
    HalvingUpdatesEveryNode,
    /// Plain union linking the wrong way: p[s] := r instead of p[r] := s.
    UnionLinkSwapped,
    /// Oracle union that forgets the rank increment on equal-rank links.
    OracleSkipRankIncrement,
}

impl MutantName {
    pub const ALL: [MutantName; 6] = [
        MutantName::WccDropTranspose,
        MutantName::AreadDropTranspose,
        MutantName::StarMissingIdentity,
        MutantName::HalvingUpdatesEveryNode,
        MutantName::UnionLinkSwapped,
        MutantName::OracleSkipRankIncrement,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MutantName::WccDropTranspose => "wcc-drop-transpose",
            MutantName::AreadDropTranspose => "aread-drop-transpose",
            MutantName::StarMissingIdentity => "star-missing-identity",
            MutantName::HalvingUpdatesEveryNode => "halving-updates-every-node",
            MutantName::UnionLinkSwapped => "union-link-swapped",
            MutantName::OracleSkipRankIncrement => "oracle-skip-rank-increment",
        }
    }

    /// The suite whose checks expose this mutant.
    pub fn caught_by(self) -> &'static str {
        match self {
            MutantName::WccDropTranspose => "wcc/equivalence",
            MutantName::AreadDropTranspose => "arrays worked example",
            MutantName::StarMissingIdentity => "star/unfold-left",
            MutantName::HalvingUpdatesEveryNode => "hoare/exact-effects",
            MutantName::UnionLinkSwapped => "crossvalidate parent-lift",
            MutantName::OracleSkipRankIncrement => "crossvalidate rank-lift",
        }
    }
}

impl fmt::Display for MutantName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MutantName {
    type Err = String;

    fn from_str(s: &str) -> Result<MutantName, String> {
        MutantName::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = MutantName::ALL.iter().map(|m| m.as_str()).collect();
                format!("unknown mutant {s:?}; known mutants: {}", names.join(", "))
            })
    }
}

/// Result of hunting one mutant: whether its catching suite found it, and
/// the printed reproducer.
#[derive(Debug, Clone)]
pub struct MutantReport {
    pub name: MutantName,
    pub caught: bool,
    pub reproducer: String,
}

pub fn run(name: MutantName) -> MutantReport {
    let counterexample = match name {
        MutantName::WccDropTranspose => hunt_wcc(),
        MutantName::AreadDropTranspose => hunt_aread(),
        MutantName::StarMissingIdentity => hunt_star(),
        MutantName::HalvingUpdatesEveryNode => hunt_halving(),
        MutantName::UnionLinkSwapped => hunt_union_link(),
        MutantName::OracleSkipRankIncrement => hunt_rank_increment(),
    };
    MutantReport {
        name,
        caught: counterexample.is_some(),
        reproducer: counterexample
            .map(|ce| ce.render())
            .unwrap_or_else(|| "mutant not caught".to_string()),
    }
}

pub fn run_all() -> Vec<MutantReport> {
    MutantName::ALL.into_iter().map(run).collect()
}

fn hunt_wcc() -> Option<Counterexample> {
    let mutant = |x: &Relation| x.star();
    for n in 1..=3 {
        for x in all_relations(n.min(3)) {
            if !is_equivalence(&mutant(&x)) {
                return Some(Counterexample {
                    n,
                    operands: vec![("x".to_string(), x.clone()), ("wcc(x)".to_string(), mutant(&x))],
                    note: "mutant wcc output is not an equivalence".to_string(),
                });
            }
        }
    }
    None
}

fn hunt_aread() -> Option<Counterexample> {
    let mutant = |x: &Relation, y: &Relation| x.compose(y);
    // the worked example: reading the partial array at index 0 must give
    // the value point 2
    let x = Relation::from_pairs(3, &[(0, 2), (1, 1)]);
    let z = Relation::point(3, 0);
    let got = mutant(&x, &z);
    if got != Relation::point(3, 2) {
        return Some(Counterexample {
            n: 3,
            operands: vec![
                ("x".to_string(), x),
                ("z".to_string(), z),
                ("read".to_string(), got),
            ],
            note: "mutant read returns the wrong value".to_string(),
        });
    }
    None
}

fn hunt_star() -> Option<Counterexample> {
    // transitive closure without the reflexive part
    let mutant = |x: &Relation| {
        let mut r = x.clone();
        loop {
            let next = r.join(&r.compose(&r));
            if next == r {
                return r;
            }
            r = next;
        }
    };
    for x in all_relations(2) {
        let starred = mutant(&x);
        let unfold = Relation::identity(2).join(&x.compose(&starred));
        if unfold != starred {
            return Some(Counterexample {
                n: 2,
                operands: vec![("y".to_string(), x.clone()), ("y*".to_string(), starred)],
                note: "mutant star violates 1 + y.y* = y*".to_string(),
            });
        }
    }
    None
}

fn hunt_halving() -> Option<Counterexample> {
    // splitting's update set with halving's claimed effect
    let p = Relation::from_successor_array(&[1, 2, 3, 3]);
    let x = Relation::point(4, 0);
    let state = ForestState::new(p.clone());
    let (_, mutated, _) = programs::find_path_splitting(&state, &x, CheckMode::Off)
        .expect("splitting runs on the chain");
    let grandparent = p.compose(&p);
    let y = Relation::point(4, 3);
    if !forest::path_halving_post(&mutated.p, &x, &y, &p)
        || mutated.p != awrite(&p, &ancestors(&grandparent, &x), &grandparent.transpose())
    {
        return Some(Counterexample {
            n: 4,
            operands: vec![
                ("p0".to_string(), p),
                ("x".to_string(), x),
                ("result".to_string(), mutated.p),
            ],
            note: "mutant halving fails the exact-effect equality".to_string(),
        });
    }
    None
}

fn hunt_union_link() -> Option<Counterexample> {
    // relational union with the link reversed, run in lockstep against the
    // correct oracle
    let n = 4;
    let mutant_union = |state: &ForestState, x: &Relation, y: &Relation| {
        let (r, state, _) =
            programs::find_set_path_compression(state, x, CheckMode::Off).unwrap();
        let (s, state, _) =
            programs::find_set_path_compression(&state, y, CheckMode::Off).unwrap();
        ForestState {
            p: awrite(&state.p, &s, &r),
            rank: state.rank,
        }
    };
    let mut state = ForestState::new(Relation::identity(n));
    let mut oracle = OracleForest::new(n);
    let ops = [(0usize, 1usize), (2, 3), (1, 2)];
    for (idx, &(i, j)) in ops.iter().enumerate() {
        state = mutant_union(&state, &Relation::point(n, i), &Relation::point(n, j));
        oracle.union(i, j, false);
        if state.p != lift_parents(&oracle) {
            let prefix: Vec<String> = ops[..=idx]
                .iter()
                .map(|(a, b)| format!("union {a} {b}"))
                .collect();
            return Some(Counterexample {
                n,
                operands: vec![
                    ("relational".to_string(), state.p),
                    ("oracle".to_string(), lift_parents(&oracle)),
                ],
                note: format!("parent-lift mismatch; reproducer: {}", prefix.join("; ")),
            });
        }
    }
    None
}

/// An oracle clone whose equal-rank branch forgets the increment.
struct ForgetfulOracle {
    parent: Vec<usize>,
    rank: Vec<usize>,
}

impl ForgetfulOracle {
    fn new(n: usize) -> ForgetfulOracle {
        ForgetfulOracle {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find_compress(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut w = i;
        while self.parent[w] != root {
            let t = w;
            w = self.parent[w];
            self.parent[t] = root;
        }
        root
    }

    fn union(&mut self, i: usize, j: usize) {
        let r = self.find_compress(i);
        let s = self.find_compress(j);
        if r == s {
            return;
        }
        if self.rank[r] < self.rank[s] {
            self.parent[r] = s;
        } else {
            self.parent[s] = r;
            // rank increment dropped
        }
    }
}

fn hunt_rank_increment() -> Option<Counterexample> {
    // oracle union that never increments ranks, against the correct
    // relational union-by-rank
    let n = 4;
    let ctx = build_peano(n).expect("context builds");
    let mut oracle = ForgetfulOracle::new(n);
    let (mut state, _) = programs::init_ranks(n, CheckMode::Off).expect("init runs");
    let ops = [(0usize, 1usize), (2, 3), (1, 2)];
    for (idx, &(i, j)) in ops.iter().enumerate() {
        let (next, _) = programs::union_sets_by_rank(
            &state,
            &Relation::point(n, i),
            &Relation::point(n, j),
            &ctx,
            CheckMode::Off,
        )
        .expect("union runs");
        state = next;
        oracle.union(i, j);
        let rank_pairs: Vec<(usize, usize)> = oracle
            .rank
            .iter()
            .enumerate()
            .map(|(node, &r)| (node, r))
            .collect();
        let lifted = Relation::from_pairs(n, &rank_pairs);
        if state.rank.as_ref() != Some(&lifted) {
            let prefix: Vec<String> = ops[..=idx]
                .iter()
                .map(|(a, b)| format!("union {a} {b}"))
                .collect();
            return Some(Counterexample {
                n,
                operands: vec![
                    ("relational-rank".to_string(), state.rank.clone().unwrap()),
                    ("oracle-rank".to_string(), lifted),
                ],
                note: format!("rank-lift mismatch; reproducer: {}", prefix.join("; ")),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_mutant_is_caught() {
        for report in run_all() {
            assert!(report.caught, "{} escaped", report.name);
            assert!(!report.reproducer.is_empty());
        }
    }

    #[test]
    fn names_round_trip() {
        for name in MutantName::ALL {
            assert_eq!(name.as_str().parse::<MutantName>().unwrap(), name);
        }
        assert!("not-a-mutant".parse::<MutantName>().is_err());
    }
}
