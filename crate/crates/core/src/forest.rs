//! Forest state and the named assertions of the annotated programs.
//!
//! Each assertion evaluates its defining formula verbatim over the algebra
//! and array operations; the program runner records the verdicts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::array::awrite;
use crate::classify::{is_forest, is_point, is_vector};
use crate::components::{ancestors, fc, root_of, wcc};
use crate::error::ProgramError;
use crate::peano::{build_peano, rank_property};
use crate::relation::Relation;

/// Parent relation plus optional rank relation; the mutable state threaded
/// through the programs. Value semantics: programs return updated copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestState {
    pub p: Relation,
    pub rank: Option<Relation>,
}

impl ForestState {
    pub fn new(p: Relation) -> ForestState {
        ForestState { p, rank: None }
    }

    pub fn with_rank(p: Relation, rank: Relation) -> ForestState {
        assert_eq!(p.size(), rank.size(), "rank size mismatch");
        ForestState { p, rank: Some(rank) }
    }

    pub fn size(&self) -> usize {
        self.p.size()
    }
}

/// The closed set of named assertions exposed for stand-alone evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AssertionName {
    MakeSetPost,
    FindSetPre,
    FindSetInv,
    FindSetPost,
    PathCompressionPre,
    PathCompressionInv,
    PathCompressionPost,
    PathSplittingInv,
    PathSplittingPost,
    PathHalvingInv,
    PathHalvingPost,
    UnionSetsPre,
    UnionSetsPost,
    RankProperty,
}

impl AssertionName {
    pub const ALL: [AssertionName; 14] = [
        AssertionName::MakeSetPost,
        AssertionName::FindSetPre,
        AssertionName::FindSetInv,
        AssertionName::FindSetPost,
        AssertionName::PathCompressionPre,
        AssertionName::PathCompressionInv,
        AssertionName::PathCompressionPost,
        AssertionName::PathSplittingInv,
        AssertionName::PathSplittingPost,
        AssertionName::PathHalvingInv,
        AssertionName::PathHalvingPost,
        AssertionName::UnionSetsPre,
        AssertionName::UnionSetsPost,
        AssertionName::RankProperty,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AssertionName::MakeSetPost => "make_set_post",
            AssertionName::FindSetPre => "find_set_pre",
            AssertionName::FindSetInv => "find_set_inv",
            AssertionName::FindSetPost => "find_set_post",
            AssertionName::PathCompressionPre => "path_compression_pre",
            AssertionName::PathCompressionInv => "path_compression_inv",
            AssertionName::PathCompressionPost => "path_compression_post",
            AssertionName::PathSplittingInv => "path_splitting_inv",
            AssertionName::PathSplittingPost => "path_splitting_post",
            AssertionName::PathHalvingInv => "path_halving_inv",
            AssertionName::PathHalvingPost => "path_halving_post",
            AssertionName::UnionSetsPre => "union_sets_pre",
            AssertionName::UnionSetsPost => "union_sets_post",
            AssertionName::RankProperty => "rank_property",
        }
    }
}

impl fmt::Display for AssertionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for AssertionName {
    type Err = ProgramError;

    fn from_str(s: &str) -> Result<AssertionName, ProgramError> {
        AssertionName::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| ProgramError::UnknownProgram(s.to_string()))
    }
}

// --- assertion formulas ---

pub fn make_set_post(p: &Relation, x: &Relation, p0: &Relation) -> bool {
    x.meet(p) == x.compose(&x.transpose())
        && x.complement().meet(p) == x.complement().meet(p0)
}

pub fn find_set_pre(p: &Relation, x: &Relation) -> bool {
    is_forest(p) && is_point(x)
}

pub fn find_set_inv(p: &Relation, x: &Relation, y: &Relation) -> bool {
    find_set_pre(p, x) && is_point(y) && y.leq(&ancestors(p, x))
}

pub fn find_set_post(p: &Relation, x: &Relation, y: &Relation) -> bool {
    is_point(y) && *y == root_of(p, x)
}

pub fn path_compression_pre(p: &Relation, x: &Relation, y: &Relation) -> bool {
    is_forest(p) && is_point(x) && is_point(y) && *y == root_of(p, x)
}

pub fn path_compression_inv(
    p: &Relation,
    x: &Relation,
    y: &Relation,
    p0: &Relation,
    w: &Relation,
) -> bool {
    let one = Relation::identity(p.size());
    path_compression_pre(p, x, y)
        && is_forest(p0)
        && fc(p) == fc(p0)
        && p.meet(&one) == p0.meet(&one)
        && is_point(w)
        && w.leq(&ancestors(p0, x))
        && *y == root_of(p, w)
        && awrite(p0, &ancestors(p0, x).difference(&ancestors(p0, w)), y) == *p
}

pub fn path_compression_post(p: &Relation, x: &Relation, y: &Relation, p0: &Relation) -> bool {
    let one = Relation::identity(p.size());
    path_compression_pre(p, x, y)
        && fc(p) == fc(p0)
        && p.meet(&one) == p0.meet(&one)
        && awrite(p0, &ancestors(p0, x), y) == *p
}

pub fn path_splitting_inv(p: &Relation, x: &Relation, y: &Relation, p0: &Relation) -> bool {
    let grandparent = p0.compose(p0);
    find_set_pre(p, x)
        && is_point(y)
        && y.leq(&ancestors(p0, x))
        && is_forest(p0)
        && awrite(
            p0,
            &ancestors(p0, x).difference(&ancestors(p0, y)),
            &grandparent.transpose(),
        ) == *p
}

pub fn path_splitting_post(p: &Relation, x: &Relation, y: &Relation, p0: &Relation) -> bool {
    let one = Relation::identity(p.size());
    let grandparent = p0.compose(p0);
    path_compression_pre(p, x, y)
        && fc(p) == fc(p0)
        && p.meet(&one) == p0.meet(&one)
        && awrite(p0, &ancestors(p0, x), &grandparent.transpose()) == *p
}

pub fn path_halving_inv(p: &Relation, x: &Relation, y: &Relation, p0: &Relation) -> bool {
    let grandparent = p0.compose(p0);
    find_set_pre(p, x)
        && is_point(y)
        && y.leq(&ancestors(p0, x))
        && is_forest(p0)
        && awrite(
            p0,
            &ancestors(&grandparent, x).difference(&ancestors(p0, y)),
            &grandparent.transpose(),
        ) == *p
}

pub fn path_halving_post(p: &Relation, x: &Relation, y: &Relation, p0: &Relation) -> bool {
    let one = Relation::identity(p.size());
    let grandparent = p0.compose(p0);
    path_compression_pre(p, x, y)
        && fc(p) == fc(p0)
        && p.meet(&one) == p0.meet(&one)
        && awrite(p0, &ancestors(&grandparent, x), &grandparent.transpose()) == *p
}

pub fn union_sets_pre(p: &Relation, x: &Relation, y: &Relation) -> bool {
    is_forest(p) && is_point(x) && is_point(y)
}

pub fn union_sets_post(p: &Relation, x: &Relation, y: &Relation, p0: &Relation) -> bool {
    union_sets_pre(p, x, y) && fc(p) == wcc(&p0.join(&x.compose(&y.transpose())))
}

/// Loop invariant of the initialisation loops: outside the pending set h,
/// the parent array is already the identity.
pub fn init_sets_inv(p: &Relation, h: &Relation) -> bool {
    let one = Relation::identity(p.size());
    is_vector(h) && p.difference(h) == one.difference(h)
}

/// init_sets_inv extended by: outside h, ranks are already zero.
pub fn init_ranks_inv(p: &Relation, h: &Relation, rank: &Relation, zero: &Relation) -> bool {
    init_sets_inv(p, h) && rank.difference(h) == zero.transpose().difference(h)
}

/// Evaluates a named assertion over the supplied variable bindings.
pub fn eval_assertion(
    name: AssertionName,
    bindings: &BTreeMap<String, Relation>,
) -> Result<bool, ProgramError> {
    let get = |var: &str| {
        bindings.get(var).ok_or_else(|| ProgramError::MissingBinding {
            program: name.to_string(),
            name: var.to_string(),
        })
    };
    Ok(match name {
        AssertionName::MakeSetPost => make_set_post(get("p")?, get("x")?, get("p0")?),
        AssertionName::FindSetPre => find_set_pre(get("p")?, get("x")?),
        AssertionName::FindSetInv => find_set_inv(get("p")?, get("x")?, get("y")?),
        AssertionName::FindSetPost => find_set_post(get("p")?, get("x")?, get("y")?),
        AssertionName::PathCompressionPre => {
            path_compression_pre(get("p")?, get("x")?, get("y")?)
        }
        AssertionName::PathCompressionInv => {
            path_compression_inv(get("p")?, get("x")?, get("y")?, get("p0")?, get("w")?)
        }
        AssertionName::PathCompressionPost => {
            path_compression_post(get("p")?, get("x")?, get("y")?, get("p0")?)
        }
        AssertionName::PathSplittingInv => {
            path_splitting_inv(get("p")?, get("x")?, get("y")?, get("p0")?)
        }
        AssertionName::PathSplittingPost => {
            path_splitting_post(get("p")?, get("x")?, get("y")?, get("p0")?)
        }
        AssertionName::PathHalvingInv => {
            path_halving_inv(get("p")?, get("x")?, get("y")?, get("p0")?)
        }
        AssertionName::PathHalvingPost => {
            path_halving_post(get("p")?, get("x")?, get("y")?, get("p0")?)
        }
        AssertionName::UnionSetsPre => union_sets_pre(get("p")?, get("x")?, get("y")?),
        AssertionName::UnionSetsPost => {
            union_sets_post(get("p")?, get("x")?, get("y")?, get("p0")?)
        }
        AssertionName::RankProperty => {
            let p = get("p")?;
            let ctx = build_peano(p.size())?;
            rank_property(p, get("rank")?, &ctx)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> Relation {
        Relation::from_pairs(3, &[(0, 1), (1, 2), (2, 2)])
    }

    #[test]
    fn find_set_post_on_chain() {
        let p = chain();
        let x = Relation::point(3, 0);
        assert!(find_set_post(&p, &x, &root_of(&p, &x)));
        assert!(!find_set_post(&p, &x, &Relation::point(3, 1)));
    }

    #[test]
    fn compression_post_detects_single_bit_damage() {
        let p0 = chain();
        let x = Relation::point(3, 0);
        let y = Relation::point(3, 2);
        let good = awrite(&p0, &ancestors(&p0, &x), &y);
        assert!(path_compression_post(&good, &x, &y, &p0));
        // repoint node 1 at itself instead of the root
        let bad = awrite(&good, &Relation::point(3, 1), &Relation::point(3, 1));
        assert!(!path_compression_post(&bad, &x, &y, &p0));
    }

    #[test]
    fn make_set_post_exhaustive_n3() {
        use crate::gen::{all_points, all_relations};
        for p in all_relations(3) {
            for x in all_points(3) {
                let p1 = awrite(&p, &x, &x);
                assert!(make_set_post(&p1, &x, &p));
            }
        }
    }

    #[test]
    fn eval_assertion_reports_missing_bindings() {
        let mut bindings = BTreeMap::new();
        bindings.insert("p".to_string(), chain());
        let err = eval_assertion(AssertionName::FindSetPre, &bindings).unwrap_err();
        assert!(matches!(err, ProgramError::MissingBinding { .. }));
    }

    #[test]
    fn assertion_names_round_trip() {
        for name in AssertionName::ALL {
            assert_eq!(name.as_str().parse::<AssertionName>().unwrap(), name);
        }
        assert!("no_such_assertion".parse::<AssertionName>().is_err());
    }
}
