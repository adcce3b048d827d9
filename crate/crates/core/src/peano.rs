//! Relational numbers 0..m−1: a zero point, a cyclic successor mapping and
//! the partial successor derived from it, plus the ordering and the rank
//! invariant used by union-by-rank.
//!
//! Ranks live in the same carrier as the nodes (m equals the universe
//! size), which is enough because a forest on m nodes never produces ranks
//! beyond m−1.

use crate::array::aread;
use crate::classify;
use crate::components::roots;
use crate::error::RelationError;
use crate::relation::{cardinality_leq, Relation};

/// The relations encoding numbers modulo `m`.
#[derive(Debug, Clone)]
pub struct PeanoCtx {
    m: usize,
    zero: Relation,
    succ_total: Relation,
    succ_partial: Relation,
    pred_of_zero: Relation,
    succ_partial_plus: Relation,
}

impl PeanoCtx {
    pub fn modulus(&self) -> usize {
        self.m
    }

    /// The point representing 0.
    pub fn zero(&self) -> &Relation {
        &self.zero
    }

    /// The total successor modulo m.
    pub fn succ_total(&self) -> &Relation {
        &self.succ_total
    }

    /// The partial successor: total successor minus the edge into 0.
    pub fn succ_partial(&self) -> &Relation {
        &self.succ_partial
    }

    /// The predecessor of 0 under the total successor.
    pub fn pred_of_zero(&self) -> &Relation {
        &self.pred_of_zero
    }

    /// Cached transitive closure of the partial successor, the strict order.
    pub fn succ_partial_plus(&self) -> &Relation {
        &self.succ_partial_plus
    }
}

/// Builds the modulo-m number model and verifies its four axioms: zero is a
/// point, the successor is an injective mapping, and every number is
/// reachable from zero.
pub fn build_peano(m: usize) -> Result<PeanoCtx, RelationError> {
    let zero = Relation::try_bot(m).map(|_| Relation::point(m, 0))?;
    let succ_total = Relation::from_fn(m, |i, j| j == (i + 1) % m);
    let succ_partial = succ_total.difference(&zero.transpose());
    let pred_of_zero = succ_total.compose(&zero);
    let succ_partial_plus = succ_partial.plus();

    debug_assert!(classify::is_point(&zero));
    debug_assert!(classify::is_mapping(&succ_total) && classify::is_injective(&succ_total));
    debug_assert_eq!(
        succ_total.transpose().star().compose(&zero),
        Relation::top(m)
    );

    Ok(PeanoCtx {
        m,
        zero,
        succ_total,
        succ_partial,
        pred_of_zero,
        succ_partial_plus,
    })
}

/// succ(x) = S′ᵀ · x. Empty exactly when x is the largest number; the rank
/// invariant is what keeps programs away from that case.
pub fn succ(ctx: &PeanoCtx, x: &Relation) -> Result<Relation, RelationError> {
    if !classify::is_point(x) {
        return Err(RelationError::NotAPoint);
    }
    Ok(ctx.succ_partial.transpose().compose(x))
}

/// x < y ⟺ x ⊑ S′⁺ · y for points x and y.
pub fn less(ctx: &PeanoCtx, x: &Relation, y: &Relation) -> Result<bool, RelationError> {
    if !classify::is_point(x) || !classify::is_point(y) {
        return Err(RelationError::NotAPoint);
    }
    Ok(x.leq(&ctx.succ_partial_plus.compose(y)))
}

/// The no-overflow certificate for union-by-rank:
/// every node has a rank, ranks strictly increase towards parents off the
/// roots, and there are at least as many numbers at or above the maximum
/// rank as there are roots.
pub fn rank_property(p: &Relation, rank: &Relation, ctx: &PeanoCtx) -> bool {
    assert_eq!(p.size(), ctx.m, "rank context size mismatch");
    let one = Relation::identity(p.size());
    let mapping = classify::is_mapping(rank);
    let strict = p
        .difference(&one)
        .compose(rank)
        .leq(&rank.compose(&ctx.succ_partial_plus));
    let numbers_at_or_above_max = ctx
        .succ_partial_plus
        .compose(&rank.transpose())
        .compose(&Relation::top(p.size()))
        .complement();
    let room = cardinality_leq(&roots(p), &numbers_at_or_above_max)
        .expect("roots and its complement bound are vectors");
    mapping && strict && room
}

/// Rank value of a root as a point: rank[r].
pub fn rank_at(rank: &Relation, node: &Relation) -> Relation {
    aread(rank, node)
}
