//! Components, roots and ancestors of graphs given as relations.

use crate::array::aread;
use crate::relation::Relation;

/// Weakly-connected components: wcc(x) = (x ⊔ xᵀ)*, the equivalence closure.
pub fn wcc(x: &Relation) -> Relation {
    x.join(&x.transpose()).star()
}

/// Same-tree relation of a forest: fc(x) = x* · xᵀ*. Coincides with wcc
/// for univalent x.
pub fn fc(x: &Relation) -> Relation {
    x.star().compose(&x.transpose().star())
}

/// Vector of all self-looped nodes: roots(p) = (p ⊓ 1) · ⊤.
pub fn roots(p: &Relation) -> Relation {
    p.meet(&Relation::identity(p.size()))
        .compose(&Relation::top(p.size()))
}

/// Ancestors of x in p: the vector p*[x] = pᵀ* · x of nodes reachable from
/// x by following parents zero or more times.
pub fn ancestors(p: &Relation, x: &Relation) -> Relation {
    aread(&p.star(), x)
}

/// The roots reachable from x: root(p, x) = p*[x] ⊓ roots(p). A point for
/// every forest p and point x.
pub fn root_of(p: &Relation, x: &Relation) -> Relation {
    ancestors(p, x).meet(&roots(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{is_equivalence, is_point};

    #[test]
    fn wcc_extremes() {
        assert_eq!(wcc(&Relation::bot(3)), Relation::identity(3));
        assert_eq!(wcc(&Relation::identity(3)), Relation::identity(3));
        assert_eq!(wcc(&Relation::top(3)), Relation::top(3));
    }

    #[test]
    fn wcc_single_edge() {
        // one edge merges {0, 1}, leaving {2} alone
        let got = wcc(&Relation::from_pairs(3, &[(0, 1)]));
        let expected =
            Relation::from_pairs(3, &[(0, 0), (0, 1), (1, 0), (1, 1), (2, 2)]);
        assert_eq!(got, expected);
        assert!(is_equivalence(&got));
    }

    #[test]
    fn fc_extremes() {
        assert_eq!(fc(&Relation::bot(3)), Relation::identity(3));
        assert_eq!(fc(&Relation::identity(3)), Relation::identity(3));
        assert_eq!(fc(&Relation::top(3)), Relation::top(3));
    }

    #[test]
    fn fc_equals_wcc_on_forest() {
        let p = Relation::from_pairs(3, &[(0, 1), (1, 2), (2, 2)]);
        assert_eq!(fc(&p), wcc(&p));
    }

    #[test]
    fn roots_of_identity() {
        assert_eq!(roots(&Relation::identity(4)), Relation::top(4));
    }

    #[test]
    fn root_of_chain() {
        let p = Relation::from_pairs(3, &[(0, 1), (1, 2), (2, 2)]);
        // independent oracle: follow the parent chain to its fixpoint
        let mut node = 0;
        loop {
            let next = (0..3).find(|&j| p.get(node, j)).unwrap();
            if next == node {
                break;
            }
            node = next;
        }
        assert_eq!(node, 2);
        let r = root_of(&p, &Relation::point(3, 0));
        assert!(is_point(&r));
        assert_eq!(r, Relation::point(3, 2));
    }

    #[test]
    fn root_of_bottom_is_bottom() {
        let p = Relation::identity(3);
        assert_eq!(root_of(&p, &Relation::bot(3)), Relation::bot(3));
    }
}
