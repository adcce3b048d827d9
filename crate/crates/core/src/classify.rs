//! Derived predicates on relations, each computed from its defining
//! (in)equation over the algebra operations.

use crate::relation::Relation;

/// One flag per derived predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PredicateReport {
    pub reflexive: bool,
    pub transitive: bool,
    pub symmetric: bool,
    pub equivalence: bool,
    pub total: bool,
    pub surjective: bool,
    pub univalent: bool,
    pub injective: bool,
    pub bijective: bool,
    pub mapping: bool,
    pub vector: bool,
    pub point: bool,
    pub arc: bool,
    pub acyclic: bool,
    pub forest: bool,
    pub irreflexive: bool,
}

pub fn is_reflexive(x: &Relation) -> bool {
    Relation::identity(x.size()).leq(x)
}

pub fn is_transitive(x: &Relation) -> bool {
    x.compose(x).leq(x)
}

pub fn is_symmetric(x: &Relation) -> bool {
    x.transpose() == *x
}

pub fn is_equivalence(x: &Relation) -> bool {
    is_reflexive(x) && is_transitive(x) && is_symmetric(x)
}

pub fn is_total(x: &Relation) -> bool {
    Relation::identity(x.size()).leq(&x.compose(&x.transpose()))
}

pub fn is_surjective(x: &Relation) -> bool {
    Relation::identity(x.size()).leq(&x.transpose().compose(x))
}

pub fn is_univalent(x: &Relation) -> bool {
    x.transpose().compose(x).leq(&Relation::identity(x.size()))
}

pub fn is_injective(x: &Relation) -> bool {
    x.compose(&x.transpose()).leq(&Relation::identity(x.size()))
}

pub fn is_bijective(x: &Relation) -> bool {
    is_injective(x) && is_surjective(x)
}

pub fn is_mapping(x: &Relation) -> bool {
    is_univalent(x) && is_total(x)
}

pub fn is_vector(x: &Relation) -> bool {
    x.compose(&Relation::top(x.size())) == *x
}

pub fn is_point(x: &Relation) -> bool {
    is_vector(x) && is_bijective(x)
}

pub fn is_arc(x: &Relation) -> bool {
    let top = Relation::top(x.size());
    is_bijective(&x.compose(&top)) && is_bijective(&x.transpose().compose(&top))
}

/// x⁺ ⊑ ¬1.
pub fn is_acyclic(x: &Relation) -> bool {
    x.plus().leq(&Relation::identity(x.size()).complement())
}

pub fn is_irreflexive(x: &Relation) -> bool {
    x.leq(&Relation::identity(x.size()).complement())
}

/// A mapping whose non-loop part is acyclic: a parent structure whose roots
/// carry self-loops.
pub fn is_forest(x: &Relation) -> bool {
    is_mapping(x) && is_acyclic(&x.difference(&Relation::identity(x.size())))
}

pub fn classify(x: &Relation) -> PredicateReport {
    let reflexive = is_reflexive(x);
    let transitive = is_transitive(x);
    let symmetric = is_symmetric(x);
    let total = is_total(x);
    let surjective = is_surjective(x);
    let univalent = is_univalent(x);
    let injective = is_injective(x);
    let vector = is_vector(x);
    let acyclic = is_acyclic(x);
    let irreflexive = is_irreflexive(x);
    let bijective = injective && surjective;
    let mapping = univalent && total;
    PredicateReport {
        reflexive,
        transitive,
        symmetric,
        equivalence: reflexive && transitive && symmetric,
        total,
        surjective,
        univalent,
        injective,
        bijective,
        mapping,
        vector,
        point: vector && bijective,
        arc: is_arc(x),
        acyclic,
        forest: mapping && is_acyclic(&x.difference(&Relation::identity(x.size()))),
        irreflexive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_report() {
        let r = classify(&Relation::identity(3));
        assert!(r.reflexive && r.transitive && r.symmetric && r.equivalence);
        assert!(r.mapping && r.bijective && r.forest);
        assert!(!r.vector && !r.point && !r.irreflexive);
    }

    #[test]
    fn point_is_vector_not_univalent() {
        // row 1 all ones on a three-element universe
        let y = Relation::point(3, 1);
        let r = classify(&y);
        assert!(r.vector && r.point && r.bijective);
        assert!(!r.univalent && !r.mapping);
    }

    #[test]
    fn parent_chain_is_forest() {
        let p = Relation::from_pairs(3, &[(0, 1), (1, 2), (2, 2)]);
        let r = classify(&p);
        assert!(r.mapping);
        assert!(is_acyclic(&p.difference(&Relation::identity(3))));
        assert!(r.forest);
        assert!(!r.acyclic); // the root self-loop is a cycle of length one
    }

    #[test]
    fn cycle_is_not_forest() {
        let p = Relation::from_pairs(3, &[(0, 1), (1, 0), (2, 2)]);
        assert!(is_mapping(&p));
        assert!(!is_forest(&p));
    }

    #[test]
    fn arc_flags() {
        assert!(is_arc(&Relation::from_pairs(3, &[(1, 2)])));
        assert!(!is_arc(&Relation::from_pairs(3, &[(1, 2), (0, 0)])));
        assert!(!is_arc(&Relation::bot(3)));
    }

    #[test]
    fn derived_flags_are_consistent() {
        // exhaustive over the 512 relations at n = 3
        for code in 0u32..512 {
            let x = Relation::from_fn(3, |i, j| code >> (i * 3 + j) & 1 == 1);
            let r = classify(&x);
            assert_eq!(r.equivalence, r.reflexive && r.transitive && r.symmetric);
            assert_eq!(r.mapping, r.univalent && r.total);
            assert_eq!(r.bijective, r.injective && r.surjective);
            assert_eq!(r.point, r.vector && r.bijective);
            assert_eq!(r.forest, is_forest(&x));
        }
    }
}
