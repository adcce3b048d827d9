//! Property tests and brute-force validations that go beyond the law
//! suites: text-format round trips, the closure against a step-by-step
//! oracle, and the cardinality comparison against its existential form.

use proptest::prelude::*;

use relforest_core::classify;
use relforest_core::gen;
use relforest_core::relation::{cardinality_leq, choose_point, down_count, Relation};

fn relation_strategy(max_n: usize) -> impl Strategy<Value = Relation> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            Relation::from_fn(n, |i, j| bits[i * n + j])
        })
    })
}

proptest! {
    #[test]
    fn parse_print_round_trip(r in relation_strategy(9)) {
        let text = r.to_string();
        let back: Relation = text.parse().unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn star_is_the_iterated_closure(r in relation_strategy(6)) {
        // oracle: grow by single compose steps instead of squaring
        let mut closure = Relation::identity(r.size());
        loop {
            let next = closure.join(&closure.compose(&r));
            if next == closure {
                break;
            }
            closure = next;
        }
        prop_assert_eq!(r.star(), closure);
        prop_assert!(r.plus().leq(&r.star()));
    }

    #[test]
    fn transpose_is_involutive_and_reverses_composition(
        a in relation_strategy(6),
        bits in proptest::collection::vec(any::<bool>(), 81),
    ) {
        let b = Relation::from_fn(a.size(), |i, j| bits[i * a.size() + j]);
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(
            a.compose(&b).transpose(),
            b.transpose().compose(&a.transpose())
        );
    }

    #[test]
    fn classify_flags_stay_consistent(r in relation_strategy(5)) {
        let report = classify::classify(&r);
        prop_assert_eq!(report.equivalence, report.reflexive && report.transitive && report.symmetric);
        prop_assert_eq!(report.mapping, report.univalent && report.total);
        prop_assert_eq!(report.bijective, report.injective && report.surjective);
        prop_assert_eq!(report.point, report.vector && report.bijective);
        prop_assert_eq!(report.forest, classify::is_forest(&r));
    }
}

#[test]
fn plus_below_star_on_random_relations_n5() {
    let mut rng = gen::rng_from_seed(500);
    for _ in 0..200 {
        let r = gen::relation(&mut rng, 5);
        assert!(r.plus().leq(&r.star()));
    }
}

#[test]
fn choose_point_satisfies_both_axioms_exhaustively() {
    for n in 1..=4 {
        for v in gen::all_vectors(n) {
            if v.is_empty() {
                assert!(choose_point(&v).is_err());
            } else {
                let p = choose_point(&v).unwrap();
                assert!(classify::is_point(&p));
                assert!(p.leq(&v));
            }
        }
    }
}

#[test]
fn down_count_is_strictly_monotone_on_vectors_n4() {
    let vectors = gen::all_vectors(4);
    for u in &vectors {
        for v in &vectors {
            if u.leq(v) && u != v {
                assert!(down_count(u).unwrap() < down_count(v).unwrap());
            }
        }
    }
}

/// The existential definition of |v| <= |w|: some injective univalent i
/// with v below i . w.
fn cardinality_leq_by_witness(v: &Relation, w: &Relation, candidates: &[Relation]) -> bool {
    candidates.iter().any(|i| v.leq(&i.compose(w)))
}

#[test]
fn cardinality_comparison_matches_the_existential_definition() {
    for n in 1..=3 {
        let candidates: Vec<Relation> = gen::all_relations(n)
            .into_iter()
            .filter(|i| classify::is_injective(i) && classify::is_univalent(i))
            .collect();
        for v in gen::all_vectors(n) {
            for w in gen::all_vectors(n) {
                assert_eq!(
                    cardinality_leq(&v, &w).unwrap(),
                    cardinality_leq_by_witness(&v, &w, &candidates),
                    "n={n} v={v:?} w={w:?}"
                );
            }
        }
    }
}

#[test]
fn cardinality_examples() {
    // the empty vector fits into anything
    assert!(cardinality_leq(&Relation::bot(3), &Relation::top(3)).unwrap());
    // two elements cannot fit into one
    assert!(!cardinality_leq(&Relation::top(2), &Relation::vector(2, &[0])).unwrap());
    // equal counts compare both ways
    let v = Relation::vector(3, &[0, 1]);
    let w = Relation::vector(3, &[1, 2]);
    assert!(cardinality_leq(&v, &w).unwrap() && cardinality_leq(&w, &v).unwrap());
}
