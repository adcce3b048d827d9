//! Laws of the component operations wcc and fc and of roots.

use super::basic::{accept_all, any};
use super::{equation, EquationLaw, Law};
use crate::array::aread;
use crate::classify::{is_equivalence, is_forest, is_point, is_univalent};
use crate::components::{ancestors, fc, root_of, roots, wcc};
use crate::gen::{self};
use crate::relation::Relation;

pub(super) fn laws() -> Vec<Law> {
    vec![
        equation(EquationLaw {
            suite: "wcc",
            name: "equivalence",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: any(1),
            qualifier: accept_all(),
            check: Box::new(|_, t| is_equivalence(&wcc(&t[0]))),
        }),
        equation(EquationLaw {
            suite: "wcc",
            name: "closure",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: any(2),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                wcc(&wcc(x)) == wcc(x)
                    && x.leq(&wcc(x))
                    && wcc(&x.meet(y)).leq(&wcc(y))
            }),
        }),
        equation(EquationLaw {
            suite: "wcc",
            name: "galois",
            operands: &["x", "y"],
            exhaustive_max: 2,
            // mix in operands already below wcc(y) so both directions of
            // the equivalence get exercised
            sampler: Box::new(|rng, n| {
                use rand::Rng;
                let y = gen::relation(rng, n);
                let x = if rng.random::<bool>() {
                    gen::subrelation(rng, &wcc(&y))
                } else {
                    gen::relation(rng, n)
                };
                vec![x, y]
            }),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                x.leq(&wcc(y)) == wcc(x).leq(&wcc(y))
            }),
        }),
        equation(EquationLaw {
            suite: "wcc",
            name: "bot-one",
            operands: &[],
            exhaustive_max: 2,
            sampler: any(0),
            qualifier: accept_all(),
            check: Box::new(|n, _| {
                let one = Relation::identity(n);
                wcc(&Relation::bot(n)) == one && wcc(&one) == one
            }),
        }),
        equation(EquationLaw {
            suite: "wcc",
            name: "top",
            operands: &[],
            exhaustive_max: 2,
            sampler: any(0),
            qualifier: accept_all(),
            check: Box::new(|n, _| wcc(&Relation::top(n)) == Relation::top(n)),
        }),
        equation(EquationLaw {
            suite: "wcc",
            name: "loops",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: any(1),
            qualifier: accept_all(),
            check: Box::new(|n, t| {
                let x = &t[0];
                let one = Relation::identity(n);
                wcc(&x.join(&one)) == wcc(x) && wcc(&x.difference(&one)) == wcc(x)
            }),
        }),
        equation(EquationLaw {
            suite: "wcc",
            name: "join",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: any(2),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                wcc(&x.join(y)) == wcc(&x.join(&wcc(y)))
            }),
        }),
        equation(EquationLaw {
            suite: "fc",
            name: "equivalence",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::univalent(rng, n)]),
            qualifier: Box::new(|t| is_univalent(&t[0])),
            check: Box::new(|_, t| is_equivalence(&fc(&t[0]))),
        }),
        equation(EquationLaw {
            suite: "fc",
            name: "increasing",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: any(1),
            qualifier: accept_all(),
            check: Box::new(|_, t| t[0].leq(&fc(&t[0]))),
        }),
        equation(EquationLaw {
            suite: "fc",
            name: "isotone",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: any(2),
            qualifier: accept_all(),
            check: Box::new(|_, t| fc(&t[0].meet(&t[1])).leq(&fc(&t[1]))),
        }),
        equation(EquationLaw {
            suite: "fc",
            name: "idempotent",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::univalent(rng, n)]),
            qualifier: Box::new(|t| is_univalent(&t[0])),
            check: Box::new(|_, t| fc(&fc(&t[0])) == fc(&t[0])),
        }),
        equation(EquationLaw {
            suite: "fc",
            name: "star",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::univalent(rng, n)]),
            qualifier: Box::new(|t| is_univalent(&t[0])),
            check: Box::new(|_, t| {
                let c = fc(&t[0]);
                c.star() == c && c.plus() == c
            }),
        }),
        equation(EquationLaw {
            suite: "fc",
            name: "bot-one",
            operands: &[],
            exhaustive_max: 2,
            sampler: any(0),
            qualifier: accept_all(),
            check: Box::new(|n, _| {
                let one = Relation::identity(n);
                fc(&Relation::bot(n)) == one && fc(&one) == one
            }),
        }),
        equation(EquationLaw {
            suite: "fc",
            name: "top",
            operands: &[],
            exhaustive_max: 2,
            sampler: any(0),
            qualifier: accept_all(),
            check: Box::new(|n, _| fc(&Relation::top(n)) == Relation::top(n)),
        }),
        equation(EquationLaw {
            suite: "fc",
            name: "wcc-agreement",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::univalent(rng, n)]),
            qualifier: Box::new(|t| is_univalent(&t[0])),
            check: Box::new(|_, t| fc(&t[0]) == wcc(&t[0])),
        }),
        equation(EquationLaw {
            suite: "roots",
            name: "meet-form",
            operands: &["p", "x"],
            exhaustive_max: 2,
            sampler: any(2),
            qualifier: accept_all(),
            check: Box::new(|n, t| {
                let (p, x) = (&t[0], &t[1]);
                root_of(p, x)
                    == p.meet(&Relation::identity(n)).compose(&ancestors(p, x))
            }),
        }),
        equation(EquationLaw {
            suite: "roots",
            name: "successor-loop",
            operands: &["p", "x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![gen::univalent(rng, n), gen::relation(rng, n)]
            }),
            qualifier: Box::new(|t| is_univalent(&t[0])),
            check: Box::new(|_, t| {
                let (p, x) = (&t[0], &t[1]);
                let root = root_of(p, x);
                let all = roots(p);
                root == aread(p, &root)
                    && root == ancestors(p, &root)
                    && all == aread(p, &all)
                    && all == ancestors(p, &all)
            }),
        }),
        equation(EquationLaw {
            suite: "roots",
            name: "root-is-point",
            operands: &["p", "x"],
            exhaustive_max: 3,
            sampler: Box::new(|rng, n| vec![gen::forest(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| is_forest(&t[0]) && is_point(&t[1])),
            check: Box::new(|_, t| is_point(&root_of(&t[0], &t[1]))),
        }),
    ]
}

#[cfg(test)]
mod tests {
    use crate::laws::{run_suite, LawConfig};

    #[test]
    fn component_suites_pass_at_n3() {
        let cfg = LawConfig {
            n_max: 3,
            samples: 300,
            seed: 2,
        };
        for suite in ["wcc", "fc", "roots"] {
            for report in run_suite(suite, &cfg).unwrap() {
                assert!(report.passed(), "{} failed", report.full_name());
                assert!(report.cases > 0, "{} ran no cases", report.full_name());
            }
        }
    }

    #[test]
    fn wcc_suite_has_seven_parts() {
        let cfg = LawConfig {
            n_max: 2,
            samples: 0,
            seed: 0,
        };
        assert_eq!(run_suite("wcc", &cfg).unwrap().len(), 7);
    }
}
