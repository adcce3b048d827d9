//! The general-purpose proof laws: twelve groups covering vectors, partial
//! identities, bijective shunting, mappings, arcs and star idempotence.

use super::basic::{accept_all, any};
use super::{equation, EquationLaw, Law};
use crate::classify::{
    is_arc, is_bijective, is_injective, is_mapping, is_point, is_surjective, is_univalent,
    is_vector,
};
use crate::gen;
use crate::relation::Relation;

pub(super) fn laws() -> Vec<Law> {
    vec![
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b1-vector-meet-compose",
            operands: &["u", "x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![gen::vector(rng, n), gen::relation(rng, n), gen::relation(rng, n)]
            }),
            qualifier: Box::new(|t| is_vector(&t[0])),
            check: Box::new(|_, t| {
                let (u, x, y) = (&t[0], &t[1], &t[2]);
                u.meet(&x.compose(y)) == u.meet(x).compose(y)
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b1-vector-restrict-right",
            operands: &["u", "x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![gen::vector(rng, n), gen::relation(rng, n), gen::relation(rng, n)]
            }),
            qualifier: Box::new(|t| is_vector(&t[0])),
            check: Box::new(|_, t| {
                let (u, x, y) = (&t[0], &t[1], &t[2]);
                x.meet(&u.transpose()).compose(y) == x.compose(&u.meet(y))
                    && x.compose(&y.meet(&u.transpose()))
                        == x.compose(y).meet(&u.transpose())
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b1-vector-closure",
            operands: &["u", "v", "x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![gen::vector(rng, n), gen::vector(rng, n), gen::relation(rng, n)]
            }),
            qualifier: Box::new(|t| is_vector(&t[0]) && is_vector(&t[1])),
            check: Box::new(|_, t| {
                let (u, v, x) = (&t[0], &t[1], &t[2]);
                is_vector(&u.meet(v)) && is_vector(&x.compose(u)) && is_vector(&u.complement())
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b1-vector-meet-is-compose",
            operands: &["u", "v"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::vector(rng, n), gen::vector(rng, n)]),
            qualifier: Box::new(|t| is_vector(&t[0]) && is_vector(&t[1])),
            check: Box::new(|_, t| {
                let (u, v) = (&t[0], &t[1]);
                u.meet(&v.transpose()) == u.compose(&v.transpose())
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b2-partial-identity",
            operands: &["u", "x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::partial_identity(rng, n), gen::relation(rng, n)]),
            qualifier: Box::new(|t| {
                let n = t[0].size();
                t[0].leq(&Relation::identity(n))
            }),
            check: Box::new(|n, t| {
                let (u, x) = (&t[0], &t[1]);
                u.compose(&Relation::top(n)).meet(x) == u.compose(x)
                    && u.transpose() == *u
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b2-diagonal-transpose",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: any(1),
            qualifier: accept_all(),
            check: Box::new(|n, t| {
                let one = Relation::identity(n);
                t[0].meet(&one) == t[0].transpose().meet(&one)
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b3-star-commute",
            operands: &["u", "v"],
            exhaustive_max: 2,
            // u a partial injection and v inside its transpose keeps the
            // composition below the identity
            sampler: Box::new(|rng, n| {
                let u = gen::injective_univalent(rng, n);
                let v = gen::subrelation(rng, &u.transpose());
                vec![u, v]
            }),
            qualifier: Box::new(|t| {
                let n = t[0].size();
                t[0].compose(&t[1]).leq(&Relation::identity(n))
            }),
            check: Box::new(|_, t| {
                let (u, v) = (&t[0], &t[1]);
                u.join(v).star() == v.star().compose(&u.star())
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b4-injective-split",
            operands: &["u", "v"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                let v = gen::injective(rng, n);
                let u = gen::subrelation(rng, &v);
                vec![u, v]
            }),
            qualifier: Box::new(|t| t[0].leq(&t[1]) && is_injective(&t[1])),
            check: Box::new(|n, t| {
                let (u, v) = (&t[0], &t[1]);
                *u == v.meet(&Relation::top(n).compose(u))
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b5-surjective-char",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                use rand::Rng;
                vec![if rng.random::<bool>() {
                    gen::surjective(rng, n)
                } else {
                    gen::relation(rng, n)
                }]
            }),
            qualifier: accept_all(),
            check: Box::new(|n, t| {
                let top = Relation::top(n);
                is_surjective(&t[0]) == (top.compose(&t[0]) == top)
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b6-bijective-shunt",
            operands: &["u", "v", "x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                use rand::Rng;
                let u = gen::bijective(rng, n);
                let v = gen::bijective(rng, n);
                let x = if rng.random::<bool>() {
                    // aligned: guarantees u ⊑ x·v
                    u.compose(&v.transpose()).join(&gen::relation(rng, n))
                } else {
                    gen::relation(rng, n)
                };
                vec![u, v, x]
            }),
            qualifier: Box::new(|t| is_bijective(&t[0]) && is_bijective(&t[1])),
            check: Box::new(|_, t| {
                let (u, v, x) = (&t[0], &t[1], &t[2]);
                u.leq(&x.compose(v)) == v.leq(&x.transpose().compose(u))
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b6-bijective-shunt-sides",
            operands: &["u", "x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![gen::bijective(rng, n), gen::relation(rng, n), gen::relation(rng, n)]
            }),
            qualifier: Box::new(|t| is_bijective(&t[0])),
            check: Box::new(|_, t| {
                let (u, x, y) = (&t[0], &t[1], &t[2]);
                x.leq(&y.compose(u)) == x.compose(&u.transpose()).leq(y)
                    && x.leq(&u.transpose().compose(y)) == u.compose(x).leq(y)
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b7-univalent-meet",
            operands: &["u", "x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![gen::univalent(rng, n), gen::relation(rng, n), gen::relation(rng, n)]
            }),
            qualifier: Box::new(|t| is_univalent(&t[0])),
            check: Box::new(|_, t| {
                let (u, x, y) = (&t[0], &t[1], &t[2]);
                u.compose(&x.meet(y)) == u.compose(x).meet(&u.compose(y))
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b8-mapping-compose",
            operands: &["u", "v"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::mapping(rng, n), gen::mapping(rng, n)]),
            qualifier: Box::new(|t| is_mapping(&t[0]) && is_mapping(&t[1])),
            check: Box::new(|_, t| is_mapping(&t[0].compose(&t[1]))),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b8-mapping-complement",
            operands: &["u", "x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::mapping(rng, n), gen::relation(rng, n)]),
            qualifier: Box::new(|t| is_mapping(&t[0])),
            check: Box::new(|_, t| {
                let (u, x) = (&t[0], &t[1]);
                u.compose(x).complement() == u.compose(&x.complement())
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b9-mapping-point-arc",
            operands: &["u", "v"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::mapping(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| is_mapping(&t[0]) && is_point(&t[1])),
            check: Box::new(|_, t| is_arc(&t[0].meet(&t[1]))),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b10-arc-absorption",
            operands: &["u", "x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::arc(rng, n), gen::relation(rng, n)]),
            qualifier: Box::new(|t| is_arc(&t[0])),
            check: Box::new(|_, t| {
                let (u, x) = (&t[0], &t[1]);
                u.compose(x).compose(u).leq(u)
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b11-shunting",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                use rand::Rng;
                let x = gen::sparse(rng, n);
                let y = gen::sparse(rng, n);
                let z = if rng.random::<bool>() {
                    x.compose(&y).join(&gen::sparse(rng, n))
                } else {
                    gen::relation(rng, n)
                };
                vec![x, y, z]
            }),
            qualifier: accept_all(),
            check: Box::new(|n, t| {
                let (x, y, z) = (&t[0], &t[1], &t[2]);
                let not_one = Relation::identity(n).complement();
                x.meet(y).leq(z) == x.leq(&z.join(&y.complement()))
                    && x.compose(y).leq(z)
                        == x.transpose().compose(&z.complement()).leq(&y.complement())
                    && x.compose(y).leq(&not_one) == y.compose(x).leq(&not_one)
            }),
        }),
        equation(EquationLaw {
            suite: "appendix-b",
            name: "b12-star-idempotents",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: any(1),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                let x = &t[0];
                x.star().compose(&x.star()) == x.star()
                    && x.star().star() == x.star()
                    && x.plus().plus() == x.plus()
            }),
        }),
    ]
}

#[cfg(test)]
mod tests {
    use crate::laws::{run_suite, LawConfig};

    #[test]
    fn appendix_laws_pass_at_n3() {
        let cfg = LawConfig {
            n_max: 3,
            samples: 200,
            seed: 9,
        };
        for report in run_suite("appendix-b", &cfg).unwrap() {
            assert!(report.passed(), "{} failed", report.full_name());
            assert!(report.cases > 0, "{} ran no cases", report.full_name());
        }
    }
}
