//! Preservation and lens laws of the array read and write operations.

use super::basic::{accept_all, any};
use super::{equation, EquationLaw, Law};
use crate::array::{aread, awrite};
use crate::classify::{
    is_arc, is_bijective, is_injective, is_mapping, is_point, is_surjective, is_total,
    is_univalent, is_vector,
};
use crate::gen;
use crate::relation::Relation;

pub(super) fn laws() -> Vec<Law> {
    let mut laws = preservation_laws();
    laws.extend(lens_laws());
    laws
}

fn preservation_laws() -> Vec<Law> {
    vec![
        equation(EquationLaw {
            suite: "arrays",
            name: "write-univalent",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![
                    gen::univalent(rng, n),
                    gen::vector(rng, n),
                    gen::injective(rng, n),
                ]
            }),
            qualifier: Box::new(|t| {
                is_univalent(&t[0]) && is_vector(&t[1]) && is_injective(&t[2])
            }),
            check: Box::new(|_, t| is_univalent(&awrite(&t[0], &t[1], &t[2]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "write-total",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![
                    gen::total(rng, n),
                    gen::vector(rng, n),
                    gen::surjective(rng, n),
                ]
            }),
            qualifier: Box::new(|t| is_total(&t[0]) && is_vector(&t[1]) && is_surjective(&t[2])),
            check: Box::new(|_, t| is_total(&awrite(&t[0], &t[1], &t[2]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "write-mapping",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![
                    gen::mapping(rng, n),
                    gen::vector(rng, n),
                    gen::bijective(rng, n),
                ]
            }),
            qualifier: Box::new(|t| is_mapping(&t[0]) && is_vector(&t[1]) && is_bijective(&t[2])),
            check: Box::new(|_, t| is_mapping(&awrite(&t[0], &t[1], &t[2]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "read-injective",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::univalent(rng, n), gen::injective(rng, n)]),
            qualifier: Box::new(|t| is_univalent(&t[0]) && is_injective(&t[1])),
            check: Box::new(|_, t| is_injective(&aread(&t[0], &t[1]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "read-surjective",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::total(rng, n), gen::surjective(rng, n)]),
            qualifier: Box::new(|t| is_total(&t[0]) && is_surjective(&t[1])),
            check: Box::new(|_, t| is_surjective(&aread(&t[0], &t[1]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "read-bijective",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::mapping(rng, n), gen::bijective(rng, n)]),
            qualifier: Box::new(|t| is_mapping(&t[0]) && is_bijective(&t[1])),
            check: Box::new(|_, t| is_bijective(&aread(&t[0], &t[1]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "read-point",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::mapping(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| is_mapping(&t[0]) && is_point(&t[1])),
            check: Box::new(|_, t| is_point(&aread(&t[0], &t[1]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "read-iff",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            // mix aligned tuples (z = x[y]) with arbitrary points so both
            // sides of the equivalence are exercised
            sampler: Box::new(|rng, n| {
                use rand::Rng;
                let x = gen::relation(rng, n);
                let y = gen::point(rng, n);
                let read = aread(&x, &y);
                let z = if rng.random::<bool>() && is_point(&read) {
                    read
                } else {
                    gen::point(rng, n)
                };
                vec![x, y, z]
            }),
            qualifier: Box::new(|t| is_point(&t[1]) && is_point(&t[2])),
            check: Box::new(|_, t| {
                let (x, y, z) = (&t[0], &t[1], &t[2]);
                (aread(x, y) == *z) == (y.meet(x) == y.compose(&z.transpose()))
            }),
        }),
    ]
}

fn lens_laws() -> Vec<Law> {
    vec![
        equation(EquationLaw {
            suite: "arrays",
            name: "put-get",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![
                    gen::relation(rng, n),
                    gen::nonempty_vector(rng, n),
                    gen::vector(rng, n),
                ]
            }),
            qualifier: Box::new(|t| {
                is_vector(&t[1]) && is_surjective(&t[1]) && is_vector(&t[2])
            }),
            check: Box::new(|_, t| aread(&awrite(&t[0], &t[1], &t[2]), &t[1]) == t[2]),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "put-get-different",
            operands: &["x", "y", "z", "u"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                let y = gen::vector(rng, n);
                let u = gen::subrelation(rng, &y.complement());
                vec![gen::relation(rng, n), y, gen::relation(rng, n), u]
            }),
            qualifier: Box::new(|t| is_vector(&t[1]) && t[3].leq(&t[1].complement())),
            check: Box::new(|_, t| {
                aread(&awrite(&t[0], &t[1], &t[2]), &t[3]) == aread(&t[0], &t[3])
            }),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "put-put",
            operands: &["x", "y", "z", "u"],
            exhaustive_max: 2,
            sampler: any(4),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                awrite(&awrite(&t[0], &t[1], &t[2]), &t[1], &t[3])
                    == awrite(&t[0], &t[1], &t[3])
            }),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "put-put-commute",
            operands: &["x", "y", "z", "u", "v"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                let y = gen::vector(rng, n);
                let u = gen::vector(rng, n).meet(&y.complement());
                vec![
                    gen::relation(rng, n),
                    y,
                    gen::relation(rng, n),
                    u,
                    gen::relation(rng, n),
                ]
            }),
            qualifier: Box::new(|t| {
                is_vector(&t[1]) && is_vector(&t[3]) && t[1].meet(&t[3]).is_empty()
            }),
            check: Box::new(|_, t| {
                let (x, y, z, u, v) = (&t[0], &t[1], &t[2], &t[3], &t[4]);
                awrite(&awrite(x, y, z), u, v) == awrite(&awrite(x, u, v), y, z)
            }),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "get-put",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::relation(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| is_point(&t[1])),
            check: Box::new(|_, t| awrite(&t[0], &t[1], &aread(&t[0], &t[1])) == t[0]),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "update-same",
            operands: &["x", "y", "z", "u"],
            exhaustive_max: 2,
            sampler: any(4),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                let (x, y, z, u) = (&t[0], &t[1], &t[2], &t[3]);
                awrite(&awrite(x, y, z), u, z) == awrite(x, &y.join(u), z)
            }),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "update-split",
            operands: &["x", "y", "z", "w"],
            exhaustive_max: 2,
            sampler: any(4),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                let (x, y, z, w) = (&t[0], &t[1], &t[2], &t[3]);
                awrite(x, y, z)
                    == awrite(&awrite(x, &y.difference(w), z), &y.meet(w), z)
            }),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "swap-injective",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![
                    gen::injective(rng, n),
                    gen::point(rng, n),
                    gen::injective_vector(rng, n),
                ]
            }),
            qualifier: Box::new(|t| {
                is_injective(&t[0])
                    && is_point(&t[1])
                    && is_vector(&t[2])
                    && is_injective(&t[2])
            }),
            check: Box::new(|_, t| is_injective(&swap(&t[0], &t[1], &t[2]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "swap-univalent",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![
                    gen::univalent(rng, n),
                    gen::injective_vector(rng, n),
                    gen::injective_vector(rng, n),
                ]
            }),
            qualifier: Box::new(|t| {
                is_univalent(&t[0])
                    && is_vector(&t[1])
                    && is_injective(&t[1])
                    && is_vector(&t[2])
                    && is_injective(&t[2])
            }),
            check: Box::new(|_, t| is_univalent(&swap(&t[0], &t[1], &t[2]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "swap-mapping",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![gen::mapping(rng, n), gen::point(rng, n), gen::point(rng, n)]
            }),
            qualifier: Box::new(|t| is_mapping(&t[0]) && is_point(&t[1]) && is_point(&t[2])),
            check: Box::new(|_, t| is_mapping(&swap(&t[0], &t[1], &t[2]))),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "update-bot",
            operands: &["x", "z"],
            exhaustive_max: 2,
            sampler: any(2),
            qualifier: accept_all(),
            check: Box::new(|n, t| awrite(&t[0], &Relation::bot(n), &t[1]) == t[0]),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "update-top",
            operands: &["x", "z"],
            exhaustive_max: 2,
            sampler: any(2),
            qualifier: accept_all(),
            check: Box::new(|n, t| {
                awrite(&t[0], &Relation::top(n), &t[1]) == t[1].transpose()
            }),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "update-ub",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: any(3),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                awrite(&t[0], &t[1], &t[2]).leq(&t[0].join(&t[2].transpose()))
            }),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "update-same-sub",
            operands: &["x", "y", "z", "u"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                // construct z to agree with x on u, which makes the write a
                // no-op at the rows below u
                let x = gen::relation(rng, n);
                let u = gen::relation(rng, n);
                let y = gen::subrelation(rng, &u);
                let z = u.meet(&x).join(&u.complement().meet(&gen::relation(rng, n)));
                vec![x, y, z, u]
            }),
            qualifier: Box::new(|t| t[1].leq(&t[3]) && t[3].meet(&t[0]) == t[3].meet(&t[2])),
            check: Box::new(|_, t| awrite(&t[0], &t[1], &t[2].transpose()) == t[0]),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "update-point-get",
            operands: &["x", "y", "z"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                vec![gen::relation(rng, n), gen::point(rng, n), gen::relation(rng, n)]
            }),
            qualifier: Box::new(|t| is_point(&t[1])),
            check: Box::new(|_, t| {
                let (x, y, z) = (&t[0], &t[1], &t[2]);
                awrite(x, y, &aread(z, y)) == awrite(x, y, &z.transpose())
            }),
        }),
        equation(EquationLaw {
            suite: "arrays",
            name: "mapping-point-arc",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::mapping(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| is_mapping(&t[0]) && is_point(&t[1])),
            check: Box::new(|_, t| is_arc(&t[0].meet(&t[1]))),
        }),
    ]
}

/// The double update exchanging the values at indices y and z.
fn swap(x: &Relation, y: &Relation, z: &Relation) -> Relation {
    awrite(&awrite(x, y, &aread(x, z)), z, &aread(x, y))
}

#[cfg(test)]
mod tests {
    use crate::laws::{run_suite, LawConfig};

    #[test]
    fn array_suite_has_all_24_parts() {
        let cfg = LawConfig {
            n_max: 1,
            samples: 0,
            seed: 0,
        };
        assert_eq!(run_suite("arrays", &cfg).unwrap().len(), 24);
    }

    #[test]
    fn array_laws_pass_at_n3() {
        let cfg = LawConfig {
            n_max: 3,
            samples: 200,
            seed: 5,
        };
        for report in run_suite("arrays", &cfg).unwrap() {
            assert!(report.passed(), "{} failed", report.full_name());
            assert!(report.cases > 0, "{} ran no cases", report.full_name());
        }
    }
}
