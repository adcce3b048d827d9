//! Forest-update laws: compression updates stay acyclic, grandparent
//! updates preserve components and the forest shape, and reachability
//! decomposes over single arcs.

use rand::Rng;

use super::basic::{accept_all, any};
use super::{equation, EquationLaw, Law};
use crate::array::{aread, awrite};
use crate::classify::{is_acyclic, is_forest, is_mapping, is_point, is_univalent, is_vector, is_arc};
use crate::components::{ancestors, fc};
use crate::gen;
use crate::relation::Relation;

fn strict_part(x: &Relation) -> Relation {
    x.difference(&Relation::identity(x.size()))
}

fn loopy_acyclic(x: &Relation) -> bool {
    is_acyclic(&strict_part(x))
}

pub(super) fn laws() -> Vec<Law> {
    vec![
        equation(EquationLaw {
            suite: "forest",
            name: "update-to-ancestor-acyclic",
            operands: &["p", "w", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                let p = gen::loopy_acyclic(rng, n);
                let w = gen::point(rng, n);
                // y must be an ancestor of w; the ancestor set contains w
                let members = ancestors(&p, &w).vector_members().unwrap_or_default();
                let y = Relation::point(n, members[rng.random_range(0..members.len())]);
                vec![p, w, y]
            }),
            qualifier: Box::new(|t| {
                loopy_acyclic(&t[0])
                    && is_point(&t[1])
                    && is_point(&t[2])
                    && t[2].leq(&ancestors(&t[0], &t[1]))
            }),
            check: Box::new(|_, t| loopy_acyclic(&awrite(&t[0], &t[1], &t[2]))),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "omit-redundant-points",
            operands: &["x", "p"],
            exhaustive_max: 3,
            sampler: Box::new(|rng, n| vec![gen::point(rng, n), gen::relation(rng, n)]),
            qualifier: Box::new(|t| is_point(&t[0])),
            check: Box::new(|n, t| {
                let (x, p) = (&t[0], &t[1]);
                let one = Relation::identity(n);
                x.meet(&p.star())
                    == x.meet(&one)
                        .join(&x.meet(p).compose(&x.complement().meet(p).star()))
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "omit-redundant-points-transposed",
            operands: &["x", "p"],
            exhaustive_max: 3,
            sampler: Box::new(|rng, n| vec![gen::point(rng, n), gen::relation(rng, n)]),
            qualifier: Box::new(|t| is_point(&t[0])),
            check: Box::new(|n, t| {
                let (x, p) = (&t[0], &t[1]);
                let one = Relation::identity(n);
                x.meet(&p.star())
                    == x.meet(&one)
                        .join(&x.meet(&p.meet(&x.complement().transpose()).plus()))
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "distinct-points-disjoint",
            operands: &["x", "y"],
            exhaustive_max: 3,
            sampler: Box::new(|rng, n| vec![gen::point(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| is_point(&t[0]) && is_point(&t[1]) && t[0] != t[1]),
            check: Box::new(|_, t| t[0].meet(&t[1]).is_empty()),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "even-odd-root",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::loopy_acyclic_univalent(rng, n)]),
            qualifier: Box::new(|t| is_univalent(&t[0]) && loopy_acyclic(&t[0])),
            check: Box::new(|n, t| {
                let x = &t[0];
                let one = Relation::identity(n);
                let even = x.compose(x).transpose().star();
                let side = even.meet(&x.transpose().compose(&even));
                side == one.meet(x).compose(&side)
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "acyclic-square-diagonal",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::loopy_acyclic(rng, n)]),
            qualifier: Box::new(|t| loopy_acyclic(&t[0])),
            check: Box::new(|n, t| {
                let x = &t[0];
                let one = Relation::identity(n);
                x.plus().meet(&one) == x.compose(x).meet(&one)
                    && x.compose(x).meet(&one) == x.meet(&one)
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "square-strict-part",
            operands: &["x"],
            exhaustive_max: 2,
            sampler: any(1),
            qualifier: accept_all(),
            check: Box::new(|n, t| {
                let x = &t[0];
                let one = Relation::identity(n);
                x.compose(x).difference(&one).leq(&x.star().difference(&one))
                    && x.star().difference(&one).leq(&x.difference(&one).plus())
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "grandparent-update-bound",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::relation(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| is_point(&t[1])),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                let grandparent_value = aread(x, &aread(x, y));
                awrite(x, y, &grandparent_value).leq(&x.join(&x.compose(x)))
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "grandparent-update-roots",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::loopy_acyclic(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| loopy_acyclic(&t[0]) && is_point(&t[1])),
            check: Box::new(|n, t| {
                let (x, y) = (&t[0], &t[1]);
                let one = Relation::identity(n);
                let updated = awrite(x, y, &aread(x, &aread(x, y)));
                updated.meet(&one) == x.meet(&one)
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "grandparent-update-components",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::mapping(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| is_mapping(&t[0]) && is_point(&t[1])),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                fc(&awrite(x, y, &aread(x, &aread(x, y)))) == fc(x)
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "square-transpose-update-bound",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: any(2),
            qualifier: accept_all(),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                awrite(x, y, &x.compose(x).transpose()).leq(&x.join(&x.compose(x)))
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "square-transpose-update-acyclic",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::loopy_acyclic(rng, n), gen::relation(rng, n)]),
            qualifier: Box::new(|t| loopy_acyclic(&t[0])),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                loopy_acyclic(&awrite(x, y, &x.compose(x).transpose()))
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "square-transpose-update-forest",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::forest(rng, n), gen::vector(rng, n)]),
            qualifier: Box::new(|t| is_forest(&t[0]) && is_vector(&t[1])),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                is_forest(&awrite(x, y, &x.compose(x).transpose()))
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "arc-decompose",
            operands: &["x", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::arc(rng, n), gen::relation(rng, n)]),
            qualifier: Box::new(|t| is_arc(&t[0])),
            check: Box::new(|_, t| {
                let (x, y) = (&t[0], &t[1]);
                x.join(y).plus()
                    == y.plus()
                        .join(&y.star().compose(x).compose(&y.star()))
            }),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "update-to-unreachable-acyclic",
            operands: &["p", "w", "y"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| {
                let p = gen::loopy_acyclic(rng, n);
                let w = gen::point(rng, n);
                // pick y outside the set of nodes that reach w
                let reaches_w = p.star().compose(&w);
                let candidates: Vec<usize> = (0..n)
                    .filter(|&i| !reaches_w.get(i, 0))
                    .collect();
                let y = if candidates.is_empty() {
                    gen::point(rng, n)
                } else {
                    Relation::point(n, candidates[rng.random_range(0..candidates.len())])
                };
                vec![p, w, y]
            }),
            qualifier: Box::new(|t| {
                loopy_acyclic(&t[0])
                    && is_point(&t[1])
                    && is_point(&t[2])
                    && t[2].meet(&t[0].star().compose(&t[1])).is_empty()
            }),
            check: Box::new(|_, t| loopy_acyclic(&awrite(&t[0], &t[1], &t[2]))),
        }),
        equation(EquationLaw {
            suite: "forest",
            name: "self-loop-update-acyclic",
            operands: &["p", "w"],
            exhaustive_max: 2,
            sampler: Box::new(|rng, n| vec![gen::loopy_acyclic(rng, n), gen::point(rng, n)]),
            qualifier: Box::new(|t| loopy_acyclic(&t[0]) && is_point(&t[1])),
            check: Box::new(|_, t| loopy_acyclic(&awrite(&t[0], &t[1], &t[1]))),
        }),
    ]
}

#[cfg(test)]
mod tests {
    use crate::laws::{run_suite, LawConfig};

    #[test]
    fn forest_laws_pass_at_n3() {
        let cfg = LawConfig {
            n_max: 3,
            samples: 200,
            seed: 4,
        };
        for report in run_suite("forest", &cfg).unwrap() {
            assert!(report.passed(), "{} failed", report.full_name());
            assert!(report.cases > 0, "{} ran no cases", report.full_name());
        }
    }
}
