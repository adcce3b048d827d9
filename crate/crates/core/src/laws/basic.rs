//! Axioms of the Boolean-matrix model: lattice and semiring structure,
//! transposition, the Dedekind inequality, the Tarski rule and the Kleene
//! star laws.

use rand_chacha::ChaCha8Rng;

use super::{custom, equation, Counterexample, EquationLaw, Law, LawConfig, Qualifier, Sampler};
use crate::gen::{self, rng_from_seed};
use crate::relation::Relation;

pub(crate) fn any(k: usize) -> Sampler {
    Box::new(move |rng, n| (0..k).map(|_| gen::relation(rng, n)).collect())
}

pub(crate) fn accept_all() -> Qualifier {
    Box::new(|_| true)
}

fn eq3(
    suite: &'static str,
    name: &'static str,
    check: impl Fn(usize, &Relation, &Relation, &Relation) -> bool + 'static,
) -> Law {
    equation(EquationLaw {
        suite,
        name,
        operands: &["x", "y", "z"],
        exhaustive_max: 2,
        sampler: any(3),
        qualifier: accept_all(),
        check: Box::new(move |n, t| check(n, &t[0], &t[1], &t[2])),
    })
}

fn eq2(
    suite: &'static str,
    name: &'static str,
    check: impl Fn(usize, &Relation, &Relation) -> bool + 'static,
) -> Law {
    equation(EquationLaw {
        suite,
        name,
        operands: &["x", "y"],
        exhaustive_max: 2,
        sampler: any(2),
        qualifier: accept_all(),
        check: Box::new(move |n, t| check(n, &t[0], &t[1])),
    })
}

fn eq1(
    suite: &'static str,
    name: &'static str,
    check: impl Fn(usize, &Relation) -> bool + 'static,
) -> Law {
    equation(EquationLaw {
        suite,
        name,
        operands: &["x"],
        exhaustive_max: 2,
        sampler: any(1),
        qualifier: accept_all(),
        check: Box::new(move |n, t| check(n, &t[0])),
    })
}

pub(super) fn laws() -> Vec<Law> {
    let mut laws = vec![
        eq3("axioms", "join-semilattice", |n, x, y, z| {
            x.join(y).join(z) == x.join(&y.join(z))
                && x.join(y) == y.join(x)
                && x.join(x) == *x
                && x.join(&Relation::bot(n)) == *x
        }),
        eq3("axioms", "meet-semilattice", |n, x, y, z| {
            x.meet(y).meet(z) == x.meet(&y.meet(z))
                && x.meet(y) == y.meet(x)
                && x.meet(x) == *x
                && x.meet(&Relation::top(n)) == *x
        }),
        eq2("axioms", "absorption", |_, x, y| {
            x.join(&x.meet(y)) == *x && x.meet(&x.join(y)) == *x
        }),
        eq3("axioms", "distributivity", |_, x, y, z| {
            x.join(&y.meet(z)) == x.join(y).meet(&x.join(z))
                && x.meet(&y.join(z)) == x.meet(y).join(&x.meet(z))
        }),
        eq1("axioms", "complement", |n, x| {
            x.join(&x.complement()) == Relation::top(n)
                && x.meet(&x.complement()) == Relation::bot(n)
                && x.difference(x) == Relation::bot(n)
        }),
        eq3("axioms", "compose-monoid", |n, x, y, z| {
            let one = Relation::identity(n);
            x.compose(y).compose(z) == x.compose(&y.compose(z))
                && x.compose(&one) == *x
                && one.compose(x) == *x
        }),
        eq3("axioms", "compose-distributes", |n, x, y, z| {
            let bot = Relation::bot(n);
            x.join(y).compose(z) == x.compose(z).join(&y.compose(z))
                && z.compose(&x.join(y)) == z.compose(x).join(&z.compose(y))
                && x.compose(&bot) == bot
                && bot.compose(x) == bot
        }),
        eq2("axioms", "transpose", |_, x, y| {
            x.join(y).transpose() == x.transpose().join(&y.transpose())
                && x.transpose().transpose() == *x
                && x.compose(y).transpose() == y.transpose().compose(&x.transpose())
        }),
        eq3("axioms", "dedekind", |_, x, y, z| {
            x.compose(y)
                .meet(z)
                .leq(&x.compose(&y.meet(&x.transpose().compose(z))))
        }),
        eq3("axioms", "compose-isotone", |_, x, y, z| {
            x.compose(&y.meet(z)).leq(&x.compose(y))
                && y.meet(z).compose(x).leq(&y.compose(x))
        }),
        equation(EquationLaw {
            suite: "tarski",
            name: "rule",
            operands: &["x"],
            exhaustive_max: 3,
            sampler: any(1),
            qualifier: Box::new(|t| !t[0].is_empty()),
            check: Box::new(|n, t| {
                let top = Relation::top(n);
                top.compose(&t[0]).compose(&top) == top
            }),
        }),
        eq1("star", "unfold-left", |n, y| {
            Relation::identity(n).join(&y.compose(&y.star())) == y.star()
        }),
        eq1("star", "unfold-right", |n, y| {
            Relation::identity(n).join(&y.star().compose(y)) == y.star()
        }),
        eq1("star", "transpose-commutes", |_, x| {
            x.transpose().star() == x.star().transpose()
        }),
        eq1("star", "loops-irrelevant", |n, x| {
            x.star() == x.difference(&Relation::identity(n)).star()
        }),
        eq1("star", "strict-part", |n, x| {
            let one = Relation::identity(n);
            x.star().difference(&one) == x.plus().difference(&one)
        }),
        eq1("star", "plus-below-star", |_, x| x.plus().leq(&x.star())),
    ];
    laws.push(star_induction("induction-left", true));
    laws.push(star_induction("induction-right", false));
    laws
}

/// The star induction laws, verified by sampling post-fixpoints: any x with
/// z ⊔ y·x ⊑ x (built by closing a random seed) must lie above y*·z.
fn star_induction(name: &'static str, left: bool) -> Law {
    custom("star", name, move |cfg: &LawConfig| {
        let mut rng = rng_from_seed(cfg.seed ^ if left { 0x51a5 } else { 0x51a6 });
        let mut cases = 0u64;
        let instances = cfg.samples.clamp(1, 200);
        for n in 2..=cfg.n_max {
            for _ in 0..instances {
                let y = gen::relation(&mut rng, n);
                let z = gen::relation(&mut rng, n);
                let fixpoint = if left {
                    y.star().compose(&z)
                } else {
                    z.compose(&y.star())
                };
                for _ in 0..50 {
                    let seed = z.join(&gen::relation(&mut rng, n));
                    let candidate = close(&y, &z, seed, left);
                    cases += 1;
                    if !fixpoint.leq(&candidate) {
                        return (
                            cases,
                            Some(Counterexample {
                                n,
                                operands: vec![
                                    ("y".to_string(), y),
                                    ("z".to_string(), z),
                                    ("candidate".to_string(), candidate),
                                ],
                                note: "star fixpoint not least among post-fixpoints".to_string(),
                            }),
                        );
                    }
                }
            }
        }
        (cases, None)
    })
}

/// Smallest post-fixpoint above `seed`: iterate x := x ⊔ y·x ⊔ z (or the
/// right-handed variant) to stability.
fn close(y: &Relation, z: &Relation, mut x: Relation, left: bool) -> Relation {
    loop {
        let step = if left { y.compose(&x) } else { x.compose(y) };
        let next = x.join(&step).join(z);
        if next == x {
            return x;
        }
        x = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::run_suite;

    #[test]
    fn axioms_hold_exhaustively_at_n2() {
        let cfg = LawConfig {
            n_max: 2,
            samples: 0,
            seed: 0,
        };
        for report in run_suite("axioms", &cfg).unwrap() {
            assert!(report.passed(), "{} failed", report.full_name());
            assert!(report.cases > 0);
        }
    }

    #[test]
    fn tarski_and_star_hold_at_n3() {
        let cfg = LawConfig {
            n_max: 3,
            samples: 300,
            seed: 1,
        };
        for suite in ["tarski", "star"] {
            for report in run_suite(suite, &cfg).unwrap() {
                assert!(report.passed(), "{} failed", report.full_name());
            }
        }
    }
}
