//! Laws of the relational number model, run for every modulus up to the
//! configured maximum.

use super::{custom, Counterexample, Law, LawConfig};
use crate::classify::{
    is_injective, is_irreflexive, is_mapping, is_point, is_surjective, is_univalent,
};
use crate::peano::{build_peano, less, succ, PeanoCtx};
use crate::relation::Relation;

fn per_modulus(
    name: &'static str,
    check: impl Fn(usize, &PeanoCtx) -> bool + 'static,
) -> Law {
    custom("peano", name, move |cfg: &LawConfig| {
        let mut cases = 0u64;
        for m in 1..=cfg.n_max.max(1) {
            let ctx = match build_peano(m) {
                Ok(ctx) => ctx,
                Err(_) => {
                    return (
                        cases,
                        Some(Counterexample {
                            n: m,
                            operands: vec![],
                            note: "number model failed to build".to_string(),
                        }),
                    )
                }
            };
            cases += 1;
            if !check(m, &ctx) {
                return (
                    cases,
                    Some(Counterexample {
                        n: m,
                        operands: vec![
                            ("Z".to_string(), ctx.zero().clone()),
                            ("S".to_string(), ctx.succ_total().clone()),
                            ("S'".to_string(), ctx.succ_partial().clone()),
                            ("M".to_string(), ctx.pred_of_zero().clone()),
                        ],
                        note: format!("law violated at modulus {m}"),
                    }),
                );
            }
        }
        (cases, None)
    })
}

pub(super) fn laws() -> Vec<Law> {
    vec![
        per_modulus("axioms", |m, ctx| {
            let top = Relation::top(m);
            is_point(ctx.zero())
                && is_mapping(ctx.succ_total())
                && is_injective(ctx.succ_total())
                && ctx.succ_total().transpose().star().compose(ctx.zero()) == top
        }),
        per_modulus("total-successor", |m, ctx| {
            let s = ctx.succ_total();
            let z = ctx.zero();
            let one = Relation::identity(m);
            let top = Relation::top(m);
            s.meet(&one).leq(z)
                && z.leq(&s.star())
                && s.transpose().star().compose(&s.star()) == top
                && s.star().join(&s.transpose().star()) == top
                && z.join(&s.transpose().compose(&top)) == top
        }),
        per_modulus("partial-successor", |m, ctx| {
            let sp = ctx.succ_partial();
            let z = ctx.zero();
            let top = Relation::top(m);
            is_univalent(sp)
                && is_injective(sp)
                && sp.transpose().star().compose(z) == top
                && is_irreflexive(sp)
                && z.leq(&sp.star())
                && sp.transpose().star().compose(&sp.star()) == top
                && sp.star().join(&sp.transpose().star()) == top
                && z.join(&sp.transpose().compose(&top)) == top
                && sp.compose(z).is_empty()
        }),
        per_modulus("predecessor-of-zero", |_, ctx| {
            let m_rel = ctx.pred_of_zero();
            let s = ctx.succ_total();
            // in the cyclic model the successor is always surjective, so
            // both biconditionals collapse to their positive sides
            (is_point(m_rel) == is_surjective(s))
                && ((!m_rel.is_empty()) == is_surjective(s))
                && (m_rel.is_empty() || is_point(m_rel))
        }),
        per_modulus("successor-variants", |m, ctx| {
            let s = ctx.succ_total();
            let sp = ctx.succ_partial();
            let z = ctx.zero();
            let m_rel = ctx.pred_of_zero();
            let one_is_top = Relation::identity(m) == Relation::top(m);
            *sp == s.difference(m_rel)
                && (*m_rel == *z) == one_is_top
                && (*m_rel == *z || is_irreflexive(s))
        }),
        per_modulus("order-embedding", |m, ctx| {
            // k -> point k carries 0 to Z, integer successor to succ and
            // integer < to less
            if ctx.zero() != &Relation::point(m, 0) {
                return false;
            }
            for k in 0..m {
                let pk = Relation::point(m, k);
                let succ_pk = match succ(ctx, &pk) {
                    Ok(s) => s,
                    Err(_) => return false,
                };
                let expected = if k + 1 < m {
                    Relation::point(m, k + 1)
                } else {
                    Relation::bot(m)
                };
                if succ_pk != expected {
                    return false;
                }
                for j in 0..m {
                    let pj = Relation::point(m, j);
                    match less(ctx, &pk, &pj) {
                        Ok(result) if result == (k < j) => {}
                        _ => return false,
                    }
                }
            }
            true
        }),
    ]
}

#[cfg(test)]
mod tests {
    use crate::laws::{run_suite, LawConfig};

    #[test]
    fn peano_suite_passes_up_to_m8() {
        let cfg = LawConfig {
            n_max: 8,
            samples: 0,
            seed: 0,
        };
        for report in run_suite("peano", &cfg).unwrap() {
            assert!(report.passed(), "{} failed", report.full_name());
            assert_eq!(report.cases, 8);
        }
    }
}
