//! Whole-program law suites: the find/compress program grid over every
//! forest and start point on small universes, the exact-effect equalities,
//! initialisation, and the union grids.

use super::{custom, Counterexample, Law, LawConfig};
use crate::array::awrite;
use crate::components::{ancestors, fc, wcc};
use crate::error::ProgramError;
use crate::forest::ForestState;
use crate::gen::{all_forests, all_points};
use crate::peano::{build_peano, rank_property};
use crate::programs;
use crate::relation::Relation;
use crate::trace::CheckMode;

fn ce(n: usize, operands: Vec<(&str, &Relation)>, note: String) -> Counterexample {
    Counterexample {
        n,
        operands: operands
            .into_iter()
            .map(|(name, r)| (name.to_string(), r.clone()))
            .collect(),
        note,
    }
}

fn program_failure(n: usize, p: &Relation, x: &Relation, err: ProgramError) -> Counterexample {
    ce(n, vec![("p", p), ("x", x)], err.to_string())
}

/// Longest chain below each node of a forest given as a parent relation;
/// a valid rank array for union-by-rank.
pub fn height_ranks(p: &Relation) -> Relation {
    let n = p.size();
    let parents: Vec<usize> = (0..n)
        .map(|i| (0..n).find(|&j| p.get(i, j)).expect("forest rows are nonempty"))
        .collect();
    let mut height = vec![0usize; n];
    for _ in 0..n {
        for i in 0..n {
            if parents[i] != i {
                height[parents[i]] = height[parents[i]].max(height[i] + 1);
            }
        }
    }
    let pairs: Vec<(usize, usize)> = height.iter().enumerate().map(|(i, &h)| (i, h)).collect();
    Relation::from_pairs(n, &pairs)
}

fn find_grid() -> Law {
    custom("hoare", "find-grid", |cfg: &LawConfig| {
        let mut cases = 0u64;
        for n in 1..=cfg.n_max.min(4) {
            for p in all_forests(n) {
                let state = ForestState::new(p.clone());
                for x in all_points(n) {
                    cases += 1;
                    match check_one(&state, &x) {
                        Ok(()) => {}
                        Err(note) => {
                            return (cases, Some(ce(n, vec![("p", &p), ("x", &x)], note)))
                        }
                    }
                }
            }
        }
        (cases, None)
    })
}

/// Runs all five find/compress programs strictly on one (forest, point)
/// input and cross-checks their agreement.
fn check_one(state: &ForestState, x: &Relation) -> Result<(), String> {
    let one = Relation::identity(state.size());
    let (root, trace) =
        programs::find_set(state, x, CheckMode::Strict).map_err(|e| e.to_string())?;
    if !trace.all_passed() {
        return Err("find_set trace has a failing verdict".to_string());
    }

    let (compressed, trace) = programs::path_compression(state, x, &root, CheckMode::Strict)
        .map_err(|e| e.to_string())?;
    if !trace.all_passed() {
        return Err("path_compression trace has a failing verdict".to_string());
    }
    let (assigned, _) = programs::path_compression_assign(state, x, &root, CheckMode::Strict)
        .map_err(|e| e.to_string())?;
    if assigned.p != compressed.p {
        return Err("single-assignment compression differs from the loop".to_string());
    }

    let (root2, combined, trace) =
        programs::find_set_path_compression(state, x, CheckMode::Strict)
            .map_err(|e| e.to_string())?;
    if !trace.all_passed() || root2 != root || combined.p != compressed.p {
        return Err("combined find+compress disagrees with the two-phase run".to_string());
    }

    let (root3, split, trace) = programs::find_path_splitting(state, x, CheckMode::Strict)
        .map_err(|e| e.to_string())?;
    if !trace.all_passed() || root3 != root {
        return Err("path splitting returned a different root".to_string());
    }
    let (root4, halved, trace) = programs::find_path_halving(state, x, CheckMode::Strict)
        .map_err(|e| e.to_string())?;
    if !trace.all_passed() || root4 != root {
        return Err("path halving returned a different root".to_string());
    }

    for (name, result) in [
        ("compression", &compressed),
        ("splitting", &split),
        ("halving", &halved),
    ] {
        if fc(&result.p) != fc(&state.p) {
            return Err(format!("{name} changed the components"));
        }
        if result.p.meet(&one) != state.p.meet(&one) {
            return Err(format!("{name} changed the roots"));
        }
    }
    Ok(())
}

fn exact_effects() -> Law {
    custom("hoare", "exact-effects", |cfg: &LawConfig| {
        let mut cases = 0u64;
        for n in 1..=cfg.n_max.min(4) {
            for p in all_forests(n) {
                let state = ForestState::new(p.clone());
                for x in all_points(n) {
                    cases += 1;
                    let (y, _) = match programs::find_set(&state, &x, CheckMode::Off) {
                        Ok(r) => r,
                        Err(e) => return (cases, Some(program_failure(n, &p, &x, e))),
                    };
                    let run = |r: Result<(Relation, ForestState, crate::trace::ProgramTrace), ProgramError>| {
                        r.map(|(_, s, _)| s.p)
                    };
                    let compressed =
                        match programs::path_compression(&state, &x, &y, CheckMode::Off) {
                            Ok((s, _)) => s.p,
                            Err(e) => return (cases, Some(program_failure(n, &p, &x, e))),
                        };
                    let split = match run(programs::find_path_splitting(&state, &x, CheckMode::Off))
                    {
                        Ok(p1) => p1,
                        Err(e) => return (cases, Some(program_failure(n, &p, &x, e))),
                    };
                    let halved = match run(programs::find_path_halving(&state, &x, CheckMode::Off))
                    {
                        Ok(p1) => p1,
                        Err(e) => return (cases, Some(program_failure(n, &p, &x, e))),
                    };

                    let grandparent = p.compose(&p);
                    let expect_compress = awrite(&p, &ancestors(&p, &x), &y);
                    let expect_split = awrite(&p, &ancestors(&p, &x), &grandparent.transpose());
                    let expect_halve = awrite(
                        &p,
                        &ancestors(&grandparent, &x),
                        &grandparent.transpose(),
                    );
                    let mismatch = [
                        ("compression", &compressed, &expect_compress),
                        ("splitting", &split, &expect_split),
                        ("halving", &halved, &expect_halve),
                    ]
                    .into_iter()
                    .find(|(_, got, want)| got != want);
                    if let Some((name, got, _)) = mismatch {
                        return (
                            cases,
                            Some(ce(
                                n,
                                vec![("p", &p), ("x", &x), ("result", got)],
                                format!("{name} differs from its single-assignment form"),
                            )),
                        );
                    }
                }
            }
        }
        (cases, None)
    })
}

fn variant_distinctness() -> Law {
    custom("hoare", "variant-distinctness", |_cfg: &LawConfig| {
        // chain 0 -> 1 -> 2 -> 3 -> 3: the three rewrites produce three
        // different forests over the same components
        let n = 4;
        let p = Relation::from_successor_array(&[1, 2, 3, 3]);
        let state = ForestState::new(p.clone());
        let x = Relation::point(n, 0);
        let one = Relation::identity(n);
        let compressed = programs::find_set_path_compression(&state, &x, CheckMode::Strict)
            .map(|(_, s, _)| s.p);
        let split = programs::find_path_splitting(&state, &x, CheckMode::Strict)
            .map(|(_, s, _)| s.p);
        let halved = programs::find_path_halving(&state, &x, CheckMode::Strict)
            .map(|(_, s, _)| s.p);
        let (Ok(compressed), Ok(split), Ok(halved)) = (compressed, split, halved) else {
            return (
                1,
                Some(ce(n, vec![("p", &p)], "a strict run failed on the chain".to_string())),
            );
        };
        let distinct =
            compressed != split && compressed != halved && split != halved;
        let same_semantics = fc(&compressed) == fc(&p)
            && fc(&split) == fc(&p)
            && fc(&halved) == fc(&p)
            && compressed.meet(&one) == p.meet(&one)
            && split.meet(&one) == p.meet(&one)
            && halved.meet(&one) == p.meet(&one);
        if distinct && same_semantics {
            (1, None)
        } else {
            (
                1,
                Some(ce(
                    n,
                    vec![
                        ("compressed", &compressed),
                        ("split", &split),
                        ("halved", &halved),
                    ],
                    "compression variants failed to differ while preserving semantics"
                        .to_string(),
                )),
            )
        }
    })
}

fn init_programs() -> Law {
    custom("hoare", "init", |cfg: &LawConfig| {
        let mut cases = 0u64;
        for n in 1..=cfg.n_max.min(8) {
            cases += 1;
            let one = Relation::identity(n);
            match programs::init_sets(n, CheckMode::Strict) {
                Ok((state, trace)) => {
                    if state.p != one || !trace.all_passed() || trace.iterations() != n {
                        return (
                            cases,
                            Some(ce(n, vec![("p", &state.p)], "init_sets failed".to_string())),
                        );
                    }
                }
                Err(e) => {
                    return (
                        cases,
                        Some(ce(n, vec![], format!("init_sets error: {e}"))),
                    )
                }
            }
            match programs::init_ranks(n, CheckMode::Strict) {
                Ok((state, trace)) => {
                    let zero_t = Relation::point(n, 0).transpose();
                    let rank = state.rank.clone().expect("init_ranks produces ranks");
                    if state.p != one || rank != zero_t || !trace.all_passed() {
                        return (
                            cases,
                            Some(ce(
                                n,
                                vec![("p", &state.p), ("rank", &rank)],
                                "init_ranks failed".to_string(),
                            )),
                        );
                    }
                }
                Err(e) => {
                    return (
                        cases,
                        Some(ce(n, vec![], format!("init_ranks error: {e}"))),
                    )
                }
            }
        }
        (cases, None)
    })
}

fn union_plain_grid() -> Law {
    custom("union", "plain-grid", |cfg: &LawConfig| {
        let mut cases = 0u64;
        for n in 1..=cfg.n_max.min(4) {
            for p in all_forests(n) {
                let state = ForestState::new(p.clone());
                for x in all_points(n) {
                    for y in all_points(n) {
                        cases += 1;
                        let expected_components =
                            wcc(&p.join(&x.compose(&y.transpose())));
                        let (next, trace) =
                            match programs::union_sets(&state, &x, &y, CheckMode::Strict) {
                                Ok(r) => r,
                                Err(e) => {
                                    return (cases, Some(program_failure(n, &p, &x, e)))
                                }
                            };
                        if !trace.all_passed() || fc(&next.p) != expected_components {
                            return (
                                cases,
                                Some(ce(
                                    n,
                                    vec![("p", &p), ("x", &x), ("y", &y), ("result", &next.p)],
                                    "union_sets postcondition mismatch".to_string(),
                                )),
                            );
                        }
                        let (alt, _) =
                            match programs::union_sets_alt(&state, &x, &y, CheckMode::Strict) {
                                Ok(r) => r,
                                Err(e) => {
                                    return (cases, Some(program_failure(n, &p, &x, e)))
                                }
                            };
                        if alt.p != next.p {
                            return (
                                cases,
                                Some(ce(
                                    n,
                                    vec![("p", &p), ("x", &x), ("y", &y)],
                                    "alternative union implementation diverges".to_string(),
                                )),
                            );
                        }
                    }
                }
            }
        }
        (cases, None)
    })
}

fn union_by_rank_grid() -> Law {
    custom("union", "by-rank-grid", |cfg: &LawConfig| {
        let mut cases = 0u64;
        for n in 1..=cfg.n_max.min(4) {
            let ctx = match build_peano(n) {
                Ok(ctx) => ctx,
                Err(e) => return (cases, Some(ce(n, vec![], e.to_string()))),
            };
            for p in all_forests(n) {
                let rank = height_ranks(&p);
                if !rank_property(&p, &rank, &ctx) {
                    return (
                        cases,
                        Some(ce(
                            n,
                            vec![("p", &p), ("rank", &rank)],
                            "height ranks do not satisfy the rank property".to_string(),
                        )),
                    );
                }
                let state = ForestState::with_rank(p.clone(), rank);
                for x in all_points(n) {
                    for y in all_points(n) {
                        cases += 1;
                        let (next, trace) = match programs::union_sets_by_rank(
                            &state,
                            &x,
                            &y,
                            &ctx,
                            CheckMode::Strict,
                        ) {
                            Ok(r) => r,
                            Err(e) => return (cases, Some(program_failure(n, &p, &x, e))),
                        };
                        let expected_components =
                            wcc(&p.join(&x.compose(&y.transpose())));
                        let rank_ok =
                            rank_property(&next.p, next.rank.as_ref().unwrap(), &ctx);
                        if !trace.all_passed()
                            || fc(&next.p) != expected_components
                            || !rank_ok
                        {
                            return (
                                cases,
                                Some(ce(
                                    n,
                                    vec![("p", &p), ("x", &x), ("y", &y), ("result", &next.p)],
                                    "union_sets_by_rank postcondition mismatch".to_string(),
                                )),
                            );
                        }
                    }
                }
            }
        }
        (cases, None)
    })
}

pub(super) fn laws() -> Vec<Law> {
    vec![
        find_grid(),
        exact_effects(),
        variant_distinctness(),
        init_programs(),
        union_plain_grid(),
        union_by_rank_grid(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::run_suite;

    #[test]
    fn hoare_grid_passes_up_to_n3() {
        let cfg = LawConfig {
            n_max: 3,
            samples: 0,
            seed: 0,
        };
        for report in run_suite("hoare", &cfg).unwrap() {
            assert!(report.passed(), "{} failed", report.full_name());
        }
    }

    #[test]
    fn union_grids_pass_up_to_n3() {
        let cfg = LawConfig {
            n_max: 3,
            samples: 0,
            seed: 0,
        };
        for report in run_suite("union", &cfg).unwrap() {
            assert!(report.passed(), "{} failed", report.full_name());
            // 1 + 3*1 + 16*9 forests x ordered point pairs
            assert_eq!(report.cases, 1 + 3 * 4 + 16 * 9);
        }
    }

    #[test]
    fn height_ranks_of_a_chain() {
        let p = Relation::from_successor_array(&[1, 2, 2]);
        assert_eq!(
            height_ranks(&p),
            Relation::from_pairs(3, &[(0, 0), (1, 1), (2, 2)])
        );
    }
}
