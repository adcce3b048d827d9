//! Acceptance suite: one test per criterion, named so the harness prints a
//! pass/fail line for each. Everything here is exact — the algebra is
//! Boolean, so every comparison is bit-equality.

use std::time::{Duration, Instant};

use relforest_core::abstraction::fc_equals_partition_relation;
use relforest_core::array::{aread, awrite};
use relforest_core::components::{ancestors, fc, wcc};
use relforest_core::crossval::{self, CrossvalConfig};
use relforest_core::forest::ForestState;
use relforest_core::gen::{all_forests, all_points};
use relforest_core::laws::{run_suite, LawConfig, LawReport};
use relforest_core::mutants;
use relforest_core::oracle::FindStrategy;
use relforest_core::peano::{build_peano, rank_property};
use relforest_core::programs;
use relforest_core::relation::Relation;
use relforest_core::trace::CheckMode;

fn rel(text: &str) -> Relation {
    text.parse().expect("valid matrix literal")
}

fn assert_suite_green(reports: &[LawReport], min_cases_per_law: u64) {
    // the constant laws (no operands) run exactly once per universe size
    let constant_laws = ["bot-one", "top"];
    for report in reports {
        if let Some(ce) = &report.counterexample {
            panic!("{} failed\n{}", report.full_name(), ce.render());
        }
        let min = if constant_laws.contains(&report.name) {
            1
        } else {
            min_cases_per_law
        };
        assert!(
            report.cases >= min,
            "{} ran only {} cases",
            report.full_name(),
            report.cases
        );
    }
}

#[test]
fn criterion_1_worked_array_example() {
    let start = Instant::now();

    let x = rel("3\n001\n010\n000\n");
    let y = rel("3\n000\n111\n000\n");
    let z = rel("3\n111\n000\n000\n");

    assert_eq!(y.meet(&z.transpose()), rel("3\n000\n100\n000\n"));
    assert_eq!(y.complement().meet(&x), rel("3\n001\n000\n000\n"));
    assert_eq!(awrite(&x, &y, &z), rel("3\n001\n100\n000\n"));
    assert_eq!(x.transpose(), rel("3\n000\n010\n100\n"));
    assert_eq!(aread(&x, &y), rel("3\n000\n111\n000\n"));
    assert_eq!(aread(&x, &z), rel("3\n000\n000\n111\n"));

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1: PASS (worked array example, {elapsed:?})");
}

#[test]
fn criterion_2_array_component_and_proof_laws() {
    let start = Instant::now();
    let cfg = LawConfig {
        n_max: 4,
        samples: 10_000,
        seed: 42,
    };
    for suite in ["arrays", "wcc", "fc", "appendix-b"] {
        let reports = run_suite(suite, &cfg).expect("known suite");
        // every law sees the full random budget at n = 3 and n = 4 on top
        // of the exhaustive n <= 2 phase
        assert_suite_green(&reports, 2 * cfg.samples);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 2: PASS (theorems 1-4 and proof laws, {elapsed:?})");
}

#[test]
fn criterion_3_hoare_suite_on_the_full_forest_grid() {
    let start = Instant::now();
    let cfg = LawConfig {
        n_max: 4,
        samples: 0,
        seed: 0,
    };
    let reports = run_suite("hoare", &cfg).expect("known suite");
    assert_suite_green(&reports, 1);

    let find_grid = reports
        .iter()
        .find(|r| r.name == "find-grid")
        .expect("find grid present");
    // 1 + 3*2 + 16*3 + 125*4 (forests times points, n = 1..4)
    assert_eq!(find_grid.cases, 1 + 6 + 48 + 500);

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("criterion 3: PASS (strict Hoare grid over 125 forests x 4 points, {elapsed:?})");
}

#[test]
fn criterion_4_exact_effect_equalities() {
    let start = Instant::now();
    for p in all_forests(4) {
        let state = ForestState::new(p.clone());
        let grandparent = p.compose(&p);
        for x in all_points(4) {
            let (y, _) = programs::find_set(&state, &x, CheckMode::Off).unwrap();

            let (compressed, _) =
                programs::path_compression(&state, &x, &y, CheckMode::Off).unwrap();
            assert_eq!(compressed.p, awrite(&p, &ancestors(&p, &x), &y));

            let (assigned, _) =
                programs::path_compression_assign(&state, &x, &y, CheckMode::Off).unwrap();
            assert_eq!(assigned.p, compressed.p);

            let (_, split, _) =
                programs::find_path_splitting(&state, &x, CheckMode::Off).unwrap();
            assert_eq!(
                split.p,
                awrite(&p, &ancestors(&p, &x), &grandparent.transpose())
            );

            let (_, halved, _) =
                programs::find_path_halving(&state, &x, CheckMode::Off).unwrap();
            assert_eq!(
                halved.p,
                awrite(&p, &ancestors(&grandparent, &x), &grandparent.transpose())
            );
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 4: PASS (single-assignment effects on the n=4 grid, {elapsed:?})");
}

#[test]
fn criterion_5_union_grids() {
    let start = Instant::now();
    let cfg = LawConfig {
        n_max: 4,
        samples: 0,
        seed: 0,
    };
    let reports = run_suite("union", &cfg).expect("known suite");
    assert_suite_green(&reports, 1);
    for report in &reports {
        // 1 + 3*4 + 16*9 + 125*16 ordered pairs over all forests, n = 1..4
        assert_eq!(report.cases, 1 + 12 + 144 + 2000, "{}", report.full_name());
    }
    // the strict by-rank runs double as the no-overflow check: applying
    // succ to the top number aborts the program with a rank error
    let elapsed = start.elapsed();
    println!("criterion 5: PASS (union postconditions and rank property, {elapsed:?})");
}

#[test]
fn criterion_6_peano_suite() {
    let start = Instant::now();
    let cfg = LawConfig {
        n_max: 8,
        samples: 0,
        seed: 0,
    };
    let reports = run_suite("peano", &cfg).expect("known suite");
    assert_suite_green(&reports, 8);
    let elapsed = start.elapsed();
    println!("criterion 6: PASS (number axioms and order embedding for m in 1..8, {elapsed:?})");
}

#[test]
fn criterion_7_initialisation() {
    let start = Instant::now();
    for n in 1..=8 {
        let one = Relation::identity(n);

        let (state, trace) = programs::init_sets(n, CheckMode::Strict).unwrap();
        assert_eq!(state.p, one);
        assert!(trace.all_passed());
        assert_eq!(trace.iterations(), n);
        assert!(trace
            .steps
            .iter()
            .flat_map(|s| &s.checks)
            .all(|(_, ok)| *ok));

        let (state, trace) = programs::init_ranks(n, CheckMode::Strict).unwrap();
        assert_eq!(state.p, one);
        assert_eq!(
            state.rank.as_ref().unwrap(),
            &Relation::point(n, 0).transpose()
        );
        assert!(trace.all_passed());
        let ctx = build_peano(n).unwrap();
        assert!(rank_property(&state.p, state.rank.as_ref().unwrap(), &ctx));
    }
    let elapsed = start.elapsed();
    println!("criterion 7: PASS (init programs for n in 1..8, {elapsed:?})");
}

#[test]
fn criterion_8_cross_validation() {
    let start = Instant::now();
    for n in [8, 16, 64] {
        for strategy in FindStrategy::ALL {
            for by_rank in [false, true] {
                let cfg = CrossvalConfig {
                    n,
                    ops: 1000,
                    strategy,
                    by_rank,
                    seed: 1000 + n as u64,
                };
                let outcome = crossval::run(&cfg).unwrap();
                if let Some(divergence) = &outcome.divergence {
                    panic!("n={n} {strategy} by_rank={by_rank}:\n{divergence}");
                }
                assert_eq!(outcome.ops_executed, 1000);
                assert!(outcome.max_rank < n, "rank reached {}", outcome.max_rank);
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("criterion 8: PASS (24 lockstep runs of 1000 ops, {elapsed:?})");
}

#[test]
fn criterion_9_mutation_sensitivity() {
    let start = Instant::now();
    let reports = mutants::run_all();
    assert!(reports.len() >= 5);
    for report in &reports {
        assert!(report.caught, "mutant {} escaped its suite", report.name);
        println!(
            "mutant {} caught by {}:\n{}",
            report.name,
            report.name.caught_by(),
            report.reproducer
        );
    }
    let elapsed = start.elapsed();
    println!(
        "criterion 9: PASS ({} mutants caught with reproducers, {elapsed:?})",
        reports.len()
    );
}

// cross-check used by criterion 8's machinery: the partition view and the
// component relation stay interconvertible
#[test]
fn partition_round_trip_supports_crossvalidation() {
    for p in all_forests(4) {
        assert!(fc_equals_partition_relation(&p).unwrap());
    }
    let chain = Relation::from_successor_array(&[1, 2, 3, 4, 4]);
    assert_eq!(fc(&chain), wcc(&chain));
}
