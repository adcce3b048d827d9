//! Command-line surface over the relation-algebra engine: run law suites,
//! execute annotated programs with traces, cross-validate against the
//! index-based oracle, and convert matrix files.
//!
//! Exit codes: 0 all checks passed, 1 a property or assertion failed,
//! 2 usage or parse error. Reports carry their seed and flags in the
//! header; identical invocations produce byte-identical output.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use relforest_core::classify;
use relforest_core::crossval::{self, CrossvalConfig};
use relforest_core::laws::{run_suite, LawConfig};
use relforest_core::mutants::{self, MutantName};
use relforest_core::oracle::FindStrategy;
use relforest_core::programs::{run_checked, ProgramInputs, ProgramName};
use relforest_core::relation::Relation;
use relforest_core::trace::CheckMode;

#[derive(Parser)]
#[command(
    name = "relforest",
    version,
    about = "Relation-algebra engine for disjoint-set forests with runtime assertion checking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run law suites and report per-law pass/fail with counterexamples.
    Laws {
        /// Suite name or "all"
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest universe size to test
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Random qualifying tuples per law and universe size
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run a named broken variant instead, to confirm the suites
        /// catch it (exits 1 with the counterexample)
        #[arg(long)]
        mutant: Option<String>,
    },
    /// Execute an annotated program with runtime assertion checking.
    Run {
        /// Program name, e.g. find_set or union_sets_by_rank
        #[arg(long)]
        program: String,
        /// Parent relation matrix file
        #[arg(long)]
        p: Option<PathBuf>,
        /// Point matrix file (first argument)
        #[arg(long)]
        x: Option<PathBuf>,
        /// Point matrix file (second argument)
        #[arg(long)]
        y: Option<PathBuf>,
        /// Rank relation matrix file
        #[arg(long)]
        rank: Option<PathBuf>,
        /// Universe size for the initialisation programs
        #[arg(long)]
        n: Option<usize>,
        /// strict aborts on the first failed assertion; trace records
        /// verdicts without aborting
        #[arg(long, default_value = "strict")]
        mode: String,
        /// Write the execution trace to this file
        #[arg(long)]
        trace_out: Option<PathBuf>,
        /// Include matrix snapshots in the trace
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Apply a seeded random op sequence to both engines in lockstep.
    Crossvalidate {
        /// Universe size
        #[arg(long)]
        n: usize,
        /// Number of operations
        #[arg(long, default_value_t = 1000)]
        ops: usize,
        /// Find strategy: naive, compress, split or halve
        #[arg(long, default_value = "compress")]
        strategy: String,
        /// Use union-by-rank instead of plain union
        #[arg(long)]
        by_rank: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Parse a matrix file and print it in canonical form.
    Convert {
        input: PathBuf,
        /// Write to this file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Laws {
            suite,
            n,
            samples,
            seed,
            mutant,
        } => cmd_laws(&suite, n, samples, seed, mutant.as_deref()),
        Command::Run {
            program,
            p,
            x,
            y,
            rank,
            n,
            mode,
            trace_out,
            dump_matrices,
        } => cmd_run(RunArgs {
            program,
            p,
            x,
            y,
            rank,
            n,
            mode,
            trace_out,
            dump_matrices,
        }),
        Command::Crossvalidate {
            n,
            ops,
            strategy,
            by_rank,
            seed,
        } => cmd_crossvalidate(n, ops, &strategy, by_rank, seed),
        Command::Convert { input, output } => cmd_convert(&input, output.as_deref()),
    };
    ExitCode::from(code)
}

fn cmd_laws(suite: &str, n: usize, samples: u64, seed: u64, mutant: Option<&str>) -> u8 {
    if let Some(name) = mutant {
        return cmd_mutant(name);
    }
    if n == 0 {
        eprintln!("error: --n must be at least 1");
        return EXIT_USAGE;
    }
    let cfg = LawConfig {
        n_max: n,
        samples,
        seed,
    };
    let reports = match run_suite(suite, &cfg) {
        Ok(reports) => reports,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_USAGE;
        }
    };
    println!("laws report v1");
    println!("suite: {suite}");
    println!("n-max: {n}");
    println!("samples: {samples}");
    println!("seed: {seed}");
    let mut all_passed = true;
    for report in &reports {
        match &report.counterexample {
            None => println!("PASS {} cases={}", report.full_name(), report.cases),
            Some(ce) => {
                all_passed = false;
                println!("FAIL {} cases={}", report.full_name(), report.cases);
                print!("{}", ce.render());
            }
        }
    }
    println!("result: {}", if all_passed { "pass" } else { "fail" });
    if all_passed {
        0
    } else {
        EXIT_FAIL
    }
}

fn cmd_mutant(name: &str) -> u8 {
    let mutant: MutantName = match name.parse() {
        Ok(m) => m,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_USAGE;
        }
    };
    let report = mutants::run(mutant);
    println!("laws report v1");
    println!("mutant: {}", report.name);
    if report.caught {
        println!("FAIL {} caught-by={}", report.name, report.name.caught_by());
        print!("{}", report.reproducer);
        println!("result: fail");
        EXIT_FAIL
    } else {
        println!("PASS {} escaped its suite", report.name);
        println!("result: pass");
        0
    }
}

struct RunArgs {
    program: String,
    p: Option<PathBuf>,
    x: Option<PathBuf>,
    y: Option<PathBuf>,
    rank: Option<PathBuf>,
    n: Option<usize>,
    mode: String,
    trace_out: Option<PathBuf>,
    dump_matrices: bool,
}

fn cmd_run(args: RunArgs) -> u8 {
    let program: ProgramName = match args.program.parse() {
        Ok(p) => p,
        Err(_) => {
            let names: Vec<&str> = ProgramName::ALL.iter().map(|p| p.as_str()).collect();
            eprintln!(
                "error: unknown program {:?}; known programs: {}",
                args.program,
                names.join(", ")
            );
            return EXIT_USAGE;
        }
    };
    let mode = match args.mode.as_str() {
        "strict" => CheckMode::Strict,
        "trace" | "trace-only" => CheckMode::TraceOnly,
        other => {
            eprintln!("error: unknown mode {other:?} (expected strict|trace)");
            return EXIT_USAGE;
        }
    };

    let mut inputs = ProgramInputs {
        n: args.n,
        bindings: BTreeMap::new(),
    };
    let files = [
        ("p", &args.p),
        ("x", &args.x),
        ("y", &args.y),
        ("rank", &args.rank),
    ];
    for (name, path) in files {
        if let Some(path) = path {
            match load_matrix(path) {
                Ok(relation) => {
                    inputs.bindings.insert(name.to_string(), relation);
                }
                Err(message) => {
                    eprintln!("error: {message}");
                    return EXIT_USAGE;
                }
            }
        }
    }
    let mut sizes = inputs.bindings.values().map(|r| r.size());
    if let Some(first) = sizes.next() {
        if sizes.any(|s| s != first) {
            eprintln!("error: input matrices have different universe sizes");
            return EXIT_USAGE;
        }
    }

    println!("run report v1");
    println!("program: {}", program.as_str());
    println!("mode: {}", args.mode);
    let run = match run_checked(program, &inputs, mode) {
        Ok(run) => run,
        Err(err) => {
            eprintln!("error: {err}");
            return EXIT_FAIL;
        }
    };
    for (name, value) in &run.outputs {
        println!("output {name}: {}", describe(value));
        print!("{value}");
    }
    println!("iterations: {}", run.trace.iterations());
    let passed = run.trace.all_passed();
    println!("verdict: {}", if passed { "pass" } else { "fail" });
    if let Some(path) = &args.trace_out {
        if let Err(err) = fs::write(path, run.trace.render(args.dump_matrices)) {
            eprintln!("error: cannot write trace to {}: {err}", path.display());
            return EXIT_USAGE;
        }
    }
    if passed {
        0
    } else {
        EXIT_FAIL
    }
}

fn describe(r: &Relation) -> String {
    if let Ok(i) = r.point_index() {
        return format!("point {i}");
    }
    if classify::is_vector(r) {
        let members = r.vector_members().expect("vector view");
        let rendered: Vec<String> = members.iter().map(|m| m.to_string()).collect();
        return format!("vector {{{}}}", rendered.join(","));
    }
    format!("relation with {} pairs", r.pair_count())
}

fn cmd_crossvalidate(n: usize, ops: usize, strategy: &str, by_rank: bool, seed: u64) -> u8 {
    let strategy: FindStrategy = match strategy.parse() {
        Ok(s) => s,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_USAGE;
        }
    };
    if n == 0 {
        eprintln!("error: --n must be at least 1");
        return EXIT_USAGE;
    }
    let cfg = CrossvalConfig {
        n,
        ops,
        strategy,
        by_rank,
        seed,
    };
    println!("crossvalidate report v1");
    println!("n: {n}");
    println!("ops: {ops}");
    println!("strategy: {strategy}");
    println!("by-rank: {by_rank}");
    println!("seed: {seed}");
    match crossval::run(&cfg) {
        Ok(outcome) => {
            println!("ops executed: {}", outcome.ops_executed);
            println!("max rank: {}", outcome.max_rank);
            match &outcome.divergence {
                None => {
                    println!("result: pass");
                    0
                }
                Some(divergence) => {
                    print!("{divergence}");
                    println!("result: fail");
                    EXIT_FAIL
                }
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_FAIL
        }
    }
}

fn cmd_convert(input: &Path, output: Option<&Path>) -> u8 {
    let relation = match load_matrix(input) {
        Ok(r) => r,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_USAGE;
        }
    };
    let text = relation.to_string();
    match output {
        None => print!("{text}"),
        Some(path) => {
            if let Err(err) = fs::write(path, text) {
                eprintln!("error: cannot write {}: {err}", path.display());
                return EXIT_USAGE;
            }
        }
    }
    0
}

fn load_matrix(path: &Path) -> Result<Relation, String> {
    let text = fs::read_to_string(path)
        .map_err(|err| format!("cannot read {}: {err}", path.display()))?;
    text.parse()
        .map_err(|err| format!("{}: {err}", path.display()))
}
