//! Execution traces of the annotated programs and the checker that records
//! pre/invariant/variant/post verdicts while a program runs.

use std::fmt;
use std::str::FromStr;

use crate::error::ProgramError;
use crate::relation::Relation;

/// How much checking a program run performs.
///
/// `Strict` evaluates every assertion and aborts on the first failure;
/// `TraceOnly` evaluates and records verdicts without aborting; `Off` skips
/// assertion evaluation entirely (iteration caps stay armed). The
/// cross-validation driver uses `Off`; everything else defaults to `Strict`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Strict,
    TraceOnly,
    Off,
}

impl CheckMode {
    pub fn checks_enabled(self) -> bool {
        !matches!(self, CheckMode::Off)
    }
}

impl FromStr for CheckMode {
    type Err = String;

    fn from_str(s: &str) -> Result<CheckMode, String> {
        match s {
            "strict" => Ok(CheckMode::Strict),
            "trace" | "trace-only" => Ok(CheckMode::TraceOnly),
            "off" => Ok(CheckMode::Off),
            other => Err(format!("unknown mode {other:?} (expected strict|trace|off)")),
        }
    }
}

/// Where in the loop a record was taken: at the loop head (with the guard
/// still to be tested) or inside the body after an update.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Head,
    Body,
}

/// One record of a loop: iteration index, variant value at the head,
/// assertion verdicts and full variable snapshots.
#[derive(Debug, Clone)]
pub struct TraceStep {
    pub loop_name: String,
    pub kind: StepKind,
    pub iteration: usize,
    /// Whether the guard held at this head, i.e. a body execution followed.
    pub entered_body: bool,
    pub variant: Option<u64>,
    pub checks: Vec<(String, bool)>,
    pub snapshot: Vec<(String, Relation)>,
}

/// Ordered record of a program run.
#[derive(Debug, Clone, Default)]
pub struct ProgramTrace {
    pub program: String,
    pub mode_label: String,
    pub pre_checks: Vec<(String, bool)>,
    pub steps: Vec<TraceStep>,
    pub final_checks: Vec<(String, bool)>,
}

impl ProgramTrace {
    /// Number of body executions across all loops.
    pub fn iterations(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Head && s.entered_body)
            .count()
    }

    /// All recorded verdicts true and every variant chain strictly
    /// decreasing.
    pub fn all_passed(&self) -> bool {
        let checks_ok = self
            .pre_checks
            .iter()
            .chain(&self.final_checks)
            .chain(self.steps.iter().flat_map(|s| &s.checks))
            .all(|(_, ok)| *ok);
        checks_ok && self.variants_strictly_decrease()
    }

    pub fn variants_strictly_decrease(&self) -> bool {
        let mut last: Option<(&str, u64)> = None;
        for step in &self.steps {
            let (StepKind::Head, Some(v)) = (step.kind, step.variant) else {
                continue;
            };
            if let Some((name, prev)) = last {
                if name == step.loop_name && prev <= v {
                    return false;
                }
            }
            last = Some((&step.loop_name, v));
        }
        true
    }

    /// Variant values of head records, in order, for one loop.
    pub fn variant_chain(&self, loop_name: &str) -> Vec<u64> {
        self.steps
            .iter()
            .filter(|s| s.kind == StepKind::Head && s.loop_name == loop_name)
            .filter_map(|s| s.variant)
            .collect()
    }

    /// Stable text rendering, versioned for golden-file comparisons.
    pub fn render(&self, include_matrices: bool) -> String {
        let mut out = String::new();
        out.push_str("trace v1\n");
        out.push_str(&format!("program: {}\n", self.program));
        out.push_str(&format!("mode: {}\n", self.mode_label));
        for (name, ok) in &self.pre_checks {
            out.push_str(&format!("pre: {name}={}\n", verdict(*ok)));
        }
        for step in &self.steps {
            let kind = match step.kind {
                StepKind::Head => "step",
                StepKind::Body => "body",
            };
            let variant = match step.variant {
                Some(v) => v.to_string(),
                None => "-".to_string(),
            };
            let mut line = format!(
                "{kind}: loop={} iter={} variant={variant}",
                step.loop_name, step.iteration
            );
            for (name, ok) in &step.checks {
                line.push_str(&format!(" {name}={}", verdict(*ok)));
            }
            out.push_str(&line);
            out.push('\n');
            if include_matrices {
                for (var, value) in &step.snapshot {
                    out.push_str(&format!("matrix: {var}\n"));
                    out.push_str(&value.to_string());
                }
            }
        }
        for (name, ok) in &self.final_checks {
            out.push_str(&format!("post: {name}={}\n", verdict(*ok)));
        }
        out.push_str(&format!("iterations: {}\n", self.iterations()));
        out.push_str(&format!(
            "verdict: {}\n",
            verdict(self.all_passed())
        ));
        out
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

impl fmt::Display for ProgramTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Records verdicts while a program executes and enforces them in strict
/// mode. Each loop may run at most n+1 head visits: exceeding the cap means
/// a cyclic parent structure slipped past the precondition.
pub struct Checker {
    mode: CheckMode,
    cap: usize,
    trace: ProgramTrace,
    last_variant: Option<(String, u64)>,
}

impl Checker {
    pub fn new(program: &str, mode: CheckMode, n: usize) -> Checker {
        Checker {
            mode,
            cap: n + 1,
            trace: ProgramTrace {
                program: program.to_string(),
                mode_label: match mode {
                    CheckMode::Strict => "strict".to_string(),
                    CheckMode::TraceOnly => "trace".to_string(),
                    CheckMode::Off => "off".to_string(),
                },
                ..ProgramTrace::default()
            },
            last_variant: None,
        }
    }

    pub fn enabled(&self) -> bool {
        self.mode.checks_enabled()
    }

    fn program(&self) -> String {
        self.trace.program.clone()
    }

    /// Records a precondition verdict; aborts in strict mode when violated.
    pub fn pre(&mut self, name: &str, holds: bool) -> Result<(), ProgramError> {
        self.trace.pre_checks.push((name.to_string(), holds));
        if self.mode == CheckMode::Strict && !holds {
            return Err(ProgramError::PreconditionViolated {
                program: self.program(),
                assertion: name.to_string(),
            });
        }
        Ok(())
    }

    /// Records a loop-head visit with its verdicts and variant value.
    pub fn head(
        &mut self,
        loop_name: &str,
        iteration: usize,
        entered_body: bool,
        variant: Option<u64>,
        checks: Vec<(String, bool)>,
        snapshot: Vec<(String, Relation)>,
    ) -> Result<(), ProgramError> {
        self.enforce_cap(loop_name, iteration)?;
        if let (Some(v), Some((prev_loop, prev))) = (variant, &self.last_variant) {
            if prev_loop == loop_name && *prev <= v && self.mode == CheckMode::Strict {
                return Err(ProgramError::VariantNotDecreasing {
                    program: self.program(),
                    loop_name: loop_name.to_string(),
                    iteration,
                    prev: *prev,
                    cur: v,
                });
            }
        }
        if let Some(v) = variant {
            self.last_variant = Some((loop_name.to_string(), v));
        }
        let failed = checks.iter().find(|(_, ok)| !ok).map(|(n, _)| n.clone());
        self.trace.steps.push(TraceStep {
            loop_name: loop_name.to_string(),
            kind: StepKind::Head,
            iteration,
            entered_body,
            variant,
            checks,
            snapshot,
        });
        if self.mode == CheckMode::Strict {
            if let Some(assertion) = failed {
                return Err(ProgramError::AssertionFailed {
                    program: self.program(),
                    loop_name: loop_name.to_string(),
                    assertion,
                    iteration,
                });
            }
        }
        Ok(())
    }

    /// Cap bookkeeping for runs with checks off.
    pub fn tick(&mut self, loop_name: &str, iteration: usize) -> Result<(), ProgramError> {
        self.enforce_cap(loop_name, iteration)
    }

    fn enforce_cap(&self, loop_name: &str, iteration: usize) -> Result<(), ProgramError> {
        if iteration > self.cap {
            return Err(ProgramError::IterationCapExceeded {
                program: self.program(),
                loop_name: loop_name.to_string(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// Records a check made inside a loop body.
    pub fn body_check(
        &mut self,
        loop_name: &str,
        iteration: usize,
        name: &str,
        holds: bool,
    ) -> Result<(), ProgramError> {
        self.trace.steps.push(TraceStep {
            loop_name: loop_name.to_string(),
            kind: StepKind::Body,
            iteration,
            entered_body: false,
            variant: None,
            checks: vec![(name.to_string(), holds)],
            snapshot: Vec::new(),
        });
        if self.mode == CheckMode::Strict && !holds {
            return Err(ProgramError::AssertionFailed {
                program: self.program(),
                loop_name: loop_name.to_string(),
                assertion: name.to_string(),
                iteration,
            });
        }
        Ok(())
    }

    /// Records a postcondition verdict; aborts in strict mode when violated.
    pub fn post(&mut self, name: &str, holds: bool) -> Result<(), ProgramError> {
        self.trace.final_checks.push((name.to_string(), holds));
        if self.mode == CheckMode::Strict && !holds {
            return Err(ProgramError::PostconditionFailed {
                program: self.program(),
                assertion: name.to_string(),
            });
        }
        Ok(())
    }

    /// Folds the trace of a sub-program call into this one.
    pub fn absorb(&mut self, sub: ProgramTrace) {
        self.trace.pre_checks.extend(sub.pre_checks);
        self.trace.steps.extend(sub.steps);
        self.trace.final_checks.extend(sub.final_checks);
        self.last_variant = None;
    }

    pub fn into_trace(self) -> ProgramTrace {
        self.trace
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variant_chain_must_decrease() {
        let mut ck = Checker::new("demo", CheckMode::Strict, 5);
        ck.head("loop", 0, true, Some(3), vec![], vec![]).unwrap();
        ck.head("loop", 1, true, Some(2), vec![], vec![]).unwrap();
        let err = ck.head("loop", 2, true, Some(2), vec![], vec![]).unwrap_err();
        assert!(matches!(err, ProgramError::VariantNotDecreasing { .. }));
    }

    #[test]
    fn trace_only_records_failures_without_aborting() {
        let mut ck = Checker::new("demo", CheckMode::TraceOnly, 5);
        ck.pre("pre", false).unwrap();
        ck.head("loop", 0, true, Some(3), vec![("inv".into(), false)], vec![])
            .unwrap();
        ck.head("loop", 1, false, Some(3), vec![], vec![]).unwrap();
        ck.post("post", false).unwrap();
        let trace = ck.into_trace();
        assert!(!trace.all_passed());
        assert!(!trace.variants_strictly_decrease());
        assert_eq!(trace.iterations(), 1);
    }

    #[test]
    fn iteration_cap_fires_in_every_mode() {
        for mode in [CheckMode::Strict, CheckMode::TraceOnly, CheckMode::Off] {
            let mut ck = Checker::new("demo", mode, 2);
            let mut failed = false;
            for i in 0..10 {
                if ck.tick("loop", i).is_err() {
                    failed = true;
                    break;
                }
            }
            assert!(failed);
        }
    }

    #[test]
    fn render_is_stable() {
        let mut ck = Checker::new("demo", CheckMode::Strict, 3);
        ck.pre("pre", true).unwrap();
        ck.head(
            "loop",
            0,
            true,
            Some(1),
            vec![("inv".into(), true)],
            vec![("y".into(), Relation::point(2, 0))],
        )
        .unwrap();
        ck.head("loop", 1, false, Some(0), vec![("inv".into(), true)], vec![])
            .unwrap();
        ck.post("post", true).unwrap();
        let trace = ck.into_trace();
        let expected = "\
trace v1
program: demo
mode: strict
pre: pre=pass
step: loop=loop iter=0 variant=1 inv=pass
step: loop=loop iter=1 variant=0 inv=pass
post: post=pass
iterations: 1
verdict: pass
";
        assert_eq!(trace.render(false), expected);
        let with_matrices = trace.render(true);
        assert!(with_matrices.contains("matrix: y\n2\n11\n00\n"));
    }
}
