//! The disjoint-set-forest while-programs, executed over relations with
//! every pre/invariant/variant/post assertion evaluated at runtime.
//!
//! Each program mirrors its annotated source shape: the same guards, the
//! same update order, the same invariant at every loop head (including the
//! final head where the guard fails). Mutating programs take the state by
//! reference and return an updated copy.

use std::collections::BTreeMap;
use std::str::FromStr;

use crate::array::{aread, awrite};
use crate::classify::{is_forest, is_point};
use crate::components::ancestors;
use crate::error::ProgramError;
use crate::forest::{self, ForestState};
use crate::peano::{build_peano, rank_property, succ, less, PeanoCtx};
use crate::relation::{choose_point, down_count, Relation};
use crate::trace::{CheckMode, Checker, ProgramTrace};

fn variant_of(p: &Relation, y: &Relation) -> Option<u64> {
    down_count(&ancestors(p, y)).ok()
}

/// Puts the element x into its own singleton class: p[x] := x.
pub fn make_set(
    state: &ForestState,
    x: &Relation,
    mode: CheckMode,
) -> Result<(ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("make_set", mode, state.size());
    if ck.enabled() {
        ck.pre("point_x", is_point(x))?;
    }
    let p = awrite(&state.p, x, x);
    if ck.enabled() {
        ck.post("make_set_post", forest::make_set_post(&p, x, &state.p))?;
    }
    Ok((
        ForestState { p, rank: state.rank.clone() },
        ck.into_trace(),
    ))
}

/// Initialises an n-element forest by applying make-set to every element,
/// iterating over a shrinking working vector. Ends with p = 1.
pub fn init_sets(n: usize, mode: CheckMode) -> Result<(ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("init_sets", mode, n);
    let mut h = Relation::top(n);
    let mut p = Relation::bot(n);
    let mut iter = 0;
    loop {
        let guard = !h.is_empty();
        if ck.enabled() {
            ck.head(
                "init_sets",
                iter,
                guard,
                down_count(&h).ok(),
                vec![("init_sets_inv".into(), forest::init_sets_inv(&p, &h))],
                vec![("h".into(), h.clone()), ("p".into(), p.clone())],
            )?;
        } else {
            ck.tick("init_sets", iter)?;
        }
        if !guard {
            break;
        }
        let x = choose_point(&h)?;
        let p0 = p.clone();
        p = awrite(&p, &x, &x);
        if ck.enabled() {
            ck.body_check(
                "init_sets",
                iter,
                "make_set_post",
                forest::make_set_post(&p, &x, &p0),
            )?;
        }
        h = awrite(&h, &x, &Relation::bot(n));
        iter += 1;
    }
    if ck.enabled() {
        let one = Relation::identity(n);
        ck.post("p_is_identity", p == one)?;
        ck.post("forest_p", is_forest(&p))?;
        ck.post("h_is_empty", h.is_empty())?;
    }
    Ok((ForestState::new(p), ck.into_trace()))
}

/// Follows parents from x to the root of its tree; the forest is unchanged.
pub fn find_set(
    state: &ForestState,
    x: &Relation,
    mode: CheckMode,
) -> Result<(Relation, ProgramTrace), ProgramError> {
    let p = &state.p;
    let mut ck = Checker::new("find_set", mode, state.size());
    if ck.enabled() {
        ck.pre("find_set_pre", forest::find_set_pre(p, x))?;
    }
    let mut y = x.clone();
    let mut iter = 0;
    loop {
        let parent = aread(p, &y);
        let guard = y != parent;
        if ck.enabled() {
            ck.head(
                "find_set",
                iter,
                guard,
                variant_of(p, &y),
                vec![("find_set_inv".into(), forest::find_set_inv(p, x, &y))],
                vec![("y".into(), y.clone())],
            )?;
        } else {
            ck.tick("find_set", iter)?;
        }
        if !guard {
            break;
        }
        y = parent;
        iter += 1;
    }
    if ck.enabled() {
        ck.post("find_set_post", forest::find_set_post(p, x, &y))?;
    }
    Ok((y, ck.into_trace()))
}

/// Repoints every node on the path from x to the already-computed root y
/// directly at y, walking the same chain find-set walked.
pub fn path_compression(
    state: &ForestState,
    x: &Relation,
    y: &Relation,
    mode: CheckMode,
) -> Result<(ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("path_compression", mode, state.size());
    let p0 = state.p.clone();
    if ck.enabled() {
        ck.pre(
            "path_compression_pre",
            forest::path_compression_pre(&p0, x, y),
        )?;
    }
    let mut p = p0.clone();
    let mut w = x.clone();
    let mut iter = 0;
    loop {
        let parent = aread(&p, &w);
        let guard = *y != parent;
        if ck.enabled() {
            ck.head(
                "path_compression",
                iter,
                guard,
                variant_of(&p, &w),
                vec![
                    (
                        "path_compression_inv".into(),
                        forest::path_compression_inv(&p, x, y, &p0, &w),
                    ),
                    ("point_w".into(), is_point(&w)),
                ],
                vec![("w".into(), w.clone()), ("p".into(), p.clone())],
            )?;
        } else {
            ck.tick("path_compression", iter)?;
        }
        if !guard {
            break;
        }
        let t = w;
        w = parent;
        p = awrite(&p, &t, y);
        iter += 1;
    }
    if ck.enabled() {
        ck.post(
            "path_compression_post",
            forest::path_compression_post(&p, x, y, &p0),
        )?;
    }
    Ok((
        ForestState { p, rank: state.rank.clone() },
        ck.into_trace(),
    ))
}

/// The same effect as path compression, as the single relational
/// assignment p[p*[x]] := y.
pub fn path_compression_assign(
    state: &ForestState,
    x: &Relation,
    y: &Relation,
    mode: CheckMode,
) -> Result<(ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("path_compression_assign", mode, state.size());
    let p0 = &state.p;
    if ck.enabled() {
        ck.pre(
            "path_compression_pre",
            forest::path_compression_pre(p0, x, y),
        )?;
    }
    let p = awrite(p0, &ancestors(p0, x), y);
    if ck.enabled() {
        ck.post(
            "path_compression_post",
            forest::path_compression_post(&p, x, y, p0),
        )?;
    }
    Ok((
        ForestState { p, rank: state.rank.clone() },
        ck.into_trace(),
    ))
}

/// find-set followed by path compression; returns the root and the
/// compressed forest.
pub fn find_set_path_compression(
    state: &ForestState,
    x: &Relation,
    mode: CheckMode,
) -> Result<(Relation, ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("find_set_path_compression", mode, state.size());
    if ck.enabled() {
        ck.pre("find_set_pre", forest::find_set_pre(&state.p, x))?;
    }
    let p0 = state.p.clone();
    let (y, trace) = find_set(state, x, mode)?;
    ck.absorb(trace);
    let (next, trace) = path_compression(state, x, &y, mode)?;
    ck.absorb(trace);
    if ck.enabled() {
        ck.post(
            "path_compression_post",
            forest::path_compression_post(&next.p, x, &y, &p0),
        )?;
    }
    Ok((y, next, ck.into_trace()))
}

/// One pass from x to the root, repointing every visited node at its
/// grandparent.
pub fn find_path_splitting(
    state: &ForestState,
    x: &Relation,
    mode: CheckMode,
) -> Result<(Relation, ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("find_path_splitting", mode, state.size());
    let p0 = state.p.clone();
    if ck.enabled() {
        ck.pre("find_set_pre", forest::find_set_pre(&p0, x))?;
    }
    let mut p = p0.clone();
    let mut y = x.clone();
    let mut iter = 0;
    loop {
        let parent = aread(&p, &y);
        let guard = y != parent;
        if ck.enabled() {
            ck.head(
                "find_path_splitting",
                iter,
                guard,
                variant_of(&p, &y),
                vec![
                    (
                        "path_splitting_inv".into(),
                        forest::path_splitting_inv(&p, x, &y, &p0),
                    ),
                    (
                        "path_splitting_consequence".into(),
                        splitting_consequences(&p, &p0, &y),
                    ),
                ],
                vec![("y".into(), y.clone()), ("p".into(), p.clone())],
            )?;
        } else {
            ck.tick("find_path_splitting", iter)?;
        }
        if !guard {
            break;
        }
        let t = parent;
        let grandparent = aread(&p, &aread(&p, &y));
        p = awrite(&p, &y, &grandparent);
        y = t;
        iter += 1;
    }
    if ck.enabled() {
        ck.post(
            "path_splitting_post",
            forest::path_splitting_post(&p, x, &y, &p0),
        )?;
    }
    Ok((
        y,
        ForestState { p, rank: state.rank.clone() },
        ck.into_trace(),
    ))
}

/// One pass from x to the root, repointing every second visited node at its
/// grandparent and stepping two levels at a time.
pub fn find_path_halving(
    state: &ForestState,
    x: &Relation,
    mode: CheckMode,
) -> Result<(Relation, ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("find_path_halving", mode, state.size());
    let p0 = state.p.clone();
    if ck.enabled() {
        ck.pre("find_set_pre", forest::find_set_pre(&p0, x))?;
    }
    let mut p = p0.clone();
    let mut y = x.clone();
    let mut iter = 0;
    loop {
        let parent = aread(&p, &y);
        let guard = y != parent;
        if ck.enabled() {
            ck.head(
                "find_path_halving",
                iter,
                guard,
                variant_of(&p, &y),
                vec![
                    (
                        "path_halving_inv".into(),
                        forest::path_halving_inv(&p, x, &y, &p0),
                    ),
                    (
                        "path_halving_consequence".into(),
                        splitting_consequences(&p, &p0, &y),
                    ),
                ],
                vec![("y".into(), y.clone()), ("p".into(), p.clone())],
            )?;
        } else {
            ck.tick("find_path_halving", iter)?;
        }
        if !guard {
            break;
        }
        let grandparent = aread(&p, &parent);
        p = awrite(&p, &y, &grandparent);
        y = aread(&p, &y);
        iter += 1;
    }
    if ck.enabled() {
        ck.post(
            "path_halving_post",
            forest::path_halving_post(&p, x, &y, &p0),
        )?;
    }
    Ok((
        y,
        ForestState { p, rank: state.rank.clone() },
        ck.into_trace(),
    ))
}

/// Consequences of the splitting/halving invariants: the next two parent
/// hops agree with the original forest, components and roots are unchanged.
fn splitting_consequences(p: &Relation, p0: &Relation, y: &Relation) -> bool {
    use crate::components::fc;
    let one = Relation::identity(p.size());
    aread(p, y) == aread(p0, y)
        && aread(p, &aread(p, y)) == aread(p0, &aread(p0, y))
        && fc(p) == fc(p0)
        && p.meet(&one) == p0.meet(&one)
}

/// Joins the trees containing x and y: two find+compress passes, then the
/// root of x's tree is linked below the root of y's tree.
pub fn union_sets(
    state: &ForestState,
    x: &Relation,
    y: &Relation,
    mode: CheckMode,
) -> Result<(ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("union_sets", mode, state.size());
    let p0 = state.p.clone();
    if ck.enabled() {
        ck.pre("union_sets_pre", forest::union_sets_pre(&p0, x, y))?;
    }
    let (r, trace) = find_set(state, x, mode)?;
    ck.absorb(trace);
    let (state, trace) = path_compression(state, x, &r, mode)?;
    ck.absorb(trace);
    let (s, trace) = find_set(&state, y, mode)?;
    ck.absorb(trace);
    let (state, trace) = path_compression(&state, y, &s, mode)?;
    ck.absorb(trace);
    let p = awrite(&state.p, &r, &s);
    if ck.enabled() {
        ck.post("union_sets_post", forest::union_sets_post(&p, x, y, &p0))?;
    }
    Ok((
        ForestState { p, rank: state.rank },
        ck.into_trace(),
    ))
}

/// union-sets built on the combined find+compress pass; same contract as
/// `union_sets` and bit-identical results.
pub fn union_sets_alt(
    state: &ForestState,
    x: &Relation,
    y: &Relation,
    mode: CheckMode,
) -> Result<(ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("union_sets_alt", mode, state.size());
    let p0 = state.p.clone();
    if ck.enabled() {
        ck.pre("union_sets_pre", forest::union_sets_pre(&p0, x, y))?;
    }
    let (r, state, trace) = find_set_path_compression(state, x, mode)?;
    ck.absorb(trace);
    let (s, state, trace) = find_set_path_compression(&state, y, mode)?;
    ck.absorb(trace);
    let p = awrite(&state.p, &r, &s);
    if ck.enabled() {
        ck.post("union_sets_post", forest::union_sets_post(&p, x, y, &p0))?;
    }
    Ok((
        ForestState { p, rank: state.rank },
        ck.into_trace(),
    ))
}

/// union-sets with the union-by-rank heuristic: the root of smaller rank is
/// linked below the other, and equal ranks increment the surviving root's
/// rank.
pub fn union_sets_by_rank(
    state: &ForestState,
    x: &Relation,
    y: &Relation,
    ctx: &PeanoCtx,
    mode: CheckMode,
) -> Result<(ForestState, ProgramTrace), ProgramError> {
    let mut ck = Checker::new("union_sets_by_rank", mode, state.size());
    let p0 = state.p.clone();
    let rank0 = state.rank.clone().ok_or_else(|| ProgramError::MissingRank {
        program: "union_sets_by_rank".to_string(),
    })?;
    if ck.enabled() {
        ck.pre("union_sets_pre", forest::union_sets_pre(&p0, x, y))?;
        ck.pre("rank_property", rank_property(&p0, &rank0, ctx))?;
    }
    let (r, trace) = find_set(state, x, mode)?;
    ck.absorb(trace);
    let (state, trace) = path_compression(state, x, &r, mode)?;
    ck.absorb(trace);
    let (s, trace) = find_set(&state, y, mode)?;
    ck.absorb(trace);
    let (state, trace) = path_compression(&state, y, &s, mode)?;
    ck.absorb(trace);

    let mut p = state.p;
    let mut rank = rank0;
    if r != s {
        let rank_r = aread(&rank, &r);
        let rank_s = aread(&rank, &s);
        if less(ctx, &rank_r, &rank_s)? {
            p = awrite(&p, &r, &s);
        } else {
            p = awrite(&p, &s, &r);
            if rank_r == rank_s {
                let incremented = succ(ctx, &rank_r)?;
                // The rank property guarantees headroom; an empty successor
                // here means the invariant was already broken.
                if incremented.is_empty() {
                    return Err(ProgramError::RankOverflow {
                        program: "union_sets_by_rank".to_string(),
                    });
                }
                rank = awrite(&rank, &r, &incremented);
            }
        }
    }
    if ck.enabled() {
        ck.post("union_sets_post", forest::union_sets_post(&p, x, y, &p0))?;
        ck.post("rank_property", rank_property(&p, &rank, ctx))?;
    }
    Ok((
        ForestState { p, rank: Some(rank) },
        ck.into_trace(),
    ))
}

/// init-sets extended to zero every rank; establishes the rank property.
pub fn init_ranks(n: usize, mode: CheckMode) -> Result<(ForestState, ProgramTrace), ProgramError> {
    let ctx = build_peano(n)?;
    let zero = ctx.zero();
    let mut ck = Checker::new("init_ranks", mode, n);
    let mut h = Relation::top(n);
    let mut p = Relation::bot(n);
    let mut rank = Relation::bot(n);
    let mut iter = 0;
    loop {
        let guard = !h.is_empty();
        if ck.enabled() {
            ck.head(
                "init_ranks",
                iter,
                guard,
                down_count(&h).ok(),
                vec![(
                    "init_ranks_inv".into(),
                    forest::init_ranks_inv(&p, &h, &rank, zero),
                )],
                vec![
                    ("h".into(), h.clone()),
                    ("p".into(), p.clone()),
                    ("rank".into(), rank.clone()),
                ],
            )?;
        } else {
            ck.tick("init_ranks", iter)?;
        }
        if !guard {
            break;
        }
        let x = choose_point(&h)?;
        let p_before = p.clone();
        p = awrite(&p, &x, &x);
        if ck.enabled() {
            ck.body_check(
                "init_ranks",
                iter,
                "make_set_post",
                forest::make_set_post(&p, &x, &p_before),
            )?;
        }
        rank = awrite(&rank, &x, zero);
        h = awrite(&h, &x, &Relation::bot(n));
        iter += 1;
    }
    if ck.enabled() {
        let one = Relation::identity(n);
        ck.post("p_is_identity", p == one)?;
        ck.post("forest_p", is_forest(&p))?;
        ck.post("h_is_empty", h.is_empty())?;
        ck.post("rank_is_zero", rank == zero.transpose())?;
        ck.post("rank_property", rank_property(&p, &rank, &ctx))?;
    }
    Ok((ForestState::with_rank(p, rank), ck.into_trace()))
}

/// The annotated programs runnable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProgramName {
    MakeSet,
    InitSets,
    InitRanks,
    FindSet,
    PathCompression,
    PathCompressionAssign,
    FindSetPathCompression,
    FindPathSplitting,
    FindPathHalving,
    UnionSets,
    UnionSetsAlt,
    UnionSetsByRank,
}

impl ProgramName {
    pub const ALL: [ProgramName; 12] = [
        ProgramName::MakeSet,
        ProgramName::InitSets,
        ProgramName::InitRanks,
        ProgramName::FindSet,
        ProgramName::PathCompression,
        ProgramName::PathCompressionAssign,
        ProgramName::FindSetPathCompression,
        ProgramName::FindPathSplitting,
        ProgramName::FindPathHalving,
        ProgramName::UnionSets,
        ProgramName::UnionSetsAlt,
        ProgramName::UnionSetsByRank,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProgramName::MakeSet => "make_set",
            ProgramName::InitSets => "init_sets",
            ProgramName::InitRanks => "init_ranks",
            ProgramName::FindSet => "find_set",
            ProgramName::PathCompression => "path_compression",
            ProgramName::PathCompressionAssign => "path_compression_assign",
            ProgramName::FindSetPathCompression => "find_set_path_compression",
            ProgramName::FindPathSplitting => "find_path_splitting",
            ProgramName::FindPathHalving => "find_path_halving",
            ProgramName::UnionSets => "union_sets",
            ProgramName::UnionSetsAlt => "union_sets_alt",
            ProgramName::UnionSetsByRank => "union_sets_by_rank",
        }
    }
}

impl FromStr for ProgramName {
    type Err = ProgramError;

    fn from_str(s: &str) -> Result<ProgramName, ProgramError> {
        ProgramName::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| ProgramError::UnknownProgram(s.to_string()))
    }
}

/// Inputs for `run_checked`: named relations plus a size for the
/// initialisation programs.
#[derive(Debug, Clone, Default)]
pub struct ProgramInputs {
    pub n: Option<usize>,
    pub bindings: BTreeMap<String, Relation>,
}

impl ProgramInputs {
    fn get(&self, program: &str, name: &str) -> Result<&Relation, ProgramError> {
        self.bindings.get(name).ok_or_else(|| ProgramError::MissingBinding {
            program: program.to_string(),
            name: name.to_string(),
        })
    }

    fn size(&self, program: &str) -> Result<usize, ProgramError> {
        if let Some(n) = self.n {
            return Ok(n);
        }
        self.bindings
            .values()
            .next()
            .map(|r| r.size())
            .ok_or_else(|| ProgramError::MissingBinding {
                program: program.to_string(),
                name: "n".to_string(),
            })
    }

    fn state(&self, program: &str) -> Result<ForestState, ProgramError> {
        let p = self.get(program, "p")?.clone();
        Ok(ForestState {
            p,
            rank: self.bindings.get("rank").cloned(),
        })
    }
}

/// Outputs and trace of one checked program run.
#[derive(Debug, Clone)]
pub struct ProgramRun {
    pub outputs: Vec<(String, Relation)>,
    pub trace: ProgramTrace,
}

fn state_outputs(state: ForestState) -> Vec<(String, Relation)> {
    let mut outputs = vec![("p".to_string(), state.p)];
    if let Some(rank) = state.rank {
        outputs.push(("rank".to_string(), rank));
    }
    outputs
}

/// Executes a program by name over named inputs, checking assertions
/// according to the mode.
pub fn run_checked(
    name: ProgramName,
    inputs: &ProgramInputs,
    mode: CheckMode,
) -> Result<ProgramRun, ProgramError> {
    let label = name.as_str();
    let run = match name {
        ProgramName::MakeSet => {
            let (state, trace) = make_set(&inputs.state(label)?, inputs.get(label, "x")?, mode)?;
            ProgramRun { outputs: state_outputs(state), trace }
        }
        ProgramName::InitSets => {
            let (state, trace) = init_sets(inputs.size(label)?, mode)?;
            ProgramRun { outputs: state_outputs(state), trace }
        }
        ProgramName::InitRanks => {
            let (state, trace) = init_ranks(inputs.size(label)?, mode)?;
            ProgramRun { outputs: state_outputs(state), trace }
        }
        ProgramName::FindSet => {
            let (y, trace) = find_set(&inputs.state(label)?, inputs.get(label, "x")?, mode)?;
            ProgramRun { outputs: vec![("y".to_string(), y)], trace }
        }
        ProgramName::PathCompression => {
            let (state, trace) = path_compression(
                &inputs.state(label)?,
                inputs.get(label, "x")?,
                inputs.get(label, "y")?,
                mode,
            )?;
            ProgramRun { outputs: state_outputs(state), trace }
        }
        ProgramName::PathCompressionAssign => {
            let (state, trace) = path_compression_assign(
                &inputs.state(label)?,
                inputs.get(label, "x")?,
                inputs.get(label, "y")?,
                mode,
            )?;
            ProgramRun { outputs: state_outputs(state), trace }
        }
        ProgramName::FindSetPathCompression => {
            let (y, state, trace) =
                find_set_path_compression(&inputs.state(label)?, inputs.get(label, "x")?, mode)?;
            let mut outputs = vec![("y".to_string(), y)];
            outputs.extend(state_outputs(state));
            ProgramRun { outputs, trace }
        }
        ProgramName::FindPathSplitting => {
            let (y, state, trace) =
                find_path_splitting(&inputs.state(label)?, inputs.get(label, "x")?, mode)?;
            let mut outputs = vec![("y".to_string(), y)];
            outputs.extend(state_outputs(state));
            ProgramRun { outputs, trace }
        }
        ProgramName::FindPathHalving => {
            let (y, state, trace) =
                find_path_halving(&inputs.state(label)?, inputs.get(label, "x")?, mode)?;
            let mut outputs = vec![("y".to_string(), y)];
            outputs.extend(state_outputs(state));
            ProgramRun { outputs, trace }
        }
        ProgramName::UnionSets => {
            let (state, trace) = union_sets(
                &inputs.state(label)?,
                inputs.get(label, "x")?,
                inputs.get(label, "y")?,
                mode,
            )?;
            ProgramRun { outputs: state_outputs(state), trace }
        }
        ProgramName::UnionSetsAlt => {
            let (state, trace) = union_sets_alt(
                &inputs.state(label)?,
                inputs.get(label, "x")?,
                inputs.get(label, "y")?,
                mode,
            )?;
            ProgramRun { outputs: state_outputs(state), trace }
        }
        ProgramName::UnionSetsByRank => {
            let state = inputs.state(label)?;
            let ctx = build_peano(state.size())?;
            let (state, trace) = union_sets_by_rank(
                &state,
                inputs.get(label, "x")?,
                inputs.get(label, "y")?,
                &ctx,
                mode,
            )?;
            ProgramRun { outputs: state_outputs(state), trace }
        }
    };
    Ok(run)
}
