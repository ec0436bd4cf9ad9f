//! Evaluation of queued directives.

use tp_core::contracts::sp;
use tp_core::loops::{
    check_loop_correctness, check_loop_feasibility, check_variant, is_invariant, is_loop_invariant,
    LoopCorrectness, LoopFeasibilityVerdict,
};
use tp_core::{Condition, LoopSpec, Program, Relation};
use tp_laws::{check_law, Config};

use crate::ast::Query;
use crate::diag::Pos;
use crate::elab::{Action, Check, Model, Queued};
use crate::printer::{cond_text, prog_text, rel_text};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectiveReport {
    /// The directive in canonical form.
    pub id: String,
    pub position: Pos,
    pub verdict: Verdict,
    /// `check not ...` whose underlying check failed, as it should.
    pub expected_failure: bool,
    pub cases: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
    /// Printed value of a `print` directive.
    pub value: Option<String>,
}

/// Outcome of the underlying check, before negation.
struct Found {
    ok: bool,
    cases: u64,
    failures: u64,
    witnesses: Vec<String>,
}

impl Found {
    fn single(ok: bool, witnesses: Vec<String>) -> Found {
        Found {
            ok,
            cases: 1,
            failures: u64::from(!ok),
            witnesses,
        }
    }
}

pub fn run(model: &Model) -> Vec<DirectiveReport> {
    model.directives.iter().map(run_one).collect()
}

pub fn run_one(d: &Queued) -> DirectiveReport {
    match &d.action {
        Action::Print { query, program } => DirectiveReport {
            id: d.text.clone(),
            position: d.pos,
            verdict: Verdict::Pass,
            expected_failure: false,
            cases: 1,
            failures: 0,
            witnesses: Vec::new(),
            value: Some(query_text(program, *query)),
        },
        Action::Check { negated, check } => {
            let found = evaluate(check);
            let pass = found.ok != *negated;
            DirectiveReport {
                id: d.text.clone(),
                position: d.pos,
                verdict: if pass { Verdict::Pass } else { Verdict::Fail },
                expected_failure: *negated && !found.ok,
                cases: found.cases,
                failures: found.failures,
                witnesses: found.witnesses,
                value: None,
            }
        }
    }
}

/// The queried facet of `p` in canonical text.
pub fn query_text(p: &Program, q: Query) -> String {
    match q {
        Query::Post => rel_text(p.post()),
        Query::Pre => cond_text(p.pre()),
        Query::Range => cond_text(&p.range()),
        Query::Dom => cond_text(&p.post().domain()),
        Query::Classify => p.classify().flags(),
    }
}

fn nonempty_cond(label: &str, c: &Condition) -> Option<String> {
    (!c.is_empty()).then(|| format!("{label} {}", cond_text(c)))
}

fn nonempty_rel(label: &str, r: &Relation) -> Option<String> {
    (!r.is_empty()).then(|| format!("{label} {}", rel_text(r)))
}

const SHARED: &str = "one universe per model";

fn evaluate(check: &Check) -> Found {
    match check {
        Check::Feasible(p) => {
            let stuck = p.infeasible_states();
            Found::single(p.is_feasible(), nonempty_cond("no result from", &stuck).into_iter().collect())
        }
        Check::Refines(q, p) => Found::single(q.refines(p), refinement_gaps(q, p)),
        Check::Equivalent(p, q) => {
            let ok = p.equivalent(q).expect(SHARED);
            let mut w = Vec::new();
            if !ok {
                w.push(format!("left {}", prog_text(&p.normalized())));
                w.push(format!("right {}", prog_text(&q.normalized())));
            }
            Found::single(ok, w)
        }
        Check::Correct(cp) => {
            let v = cp.check();
            let mut w: Vec<String> = [
                nonempty_cond("Pre outside wp:", &v.violating),
                nonempty_rel("results not allowed by post:", &v.dangling),
                nonempty_cond("body infeasible on", &v.infeasible),
            ]
            .into_iter()
            .flatten()
            .collect();
            if !v.formulations_agree() {
                w.push(format!("wp formula says {}, definition says {}", v.by_formula, v.correct));
            }
            Found::single(v.correct, w)
        }
        Check::Commutes(p, q) => {
            let (pq, qp) = (p.seq(q).expect(SHARED), q.seq(p).expect(SHARED));
            let ok = pq == qp;
            let w = if ok {
                Vec::new()
            } else {
                vec![format!("p ; q = {}", prog_text(&pq)), format!("q ; p = {}", prog_text(&qp))]
            };
            Found::single(ok, w)
        }
        Check::Invariant(i, p) => {
            let ok = is_invariant(i, p).expect(SHARED);
            Found::single(ok, escapes(i, p).into_iter().collect())
        }
        Check::LoopInvariant(i, ls) => {
            let ok = is_loop_invariant(i, ls).expect(SHARED);
            Found::single(ok, loop_invariant_gaps(i, ls))
        }
        Check::LoopCorrect(i, ls) => match check_loop_correctness(ls, i).expect(SHARED) {
            LoopCorrectness::Holds => Found::single(true, Vec::new()),
            LoopCorrectness::NotLoopInvariant => {
                let mut w = vec![format!("{} is not a loop invariant", cond_text(i))];
                w.extend(loop_invariant_gaps(i, ls));
                Found::single(false, w)
            }
            LoopCorrectness::Violated { offending } => {
                Found::single(false, vec![format!("exits outside C ∩ I: {}", cond_text(&offending))])
            }
        },
        Check::LoopFeasible(ls) => match check_loop_feasibility(ls) {
            LoopFeasibilityVerdict::InfeasibleOperands { init, body } => {
                let mut w = Vec::new();
                if init {
                    w.push(format!("initialization infeasible on {}", cond_text(&ls.init.infeasible_states())));
                }
                if body {
                    w.push(format!("body infeasible on {}", cond_text(&ls.body.infeasible_states())));
                }
                Found::single(false, w)
            }
            LoopFeasibilityVerdict::Evaluated(f) => {
                let mut w = Vec::new();
                if !f.direct {
                    w.push(format!("Pre_a ⊄ Pre_l: no exit from {}", cond_text(&f.stuck)));
                    w.push(format!(
                        "sufficient condition: Pre_b ∪ C loop invariant {}, C' : post_b well-founded {}",
                        f.invariant_ok, f.well_founded
                    ));
                }
                Found::single(f.direct, w)
            }
        },
        Check::Variant(ls, v) => {
            let ok = check_variant(v, ls).expect(SHARED);
            let space = ls.body.space();
            let steps = ls.body.post().restrict(&ls.exit.not()).expect(SHARED);
            let w = steps
                .pairs()
                .filter(|&(s, t)| v.values()[t] >= v.values()[s])
                .map(|(s, t)| {
                    format!(
                        "({},{}) does not decrease: {} to {}",
                        space.atom(s),
                        space.atom(t),
                        v.values()[s],
                        v.values()[t]
                    )
                })
                .collect();
            Found::single(ok, w)
        }
        Check::Law { id, size } => match check_law(id, &Config::exhaustive(*size)) {
            Ok(report) => {
                let mut w: Vec<String> = Vec::new();
                if let Some(replay) = &report.replay {
                    w.push(format!("{} witness: {}", replay.source.name(), replay.counterexample.render()));
                }
                w.extend(report.failures.iter().map(|c| c.render()));
                Found {
                    ok: report.confirmed(),
                    cases: report.cases,
                    failures: report.failure_count,
                    witnesses: w,
                }
            }
            Err(e) => Found {
                ok: false,
                cases: 0,
                failures: 0,
                witnesses: vec![e.to_string()],
            },
        },
    }
}

/// Why `q` does not refine `p`: missing precondition states and extra results.
fn refinement_gaps(q: &Program, p: &Program) -> Vec<String> {
    let missing = p.pre().diff(q.pre()).expect(SHARED);
    let extra = sp(q, p.pre()).expect(SHARED).diff(p.post()).expect(SHARED);
    [
        nonempty_cond("Pre_p states outside Pre_q:", &missing),
        nonempty_rel("results not allowed by p:", &extra),
    ]
    .into_iter()
    .flatten()
    .collect()
}

/// Steps of `p` that leave `i` from inside it.
fn escapes(i: &Condition, p: &Program) -> Option<String> {
    let inside = p.post().restrict(&i.and(p.pre()).expect(SHARED)).expect(SHARED);
    let out = inside.corestrict(&i.not()).expect(SHARED);
    nonempty_rel("steps leaving I:", &out)
}

fn loop_invariant_gaps(i: &Condition, ls: &LoopSpec) -> Vec<String> {
    let unestablished = ls.init.range().diff(i).expect(SHARED);
    [nonempty_cond("initialization reaches outside I:", &unestablished), escapes(i, &ls.guarded_body())]
        .into_iter()
        .flatten()
        .collect()
}
