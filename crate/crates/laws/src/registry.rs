//! The law registry.
//!
//! Every law is checked as an exact equality of `(post, Pre)` pairs or as a
//! refinement/inclusion. Where a statement only holds under a hypothesis on
//! its programs (feasible, normalized), the hypothesis is the law's domain;
//! the test suite shows each such hypothesis is necessary. Statements that
//! are false on every domain are registered as refuted with a frozen witness.

use std::sync::{Arc, OnceLock};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use tp_core::contracts::{most_abstract_implementation, sp, wp, ContractedProgram};
use tp_core::loops::{
    arbitrary_repetition, check_loop_correctness, check_loop_feasibility, fixed_repetition,
    unrollings, while_loop, LoopCorrectness, LoopFeasibilityVerdict, LoopSpec,
};
use tp_core::program::{guarded_conditional, nonatomic_concurrency};
use tp_core::{Condition, Program, Relation, StateKind, StateSpace};

use crate::engine::{Expected, Law, Outcome, Source};
use crate::slots::{random_condition, random_in, random_refinement, random_relation, Domain, Slot, Value};

use Domain::{Any, Feasible, FeasibleNormalized, Normalized};
use Slot::{Cond, Prog, Refining, Rel, SubCond, SubRel};

// Operands of one law always share a space, so operator errors cannot occur.
const SAME: &str = "operands share a space";

fn seq(a: &Program, b: &Program) -> Program {
    a.seq(b).expect(SAME)
}
fn ch(a: &Program, b: &Program) -> Program {
    a.choice(b).expect(SAME)
}
fn ich(a: &Program, b: &Program) -> Program {
    a.internal_choice(b).expect(SAME)
}
fn rs(c: &Condition, p: &Program) -> Program {
    p.restrict(c).expect(SAME)
}
fn co(p: &Program, c: &Condition) -> Program {
    p.corestrict(c).expect(SAME)
}
fn par(a: &Program, b: &Program) -> Program {
    a.concurrent(b).expect(SAME)
}
fn ite(c: &Condition, a: &Program, b: &Program) -> Program {
    Program::if_then_else(c, a, b).expect(SAME)
}
fn guard(branches: &[(&Condition, &Program)]) -> Program {
    let owned: Vec<(Condition, Program)> =
        branches.iter().map(|(c, p)| ((*c).clone(), (*p).clone())).collect();
    guarded_conditional(&owned).expect(SAME)
}
fn nconc(steps: &[&Program], q: &Program) -> Program {
    let owned: Vec<Program> = steps.iter().map(|p| (*p).clone()).collect();
    nonatomic_concurrency(&owned, q).expect(SAME)
}
fn and(c: &Condition, d: &Condition) -> Condition {
    c.and(d).expect(SAME)
}
fn or(c: &Condition, d: &Condition) -> Condition {
    c.or(d).expect(SAME)
}
fn subset(c: &Condition, d: &Condition) -> bool {
    c.implies(d).expect(SAME)
}
fn space_of(v: &[Value]) -> Arc<StateSpace> {
    match &v[0] {
        Value::Prog(p) => p.space().clone(),
        Value::Cond(c) => c.space().clone(),
        Value::Rel(r) => r.space().clone(),
    }
}

fn same(label: &str, left: Program, right: Program) -> Outcome {
    if left == right {
        Outcome::Holds
    } else {
        Outcome::Fails(format!("{label}: left {left}, right {right}"))
    }
}

fn same_cond(label: &str, left: Condition, right: Condition) -> Outcome {
    if left == right {
        Outcome::Holds
    } else {
        Outcome::Fails(format!("{label}: left {left}, right {right}"))
    }
}

fn same_rel(label: &str, left: Relation, right: Relation) -> Outcome {
    if left == right {
        Outcome::Holds
    } else {
        Outcome::Fails(format!("{label}: left {left}, right {right}"))
    }
}

fn refines(label: &str, q: Program, p: Program) -> Outcome {
    if q.refines(&p) {
        Outcome::Holds
    } else {
        Outcome::Fails(format!("{label}: {q} does not refine {p}"))
    }
}

fn truth(label: &str, ok: bool, why: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Fails(format!("{label}: {}", why()))
    }
}

/// First failure wins.
fn all(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    for o in outcomes {
        if let Outcome::Fails(_) = o {
            return o;
        }
    }
    Outcome::Holds
}

fn given(antecedent: bool, then: impl FnOnce() -> Outcome) -> Outcome {
    if antecedent {
        then()
    } else {
        Outcome::Vacuous
    }
}

fn is_correct(pre: &Condition, b: &Program, post: &Relation) -> bool {
    ContractedProgram::new(pre.clone(), b.clone(), post.clone())
        .expect(SAME)
        .is_correct()
}

fn invariant(i: &Condition, p: &Program) -> bool {
    tp_core::loops::is_invariant(i, p).expect(SAME)
}

// Witness construction.

fn space(n: usize) -> Arc<StateSpace> {
    StateSpace::numbered(n).expect("small space")
}
fn pw(s: &Arc<StateSpace>, post: &[(usize, usize)], pre: &[usize]) -> Value {
    Value::Prog(
        Program::new(
            Relation::from_index_pairs(s, post.iter().copied()).expect("in range"),
            Condition::from_indices(s, pre.iter().copied()).expect("in range"),
        )
        .expect(SAME),
    )
}
fn cw(s: &Arc<StateSpace>, xs: &[usize]) -> Value {
    Value::Cond(Condition::from_indices(s, xs.iter().copied()).expect("in range"))
}
fn rw(s: &Arc<StateSpace>, pairs: &[(usize, usize)]) -> Value {
    Value::Rel(Relation::from_index_pairs(s, pairs.iter().copied()).expect("in range"))
}

// Samplers for laws whose antecedent uniform draws rarely meet.

/// Least superset of `seed` closed under every program of `ps`.
fn closure(seed: Condition, ps: &[&Program]) -> Condition {
    let mut current = seed;
    loop {
        let mut next = current.clone();
        for p in ps {
            let image = p.post().image(&and(&current, p.pre())).expect(SAME);
            next = or(&next, &image);
        }
        if next == current {
            return current;
        }
        current = next;
    }
}

fn sample_commuting(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let p = random_in(rng, s, Any);
    let q = if rng.gen_bool(0.8) {
        fixed_repetition(&p, rng.gen_range(0..4))
    } else {
        random_in(rng, s, Any)
    };
    vec![Value::Prog(p), Value::Prog(q)]
}

fn sample_disjoint(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let p = random_in(rng, s, Any);
    let i = random_condition(rng, s).diff(p.pre()).expect(SAME);
    vec![Value::Prog(p), Value::Cond(i)]
}

fn sample_two_invariants(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let p = random_in(rng, s, Any);
    let i = closure(random_condition(rng, s), &[&p]);
    let j = closure(random_condition(rng, s), &[&p]);
    vec![Value::Prog(p), Value::Cond(i), Value::Cond(j)]
}

fn sample_refined_invariant(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let p1 = random_in(rng, s, Any);
    let p2 = random_refinement(rng, &p1, Any);
    let i = closure(random_condition(rng, s), &[&p1]);
    vec![Value::Prog(p2), Value::Prog(p1), Value::Cond(i)]
}

fn sample_shared_invariant(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let p1 = random_in(rng, s, Normalized);
    let p2 = random_in(rng, s, Normalized);
    let i = closure(random_condition(rng, s), &[&p1, &p2]);
    vec![
        Value::Prog(p1),
        Value::Prog(p2),
        Value::Cond(i),
        Value::Cond(random_condition(rng, s)),
    ]
}

fn sample_loop_invariant(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let a = random_in(rng, s, Normalized);
    let c = random_condition(rng, s);
    let b = random_in(rng, s, Normalized);
    let guarded = rs(&c.not(), &b);
    let seed = or(&a.range(), &random_condition(rng, s));
    let i = closure(seed, &[&guarded]);
    vec![Value::Prog(a), Value::Cond(c), Value::Prog(b), Value::Cond(i)]
}

/// Feasible `a`, `b` with a decreasing variant and `Pre_b ∪ C = S`, so that
/// the sufficient condition holds.
fn sample_terminating_loop(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let n = s.len();
    let mut v: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    v[rng.gen_range(0..n)] = 0;
    let bottom = Condition::from_indices(s, (0..n).filter(|&x| v[x] == 0)).expect("in range");
    let c = or(&random_condition(rng, s), &bottom);
    let pre_b = or(&random_condition(rng, s), &c.not());
    let rows: Vec<u64> = (0..n)
        .map(|x| {
            let noise = rng.gen::<u64>() & s.full_mask();
            if c.contains(x) {
                let row = noise;
                if row == 0 && pre_b.contains(x) {
                    1 << rng.gen_range(0..n)
                } else {
                    row
                }
            } else {
                let lower: u64 = (0..n).filter(|&y| v[y] < v[x]).map(|y| 1u64 << y).sum();
                let row = noise & lower;
                if row == 0 {
                    1 << (lower.trailing_zeros())
                } else {
                    row
                }
            }
        })
        .collect();
    let b = Program::new(Relation::from_rows(s, &rows).expect("masked"), pre_b).expect(SAME);
    let a = random_in(rng, s, Feasible);
    vec![Value::Prog(a), Value::Cond(c), Value::Prog(b)]
}

/// A feasible body with a contract it often meets.
fn contract_parts(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> (Program, Condition, Relation) {
    let b = random_in(rng, s, Feasible);
    let pre = and(b.pre(), &random_condition(rng, s));
    let mut post = b.post().restrict(&pre).expect(SAME);
    if rng.gen_bool(0.3) {
        post = post.inter(&random_relation(rng, s)).expect(SAME);
    }
    post = post.union(&random_relation(rng, s).restrict(&random_condition(rng, s)).expect(SAME)).expect(SAME);
    (b, pre, post)
}

fn sample_weakened_contract(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let (b, pre, post) = contract_parts(rng, s);
    let narrower = and(&pre, &random_condition(rng, s));
    let wider = post.union(&random_relation(rng, s)).expect(SAME);
    vec![
        Value::Prog(b),
        Value::Cond(narrower),
        Value::Cond(pre),
        Value::Rel(post),
        Value::Rel(wider),
    ]
}

fn sample_contract(rng: &mut ChaCha8Rng, s: &Arc<StateSpace>) -> Vec<Value> {
    let (b, pre, post) = contract_parts(rng, s);
    vec![Value::Prog(b), Value::Cond(pre), Value::Rel(post)]
}

// The checks of laws that need more than one line.

fn p6(v: &[Value]) -> Outcome {
    let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
    let results = [
        ("p1 ∪ p2", ch(p1, p2)),
        ("p1 ; p2", seq(p1, p2)),
        ("C : p1", rs(c, p1)),
        ("p1 \\ C", co(p1, c)),
        ("p1 || p2", par(p1, p2)),
        ("if C then p1 else p2 end", ite(c, p1, p2)),
        ("(p1, p2) || p1", nconc(&[p1, p2], p1)),
        ("loop p1 end", arbitrary_repetition(p1)),
    ];
    all(results.into_iter().map(|(name, r)| {
        truth(name, r.is_feasible(), || format!("{r} is infeasible on {}", r.infeasible_states()))
    }))
}

/// Refinement safety of every theory operator at once.
fn p31(v: &[Value]) -> Outcome {
    let (q1, p1, q2, p2, c) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog(), v[4].cond());
    all([
        refines("∪", ch(q1, q2), ch(p1, p2)),
        refines(";", seq(q1, q2), seq(p1, p2)),
        refines("C :", rs(c, q1), rs(c, p1)),
        refines("\\ C", co(q1, c), co(p1, c)),
        refines("||", par(q1, q2), par(p1, p2)),
        refines("if then else", ite(c, q1, q2), ite(c, p1, p2)),
        refines("guarded", guard(&[(c, q1), (c, q2)]), guard(&[(c, p1), (c, p2)])),
        refines("loop", arbitrary_repetition(q1), arbitrary_repetition(p1)),
    ])
}

fn p63(v: &[Value]) -> Outcome {
    let ls = LoopSpec::new(v[0].prog().clone(), v[1].cond().clone(), v[2].prog().clone()).expect(SAME);
    let looped = while_loop(&ls);
    let parts = unrollings(&ls);
    let union = parts.iter().skip(1).fold(parts[0].clone(), |acc, q| ch(&acc, q));
    let ranges = parts
        .iter()
        .fold(Condition::empty(looped.space()), |acc, q| or(&acc, &q.range()));
    all([
        same("loop = ∪ qᵢ", looped.clone(), union),
        same_cond("range(loop) = ∪ range(qᵢ)", looped.range(), ranges),
    ])
}

fn p67(v: &[Value]) -> Outcome {
    let (p1, p2, i, c) = (v[0].prog(), v[1].prog(), v[2].cond(), v[3].cond());
    given(invariant(i, p1) && invariant(i, p2), || {
        let results = [
            ("p1 ∪ p2", ch(p1, p2)),
            ("p1 ; p2", seq(p1, p2)),
            ("C : p1", rs(c, p1)),
            ("p1 \\ C", co(p1, c)),
            ("p1 || p2", par(p1, p2)),
            ("if C then p1 else p2 end", ite(c, p1, p2)),
            ("(p1, p2) || p1", nconc(&[p1, p2], p1)),
            ("loop p1 end", arbitrary_repetition(p1)),
        ];
        all(results.into_iter().map(|(name, r)| {
            truth(name, invariant(i, &r), || format!("{i} is not an invariant of {r}"))
        }))
    })
}

fn p68(v: &[Value]) -> Outcome {
    let ls = LoopSpec::new(v[0].prog().clone(), v[1].cond().clone(), v[2].prog().clone()).expect(SAME);
    match check_loop_correctness(&ls, v[3].cond()).expect(SAME) {
        LoopCorrectness::NotLoopInvariant => Outcome::Vacuous,
        LoopCorrectness::Holds => Outcome::Holds,
        LoopCorrectness::Violated { offending } => {
            Outcome::Fails(format!("loop exits into {offending}, outside C ∩ I"))
        }
    }
}

fn p69(v: &[Value]) -> Outcome {
    let ls = LoopSpec::new(v[0].prog().clone(), v[1].cond().clone(), v[2].prog().clone()).expect(SAME);
    match check_loop_feasibility(&ls) {
        LoopFeasibilityVerdict::InfeasibleOperands { .. } => Outcome::Vacuous,
        LoopFeasibilityVerdict::Evaluated(f) => given(f.sufficient(), || {
            truth("loop feasibility", f.direct, || format!("no exit from {}", f.stuck))
        }),
    }
}

fn p80(v: &[Value]) -> Outcome {
    let p = v[0].prog();
    let sound = p.pre().indices().all(|x| {
        matches!(p.classify_state(x).expect(SAME), StateKind::Trivial | StateKind::Relevant)
    });
    truth("feasible iff trivial or relevant", p.is_feasible() == sound, || {
        format!("feasible = {}, every state trivial or relevant = {sound}", p.is_feasible())
    })
}

fn holds() -> Expected {
    Expected::Holds
}

fn found(witness: fn() -> Vec<Value>) -> Expected {
    Expected::Refuted { source: Source::Found, witness }
}

fn stated(witness: fn() -> Vec<Value>) -> Expected {
    Expected::Refuted { source: Source::Stated, witness }
}

fn law(
    id: &'static str,
    statement: &'static str,
    slots: &'static [Slot],
    domain: Domain,
    check: fn(&[Value]) -> Outcome,
    expected: Expected,
) -> Law {
    Law {
        id,
        statement,
        slots,
        domain,
        check,
        expected,
        sampler: None,
        note: "",
    }
}

trait Adorn {
    fn sampled(self, sampler: fn(&mut ChaCha8Rng, &Arc<StateSpace>) -> Vec<Value>) -> Self;
    fn noted(self, note: &'static str) -> Self;
}

impl Adorn for Law {
    fn sampled(mut self, sampler: fn(&mut ChaCha8Rng, &Arc<StateSpace>) -> Vec<Value>) -> Law {
        self.sampler = Some(sampler);
        self
    }

    fn noted(mut self, note: &'static str) -> Law {
        self.note = note;
        self
    }
}

fn build() -> Vec<Law> {
    vec![
        law("P6", "feasible operands give feasible results", &[Prog("p1"), Prog("p2"), Cond("C")], Feasible, p6, holds()),
        law("P7", "C1 : (C2 : p) = C2 : (C1 : p)", &[Prog("p"), Cond("C1"), Cond("C2")], Any, |v| {
            let (p, c1, c2) = (v[0].prog(), v[1].cond(), v[2].cond());
            same("restriction commutes", rs(c1, &rs(c2, p)), rs(c2, &rs(c1, p)))
        }, holds()),
        law("P8", "C1 : (C2 : p) = (C1 ∩ C2) : p", &[Prog("p"), Cond("C1"), Cond("C2")], Any, |v| {
            let (p, c1, c2) = (v[0].prog(), v[1].cond(), v[2].cond());
            same("nested restriction", rs(c1, &rs(c2, p)), rs(&and(c1, c2), p))
        }, holds()),
        law("P9", "C : (p1 ∪ p2) = (C : p1) ∪ (C : p2)", &[Prog("p1"), Prog("p2"), Cond("C")], Any, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("restriction over choice", rs(c, &ch(p1, p2)), ch(&rs(c, p1), &rs(c, p2)))
        }, holds()),
        law("P10", "C : (p1 ; p2) = (C : p1) ; p2", &[Prog("p1"), Prog("p2"), Cond("C")], Any, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("restriction absorbed", rs(c, &seq(p1, p2)), seq(&rs(c, p1), p2))
        }, holds()),
        law("P11", "q ; (p1 ∪ p2) = (q ; p1) ∪ (q ; p2)", &[Prog("q"), Prog("p1"), Prog("p2")], Normalized, |v| {
            let (q, p1, p2) = (v[0].prog(), v[1].prog(), v[2].prog());
            same("left distribution", seq(q, &ch(p1, p2)), ch(&seq(q, p1), &seq(q, p2)))
        }, holds()),
        law("P11.internal", "q ; (p1 ⊓ p2) = (q ; p1) ⊓ (q ; p2) under internal choice", &[Prog("q"), Prog("p1"), Prog("p2")], Any, |v| {
            let (q, p1, p2) = (v[0].prog(), v[1].prog(), v[2].prog());
            same("left distribution", seq(q, &ich(p1, p2)), ich(&seq(q, p1), &seq(q, p2)))
        }, stated(|| {
            let s = space(3);
            vec![pw(&s, &[(0, 1), (0, 2)], &[0]), pw(&s, &[(1, 0)], &[1]), pw(&s, &[(2, 0)], &[2])]
        })).noted("internal choice keeps the union of postconditions but intersects preconditions"),
        law("P12", "(p1 ∪ p2) ; q = (p1 ; q) ∪ (p2 ; q)", &[Prog("p1"), Prog("p2"), Prog("q")], Normalized, |v| {
            let (p1, p2, q) = (v[0].prog(), v[1].prog(), v[2].prog());
            same("right distribution", seq(&ch(p1, p2), q), ch(&seq(p1, q), &seq(p2, q)))
        }, holds()),
        law("P13", "p ; Skip = Skip ; p = p", &[Prog("p")], FeasibleNormalized, |v| {
            let p = v[0].prog();
            let skip = Program::skip(p.space());
            all([same("p ; Skip", seq(p, &skip), p.clone()), same("Skip ; p", seq(&skip, p), p.clone())])
        }, holds()),
        law("P14", "p ∪ Fail = Fail ∪ p = p", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            let fail = Program::fail(p.space());
            all([same("p ∪ Fail", ch(p, &fail), p.clone()), same("Fail ∪ p", ch(&fail, p), p.clone())])
        }, holds()),
        law("P14.demonic", "p ⊓ Fail = p under internal choice", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            same("p ⊓ Fail", ich(p, &Program::fail(p.space())), p.clone())
        }, stated(|| vec![Value::Prog(Program::skip(&space(2)))])),
        law("P15", "Fail ; p = p ; Fail = Fail", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            let fail = Program::fail(p.space());
            all([same("Fail ; p", seq(&fail, p), fail.clone()), same("p ; Fail", seq(p, &fail), fail.clone())])
        }, holds()),
        law("P16", "p ∪ Havoc = Havoc ∪ p = Havoc", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            let havoc = Program::havoc(p.space());
            all([same("p ∪ Havoc", ch(p, &havoc), havoc.clone()), same("Havoc ∪ p", ch(&havoc, p), havoc.clone())])
        }, holds()),
        law("P17", "p ; Havoc = Pre_p : Havoc", &[Prog("p")], FeasibleNormalized, |v| {
            let p = v[0].prog();
            let havoc = Program::havoc(p.space());
            same("p ; Havoc", seq(p, &havoc), rs(p.pre(), &havoc))
        }, holds()),
        law("P18", "p ⊑ C : p", &[Prog("p"), Cond("C")], Any, |v| {
            let (p, c) = (v[0].prog(), v[1].cond());
            refines("restriction", p.clone(), rs(c, p))
        }, holds()),
        law("P19", "D ⊆ C ⟹ C : p ⊑ D : p", &[SubCond("D", "C"), Prog("p")], Any, |v| {
            let (d, c, p) = (v[0].cond(), v[1].cond(), v[2].prog());
            refines("order reversal", rs(c, p), rs(d, p))
        }, holds()),
        law("P20", "q ⊑ p ⟹ C : q ⊑ C : p", &[Refining("q", "p"), Cond("C")], Any, |v| {
            let (q, p, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            refines("restriction is safe", rs(c, q), rs(c, p))
        }, holds()),
        law("P21.choice", "q1 ⊑ p1 ∧ q2 ⊑ p2 ⟹ q1 ∪ q2 ⊑ p1 ∪ p2", &[Refining("q1", "p1"), Refining("q2", "p2")], FeasibleNormalized, |v| {
            let (q1, p1, q2, p2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog());
            refines("choice", ch(q1, q2), ch(p1, p2))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[], &[]), pw(&s, &[(0, 1)], &[0]), pw(&s, &[(0, 1)], &[0])]
        })).noted("q1 may add results on states where only p2 was defined"),
        law("P21.seq", "q1 ⊑ p1 ∧ q2 ⊑ p2 ⟹ q1 ; q2 ⊑ p1 ; p2", &[Refining("q1", "p1"), Refining("q2", "p2")], FeasibleNormalized, |v| {
            let (q1, p1, q2, p2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog());
            refines("sequence", seq(q1, q2), seq(p1, p2))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 0), (0, 1)], &[0]), pw(&s, &[(1, 0)], &[1]), pw(&s, &[(1, 0)], &[1])]
        })),
        law("P22", "p ⊑ Pre_p : Havoc", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            refines("havoc bound", p.clone(), rs(p.pre(), &Program::havoc(p.space())))
        }, holds()),
        law("P23", "total p ⟹ p ⊑ Havoc", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            given(p.pre().is_full(), || refines("havoc", p.clone(), Program::havoc(p.space())))
        }, holds()),
        law("P24", "p ⊑ Fail ⟺ p = Fail", &[Prog("p")], FeasibleNormalized, |v| {
            let p = v[0].prog();
            let fail = Program::fail(p.space());
            truth("refined only by itself", p.refines(&fail) == (*p == fail), || {
                format!("{p} refines Fail but is not Fail")
            })
        }, found(|| vec![pw(&space(2), &[(0, 0)], &[0])]))
            .noted("Fail has the empty precondition, so every program refines it"),
        law("P25", "Fail ⊑ p ⟺ p = Fail", &[Prog("p")], Normalized, |v| {
            let p = v[0].prog();
            let fail = Program::fail(p.space());
            truth("refines only itself", fail.refines(p) == (*p == fail), || {
                format!("Fail refines {p} = {}", fail.refines(p))
            })
        }, holds()),
        law("P26", "p \\ C = p ; (C : Skip)", &[Prog("p"), Cond("C")], Any, |v| {
            let (p, c) = (v[0].prog(), v[1].cond());
            same("corestriction by composition", co(p, c), seq(p, &rs(c, &Program::skip(p.space()))))
        }, holds()),
        law("P27", "(p1 ∪ p2) \\ C = (p1 \\ C) ∪ (p2 \\ C)", &[Prog("p1"), Prog("p2"), Cond("C")], Normalized, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("corestriction over choice", co(&ch(p1, p2), c), ch(&co(p1, c), &co(p2, c)))
        }, holds()),
        law("P28", "(p1 ; p2) \\ C = p1 ; (p2 \\ C)", &[Prog("p1"), Prog("p2"), Cond("C")], Any, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("corestriction absorbed", co(&seq(p1, p2), c), seq(p1, &co(p2, c)))
        }, holds()),
        law("P29", "range(p \\ C) ⊆ C", &[Prog("p"), Cond("C")], Any, |v| {
            let (p, c) = (v[0].prog(), v[1].cond());
            let r = co(p, c).range();
            truth("results in C", subset(&r, c), || format!("range {r} not in {c}"))
        }, holds()),
        law("P30", "D ⊆ C ⟹ p \\ D ⊑ p \\ C", &[SubCond("D", "C"), Prog("p")], FeasibleNormalized, |v| {
            let (d, c, p) = (v[0].cond(), v[1].cond(), v[2].prog());
            refines("corestriction order", co(p, d), co(p, c))
        }, found(|| {
            let s = space(2);
            vec![cw(&s, &[]), cw(&s, &[0]), pw(&s, &[(0, 0)], &[0])]
        })).noted("narrowing the target shrinks the precondition, which refinement forbids"),
        law("P31", "every operator is refinement-safe", &[Refining("q1", "p1"), Refining("q2", "p2"), Cond("C")], FeasibleNormalized, p31, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[], &[]), pw(&s, &[(0, 1)], &[0]), pw(&s, &[(0, 1)], &[0]), cw(&s, &[])]
        }))
            .noted("fails through choice and everything built on it, see P21"),
        law("P31.intersection", "q1 ⊑ p1 ∧ q2 ⊑ p2 ⟹ q1 ∩ q2 ⊑ p1 ∩ p2", &[Refining("q1", "p1"), Refining("q2", "p2")], Any, |v| {
            let (q1, p1, q2, p2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog());
            refines("intersection", q1.intersection(q2).expect(SAME), p1.intersection(p2).expect(SAME))
        }, holds()).noted("intersection keeps refinement but loses feasibility: the classic witness yields an infeasible refinement"),
        law("P31.difference", "q1 ⊑ p1 ∧ q2 ⊑ p2 ⟹ q1 − q2 ⊑ p1 − p2", &[Refining("q1", "p1"), Refining("q2", "p2")], FeasibleNormalized, |v| {
            let (q1, p1, q2, p2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog());
            refines("difference", q1.difference(q2).expect(SAME), p1.difference(p2).expect(SAME))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 1)], &[0]), pw(&s, &[(0, 0), (0, 1)], &[0])]
        })),
        law("P32.commutative", "p || q = q || p", &[Prog("p"), Prog("q")], Any, |v| {
            let (p, q) = (v[0].prog(), v[1].prog());
            same("commutativity", par(p, q), par(q, p))
        }, holds()),
        law("P32.associative", "(p || q) || r = p || (q || r)", &[Prog("p"), Prog("q"), Prog("r")], FeasibleNormalized, |v| {
            let (p, q, r) = (v[0].prog(), v[1].prog(), v[2].prog());
            same("associativity", par(&par(p, q), r), par(p, &par(q, r)))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 1)], &[0]), pw(&s, &[(1, 0)], &[1])]
        })).noted("(p || q) || r only has the orders where r comes first or last"),
        law("P32.refinement", "q1 ⊑ p1 ∧ q2 ⊑ p2 ⟹ q1 || q2 ⊑ p1 || p2", &[Refining("q1", "p1"), Refining("q2", "p2")], FeasibleNormalized, |v| {
            let (q1, p1, q2, p2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog());
            refines("concurrency", par(q1, q2), par(p1, p2))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 0)], &[0]), pw(&s, &[(1, 1)], &[1]), pw(&s, &[(1, 0), (1, 1)], &[1])]
        })),
        law("P33", "p1 || (p2 ∪ p3) = (p1 || p2) ∪ (p1 || p3)", &[Prog("p1"), Prog("p2"), Prog("p3")], Normalized, |v| {
            let (p1, p2, p3) = (v[0].prog(), v[1].prog(), v[2].prog());
            same("left distribution", par(p1, &ch(p2, p3)), ch(&par(p1, p2), &par(p1, p3)))
        }, holds()),
        law("P34", "(p1 ∪ p2) || p3 = (p1 || p3) ∪ (p2 || p3)", &[Prog("p1"), Prog("p2"), Prog("p3")], Normalized, |v| {
            let (p1, p2, p3) = (v[0].prog(), v[1].prog(), v[2].prog());
            same("right distribution", par(&ch(p1, p2), p3), ch(&par(p1, p3), &par(p2, p3)))
        }, holds()),
        law("P35", "C : (p1 || p2) = (C : p1) || (C : p2)", &[Prog("p1"), Prog("p2"), Cond("C")], FeasibleNormalized, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("restriction over concurrency", rs(c, &par(p1, p2)), par(&rs(c, p1), &rs(c, p2)))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(1, 0)], &[1]), cw(&s, &[1])]
        })).noted("the restriction also cuts off the second step of each order"),
        law("P36", "(p1 || p2) \\ C = (p1 \\ C) || (p2 \\ C)", &[Prog("p1"), Prog("p2"), Cond("C")], FeasibleNormalized, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("corestriction over concurrency", co(&par(p1, p2), c), par(&co(p1, c), &co(p2, c)))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 1)], &[0]), cw(&s, &[1])]
        })),
        law("P37", "p1 ; p2 ⊑ p1 || p2", &[Prog("p1"), Prog("p2")], FeasibleNormalized, |v| {
            let (p1, p2) = (v[0].prog(), v[1].prog());
            refines("sequence refines concurrency", seq(p1, p2), par(p1, p2))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(1, 0)], &[1])]
        })).noted("the concurrent precondition is the union of both orders' preconditions"),
        law("P38", "p2 ; p1 ⊑ p1 || p2", &[Prog("p1"), Prog("p2")], FeasibleNormalized, |v| {
            let (p1, p2) = (v[0].prog(), v[1].prog());
            refines("either order refines concurrency", seq(p2, p1), par(p1, p2))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 1)], &[0])]
        })),
        law("P39", "p1, p2 commute ⟹ p1 || p2 = p1 ; p2", &[Prog("p1"), Prog("p2")], Any, |v| {
            let (p1, p2) = (v[0].prog(), v[1].prog());
            given(p1.commutes(p2).expect(SAME), || same("commuting concurrency", par(p1, p2), seq(p1, p2)))
        }, holds()).sampled(sample_commuting),
        law("P39.refinement", "p1, p2 commute ∧ q1 ⊑ p1 ∧ q2 ⊑ p2 ⟹ q1, q2 commute", &[Refining("q1", "p1"), Refining("q2", "p2")], FeasibleNormalized, |v| {
            let (q1, p1, q2, p2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog());
            given(p1.commutes(p2).expect(SAME), || {
                truth("commuting is kept", q1.commutes(q2).expect(SAME), || {
                    format!("q1 ; q2 = {}, q2 ; q1 = {}", seq(q1, q2), seq(q2, q1))
                })
            })
        }, stated(|| {
            let s = space(2);
            let havoc = Value::Prog(Program::havoc(&s));
            vec![pw(&s, &[(0, 0), (1, 0)], &[0, 1]), havoc.clone(), pw(&s, &[(0, 1), (1, 1)], &[0, 1]), havoc]
        })).noted("the two constant programs both refine Havoc"),
        law("P40", "(p1, p2) || q = q ; p1 ; p2 ∪ p1 ; q ; p2 ∪ p1 ; p2 ; q", &[Prog("p1"), Prog("p2"), Prog("q")], Normalized, |v| {
            let (p1, p2, q) = (v[0].prog(), v[1].prog(), v[2].prog());
            let expanded = ch(&ch(&seq(&seq(q, p1), p2), &seq(&seq(p1, q), p2)), &seq(&seq(p1, p2), q));
            same("three interleavings", nconc(&[p1, p2], q), expanded)
        }, holds()),
        law("P41", "(p1 ; p2) || q ⊑ (p1, p2) || q", &[Prog("p1"), Prog("p2"), Prog("q")], FeasibleNormalized, |v| {
            let (p1, p2, q) = (v[0].prog(), v[1].prog(), v[2].prog());
            refines("coarser grain", par(&seq(p1, p2), q), nconc(&[p1, p2], q))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(1, 0)], &[1]), pw(&s, &[(0, 1)], &[0])]
        })),
        law("P42", "p1 ; (p2 || q) ⊑ (p1, p2) || q", &[Prog("p1"), Prog("p2"), Prog("q")], FeasibleNormalized, |v| {
            let (p1, p2, q) = (v[0].prog(), v[1].prog(), v[2].prog());
            refines("first exchange", seq(p1, &par(p2, q)), nconc(&[p1, p2], q))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 0)], &[0]), pw(&s, &[(1, 0)], &[1])]
        })),
        law("P43", "(p || q1) ; q2 ⊑ p || (q1, q2)", &[Prog("p"), Prog("q1"), Prog("q2")], FeasibleNormalized, |v| {
            let (p, q1, q2) = (v[0].prog(), v[1].prog(), v[2].prog());
            refines("second exchange", seq(&par(p, q1), q2), nconc(&[q1, q2], p))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(1, 1)], &[1]), pw(&s, &[(1, 0)], &[1])]
        })),
        law("P44", "if C1: p [] C2: q end = if C2: q [] C1: p end", &[Prog("p"), Prog("q"), Cond("C1"), Cond("C2")], Any, |v| {
            let (p, q, c1, c2) = (v[0].prog(), v[1].prog(), v[2].cond(), v[3].cond());
            same("guarded commutes", guard(&[(c1, p), (c2, q)]), guard(&[(c2, q), (c1, p)]))
        }, holds()),
        law("P45.guarded", "guarded conditionals regroup freely", &[Prog("p"), Prog("q"), Prog("r"), Cond("C1"), Cond("C2")], Any, |v| {
            let (p, q, r) = (v[0].prog(), v[1].prog(), v[2].prog());
            let (c1, c2) = (v[3].cond(), v[4].cond());
            // C2 may overlap both C1 and its complement
            let c3 = &c1.not();
            let flat = guard(&[(c1, p), (c2, q), (c3, r)]);
            all([
                same("left grouping", ch(&guard(&[(c1, p), (c2, q)]), &guard(&[(c3, r)])), flat.clone()),
                same("right grouping", ch(&guard(&[(c1, p)]), &guard(&[(c2, q), (c3, r)])), flat),
            ])
        }, holds()),
        law("P45.ite", "if C1 then p1 else (if C2 then p2 else p3) = if C1 or C2 then (if C1 then p1 else p2) else p3", &[Prog("p1"), Prog("p2"), Prog("p3"), Cond("C1"), Cond("C2")], Any, |v| {
            let (p1, p2, p3, c1, c2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].cond(), v[4].cond());
            same("regrouping", ite(c1, p1, &ite(c2, p2, p3)), ite(&or(c1, c2), &ite(c1, p1, p2), p3))
        }, holds()),
        law("P46.guarded-choice", "if C1: p ∪ q [] C2: r end = (if C1: p [] C2: r end) ∪ (if C1: q [] C2: r end)", &[Prog("p"), Prog("q"), Prog("r"), Cond("C1"), Cond("C2")], Any, |v| {
            let (p, q, r, c1, c2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].cond(), v[4].cond());
            same("distribution", guard(&[(c1, &ch(p, q)), (c2, r)]), ch(&guard(&[(c1, p), (c2, r)]), &guard(&[(c1, q), (c2, r)])))
        }, holds()),
        law("P46.ite-choice", "if C then p ∪ q else r end = (if C then p else r end) ∪ (if C then q else r end)", &[Prog("p"), Prog("q"), Prog("r"), Cond("C")], Any, |v| {
            let (p, q, r, c) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].cond());
            same("distribution", ite(c, &ch(p, q), r), ch(&ite(c, p, r), &ite(c, q, r)))
        }, holds()),
        law("P46.guarded-concurrency", "(if C1: p [] C2: q end) || r = ((C1 : p) || r) ∪ ((C2 : q) || r)", &[Prog("p"), Prog("q"), Prog("r"), Cond("C1"), Cond("C2")], Normalized, |v| {
            let (p, q, r, c1, c2) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].cond(), v[4].cond());
            same("distribution", par(&guard(&[(c1, p), (c2, q)]), r), ch(&par(&rs(c1, p), r), &par(&rs(c2, q), r)))
        }, holds()),
        law("P46.ite-concurrency", "(if C then p else q end) || r = ((C : p) || r) ∪ ((C' : q) || r)", &[Prog("p"), Prog("q"), Prog("r"), Cond("C")], Any, |v| {
            let (p, q, r, c) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].cond());
            same("distribution", par(&ite(c, p, q), r), ch(&par(&rs(c, p), r), &par(&rs(&c.not(), q), r)))
        }, holds()),
        law("P47", "D1 ⊆ C1 ∧ D2 ⊆ C2 ⟹ if D1: p [] D2: q end ⊑ if C1: p [] C2: q end", &[SubCond("D1", "C1"), SubCond("D2", "C2"), Prog("p"), Prog("q")], FeasibleNormalized, |v| {
            let (d1, c1, d2, c2, p, q) = (v[0].cond(), v[1].cond(), v[2].cond(), v[3].cond(), v[4].prog(), v[5].prog());
            refines("guard strengthening", guard(&[(d1, p), (d2, q)]), guard(&[(c1, p), (c2, q)]))
        }, found(|| {
            let s = space(2);
            vec![cw(&s, &[]), cw(&s, &[]), cw(&s, &[]), cw(&s, &[0]), pw(&s, &[], &[]), pw(&s, &[(0, 0)], &[0])]
        })),
        law("P48", "q1 ⊑ p1 ∧ q2 ⊑ p2 ⟹ if C: q1 [] C: q2 end ⊑ if C: p1 [] C: p2 end", &[Refining("q1", "p1"), Refining("q2", "p2"), Cond("C")], FeasibleNormalized, |v| {
            let (q1, p1, q2, p2, c) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog(), v[4].cond());
            refines("guarded is safe", guard(&[(c, q1), (c, q2)]), guard(&[(c, p1), (c, p2)]))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[], &[]), pw(&s, &[(0, 1)], &[0]), pw(&s, &[(0, 1)], &[0]), cw(&s, &[0])]
        })),
        law("P49", "q1 ⊑ p1 ∧ q2 ⊑ p2 ⟹ if C then q1 else q2 end ⊑ if C then p1 else p2 end", &[Refining("q1", "p1"), Refining("q2", "p2"), Cond("C")], Any, |v| {
            let (q1, p1, q2, p2, c) = (v[0].prog(), v[1].prog(), v[2].prog(), v[3].prog(), v[4].cond());
            refines("if then else is safe", ite(c, q1, q2), ite(c, p1, p2))
        }, holds()),
        law("P50", "if C then p1 else p2 end = if C' then p2 else p1 end", &[Prog("p1"), Prog("p2"), Cond("C")], Any, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("swap", ite(c, p1, p2), ite(&c.not(), p2, p1))
        }, holds()),
        law("P51", "C : p = if C: p end", &[Prog("p"), Cond("C")], Any, |v| {
            let (p, c) = (v[0].prog(), v[1].cond());
            same("one branch", rs(c, p), guard(&[(c, p)]))
        }, holds()),
        law("P52", "if C1: p1 [] C2: p2 end ⊑ C1 : p1", &[Prog("p1"), Prog("p2"), Cond("C1"), Cond("C2")], FeasibleNormalized, |v| {
            let (p1, p2, c1, c2) = (v[0].prog(), v[1].prog(), v[2].cond(), v[3].cond());
            refines("branch", guard(&[(c1, p1), (c2, p2)]), rs(c1, p1))
        }, found(|| {
            let s = space(2);
            vec![pw(&s, &[(0, 0)], &[0]), pw(&s, &[(0, 1)], &[0]), cw(&s, &[0]), cw(&s, &[0])]
        })).noted("overlapping guards let the other branch add results"),
        law("P53", "D : (if C1: p [] C2: q end) = if D ∩ C1: p [] D ∩ C2: q end", &[Prog("p"), Prog("q"), Cond("C1"), Cond("C2"), Cond("D")], Any, |v| {
            let (p, q, c1, c2, d) = (v[0].prog(), v[1].prog(), v[2].cond(), v[3].cond(), v[4].cond());
            same("distribution", rs(d, &guard(&[(c1, p), (c2, q)])), guard(&[(&and(d, c1), p), (&and(d, c2), q)]))
        }, holds()),
        law("P54", "if C then p1 else p2 end = if C: p1 [] C': p2 end", &[Prog("p1"), Prog("p2"), Cond("C")], Any, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("as guarded", ite(c, p1, p2), guard(&[(c, p1), (&c.not(), p2)]))
        }, holds()),
        law("P55", "if C then p1 else p2 end = if not C then p2 else p1 end", &[Prog("p1"), Prog("p2"), Cond("C")], Any, |v| {
            let (p1, p2, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            let negated = Condition::full(c.space()).diff(c).expect(SAME);
            same("swap with not", ite(c, p1, p2), ite(&negated, p2, p1))
        }, holds()),
        law("P56", "True : p = p", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            same("True", rs(&Condition::full(p.space()), p), p.clone())
        }, holds()),
        law("P57", "False : p = Fail", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            same("False", rs(&Condition::empty(p.space()), p), Program::fail(p.space()))
        }, holds()),
        law("P58", "p \\ True = p", &[Prog("p")], FeasibleNormalized, |v| {
            let p = v[0].prog();
            same("True", co(p, &Condition::full(p.space())), p.clone())
        }, holds()),
        law("P59", "p \\ False = Fail", &[Prog("p")], Any, |v| {
            let p = v[0].prog();
            same("False", co(p, &Condition::empty(p.space())), Program::fail(p.space()))
        }, holds()),
        law("P60", "if True then p1 else p2 end = p1, and for guarded", &[Prog("p1"), Prog("p2")], Any, |v| {
            let (p1, p2) = (v[0].prog(), v[1].prog());
            let (t, f) = (Condition::full(p1.space()), Condition::empty(p1.space()));
            all([same("if then else", ite(&t, p1, p2), p1.clone()), same("guarded", guard(&[(&t, p1), (&f, p2)]), p1.clone())])
        }, holds()),
        law("P61", "if False then p1 else p2 end = p2, and for guarded", &[Prog("p1"), Prog("p2")], Any, |v| {
            let (p1, p2) = (v[0].prog(), v[1].prog());
            let (t, f) = (Condition::full(p1.space()), Condition::empty(p1.space()));
            all([same("if then else", ite(&f, p1, p2), p2.clone()), same("guarded", guard(&[(&f, p1), (&t, p2)]), p2.clone())])
        }, holds()),
        law("P62.and", "(C and D) : p = C : (D : p)", &[Prog("p"), Cond("C"), Cond("D")], Any, |v| {
            let (p, c, d) = (v[0].prog(), v[1].cond(), v[2].cond());
            same("and", rs(&and(c, d), p), rs(c, &rs(d, p)))
        }, holds()),
        law("P62.or", "(C or D) : p = (C : p) ∪ (D : p)", &[Prog("p"), Cond("C"), Cond("D")], Any, |v| {
            let (p, c, d) = (v[0].prog(), v[1].cond(), v[2].cond());
            same("or", rs(&or(c, d), p), ch(&rs(c, p), &rs(d, p)))
        }, holds()),
        law("P62.not", "if not C then p else q end = if C then q else p end", &[Prog("p"), Prog("q"), Cond("C")], Any, |v| {
            let (p, q, c) = (v[0].prog(), v[1].prog(), v[2].cond());
            same("not", ite(&c.not(), p, q), ite(c, q, p))
        }, holds()),
        law("P62.implies", "(D implies C) ⟹ C : p ⊑ D : p", &[Prog("p"), Cond("C"), Cond("D")], Any, |v| {
            let (p, c, d) = (v[0].prog(), v[1].cond(), v[2].cond());
            given(subset(d, c), || refines("implies", rs(c, p), rs(d, p)))
        }, holds()),
        law("P63", "from a until C loop b end = ∪ qᵢ, and its range is ∪ range(qᵢ)", &[Prog("a"), Cond("C"), Prog("b")], Normalized, p63, holds()),
        law("P64", "I ∩ Pre_p = ∅ ⟹ I is an invariant of p", &[Prog("p"), Cond("I")], Any, |v| {
            let (p, i) = (v[0].prog(), v[1].cond());
            given(and(i, p.pre()).is_empty(), || truth("disjoint invariant", invariant(i, p), || format!("{i} is not an invariant of {p}")))
        }, holds()).sampled(sample_disjoint),
        law("P65", "I, J invariants of p ⟹ I ∪ J and I ∩ J are", &[Prog("p"), Cond("I"), Cond("J")], Any, |v| {
            let (p, i, j) = (v[0].prog(), v[1].cond(), v[2].cond());
            given(invariant(i, p) && invariant(j, p), || {
                all([
                    truth("union", invariant(&or(i, j), p), || "I ∪ J is not an invariant".into()),
                    truth("intersection", invariant(&and(i, j), p), || "I ∩ J is not an invariant".into()),
                ])
            })
        }, holds()).sampled(sample_two_invariants),
        law("P66", "I invariant of p1 ∧ p2 ⊑ p1 ⟹ I invariant of Pre_p1 : p2", &[Refining("p2", "p1"), Cond("I")], Any, |v| {
            let (p2, p1, i) = (v[0].prog(), v[1].prog(), v[2].cond());
            given(invariant(i, p1), || {
                let narrowed = rs(p1.pre(), p2);
                truth("refined invariant", invariant(i, &narrowed), || format!("{i} is not an invariant of {narrowed}"))
            })
        }, holds()).sampled(sample_refined_invariant),
        law("P67", "every operator preserves a shared invariant", &[Prog("p1"), Prog("p2"), Cond("I"), Cond("C")], Normalized, p67, holds())
            .sampled(sample_shared_invariant),
        law("P68", "I loop invariant ⟹ range(loop) ⊆ C ∩ I", &[Prog("a"), Cond("C"), Prog("b"), Cond("I")], Normalized, p68, holds())
            .sampled(sample_loop_invariant),
        law("P69", "feasible a, b, Pre_b ∪ C loop invariant, C' : post_b well-founded ⟹ loop feasible", &[Prog("a"), Cond("C"), Prog("b")], Any, p69, holds())
            .sampled(sample_terminating_loop),
        law("P70", "correct (Pre, b, post) ∧ Pre' ⊆ Pre ∧ post ⊆ post' ⟹ correct (Pre', b, post')", &[Prog("b"), SubCond("Pre'", "Pre"), SubRel("post", "post'")], Any, |v| {
            let (b, narrow, pre, post, wide) = (v[0].prog(), v[1].cond(), v[2].cond(), v[3].rel(), v[4].rel());
            given(is_correct(pre, b, post), || truth("weakened contract", is_correct(narrow, b, wide), || "weakened contract is not met".into()))
        }, holds()).sampled(sample_weakened_contract),
        law("P71", "correct (Pre, b, post) ⟹ sp(b, Pre) ⊆ post ∧ Pre ⊆ wp(b, post)", &[Prog("b"), Cond("Pre"), Rel("post")], Any, |v| {
            let (b, pre, post) = (v[0].prog(), v[1].cond(), v[2].rel());
            given(is_correct(pre, b, post), || {
                let strongest = sp(b, pre).expect(SAME);
                let weakest = wp(b, post).expect(SAME);
                all([
                    truth("sp", strongest.is_subset(post).expect(SAME), || format!("sp = {strongest}")),
                    truth("wp", subset(pre, &weakest), || format!("wp = {weakest}")),
                ])
            })
        }, holds()).sampled(sample_contract),
        law("P72", "correct (Pre, b, post) ⟺ Pre ⊆ wp(b, post)", &[Prog("b"), Cond("Pre"), Rel("post")], Feasible, |v| {
            let (b, pre, post) = (v[0].prog(), v[1].cond(), v[2].rel());
            let verdict = ContractedProgram::new(pre.clone(), b.clone(), post.clone()).expect(SAME).check();
            truth("formulations agree", verdict.formulations_agree(), || {
                format!("definition says {}, formula says {}", verdict.correct, verdict.by_formula)
            })
        }, holds()).sampled(sample_contract)
            .noted("for infeasible bodies the formula can hold while the definition fails"),
        law("P73", "sp(b, False) = post of Fail", &[Prog("b")], Any, |v| {
            let b = v[0].prog();
            same_rel("sp of False", sp(b, &Condition::empty(b.space())).expect(SAME), Relation::empty(b.space()))
        }, holds()),
        law("P74", "wp(b, post of Fail) = False", &[Prog("b")], Any, |v| {
            let b = v[0].prog();
            same_cond("wp of Fail", wp(b, &Relation::empty(b.space())).expect(SAME), Condition::empty(b.space()))
        }, holds()),
        law("P75", "sp(Fail, C) = post of Fail", &[Cond("C")], Any, |v| {
            let c = v[0].cond();
            let s = space_of(v);
            same_rel("sp of Fail", sp(&Program::fail(&s), c).expect(SAME), Relation::empty(&s))
        }, holds()),
        law("P76", "wp(Fail, post) = False", &[Rel("post")], Any, |v| {
            let post = v[0].rel();
            let s = space_of(v);
            same_cond("wp of Fail", wp(&Program::fail(&s), post).expect(SAME), Condition::empty(&s))
        }, holds()),
        law("P77", "sp(b, C ∪ D) = sp(b, C) ∪ sp(b, D)", &[Prog("b"), Cond("C"), Cond("D")], Any, |v| {
            let (b, c, d) = (v[0].prog(), v[1].cond(), v[2].cond());
            let parts = sp(b, c).expect(SAME).union(&sp(b, d).expect(SAME)).expect(SAME);
            same_rel("sp distributes", sp(b, &or(c, d)).expect(SAME), parts)
        }, holds()),
        law("P78", "wp(b, r ∪ s) ⊇ wp(b, r) ∪ wp(b, s)", &[Prog("b"), Rel("r"), Rel("s")], Any, |v| {
            let (b, r, s) = (v[0].prog(), v[1].rel(), v[2].rel());
            let joint = wp(b, &r.union(s).expect(SAME)).expect(SAME);
            let parts = or(&wp(b, r).expect(SAME), &wp(b, s).expect(SAME));
            truth("wp is monotone", subset(&parts, &joint), || format!("{parts} not in {joint}"))
        }, holds()),
        law("P78.equality", "wp(b, r ∪ s) = wp(b, r) ∪ wp(b, s)", &[Prog("b"), Rel("r"), Rel("s")], Any, |v| {
            let (b, r, s) = (v[0].prog(), v[1].rel(), v[2].rel());
            let joint = wp(b, &r.union(s).expect(SAME)).expect(SAME);
            let parts = or(&wp(b, r).expect(SAME), &wp(b, s).expect(SAME));
            same_cond("wp distributes", joint, parts)
        }, stated(|| {
            let s = space(3);
            vec![pw(&s, &[(0, 1), (0, 2)], &[0]), rw(&s, &[(0, 1)]), rw(&s, &[(0, 2)])]
        })).noted("so P78 is strict"),
        law("P79", "most abstract implementation of feasible p is correct and every implementation refines it", &[Refining("q", "p")], Feasible, |v| {
            let (q, p) = (v[0].prog(), v[1].prog());
            let mai = match most_abstract_implementation(p) {
                Ok(mai) => mai,
                Err(e) => return Outcome::Fails(e.to_string()),
            };
            all([
                truth("correct", mai.is_correct(), || format!("{mai} is not correct")),
                truth("implementation", is_correct(p.pre(), q, p.post()), || format!("{q} does not implement {p}")),
                refines("refines body", q.clone(), mai.body.clone()),
            ])
        }, holds()),
        law("P80", "feasible ⟺ every state of Pre is trivial or relevant", &[Prog("p")], Any, p80, holds()),
    ]
}

/// Every registered law, in statement order.
pub fn registry() -> &'static [Law] {
    static LAWS: OnceLock<Vec<Law>> = OnceLock::new();
    LAWS.get_or_init(build)
}
