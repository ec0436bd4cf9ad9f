//! Acceptance criteria, one PASS/FAIL line each. The test fails if any
//! criterion does; the lines say which and why.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use tp_core::contracts::{sp, wp, ContractedProgram};
use tp_core::loops::{check_loop_feasibility, is_loop_invariant, loop_unrolling, while_loop, LoopFeasibilityVerdict};
use tp_core::{Condition, LoopSpec, Program, Relation, StateKind, StateSpace};
use tp_lang::printer::prog_text;
use tp_laws::slots::{enumerate_conditions, enumerate_relations};
use tp_laws::{enumerate_programs, random_feasible_program, random_program, registry, Config, Law};

struct Line {
    pass: bool,
    detail: String,
}

fn line(pass: bool, detail: impl Into<String>) -> Line {
    Line {
        pass,
        detail: detail.into(),
    }
}

fn numbered(n: usize) -> Arc<StateSpace> {
    StateSpace::numbered(n).unwrap()
}

fn prog(s: &Arc<StateSpace>, post: &[(usize, usize)], pre: &[usize]) -> Program {
    Program::new(
        Relation::from_index_pairs(s, post.iter().copied()).unwrap(),
        Condition::from_indices(s, pre.iter().copied()).unwrap(),
    )
    .unwrap()
}

fn rel(s: &Arc<StateSpace>, pairs: &[(usize, usize)]) -> Relation {
    Relation::from_index_pairs(s, pairs.iter().copied()).unwrap()
}

fn law_number(law: &Law) -> u32 {
    law.base_id()[1..].parse().unwrap()
}

fn arity(law: &Law) -> usize {
    law.names().len()
}

/// Exhaustive check of every law over the two-atom space.
fn criterion_1() -> Line {
    let start = Instant::now();
    let mut in_scope = 0;
    let mut with_failures = Vec::new();
    let mut unexpected = Vec::new();
    for law in registry() {
        let report = tp_laws::check(law, &Config::exhaustive(2)).unwrap();
        if !report.confirmed() {
            unexpected.push(law.id);
        }
        let n = law_number(law);
        if ((6..=62).contains(&n) || (70..=79).contains(&n)) && arity(law) <= 3 {
            in_scope += 1;
            if report.failure_count > 0 {
                with_failures.push(law.id);
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    line(
        with_failures.is_empty() && unexpected.is_empty() && secs < 60.0,
        format!(
            "{in_scope} laws in scope, {} with failures [{}]; registry verdicts: {} unexpected; {secs:.1}s for all {} laws",
            with_failures.len(),
            with_failures.join(" "),
            unexpected.len(),
            registry().len()
        ),
    )
}

/// Random check at four atoms over five seeds, loop laws included.
fn criterion_2() -> Line {
    let mut in_scope = 0;
    let mut with_failures = Vec::new();
    let mut unexpected = Vec::new();
    for law in registry() {
        let n = law_number(law);
        let scoped = ((6..=69).contains(&n) || (70..=79).contains(&n)) && (arity(law) <= 3 || (63..=69).contains(&n));
        let mut failed = false;
        for seed in 0..5 {
            let report = tp_laws::check(law, &Config::random(4, 1000, seed)).unwrap();
            if !report.confirmed() {
                unexpected.push(format!("{}@{seed}", law.id));
            }
            failed |= report.failure_count > 0;
        }
        if scoped {
            in_scope += 1;
            if failed {
                with_failures.push(law.id);
            }
        }
    }
    line(
        with_failures.is_empty() && unexpected.is_empty(),
        format!(
            "{in_scope} laws in scope, {} with failures [{}]; registry verdicts: {} unexpected",
            with_failures.len(),
            with_failures.join(" "),
            unexpected.len()
        ),
    )
}

fn criterion_3() -> Line {
    let mut parts = Vec::new();

    // (a) composition must trim post1 to Pre2
    let s = numbered(3);
    let (p1, p2) = (prog(&s, &[(1, 1), (1, 2)], &[1]), prog(&s, &[(1, 1), (2, 2)], &[1]));
    let naive = p1.post().compose(p2.post()).unwrap();
    let a = naive == rel(&s, &[(1, 1), (1, 2)]) && *p1.seq(&p2).unwrap().post() == rel(&s, &[(1, 1)]);
    parts.push(("a", a, String::new()));

    // (b) intersection with refining operands
    let s2 = numbered(2);
    let p = prog(&s2, &[(0, 0), (0, 1)], &[0]);
    let (q1, q2) = (prog(&s2, &[(0, 0)], &[0]), prog(&s2, &[(0, 1)], &[0]));
    let premises = q1.refines(&p) && q2.refines(&p);
    let (qi, pi) = (q1.intersection(&q2).unwrap(), p.intersection(&p).unwrap());
    let b = premises && !qi.refines(&pi);
    parts.push((
        "b",
        b,
        format!(
            "q1∩q2 = {} {} p1∩p2 = {} (feasible: {})",
            prog_text(&qi),
            if qi.refines(&pi) { "refines" } else { "does not refine" },
            prog_text(&pi),
            qi.is_feasible()
        ),
    ));

    // (c) internal choice against left distribution
    let (q, r1, r2) = (prog(&s, &[(0, 1), (0, 2)], &[0]), prog(&s, &[(1, 0)], &[1]), prog(&s, &[(2, 0)], &[2]));
    let left = q.seq(&r1.internal_choice(&r2).unwrap()).unwrap();
    let right = q.seq(&r1).unwrap().internal_choice(&q.seq(&r2).unwrap()).unwrap();
    let c = left.pre().is_empty() && !right.pre().is_empty() && !left.equivalent(&right).unwrap();
    parts.push(("c", c, String::new()));

    // (d) Fail is no unit of internal choice
    let skip = Program::skip(&s2);
    let d = skip.internal_choice(&Program::fail(&s2)).unwrap() != skip
        && skip.choice(&Program::fail(&s2)).unwrap() == skip;
    parts.push(("d", d, String::new()));

    // (e) Havoc commutes with itself; the constants on {0,1} do not commute
    let havoc = Program::havoc(&s2);
    let to0 = prog(&s2, &[(0, 0), (1, 0)], &[0, 1]);
    let to1 = prog(&s2, &[(0, 1), (1, 1)], &[0, 1]);
    let e = havoc.commutes(&havoc).unwrap() && !to0.commutes(&to1).unwrap();
    parts.push(("e", e, String::new()));

    // (f) wp is strictly super-additive here
    let bprog = prog(&s, &[(0, 1), (0, 2)], &[0]);
    let (rp, rq) = (rel(&s, &[(0, 1)]), rel(&s, &[(0, 2)]));
    let f = wp(&bprog, &rp).unwrap().is_empty()
        && wp(&bprog, &rq).unwrap().is_empty()
        && wp(&bprog, &rp.union(&rq).unwrap()).unwrap() == Condition::from_indices(&s, [0]).unwrap();
    parts.push(("f", f, String::new()));

    let pass = parts.iter().all(|(_, ok, _)| *ok);
    let detail: Vec<String> = parts
        .iter()
        .map(|(name, ok, why)| {
            let mark = if *ok { "ok" } else { "red" };
            if why.is_empty() {
                format!("({name}) {mark}")
            } else {
                format!("({name}) {mark}: {why}")
            }
        })
        .collect();
    line(pass, detail.join("; "))
}

fn criterion_4() -> Line {
    let s = StateSpace::new("S", ["s0", "s1", "s2"]).unwrap();
    let init = prog(&s, &[(0, 0)], &[0]);
    let step = prog(&s, &[(0, 1), (1, 2)], &[0, 1]);
    let exit = Condition::from_indices(&s, [2]).unwrap();
    let counting = LoopSpec::new(init, exit, step).unwrap();
    let expected = prog(&s, &[(0, 2)], &[0]);
    let fail = Program::fail(&s);
    let counting_ok = loop_unrolling(&counting, 0) == fail
        && loop_unrolling(&counting, 1) == fail
        && loop_unrolling(&counting, 2) == expected
        && while_loop(&counting) == expected;

    let skip = Program::skip(&s);
    let stuck = LoopSpec::new(skip.clone(), Condition::empty(&s), skip).unwrap();
    let stuck_ok = while_loop(&stuck) == fail
        && matches!(check_loop_feasibility(&stuck), LoopFeasibilityVerdict::Evaluated(f) if !f.direct);

    // generated loops: every loop invariant bounds the exits, and the
    // sufficient condition for feasibility implies the direct verdict
    let (mut loops, mut pairs, mut p68_bad, mut sufficient, mut p69_bad) = (0, 0, 0, 0, 0);
    for n in 2..=4 {
        let sp = numbered(n);
        let conds = enumerate_conditions(&sp).unwrap();
        for seed in 0..400u64 {
            let k = seed * 3;
            let exit = random_program(&sp, k + 2).pre().clone();
            let normal = LoopSpec::new(
                random_program(&sp, k).normalized(),
                exit.clone(),
                random_program(&sp, k + 1).normalized(),
            )
            .unwrap();
            let exits = while_loop(&normal).range();
            for inv in &conds {
                if is_loop_invariant(inv, &normal).unwrap() {
                    pairs += 1;
                    if !exits.implies(&exit.and(inv).unwrap()).unwrap() {
                        p68_bad += 1;
                    }
                }
            }
            let feasible = LoopSpec::new(
                random_feasible_program(&sp, k),
                exit.clone(),
                random_feasible_program(&sp, k + 1),
            )
            .unwrap();
            let direct = feasible.init.pre().implies(while_loop(&feasible).pre()).unwrap();
            let candidate = feasible.body.pre().or(&exit).unwrap();
            let wf = feasible.body.post().restrict(&exit.not()).unwrap().is_well_founded();
            if is_loop_invariant(&candidate, &feasible).unwrap() && wf {
                sufficient += 1;
                if !direct {
                    p69_bad += 1;
                }
            }
            loops += 1;
        }
    }
    line(
        counting_ok && stuck_ok && p68_bad == 0 && p69_bad == 0 && loops >= 1000,
        format!(
            "counting loop {}; skip/false loop {}; {loops} loops, {pairs} invariant pairs, {p68_bad} exits outside C ∩ I; {sufficient} loops meet the sufficient condition, {p69_bad} not directly feasible",
            if counting_ok { "ok" } else { "wrong" },
            if stuck_ok { "ok" } else { "wrong" },
        ),
    )
}

fn criterion_5() -> Line {
    let mut counts = Vec::new();
    let mut bad = 0;
    for n in [2, 3] {
        let programs = enumerate_programs(&numbered(n)).unwrap();
        for p in &programs {
            let classes_ok = p
                .pre()
                .indices()
                .all(|s| p.classify_state(s).unwrap() != StateKind::IrrelevantNontrivial);
            let rows_ok = p.pre().indices().all(|s| p.post().row(s) != 0);
            if p.is_feasible() != classes_ok || classes_ok != rows_ok {
                bad += 1;
            }
        }
        counts.push(format!("{} programs at |S|={n}", programs.len()));
    }
    line(bad == 0, format!("{}; {bad} mismatches", counts.join(", ")))
}

fn criterion_6() -> Line {
    let s = numbered(2);
    let (programs, conds, rels) = (
        enumerate_programs(&s).unwrap(),
        enumerate_conditions(&s).unwrap(),
        enumerate_relations(&s).unwrap(),
    );
    let (mut instances, mut disagree, mut disagree_feasible, mut correct, mut p71_bad) = (0, 0, 0, 0, 0);
    let mut example = None;
    for b in &programs {
        for pre in &conds {
            for post in &rels {
                instances += 1;
                let v = ContractedProgram::new(pre.clone(), b.clone(), post.clone()).unwrap().check();
                // the definition, spelled out state by state
                let by_definition = pre.implies(b.pre()).unwrap()
                    && pre.indices().all(|x| b.post().row(x) & !post.row(x) == 0)
                    && b.pre().indices().all(|x| b.post().row(x) != 0);
                assert_eq!(v.correct, by_definition);
                if v.correct != v.by_formula {
                    disagree += 1;
                    if b.is_feasible() {
                        disagree_feasible += 1;
                    }
                    example.get_or_insert_with(|| format!("Pre={pre}, b={}, post={post}", prog_text(b)));
                }
                if v.correct {
                    correct += 1;
                    let ok = sp(b, pre).unwrap().is_subset(post).unwrap() && pre.implies(&wp(b, post).unwrap()).unwrap();
                    if !ok {
                        p71_bad += 1;
                    }
                }
            }
        }
    }
    line(
        disagree == 0 && p71_bad == 0,
        format!(
            "{instances} instances, {disagree} disagreements ({disagree_feasible} with feasible bodies){}; {correct} correct, {p71_bad} violate the sp/wp consequences",
            example.map(|e| format!(", e.g. {e}")).unwrap_or_default()
        ),
    )
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = tp_cli::main_with(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn criterion_7() -> Line {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let expected = [("counting", 0), ("infeasible_loop", 1), ("bank", 0), ("counterexamples", 0)];
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, want) in expected {
        let path = dir.join(format!("{name}.tp"));
        let src = std::fs::read_to_string(&path).unwrap();
        let ast = tp_lang::parse(&src).unwrap();
        let printed = tp_lang::print_ast(&ast);
        let round = tp_lang::parse(&printed).map(|again| again == ast && tp_lang::print_ast(&again) == printed);
        let round_ok = round == Ok(true);
        let (code, out) = run_cli(&["tp", "run", path.to_str().unwrap()]);
        let meta_ok = name != "counterexamples" || out.contains("pass (expected failure)");
        pass &= round_ok && code == want && meta_ok;
        detail.push(format!(
            "{name}: exit {code} (want {want}), round-trip {}",
            if round_ok { "ok" } else { "broken" }
        ));
    }
    line(pass, detail.join("; "))
}

#[test]
fn acceptance() {
    let criteria: [(u32, fn() -> Line); 7] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
    ];
    let mut failed = Vec::new();
    for (n, f) in criteria {
        let l = f();
        println!("criterion {n}: {} {}", if l.pass { "PASS" } else { "FAIL" }, l.detail);
        if !l.pass {
            failed.push(n);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
