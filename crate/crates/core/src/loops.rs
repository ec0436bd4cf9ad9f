//! Repetition, while loops, invariants and variants.
//!
//! `p⁰` is `Skip` and `pⁱ⁺¹ = p ; pⁱ`. Arbitrary repetition is the union of
//! all powers. The power sequence lives in a finite set and each power is a
//! function of the previous one, so it becomes periodic; the union is
//! complete as soon as a power repeats.

use std::collections::HashSet;

use crate::error::{ModelError, Result};
use crate::program::Program;
use crate::sets::{check_same, Condition, Relation};

/// `from init until exit loop body end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSpec {
    pub init: Program,
    pub exit: Condition,
    pub body: Program,
}

impl LoopSpec {
    pub fn new(init: Program, exit: Condition, body: Program) -> Result<LoopSpec> {
        check_same(init.space(), exit.space())?;
        check_same(init.space(), body.space())?;
        Ok(LoopSpec { init, exit, body })
    }

    /// `C' : b`, the part of the body that actually iterates.
    pub fn guarded_body(&self) -> Program {
        self.body.restrict(&self.exit.not()).expect("shared space")
    }
}

/// A natural-valued measure on every atom of a space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variant {
    measure: Vec<u64>,
}

impl Variant {
    pub fn new(measure: Vec<u64>) -> Variant {
        Variant { measure }
    }

    /// Builds a measure from `(atom, value)` entries; every atom of the
    /// space must receive exactly one value.
    pub fn from_table<'a, I>(space: &crate::sets::StateSpace, entries: I) -> Result<Variant>
    where
        I: IntoIterator<Item = (&'a str, u64)>,
    {
        let mut measure = vec![None; space.len()];
        for (atom, value) in entries {
            let i = space.index_of(atom)?;
            if measure[i].replace(value).is_some() {
                return Err(ModelError::Invalid(format!("variant gives `{atom}` two values")));
            }
        }
        let missing: Vec<&str> = measure
            .iter()
            .enumerate()
            .filter(|(_, v)| v.is_none())
            .map(|(i, _)| space.atom(i))
            .collect();
        if !missing.is_empty() {
            return Err(ModelError::Invalid(format!(
                "variant is not total; no value for {}",
                missing.join(", ")
            )));
        }
        Ok(Variant {
            measure: measure.into_iter().map(Option::unwrap).collect(),
        })
    }

    pub fn values(&self) -> &[u64] {
        &self.measure
    }
}

/// `pⁱ`.
pub fn fixed_repetition(p: &Program, times: usize) -> Program {
    (0..times).fold(Program::skip(p.space()), |acc, _| p.seq(&acc).expect("shared space"))
}

/// Powers `p⁰, p¹, ...` up to and excluding the first repeated one.
pub fn distinct_powers(p: &Program) -> Vec<Program> {
    let mut seen = HashSet::new();
    let mut powers = Vec::new();
    let mut current = Program::skip(p.space());
    while seen.insert(key(&current)) {
        let next = p.seq(&current).expect("shared space");
        powers.push(current);
        current = next;
    }
    powers
}

fn key(p: &Program) -> (Vec<u64>, u64) {
    (p.post().rows().to_vec(), p.pre().bits())
}

/// `loop p end`, the union of every power of `p`.
pub fn arbitrary_repetition(p: &Program) -> Program {
    distinct_powers(p)
        .into_iter()
        .reduce(|acc, q| acc.choice(&q).expect("shared space"))
        .expect("p⁰ always exists")
}

/// `a ; (loop C' : b end) \ C`.
pub fn while_loop(ls: &LoopSpec) -> Program {
    let iterated = arbitrary_repetition(&ls.guarded_body());
    ls.init
        .seq(&iterated.corestrict(&ls.exit).expect("shared space"))
        .expect("shared space")
}

/// `qᵢ = a ; (C' : b)ⁱ \ C`, the runs that exit after exactly `i` iterations.
pub fn loop_unrolling(ls: &LoopSpec, times: usize) -> Program {
    let power = fixed_repetition(&ls.guarded_body(), times);
    ls.init
        .seq(&power.corestrict(&ls.exit).expect("shared space"))
        .expect("shared space")
}

/// `q₀, q₁, ...` for every distinct power of the guarded body. Their union is
/// the loop.
pub fn unrollings(ls: &LoopSpec) -> Vec<Program> {
    distinct_powers(&ls.guarded_body())
        .iter()
        .map(|power| {
            ls.init
                .seq(&power.corestrict(&ls.exit).expect("shared space"))
                .expect("shared space")
        })
        .collect()
}

/// `post(I ∩ Pre) ⊆ I`.
pub fn is_invariant(inv: &Condition, p: &Program) -> Result<bool> {
    check_same(inv.space(), p.space())?;
    p.post().image(&inv.and(p.pre())?)?.implies(inv)
}

/// `ā ⊆ I` and `I` is an invariant of `C' : b`.
///
/// The initialization must establish the invariant. Reading the inclusion
/// the other way round (`I ⊆ ā`) breaks the loop correctness theorem.
pub fn is_loop_invariant(inv: &Condition, ls: &LoopSpec) -> Result<bool> {
    check_same(inv.space(), ls.init.space())?;
    Ok(ls.init.range().implies(inv)? && is_invariant(inv, &ls.guarded_body())?)
}

/// Outcome of checking that a loop only exits into `C ∩ I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopCorrectness {
    /// The candidate is not a loop invariant; nothing was checked.
    NotLoopInvariant,
    Holds,
    /// Exit states outside `C ∩ I`. This would falsify the loop correctness
    /// theorem.
    Violated { offending: Condition },
}

pub fn check_loop_correctness(ls: &LoopSpec, inv: &Condition) -> Result<LoopCorrectness> {
    if !is_loop_invariant(inv, ls)? {
        return Ok(LoopCorrectness::NotLoopInvariant);
    }
    let exits = while_loop(ls).range();
    let allowed = ls.exit.and(inv)?;
    let offending = exits.diff(&allowed)?;
    Ok(if offending.is_empty() {
        LoopCorrectness::Holds
    } else {
        LoopCorrectness::Violated { offending }
    })
}

/// Both views of loop feasibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopFeasibility {
    /// Every state of `Pre_a` has some run that exits: `Pre_a ⊆ Pre_l`.
    pub direct: bool,
    /// States of `Pre_a` with no exiting run.
    pub stuck: Condition,
    /// `Pre_b ∪ C` is a loop invariant.
    pub invariant_ok: bool,
    /// `post_b / C'` is well-founded.
    pub well_founded: bool,
}

impl LoopFeasibility {
    /// The sufficient condition: invariant and well-foundedness together.
    pub fn sufficient(&self) -> bool {
        self.invariant_ok && self.well_founded
    }
}

/// Loop feasibility, which is stronger than feasibility of the loop program
/// itself: it asks for a result from every state of `Pre_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopFeasibilityVerdict {
    /// `a` or `b` is infeasible, so the theorem does not apply.
    InfeasibleOperands { init: bool, body: bool },
    Evaluated(LoopFeasibility),
}

pub fn check_loop_feasibility(ls: &LoopSpec) -> LoopFeasibilityVerdict {
    let (init_ok, body_ok) = (ls.init.is_feasible(), ls.body.is_feasible());
    if !init_ok || !body_ok {
        return LoopFeasibilityVerdict::InfeasibleOperands {
            init: !init_ok,
            body: !body_ok,
        };
    }
    let looped = while_loop(ls);
    let stuck = ls.init.pre().diff(looped.pre()).expect("shared space");
    let candidate = ls.body.pre().or(&ls.exit).expect("shared space");
    let verdict = LoopFeasibility {
        direct: stuck.is_empty(),
        stuck,
        invariant_ok: is_loop_invariant(&candidate, ls).expect("shared space"),
        well_founded: exit_free_body(ls).is_well_founded(),
    };
    assert!(
        !verdict.sufficient() || verdict.direct,
        "loop feasibility theorem violated for {ls:?}"
    );
    LoopFeasibilityVerdict::Evaluated(verdict)
}

/// `C' : post_b` as a bare relation.
fn exit_free_body(ls: &LoopSpec) -> Relation {
    ls.body.post().restrict(&ls.exit.not()).expect("shared space")
}

/// Whether `v(s') < v(s)` for every `s ∈ C'` and `s' ∈ post_b(s)`.
pub fn check_variant(v: &Variant, ls: &LoopSpec) -> Result<bool> {
    let space = ls.body.space();
    if v.measure.len() != space.len() {
        return Err(ModelError::Invalid(format!(
            "variant has {} values for a space of {} atoms",
            v.measure.len(),
            space.len()
        )));
    }
    let steps = exit_free_body(ls);
    let decreasing = steps.pairs().all(|(s, t)| v.measure[t] < v.measure[s]);
    assert!(
        !decreasing || steps.is_well_founded(),
        "a decreasing variant certifies a well-founded body"
    );
    Ok(decreasing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::StateSpace;
    use std::sync::Arc;

    fn space(n: usize) -> Arc<StateSpace> {
        StateSpace::numbered(n).unwrap()
    }

    fn prog(s: &Arc<StateSpace>, post: &[(usize, usize)], pre: &[usize]) -> Program {
        Program::new(
            Relation::from_index_pairs(s, post.iter().copied()).unwrap(),
            Condition::from_indices(s, pre.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    fn cond(s: &Arc<StateSpace>, xs: &[usize]) -> Condition {
        Condition::from_indices(s, xs.iter().copied()).unwrap()
    }

    fn counting() -> LoopSpec {
        let s = space(3);
        LoopSpec::new(
            prog(&s, &[(0, 0)], &[0]),
            cond(&s, &[2]),
            prog(&s, &[(0, 1), (1, 2)], &[0, 1]),
        )
        .unwrap()
    }

    fn skip_until_false() -> LoopSpec {
        let s = space(2);
        LoopSpec::new(Program::skip(&s), Condition::empty(&s), Program::skip(&s)).unwrap()
    }

    #[test]
    fn fixed_repetition_examples() {
        let s = space(3);
        let b = prog(&s, &[(0, 1), (1, 2)], &[0, 1]);
        assert_eq!(fixed_repetition(&b, 0), Program::skip(&s));
        assert_eq!(fixed_repetition(&b, 1), b);
        assert_eq!(fixed_repetition(&b, 2), prog(&s, &[(0, 2)], &[0]));
        assert_eq!(fixed_repetition(&Program::fail(&s), 2), Program::fail(&s));
    }

    #[test]
    fn arbitrary_repetition_examples() {
        let s = space(3);
        assert_eq!(arbitrary_repetition(&Program::skip(&s)), Program::skip(&s));
        assert_eq!(arbitrary_repetition(&Program::fail(&s)), Program::skip(&s));
        let b = prog(&s, &[(0, 1), (1, 2)], &[0, 1]);
        assert_eq!(
            arbitrary_repetition(&b),
            prog(&s, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)], &[0, 1, 2])
        );
    }

    #[test]
    fn counting_loop() {
        let ls = counting();
        let s = ls.body.space().clone();
        assert_eq!(while_loop(&ls), prog(&s, &[(0, 2)], &[0]));
        assert_eq!(loop_unrolling(&ls, 0), Program::fail(&s));
        assert_eq!(loop_unrolling(&ls, 1), Program::fail(&s));
        assert_eq!(loop_unrolling(&ls, 2), prog(&s, &[(0, 2)], &[0]));
        for q in unrollings(&ls) {
            assert!(q.range().implies(&ls.exit).unwrap());
        }
    }

    #[test]
    fn degenerate_loops() {
        let ls = skip_until_false();
        let s = ls.body.space().clone();
        assert_eq!(while_loop(&ls), Program::fail(&s));
        let b = prog(&s, &[(0, 1)], &[0]);
        let immediate = LoopSpec::new(Program::skip(&s), Condition::full(&s), b).unwrap();
        assert_eq!(while_loop(&immediate), Program::skip(&s));
    }

    #[test]
    fn invariants() {
        let s = space(3);
        let p = prog(&s, &[(0, 1), (2, 2)], &[0]);
        // disjoint from Pre
        assert!(is_invariant(&cond(&s, &[2]), &p).unwrap());
        assert!(is_invariant(&Condition::full(&s), &p).unwrap());
        assert!(!is_invariant(&cond(&s, &[0]), &p).unwrap());
        assert!(is_invariant(&cond(&s, &[0, 1]), &p).unwrap());
    }

    #[test]
    fn loop_invariants_of_the_counting_loop() {
        let ls = counting();
        let s = ls.body.space().clone();
        assert!(is_loop_invariant(&cond(&s, &[0, 1, 2]), &ls).unwrap());
        assert!(!is_loop_invariant(&cond(&s, &[0]), &ls).unwrap());
        assert_eq!(
            check_loop_correctness(&ls, &cond(&s, &[0, 1, 2])).unwrap(),
            LoopCorrectness::Holds
        );
        assert_eq!(
            check_loop_correctness(&ls, &cond(&s, &[0])).unwrap(),
            LoopCorrectness::NotLoopInvariant
        );
        let ls = skip_until_false();
        let full = Condition::full(ls.body.space());
        assert_eq!(check_loop_correctness(&ls, &full).unwrap(), LoopCorrectness::Holds);
    }

    #[test]
    fn loop_feasibility_verdicts() {
        let LoopFeasibilityVerdict::Evaluated(v) = check_loop_feasibility(&counting()) else {
            panic!("operands are feasible");
        };
        assert!(v.direct && v.sufficient());
        let LoopFeasibilityVerdict::Evaluated(v) = check_loop_feasibility(&skip_until_false()) else {
            panic!("operands are feasible");
        };
        assert!(!v.direct && v.stuck.is_full());
        assert!(!v.well_founded);

        let s = space(2);
        let spinning = LoopSpec::new(
            Program::skip(&s),
            cond(&s, &[1]),
            prog(&s, &[(0, 0), (0, 1), (1, 1)], &[0, 1]),
        )
        .unwrap();
        let LoopFeasibilityVerdict::Evaluated(v) = check_loop_feasibility(&spinning) else {
            panic!("operands are feasible");
        };
        assert!(!v.well_founded && !v.sufficient());
        assert!(v.direct);

        let bad = LoopSpec::new(prog(&s, &[], &[0]), cond(&s, &[1]), Program::skip(&s)).unwrap();
        assert_eq!(
            check_loop_feasibility(&bad),
            LoopFeasibilityVerdict::InfeasibleOperands { init: true, body: false }
        );
    }

    #[test]
    fn variants() {
        let ls = counting();
        let s = ls.body.space().clone();
        assert!(check_variant(&Variant::new(vec![2, 1, 0]), &ls).unwrap());
        assert!(!check_variant(&Variant::new(vec![1, 1, 1]), &ls).unwrap());
        let idle = LoopSpec::new(Program::skip(&s), Condition::full(&s), ls.body.clone()).unwrap();
        assert!(check_variant(&Variant::new(vec![0, 0, 0]), &idle).unwrap());
        assert!(check_variant(&Variant::new(vec![0, 0]), &ls).is_err());
        assert!(Variant::from_table(&s, [("0", 2), ("1", 1)]).is_err());
        assert_eq!(
            Variant::from_table(&s, [("2", 0), ("0", 2), ("1", 1)]).unwrap(),
            Variant::new(vec![2, 1, 0])
        );
    }
}
