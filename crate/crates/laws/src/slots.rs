//! Law operands: what a slot ranges over, and how to enumerate or sample it.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use tp_core::{Condition, Program, Relation, StateSpace};

use crate::error::LawError;

/// Largest space that exhaustive enumeration accepts.
pub const MAX_ENUMERABLE_ATOMS: usize = 4;

/// Which programs a program slot ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Domain {
    Any,
    Feasible,
    Normalized,
    FeasibleNormalized,
}

impl Domain {
    pub fn admits(self, p: &Program) -> bool {
        match self {
            Domain::Any => true,
            Domain::Feasible => p.is_feasible(),
            Domain::Normalized => p.is_normalized(),
            Domain::FeasibleNormalized => p.is_feasible() && p.is_normalized(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Domain::Any => "all programs",
            Domain::Feasible => "feasible programs",
            Domain::Normalized => "normalized programs",
            Domain::FeasibleNormalized => "feasible normalized programs",
        }
    }

    /// Strictly larger domains, nearest first.
    pub fn broader(self) -> &'static [Domain] {
        match self {
            Domain::Any => &[],
            Domain::Feasible | Domain::Normalized => &[Domain::Any],
            Domain::FeasibleNormalized => &[Domain::Feasible, Domain::Normalized, Domain::Any],
        }
    }
}

/// One slot of a law. Paired slots bind two operands at once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Prog(&'static str),
    Cond(&'static str),
    Rel(&'static str),
    /// `(q, p)` with `q` refining `p`, both in the law's domain.
    Refining(&'static str, &'static str),
    /// `(D, C)` with `D ⊆ C`.
    SubCond(&'static str, &'static str),
    /// `(r, s)` with `r ⊆ s`.
    SubRel(&'static str, &'static str),
}

impl Slot {
    pub fn names(&self) -> Vec<&'static str> {
        match *self {
            Slot::Prog(a) | Slot::Cond(a) | Slot::Rel(a) => vec![a],
            Slot::Refining(a, b) | Slot::SubCond(a, b) | Slot::SubRel(a, b) => vec![a, b],
        }
    }

    /// Upper bound on the number of choices, computed without enumerating.
    fn bound(&self, n: usize) -> f64 {
        let progs = 2f64.powi((n * n + n) as i32);
        let conds = 2f64.powi(n as i32);
        let rels = 2f64.powi((n * n) as i32);
        match self {
            Slot::Prog(_) => progs,
            Slot::Cond(_) => conds,
            Slot::Rel(_) => rels,
            Slot::Refining(..) => progs * progs,
            Slot::SubCond(..) => 3f64.powi(n as i32),
            Slot::SubRel(..) => 3f64.powi((n * n) as i32),
        }
    }
}

/// A concrete operand.
#[derive(Clone, PartialEq, Eq)]
pub enum Value {
    Prog(Program),
    Cond(Condition),
    Rel(Relation),
}

impl Value {
    pub fn prog(&self) -> &Program {
        match self {
            Value::Prog(p) => p,
            other => panic!("expected a program, got {other}"),
        }
    }

    pub fn cond(&self) -> &Condition {
        match self {
            Value::Cond(c) => c,
            other => panic!("expected a condition, got {other}"),
        }
    }

    pub fn rel(&self) -> &Relation {
        match self {
            Value::Rel(r) => r,
            other => panic!("expected a relation, got {other}"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Prog(p) => p.fmt(f),
            Value::Cond(c) => c.fmt(f),
            Value::Rel(r) => r.fmt(f),
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn check_enumerable(space: &StateSpace) -> Result<(), LawError> {
    if space.len() > MAX_ENUMERABLE_ATOMS {
        return Err(LawError::TooLarge(format!(
            "{} atoms is beyond exhaustive enumeration (limit {MAX_ENUMERABLE_ATOMS}); use random mode",
            space.len()
        )));
    }
    Ok(())
}

/// Every condition, in increasing bit order.
pub fn enumerate_conditions(space: &Arc<StateSpace>) -> Result<Vec<Condition>, LawError> {
    check_enumerable(space)?;
    Ok((0..1u64 << space.len())
        .map(|bits| Condition::from_bits(space, bits).expect("in range"))
        .collect())
}

/// Every relation. Row `i` holds bits `n*i .. n*i+n` of the counter.
pub fn enumerate_relations(space: &Arc<StateSpace>) -> Result<Vec<Relation>, LawError> {
    check_enumerable(space)?;
    let n = space.len();
    let row_mask = space.full_mask();
    Ok((0..1u64 << (n * n))
        .map(|code| {
            let rows: Vec<u64> = (0..n).map(|i| (code >> (n * i)) & row_mask).collect();
            Relation::from_rows(space, &rows).expect("in range")
        })
        .collect())
}

/// All `2^(n²) × 2^n` programs, relation-major, each exactly once.
pub fn enumerate_programs(space: &Arc<StateSpace>) -> Result<Vec<Program>, LawError> {
    let conds = enumerate_conditions(space)?;
    let rels = enumerate_relations(space)?;
    let mut out = Vec::with_capacity(rels.len() * conds.len());
    for r in &rels {
        for c in &conds {
            out.push(Program::new(r.clone(), c.clone()).expect("shared space"));
        }
    }
    Ok(out)
}

/// Choices for one slot, each a list of one or two values.
pub(crate) fn slot_choices(
    slot: &Slot,
    space: &Arc<StateSpace>,
    domain: Domain,
) -> Result<Vec<Vec<Value>>, LawError> {
    Ok(match slot {
        Slot::Prog(_) => programs_in(space, domain)?
            .into_iter()
            .map(|p| vec![Value::Prog(p)])
            .collect(),
        Slot::Cond(_) => enumerate_conditions(space)?
            .into_iter()
            .map(|c| vec![Value::Cond(c)])
            .collect(),
        Slot::Rel(_) => enumerate_relations(space)?
            .into_iter()
            .map(|r| vec![Value::Rel(r)])
            .collect(),
        Slot::Refining(..) => {
            let progs = programs_in(space, domain)?;
            let mut out = Vec::new();
            for q in &progs {
                for p in &progs {
                    if q.refines(p) {
                        out.push(vec![Value::Prog(q.clone()), Value::Prog(p.clone())]);
                    }
                }
            }
            out
        }
        Slot::SubCond(..) => {
            let conds = enumerate_conditions(space)?;
            let mut out = Vec::new();
            for d in &conds {
                for c in &conds {
                    if d.bits() & !c.bits() == 0 {
                        out.push(vec![Value::Cond(d.clone()), Value::Cond(c.clone())]);
                    }
                }
            }
            out
        }
        Slot::SubRel(..) => {
            let rels = enumerate_relations(space)?;
            let mut out = Vec::new();
            for r in &rels {
                for s in &rels {
                    if r.is_subset(s).expect("shared space") {
                        out.push(vec![Value::Rel(r.clone()), Value::Rel(s.clone())]);
                    }
                }
            }
            out
        }
    })
}

fn programs_in(space: &Arc<StateSpace>, domain: Domain) -> Result<Vec<Program>, LawError> {
    Ok(enumerate_programs(space)?
        .into_iter()
        .filter(|p| domain.admits(p))
        .collect())
}

/// Upper bound on the tuples an exhaustive run would visit.
pub fn tuple_bound(slots: &[Slot], n: usize) -> f64 {
    slots.iter().map(|s| s.bound(n)).product()
}

pub fn random_condition<R: Rng>(rng: &mut R, space: &Arc<StateSpace>) -> Condition {
    Condition::from_bits(space, rng.gen::<u64>() & space.full_mask()).expect("masked")
}

pub fn random_relation<R: Rng>(rng: &mut R, space: &Arc<StateSpace>) -> Relation {
    let rows: Vec<u64> = (0..space.len())
        .map(|_| rng.gen::<u64>() & space.full_mask())
        .collect();
    Relation::from_rows(space, &rows).expect("masked")
}

/// Uniform over all programs of the space.
pub fn random_any<R: Rng>(rng: &mut R, space: &Arc<StateSpace>) -> Program {
    let post = random_relation(rng, space);
    Program::new(post, random_condition(rng, space)).expect("shared space")
}

/// Uniform over the programs of a domain. Normalized programs are drawn by
/// normalizing, which is uniform for a given precondition; feasibility is
/// obtained by rejection.
pub fn random_in<R: Rng>(rng: &mut R, space: &Arc<StateSpace>, domain: Domain) -> Program {
    loop {
        let mut p = random_any(rng, space);
        if matches!(domain, Domain::Normalized | Domain::FeasibleNormalized) {
            p = p.normalized();
        }
        if domain.admits(&p) {
            return p;
        }
    }
}

/// A program of `domain` refining `spec`: at least its precondition, and
/// inside its postcondition on that precondition.
pub fn random_refinement<R: Rng>(
    rng: &mut R,
    spec: &Program,
    domain: Domain,
) -> Program {
    let space = spec.space().clone();
    loop {
        let pre = spec.pre().or(&random_condition(rng, &space)).expect("shared space");
        let rows: Vec<u64> = (0..space.len())
            .map(|x| {
                let noise = rng.gen::<u64>() & space.full_mask();
                if spec.pre().contains(x) {
                    spec.post().row(x) & noise
                } else {
                    noise
                }
            })
            .collect();
        let post = Relation::from_rows(&space, &rows).expect("masked");
        let mut q = Program::new(post, pre).expect("shared space");
        if matches!(domain, Domain::Normalized | Domain::FeasibleNormalized) {
            q = q.normalized();
        }
        if domain.admits(&q) {
            debug_assert!(q.refines(spec));
            return q;
        }
    }
}

/// Sample for one slot.
pub(crate) fn sample_slot<R: Rng>(
    rng: &mut R,
    slot: &Slot,
    space: &Arc<StateSpace>,
    domain: Domain,
) -> Vec<Value> {
    match slot {
        Slot::Prog(_) => vec![Value::Prog(random_in(rng, space, domain))],
        Slot::Cond(_) => vec![Value::Cond(random_condition(rng, space))],
        Slot::Rel(_) => vec![Value::Rel(random_relation(rng, space))],
        Slot::Refining(..) => loop {
            let p = random_in(rng, space, domain);
            // infeasible specifications over-constrain feasible refinements
            if matches!(domain, Domain::Feasible | Domain::FeasibleNormalized) && !p.is_feasible() {
                continue;
            }
            let q = random_refinement(rng, &p, domain);
            break vec![Value::Prog(q), Value::Prog(p)];
        },
        Slot::SubCond(..) => {
            let c = random_condition(rng, space);
            let d = c.and(&random_condition(rng, space)).expect("shared space");
            vec![Value::Cond(d), Value::Cond(c)]
        }
        Slot::SubRel(..) => {
            let s = random_relation(rng, space);
            let r = s.inter(&random_relation(rng, space)).expect("shared space");
            vec![Value::Rel(r), Value::Rel(s)]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn program_counts() {
        for (n, count) in [(1, 4), (2, 64), (3, 4096)] {
            let s = StateSpace::numbered(n).unwrap();
            let all = enumerate_programs(&s).unwrap();
            assert_eq!(all.len(), count);
            let distinct: std::collections::HashSet<String> =
                all.iter().map(|p| p.to_string()).collect();
            assert_eq!(distinct.len(), count);
        }
    }

    #[test]
    fn large_spaces_are_refused() {
        let s = StateSpace::numbered(5).unwrap();
        assert!(matches!(enumerate_programs(&s), Err(LawError::TooLarge(_))));
    }

    #[test]
    fn refining_pairs_refine() {
        let s = StateSpace::numbered(2).unwrap();
        let pairs = slot_choices(&Slot::Refining("q", "p"), &s, Domain::Any).unwrap();
        assert!(pairs.iter().all(|v| v[0].prog().refines(v[1].prog())));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let s4 = StateSpace::numbered(4).unwrap();
        for domain in [Domain::Any, Domain::Feasible, Domain::Normalized, Domain::FeasibleNormalized] {
            for _ in 0..200 {
                let v = sample_slot(&mut rng, &Slot::Refining("q", "p"), &s4, domain);
                assert!(v[0].prog().refines(v[1].prog()));
                assert!(domain.admits(v[0].prog()) && domain.admits(v[1].prog()));
            }
        }
    }
}
