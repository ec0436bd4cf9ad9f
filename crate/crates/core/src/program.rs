//! Programs as `⟨post, Pre⟩` pairs, their operators, and the per-program and
//! per-state predicates.
//!
//! A program is any relation paired with any condition over one space;
//! feasibility is a predicate, not a construction requirement. Binary
//! operators demand identical spaces. Only [`Program::refines`] accepts a
//! refining program over a larger space.
//!
//! Restriction `C : p` yields `⟨post / C, Pre ∩ C⟩`. Keeping `Pre` unchanged
//! would contradict `(False : p) = Fail`, `p ⊆ (C : p)` and feasibility of
//! restricted feasible programs.

use std::fmt;
use std::sync::Arc;

use crate::error::{ModelError, Result};
use crate::sets::{check_same, Condition, Relation, StateSpace};

/// The three distinguished programs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Special {
    /// `⟨∅, ∅⟩`, applicable nowhere.
    Fail,
    /// `⟨S × S, S⟩`, applicable everywhere, any result.
    Havoc,
    /// `⟨id, S⟩`, leaves the state unchanged.
    Skip,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Program {
    post: Relation,
    pre: Condition,
}

/// Classification flags of a program.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProgramClass {
    /// `post` is a (partial) function.
    pub deterministic: bool,
    /// Every subset `C` is disjoint from `post(C)`. Taken literally this
    /// only holds for an empty postcondition, so the flag is degenerate.
    pub functional_literal: bool,
    /// `Pre = S`.
    pub total: bool,
    /// Whether a state is a permitted output does not depend on the input:
    /// every column of `post` is either full or empty.
    pub markovian: bool,
}

impl ProgramClass {
    /// Comma separated names of the flags that are set, e.g. `deterministic,total`.
    pub fn flags(&self) -> String {
        let mut out = Vec::new();
        if self.deterministic {
            out.push("deterministic");
        }
        if self.functional_literal {
            out.push("functional[degenerate]");
        }
        if self.total {
            out.push("total");
        }
        if self.markovian {
            out.push("markovian");
        }
        if out.is_empty() {
            "none".to_string()
        } else {
            out.join(",")
        }
    }
}

/// How a single state relates to a postcondition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StateKind {
    /// Its row is all of `S`: any successor is acceptable.
    Trivial,
    /// Its row is empty: constant, but not trivially so.
    IrrelevantNontrivial,
    /// Its row is neither empty nor full.
    Relevant,
}

impl StateKind {
    pub fn name(self) -> &'static str {
        match self {
            StateKind::Trivial => "trivial",
            StateKind::IrrelevantNontrivial => "irrelevant",
            StateKind::Relevant => "relevant",
        }
    }
}

impl Program {
    pub fn new(post: Relation, pre: Condition) -> Result<Program> {
        check_same(post.space(), pre.space())?;
        Ok(Program { post, pre })
    }

    /// Builds `⟨post, pre⟩` and checks both parts belong to `space`.
    pub fn make(space: &Arc<StateSpace>, post: Relation, pre: Condition) -> Result<Program> {
        check_same(space, post.space())?;
        check_same(space, pre.space())?;
        Ok(Program { post, pre })
    }

    pub fn special(kind: Special, space: &Arc<StateSpace>) -> Program {
        match kind {
            Special::Fail => Program::fail(space),
            Special::Havoc => Program::havoc(space),
            Special::Skip => Program::skip(space),
        }
    }

    pub fn fail(space: &Arc<StateSpace>) -> Program {
        Program {
            post: Relation::empty(space),
            pre: Condition::empty(space),
        }
    }

    pub fn havoc(space: &Arc<StateSpace>) -> Program {
        Program {
            post: Relation::full(space),
            pre: Condition::full(space),
        }
    }

    pub fn skip(space: &Arc<StateSpace>) -> Program {
        Program {
            post: Relation::identity(space),
            pre: Condition::full(space),
        }
    }

    pub fn space(&self) -> &Arc<StateSpace> {
        self.pre.space()
    }

    pub fn post(&self) -> &Relation {
        &self.post
    }

    pub fn pre(&self) -> &Condition {
        &self.pre
    }

    /// `p̄ = post(Pre)`, the values the program can actually yield.
    pub fn range(&self) -> Condition {
        self.post.image(&self.pre).expect("parts share a space")
    }

    fn check(&self, other: &Program) -> Result<()> {
        check_same(self.space(), other.space())
    }

    /// `p1 ∪ p2`: `⟨post1 ∪ post2, Pre1 ∪ Pre2⟩`.
    pub fn choice(&self, other: &Program) -> Result<Program> {
        self.check(other)?;
        Ok(Program {
            post: self.post.union(&other.post)?,
            pre: self.pre.or(&other.pre)?,
        })
    }

    /// Demonic sister of choice: `⟨post1 ∪ post2, Pre1 ∩ Pre2⟩`. Not part of
    /// the theory's operator set; kept for counterexamples.
    pub fn internal_choice(&self, other: &Program) -> Result<Program> {
        self.check(other)?;
        Ok(Program {
            post: self.post.union(&other.post)?,
            pre: self.pre.and(&other.pre)?,
        })
    }

    /// `p1 ; p2`: `⟨(post1 \ Pre2) ; post2, Pre1 ∩ post1⁻¹(Pre2)⟩`.
    ///
    /// The corestriction matters: `post1 ; post2` alone would feed `post2`
    /// states outside `Pre2`.
    pub fn seq(&self, other: &Program) -> Result<Program> {
        self.check(other)?;
        Ok(Program {
            post: self.post.corestrict(&other.pre)?.compose(&other.post)?,
            pre: self.pre.and(&self.post.preimage(&other.pre)?)?,
        })
    }

    /// `C : p`: `⟨post / C, Pre ∩ C⟩`.
    pub fn restrict(&self, guard: &Condition) -> Result<Program> {
        check_same(self.space(), guard.space())?;
        Ok(Program {
            post: self.post.restrict(guard)?,
            pre: self.pre.and(guard)?,
        })
    }

    /// `p \ C`: `⟨post \ C, Pre ∩ post⁻¹(C)⟩`.
    pub fn corestrict(&self, target: &Condition) -> Result<Program> {
        check_same(self.space(), target.space())?;
        Ok(Program {
            post: self.post.corestrict(target)?,
            pre: self.pre.and(&self.post.preimage(target)?)?,
        })
    }

    /// Atomic concurrency `p1 ∥ p2 = (p1 ; p2) ∪ (p2 ; p1)`.
    pub fn concurrent(&self, other: &Program) -> Result<Program> {
        self.seq(other)?.choice(&other.seq(self)?)
    }

    /// `if C then p1 else p2 end = (C : p1) ∪ (C' : p2)`.
    pub fn if_then_else(guard: &Condition, then: &Program, otherwise: &Program) -> Result<Program> {
        then.restrict(guard)?.choice(&otherwise.restrict(&guard.not())?)
    }

    /// `if C then p end`, short for `if C then p else Skip end`.
    pub fn if_then(guard: &Condition, then: &Program) -> Result<Program> {
        Program::if_then_else(guard, then, &Program::skip(then.space()))
    }

    /// Componentwise intersection. Not refinement-safe.
    pub fn intersection(&self, other: &Program) -> Result<Program> {
        self.check(other)?;
        Ok(Program {
            post: self.post.inter(&other.post)?,
            pre: self.pre.and(&other.pre)?,
        })
    }

    /// Difference of postconditions, intersection of preconditions. Not
    /// refinement-safe.
    pub fn difference(&self, other: &Program) -> Result<Program> {
        self.check(other)?;
        Ok(Program {
            post: self.post.diff(&other.post)?,
            pre: self.pre.and(&other.pre)?,
        })
    }

    /// `Pre ⊆ dom(post)`.
    pub fn is_feasible(&self) -> bool {
        self.pre.bits() & !self.post.domain().bits() == 0
    }

    /// States of `Pre` with no successor.
    pub fn infeasible_states(&self) -> Condition {
        self.pre.diff(&self.post.domain()).expect("parts share a space")
    }

    /// `post` only relates states of `Pre`. Every program is equivalent to
    /// exactly one normalized program, see [`Program::normalized`].
    pub fn is_normalized(&self) -> bool {
        self.post
            .rows()
            .iter()
            .enumerate()
            .all(|(x, &row)| row == 0 || self.pre.contains(x))
    }

    /// `⟨post / Pre, Pre⟩`.
    pub fn normalized(&self) -> Program {
        Program {
            post: self.post.restrict(&self.pre).expect("parts share a space"),
            pre: self.pre.clone(),
        }
    }

    /// Same precondition, same postcondition on it.
    pub fn equivalent(&self, other: &Program) -> Result<bool> {
        self.check(other)?;
        Ok(self.pre == other.pre && self.post.restrict(&self.pre)? == other.post.restrict(&other.pre)?)
    }

    /// `self ⊆ spec`: extension, weakening and strengthening.
    ///
    /// The refining program may live over a larger space; atoms are then
    /// matched by name.
    pub fn refines(&self, spec: &Program) -> bool {
        if Arc::ptr_eq(self.space(), spec.space()) || **self.space() == **spec.space() {
            let weakening = spec.pre.bits() & !self.pre.bits() == 0;
            return weakening
                && spec
                    .pre
                    .indices()
                    .all(|x| self.post.row(x) & !spec.post.row(x) == 0);
        }
        let wide = self.space();
        let narrow = spec.space();
        // extension
        let Ok(embed) = narrow
            .atoms()
            .iter()
            .map(|a| wide.index_of(a))
            .collect::<Result<Vec<usize>>>()
        else {
            return false;
        };
        // weakening
        if !spec.pre.indices().all(|x| self.pre.contains(embed[x])) {
            return false;
        }
        // strengthening: every successor in the wide program must be a
        // successor in the spec
        spec.pre.indices().all(|x| {
            self.post.pairs().filter(|&(a, _)| a == embed[x]).all(|(_, b)| {
                narrow
                    .index_of(wide.atom(b))
                    .map(|y| spec.post.contains(x, y))
                    .unwrap_or(false)
            })
        })
    }

    /// `p1 ; p2 = p2 ; p1`, compared as exact pairs.
    pub fn commutes(&self, other: &Program) -> Result<bool> {
        Ok(self.seq(other)? == other.seq(self)?)
    }

    pub fn classify(&self) -> ProgramClass {
        let n = self.space().len();
        let full = self.space().full_mask();
        ProgramClass {
            deterministic: self.post.is_function(),
            // a pair (x, y) violates the definition for C = {x, y}
            functional_literal: self.post.pairs().next().is_none(),
            total: self.pre.is_full(),
            markovian: (0..n).all(|y| {
                let col = self.post.column(y);
                col == 0 || col == full
            }),
        }
    }

    pub fn classify_state(&self, state: usize) -> Result<StateKind> {
        let space = self.space();
        if state >= space.len() {
            return Err(ModelError::IndexOutOfRange {
                space: space.name().to_string(),
                index: state,
                size: space.len(),
            });
        }
        let row = self.post.row(state);
        Ok(if row == space.full_mask() {
            StateKind::Trivial
        } else if row == 0 {
            StateKind::IrrelevantNontrivial
        } else {
            StateKind::Relevant
        })
    }

    pub fn classify_atom(&self, atom: &str) -> Result<StateKind> {
        self.classify_state(self.space().index_of(atom)?)
    }
}

/// `if C1 : p1 [] C2 : p2 [] ... end`, the choice over all restricted branches.
pub fn guarded_conditional(branches: &[(Condition, Program)]) -> Result<Program> {
    let ((first_guard, first), rest) = branches
        .split_first()
        .ok_or_else(|| ModelError::Invalid("guarded conditional needs at least one branch".into()))?;
    rest.iter().try_fold(first.restrict(first_guard)?, |acc, (guard, p)| {
        acc.choice(&p.restrict(guard)?)
    })
}

/// Non-atomic concurrency `(p1, p2, ..., pn) ∥ q`: `q` runs once, atomically,
/// before, between or after the steps, which keep their order.
///
/// Two steps give `((p1 ∥ q) ; p2) ∪ (p1 ; (p2 ∥ q))`; longer sequences
/// unfold the same way on the first step.
pub fn nonatomic_concurrency(steps: &[Program], q: &Program) -> Result<Program> {
    if steps.len() < 2 {
        return Err(ModelError::Invalid(
            "non-atomic concurrency needs at least two steps; use atomic concurrency for one".into(),
        ));
    }
    interleave(steps, q)
}

fn interleave(steps: &[Program], q: &Program) -> Result<Program> {
    match steps {
        [] => unreachable!(),
        [only] => only.concurrent(q),
        [first, rest @ ..] => {
            let tail = rest[1..].iter().try_fold(rest[0].clone(), |acc, p| acc.seq(p))?;
            let q_here = first.concurrent(q)?.seq(&tail)?;
            let q_later = first.seq(&interleave(rest, q)?)?;
            q_here.choice(&q_later)
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{},{}>", self.post, self.pre)
    }
}

impl fmt::Debug for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
