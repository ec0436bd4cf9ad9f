//! Contracted programs, weakest preconditions and strongest postconditions.

use std::fmt;

use crate::error::{ModelError, Result};
use crate::program::Program;
use crate::sets::{check_same, Condition, Relation};

/// `require pre do body ensure post end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractedProgram {
    pub pre: Condition,
    pub post: Relation,
    pub body: Program,
}

/// Result of a correctness check, with both formulations side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrectnessVerdict {
    /// The body is a feasible refinement of `⟨post, Pre⟩`.
    pub correct: bool,
    /// `Pre ⊆ wp(body, post)`.
    pub by_formula: bool,
    /// States of `Pre` outside `wp(body, post)`.
    pub violating: Condition,
    /// Pairs of `post_b / Pre` not allowed by `post`.
    pub dangling: Relation,
    /// States of `Pre_b` with no successor under `post_b`.
    pub infeasible: Condition,
}

impl CorrectnessVerdict {
    pub fn formulations_agree(&self) -> bool {
        self.correct == self.by_formula
    }
}

impl ContractedProgram {
    pub fn new(pre: Condition, body: Program, post: Relation) -> Result<ContractedProgram> {
        check_same(pre.space(), body.space())?;
        check_same(post.space(), body.space())?;
        Ok(ContractedProgram { pre, post, body })
    }

    /// The specification `⟨post, Pre⟩` the body is claimed to implement.
    pub fn specification(&self) -> Program {
        Program::new(self.post.clone(), self.pre.clone()).expect("shared space")
    }

    pub fn check(&self) -> CorrectnessVerdict {
        let goal = wp(&self.body, &self.post).expect("shared space");
        let violating = self.pre.diff(&goal).expect("shared space");
        let dangling = sp(&self.body, &self.pre)
            .expect("shared space")
            .diff(&self.post)
            .expect("shared space");
        let correct = self.body.refines(&self.specification()) && self.body.is_feasible();
        CorrectnessVerdict {
            correct,
            by_formula: violating.is_empty(),
            violating,
            dangling,
            infeasible: self.body.infeasible_states(),
        }
    }

    pub fn is_correct(&self) -> bool {
        self.check().correct
    }
}

impl fmt::Display for ContractedProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "require {} do {} ensure {} end", self.pre, self.body, self.post)
    }
}

/// `dom(b) − dom(post_b − post)` where `dom(b)` is the part of `Pre_b` on
/// which `b` has a successor.
///
/// For a feasible body `dom(b)` is `Pre_b`; for an infeasible one the states
/// with no successor cannot satisfy any goal.
pub fn wp(b: &Program, post: &Relation) -> Result<Condition> {
    check_same(b.space(), post.space())?;
    let active = b.pre().and(&b.post().domain())?;
    let escaping = b.post().diff(post)?.domain();
    active.diff(&escaping)
}

/// `wp(b, S × goal)`: states from which every result lands in `goal`.
pub fn wp_goal(b: &Program, goal: &Condition) -> Result<Condition> {
    let full = Condition::full(goal.space());
    wp(b, &Relation::product(&full, goal)?)
}

/// `post_b / Pre`.
pub fn sp(b: &Program, pre: &Condition) -> Result<Relation> {
    b.post().restrict(pre)
}

/// `require p̲ do p ensure post_p end`, which is correct exactly when `p` is
/// feasible.
pub fn most_abstract_implementation(p: &Program) -> Result<ContractedProgram> {
    if !p.is_feasible() {
        return Err(ModelError::Invalid(format!(
            "{p} is infeasible on {} and has no implementation",
            p.infeasible_states()
        )));
    }
    ContractedProgram::new(p.pre().clone(), p.clone(), p.post().clone())
}

/// Same contract and the body of `cp2` refines that of `cp1`.
pub fn contract_refines(cp2: &ContractedProgram, cp1: &ContractedProgram) -> bool {
    cp2.pre == cp1.pre && cp2.post == cp1.post && cp2.body.refines(&cp1.body)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sets::StateSpace;
    use std::sync::Arc;

    fn space(n: usize) -> Arc<StateSpace> {
        StateSpace::numbered(n).unwrap()
    }

    fn rel(s: &Arc<StateSpace>, pairs: &[(usize, usize)]) -> Relation {
        Relation::from_index_pairs(s, pairs.iter().copied()).unwrap()
    }

    fn cond(s: &Arc<StateSpace>, xs: &[usize]) -> Condition {
        Condition::from_indices(s, xs.iter().copied()).unwrap()
    }

    fn prog(s: &Arc<StateSpace>, post: &[(usize, usize)], pre: &[usize]) -> Program {
        Program::new(rel(s, post), cond(s, pre)).unwrap()
    }

    fn blocked(s: &Arc<StateSpace>) -> Program {
        Program::new(Relation::empty(s), Condition::full(s)).unwrap()
    }

    #[test]
    fn counting_loop_meets_its_contract() {
        let s = space(3);
        let cp = ContractedProgram::new(cond(&s, &[0]), prog(&s, &[(0, 2)], &[0]), rel(&s, &[(0, 2)]))
            .unwrap();
        let v = cp.check();
        assert!(v.correct && v.by_formula && v.violating.is_empty() && v.dangling.is_empty());
    }

    #[test]
    fn infeasible_body_is_incorrect() {
        let s = space(2);
        let cp = ContractedProgram::new(Condition::full(&s), blocked(&s), Relation::full(&s))
            .unwrap();
        let v = cp.check();
        assert!(!v.correct && !v.by_formula);
        assert_eq!(v.violating, Condition::full(&s));
    }

    #[test]
    fn formulations_split_on_infeasible_bodies_with_empty_requirement() {
        let s = space(2);
        let cp = ContractedProgram::new(Condition::empty(&s), blocked(&s), Relation::empty(&s))
            .unwrap();
        let v = cp.check();
        assert!(v.by_formula && !v.correct && !v.formulations_agree());
    }

    #[test]
    fn wp_examples() {
        let s = space(3);
        let b = prog(&s, &[(0, 1), (0, 2)], &[0]);
        assert!(wp(&b, &rel(&s, &[(0, 1)])).unwrap().is_empty());
        assert!(wp(&b, &rel(&s, &[(0, 2)])).unwrap().is_empty());
        assert_eq!(wp(&b, &rel(&s, &[(0, 1), (0, 2)])).unwrap(), cond(&s, &[0]));
        assert!(wp(&b, &Relation::empty(&s)).unwrap().is_empty());
        assert!(wp(&Program::fail(&s), &Relation::full(&s)).unwrap().is_empty());
        assert_eq!(wp_goal(&b, &cond(&s, &[1, 2])).unwrap(), cond(&s, &[0]));
    }

    #[test]
    fn sp_examples() {
        let s = space(3);
        let b = prog(&s, &[(0, 1), (1, 2)], &[0, 1]);
        assert!(sp(&b, &Condition::empty(&s)).unwrap().is_empty());
        assert!(sp(&Program::fail(&s), &cond(&s, &[0, 1])).unwrap().is_empty());
        assert_eq!(sp(&b, &cond(&s, &[1])).unwrap(), rel(&s, &[(1, 2)]));
    }

    #[test]
    fn most_abstract_implementations() {
        let s = space(3);
        let mai = most_abstract_implementation(&Program::skip(&s)).unwrap();
        assert!(mai.pre.is_full() && mai.post == Relation::identity(&s));
        assert!(mai.is_correct());
        assert!(most_abstract_implementation(&blocked(&s)).is_err());
        assert!(most_abstract_implementation(&Program::fail(&s)).unwrap().is_correct());
        let counted = prog(&s, &[(0, 2)], &[0]);
        assert!(most_abstract_implementation(&counted).unwrap().is_correct());
    }

    #[test]
    fn refinement_of_contracted_programs() {
        let s = space(3);
        let body = prog(&s, &[(0, 1), (0, 2)], &[0]);
        let cp = ContractedProgram::new(cond(&s, &[0]), body, rel(&s, &[(0, 1), (0, 2)])).unwrap();
        assert!(contract_refines(&cp, &cp));
        let mut narrower = cp.clone();
        narrower.body = prog(&s, &[(0, 1)], &[0]);
        assert!(contract_refines(&narrower, &cp));
        assert!(narrower.is_correct());
        let mut other = cp.clone();
        other.post = rel(&s, &[(0, 1)]);
        assert!(!contract_refines(&other, &cp));
    }
}
