//! Finite-state model of programs as pairs of a postcondition relation and a
//! precondition set.
//!
//! Everything lives over a [`StateSpace`], a finite, ordered universe of named
//! atoms. [`Condition`]s are subsets of it, [`Relation`]s are sets of atom
//! pairs, and a [`Program`] is a relation plus a condition. On top of that
//! the crate provides the program operators, loops with their invariant and
//! variant checkers, and contracted programs with weakest preconditions.

pub mod contracts;
pub mod error;
pub mod loops;
pub mod program;
pub mod sets;

pub use contracts::{ContractedProgram, CorrectnessVerdict};
pub use error::ModelError;
pub use loops::{LoopSpec, Variant};
pub use program::{Program, ProgramClass, Special, StateKind};
pub use sets::{Condition, Relation, StateSpace};
