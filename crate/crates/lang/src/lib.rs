//! The TP specification language: a universe of atoms, named conditions,
//! relations and programs, and check/print directives over them.
//!
//! ```text
//! universe S = {s0, s1, s2}
//! program init = <{(s0,s0)}, {s0}>
//! program step = <{(s0,s1), (s1,s2)}, {s0, s1}>
//! program l = from init until {s2} loop step end
//! check loop_feasible l
//! print post l          -- {(s0,s2)}
//! ```
//!
//! `&` is internal (demonic) choice. It is outside the theory proper and is
//! provided for exploring its counterexamples.

pub mod ast;
pub mod diag;
pub mod elab;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod run;

use std::sync::Arc;

use tp_core::StateSpace;

pub use ast::{Ast, Query};
pub use diag::{Diagnostic, Pos, Severity};
pub use elab::{elaborate, Model, Value};
pub use parser::{parse, parse_expr};
pub use printer::print_ast;
pub use run::{run, DirectiveReport, Verdict};

/// Parses and elaborates a whole file.
pub fn load(src: &str) -> Result<Model, Vec<Diagnostic>> {
    elaborate(&parse(src)?)
}

/// The universe `eval` uses when no file is given.
pub fn default_space() -> Arc<StateSpace> {
    StateSpace::new("S", ["s0", "s1", "s2"]).expect("three atoms")
}

/// Evaluates `expr` in the scope of `model` and prints the queried facet.
pub fn eval(model: &Model, expr: &str, query: Query) -> Result<String, Vec<Diagnostic>> {
    let e = parse_expr(expr)?;
    let v = elab::elaborate_expr(model, &e).map_err(|d| vec![d])?;
    match v.as_program() {
        Some(p) => Ok(run::query_text(p, query)),
        None => Err(vec![Diagnostic::error(
            e.pos,
            format!("`{}` needs a program, found a {}", query.name(), v.kind()),
        )]),
    }
}
