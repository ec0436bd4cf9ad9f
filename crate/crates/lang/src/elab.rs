//! Name resolution and typing: turns a parsed file into a model of named
//! values over one universe, with its directives queued in file order.

use std::collections::HashMap;
use std::sync::Arc;

use tp_core::loops::{arbitrary_repetition, fixed_repetition, while_loop};
use tp_core::program::{guarded_conditional, nonatomic_concurrency};
use tp_core::{Condition, ContractedProgram, LoopSpec, ModelError, Program, Relation, StateSpace, Variant};

use crate::ast::*;
use crate::diag::{Diagnostic, Pos};
use crate::printer::{cond_text, print_directive, prog_text, rel_text};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Cond(Condition),
    Rel(Relation),
    Prog(Program),
    /// A `from ... end` loop keeps its parts for the loop checks.
    Loop(LoopSpec, Program),
    Contract(ContractedProgram),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Cond(_) => "condition",
            Value::Rel(_) => "relation",
            Value::Prog(_) => "program",
            Value::Loop(..) => "loop",
            Value::Contract(_) => "contract",
        }
    }

    pub fn as_program(&self) -> Option<&Program> {
        match self {
            Value::Prog(p) | Value::Loop(_, p) => Some(p),
            _ => None,
        }
    }

    /// Canonical literal text; parsing it back gives the same value.
    pub fn text(&self) -> String {
        match self {
            Value::Cond(c) => cond_text(c),
            Value::Rel(r) => rel_text(r),
            Value::Prog(p) => prog_text(p),
            Value::Loop(ls, _) => loop_text(ls),
            Value::Contract(cp) => format!(
                "require {} do {} ensure {} end",
                cond_text(&cp.pre),
                prog_text(&cp.body),
                rel_text(&cp.post)
            ),
        }
    }
}

fn loop_text(ls: &LoopSpec) -> String {
    format!(
        "from {} until {} loop {} end",
        prog_text(&ls.init),
        cond_text(&ls.exit),
        prog_text(&ls.body)
    )
}

#[derive(Debug, Clone)]
pub struct Binding {
    pub name: String,
    pub value: Value,
    pub pos: Pos,
}

impl PartialEq for Binding {
    fn eq(&self, other: &Binding) -> bool {
        self.name == other.name && self.value == other.value
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    Feasible(Program),
    Refines(Program, Program),
    Equivalent(Program, Program),
    Correct(ContractedProgram),
    Commutes(Program, Program),
    Invariant(Condition, Program),
    LoopInvariant(Condition, LoopSpec),
    LoopCorrect(Condition, LoopSpec),
    LoopFeasible(LoopSpec),
    Variant(LoopSpec, Variant),
    Law { id: String, size: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Action {
    Check { negated: bool, check: Check },
    Print { query: Query, program: Program },
}

#[derive(Debug, Clone)]
pub struct Queued {
    pub pos: Pos,
    /// The directive as written, in canonical form.
    pub text: String,
    pub action: Action,
}

impl PartialEq for Queued {
    fn eq(&self, other: &Queued) -> bool {
        self.action == other.action
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Model {
    pub space: Arc<StateSpace>,
    pub bindings: Vec<Binding>,
    pub directives: Vec<Queued>,
}

impl Model {
    /// A model with no bindings, for evaluating expressions without a file.
    pub fn bare(space: Arc<StateSpace>) -> Model {
        Model {
            space,
            bindings: Vec::new(),
            directives: Vec::new(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.iter().find(|b| b.name == name).map(|b| &b.value)
    }

    /// Every binding and directive with literal values in place of names.
    pub fn canonical(&self) -> String {
        let mut out = format!("universe {} = {{{}}}\n", self.space.name(), self.space.atoms().join(","));
        for b in &self.bindings {
            let keyword = match b.value {
                Value::Cond(_) => "condition",
                Value::Rel(_) => "relation",
                _ => "program",
            };
            out.push_str(&format!("{keyword} {} = {}\n", b.name, b.value.text()));
        }
        for d in &self.directives {
            out.push_str(&action_text(&d.action));
            out.push('\n');
        }
        out
    }
}

fn action_text(action: &Action) -> String {
    match action {
        Action::Print { query, program } => format!("print {} {}", query.name(), prog_text(program)),
        Action::Check { negated, check } => {
            let args = match check {
                Check::Feasible(p) => prog_text(p),
                Check::Refines(q, p) | Check::Equivalent(q, p) | Check::Commutes(q, p) => {
                    format!("{} {}", prog_text(q), prog_text(p))
                }
                Check::Correct(cp) => Value::Contract(cp.clone()).text(),
                Check::Invariant(i, p) => format!("{} {}", cond_text(i), prog_text(p)),
                Check::LoopInvariant(i, ls) | Check::LoopCorrect(i, ls) => {
                    format!("{} {}", cond_text(i), loop_text(ls))
                }
                Check::LoopFeasible(ls) => loop_text(ls),
                Check::Variant(ls, v) => {
                    let space = ls.init.space();
                    let rows: Vec<String> = v
                        .values()
                        .iter()
                        .enumerate()
                        .map(|(i, n)| format!("{}:{n}", space.atom(i)))
                        .collect();
                    format!("{} {{{}}}", loop_text(ls), rows.join(","))
                }
                Check::Law { id, size } => format!("{id} {size}"),
            };
            let not = if *negated { "not " } else { "" };
            format!("check {not}{} {args}", check_name(check))
        }
    }
}

fn check_name(c: &Check) -> &'static str {
    let kind = match c {
        Check::Feasible(_) => CheckKind::Feasible,
        Check::Refines(..) => CheckKind::Refines,
        Check::Equivalent(..) => CheckKind::Equivalent,
        Check::Correct(_) => CheckKind::Correct,
        Check::Commutes(..) => CheckKind::Commutes,
        Check::Invariant(..) => CheckKind::Invariant,
        Check::LoopInvariant(..) => CheckKind::LoopInvariant,
        Check::LoopCorrect(..) => CheckKind::LoopCorrect,
        Check::LoopFeasible(_) => CheckKind::LoopFeasible,
        Check::Variant(..) => CheckKind::Variant,
        Check::Law { .. } => CheckKind::Law,
    };
    kind.name()
}

/// Default space size of `check law`.
pub const DEFAULT_LAW_SIZE: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Want {
    Cond,
    Rel,
    Prog,
}

/// `Err(None)` is a failure already reported elsewhere, such as a use of a
/// binding whose definition failed.
type EResult<T> = Result<T, Option<Diagnostic>>;

struct Elaborator {
    space: Option<Arc<StateSpace>>,
    universe_pos: Option<Pos>,
    scope: HashMap<String, (Value, Pos)>,
    poisoned: HashMap<String, Pos>,
    bindings: Vec<Binding>,
    directives: Vec<Queued>,
    diags: Vec<Diagnostic>,
}

fn err<T>(pos: Pos, msg: impl Into<String>) -> EResult<T> {
    Err(Some(Diagnostic::error(pos, msg)))
}

fn model_err(pos: Pos, e: ModelError) -> Option<Diagnostic> {
    Some(Diagnostic::error(pos, e.to_string()))
}

pub fn elaborate(ast: &Ast) -> Result<Model, Vec<Diagnostic>> {
    let mut el = Elaborator {
        space: None,
        universe_pos: None,
        scope: HashMap::new(),
        poisoned: HashMap::new(),
        bindings: Vec::new(),
        directives: Vec::new(),
        diags: Vec::new(),
    };
    for item in &ast.items {
        el.item(item);
    }
    match (&el.space, el.diags.is_empty()) {
        (Some(space), true) => Ok(Model {
            space: space.clone(),
            bindings: el.bindings,
            directives: el.directives,
        }),
        (None, true) => Err(vec![Diagnostic::error(Pos::new(1, 1), "missing universe")
            .with_note("declare one with `universe S = {a, b, ...}`")]),
        _ => Err(el.diags),
    }
}

/// Elaborates one expression in the scope of `model`.
pub fn elaborate_expr(model: &Model, e: &Expr) -> Result<Value, Diagnostic> {
    let el = Elaborator {
        space: Some(model.space.clone()),
        universe_pos: None,
        scope: model
            .bindings
            .iter()
            .map(|b| (b.name.clone(), (b.value.clone(), b.pos)))
            .collect(),
        poisoned: HashMap::new(),
        bindings: Vec::new(),
        directives: Vec::new(),
        diags: Vec::new(),
    };
    el.expr(e, None).map_err(|d| d.expect("no poisoned names in a model"))
}

impl Elaborator {
    fn item(&mut self, item: &Item) {
        let pos = item.pos;
        if let ItemKind::Universe { name, atoms } = &item.kind {
            if let Some(first) = self.universe_pos {
                self.diags.push(
                    Diagnostic::error(pos, format!("second universe `{name}`"))
                        .with_note(format!("a file has exactly one universe, declared at {first}")),
                );
                return;
            }
            self.universe_pos = Some(pos);
            match StateSpace::new(name.clone(), atoms.iter().cloned()) {
                Ok(space) => self.space = Some(space),
                Err(e) => self.diags.push(Diagnostic::error(pos, e.to_string())),
            }
            return;
        }
        if self.space.is_none() {
            if self.universe_pos.is_none() {
                self.diags.push(
                    Diagnostic::error(pos, "missing universe")
                        .with_note("the universe must be declared before any binding or directive"),
                );
                // report once, and fake a declaration so later items stay quiet
                self.universe_pos = Some(pos);
            }
            return;
        }
        let result = match &item.kind {
            ItemKind::Universe { .. } => unreachable!(),
            ItemKind::Bind { kind, name, value } => self.bind(pos, *kind, name, value),
            ItemKind::Directive(d) => self.directive(pos, d),
        };
        if let Err(Some(d)) = result {
            self.diags.push(d);
        }
    }

    fn space(&self) -> &Arc<StateSpace> {
        self.space.as_ref().expect("universe checked before use")
    }

    fn bind(&mut self, pos: Pos, kind: BindKind, name: &str, e: &Expr) -> EResult<()> {
        if let Some((_, at)) = self.scope.get(name) {
            return err(pos, format!("duplicate binding `{name}`; already bound at {at}"));
        }
        if let Some(at) = self.poisoned.get(name) {
            return err(pos, format!("duplicate binding `{name}`; already bound at {at}"));
        }
        let want = match kind {
            BindKind::Condition => Want::Cond,
            BindKind::Relation => Want::Rel,
            BindKind::Program => Want::Prog,
        };
        let value = match self.expr(e, Some(want)) {
            Ok(v) => v,
            Err(d) => {
                self.poisoned.insert(name.to_string(), pos);
                return Err(d);
            }
        };
        let fits = matches!(
            (kind, &value),
            (BindKind::Condition, Value::Cond(_))
                | (BindKind::Relation, Value::Rel(_))
                | (BindKind::Program, Value::Prog(_) | Value::Loop(..) | Value::Contract(_))
        );
        if !fits {
            self.poisoned.insert(name.to_string(), pos);
            return err(
                e.pos,
                format!("`{} {name}` is bound to a {}", kind.keyword(), value.kind()),
            );
        }
        self.scope.insert(name.to_string(), (value.clone(), pos));
        self.bindings.push(Binding {
            name: name.to_string(),
            value,
            pos,
        });
        Ok(())
    }

    fn directive(&mut self, pos: Pos, d: &Directive) -> EResult<()> {
        let action = match d {
            Directive::Print { query, arg } => Action::Print {
                query: *query,
                program: self.program(arg)?,
            },
            Directive::Check {
                negated,
                kind,
                args,
                table,
                law,
            } => {
                let check = match kind {
                    CheckKind::Feasible => Check::Feasible(self.program(&args[0])?),
                    CheckKind::Refines => Check::Refines(self.program(&args[0])?, self.program(&args[1])?),
                    CheckKind::Equivalent => Check::Equivalent(self.program(&args[0])?, self.program(&args[1])?),
                    CheckKind::Commutes => Check::Commutes(self.program(&args[0])?, self.program(&args[1])?),
                    CheckKind::Correct => match self.expr(&args[0], None)? {
                        Value::Contract(cp) => Check::Correct(cp),
                        other => return err(args[0].pos, format!("expected a contract, found a {}", other.kind())),
                    },
                    CheckKind::Invariant => Check::Invariant(self.condition(&args[0])?, self.program(&args[1])?),
                    CheckKind::LoopInvariant => {
                        Check::LoopInvariant(self.condition(&args[0])?, self.loop_spec(&args[1])?)
                    }
                    CheckKind::LoopCorrect => Check::LoopCorrect(self.condition(&args[0])?, self.loop_spec(&args[1])?),
                    CheckKind::LoopFeasible => Check::LoopFeasible(self.loop_spec(&args[0])?),
                    CheckKind::Variant => {
                        let ls = self.loop_spec(&args[0])?;
                        let entries = table.iter().map(|(a, n)| (a.as_str(), *n));
                        let v = Variant::from_table(self.space(), entries).map_err(|e| model_err(pos, e))?;
                        Check::Variant(ls, v)
                    }
                    CheckKind::Law => {
                        let (id, size) = law.as_ref().expect("parser fills the law id");
                        if let Err(e) = tp_laws::find(id) {
                            return Err(Some(
                                Diagnostic::error(pos, format!("unknown law `{id}`"))
                                    .with_note(e.to_string()),
                            ));
                        }
                        let size = size.map_or(DEFAULT_LAW_SIZE, |n| n as usize);
                        Check::Law { id: id.clone(), size }
                    }
                };
                Action::Check {
                    negated: *negated,
                    check,
                }
            }
        };
        self.directives.push(Queued {
            pos,
            text: print_directive(d),
            action,
        });
        Ok(())
    }

    fn program(&self, e: &Expr) -> EResult<Program> {
        let v = self.expr(e, Some(Want::Prog))?;
        match v.as_program() {
            Some(p) => Ok(p.clone()),
            None => err(e.pos, format!("expected a program, found a {}", v.kind())),
        }
    }

    fn condition(&self, e: &Expr) -> EResult<Condition> {
        match self.expr(e, Some(Want::Cond))? {
            Value::Cond(c) => Ok(c),
            other => err(e.pos, format!("expected a condition, found a {}", other.kind())),
        }
    }

    fn relation(&self, e: &Expr) -> EResult<Relation> {
        match self.expr(e, Some(Want::Rel))? {
            Value::Rel(r) => Ok(r),
            other => err(e.pos, format!("expected a relation, found a {}", other.kind())),
        }
    }

    fn loop_spec(&self, e: &Expr) -> EResult<LoopSpec> {
        match self.expr(e, Some(Want::Prog))? {
            Value::Loop(ls, _) => Ok(ls),
            other => err(
                e.pos,
                format!("expected a `from ... until ... loop ... end` loop, found a {}", other.kind()),
            ),
        }
    }

    fn unknown_atom(&self, pos: Pos, atom: &str) -> Option<Diagnostic> {
        let space = self.space();
        Some(Diagnostic::error(
            pos,
            format!("atom `{atom}` is not in universe {} = {{{}}}", space.name(), space.atoms().join(",")),
        ))
    }

    fn expr(&self, e: &Expr, want: Option<Want>) -> EResult<Value> {
        let space = self.space().clone();
        let pos = e.pos;
        let me = |r: Result<Program, ModelError>| r.map(Value::Prog).map_err(|x| model_err(pos, x));
        Ok(match &e.kind {
            ExprKind::Name(n) => match self.scope.get(n) {
                Some((v, _)) => v.clone(),
                None if self.poisoned.contains_key(n) => return Err(None),
                None => return err(pos, format!("unknown name `{n}`")),
            },
            ExprKind::Empty => match want {
                Some(Want::Rel) => Value::Rel(Relation::empty(&space)),
                Some(Want::Prog) => return err(pos, "`{}` is a set, not a program"),
                _ => Value::Cond(Condition::empty(&space)),
            },
            ExprKind::Atoms(atoms) => {
                for a in atoms {
                    if !space.contains_atom(a) {
                        return Err(self.unknown_atom(pos, a));
                    }
                }
                Value::Cond(Condition::from_atoms(&space, atoms).expect("atoms checked"))
            }
            ExprKind::Pairs(pairs) => {
                for (x, y) in pairs {
                    for a in [x, y] {
                        if !space.contains_atom(a) {
                            return Err(self.unknown_atom(pos, a));
                        }
                    }
                }
                Value::Rel(Relation::from_pairs(&space, pairs.iter().map(|(x, y)| (x, y))).expect("atoms checked"))
            }
            ExprKind::Literal(post, pre) => me(Program::new(self.relation(post)?, self.condition(pre)?))?,
            ExprKind::Skip => Value::Prog(Program::skip(&space)),
            ExprKind::Fail => Value::Prog(Program::fail(&space)),
            ExprKind::Havoc => Value::Prog(Program::havoc(&space)),
            ExprKind::Not(inner) => Value::Cond(self.condition(inner)?.not()),
            ExprKind::Binary(op, l, r) => return self.binary(*op, l, r, want, pos),
            ExprKind::Power(inner, n) => Value::Prog(fixed_repetition(&self.program(inner)?, *n as usize)),
            ExprKind::Interleave(steps, q) => {
                let steps = steps.iter().map(|s| self.program(s)).collect::<EResult<Vec<_>>>()?;
                me(nonatomic_concurrency(&steps, &self.program(q)?))?
            }
            ExprKind::Star(body) => Value::Prog(arbitrary_repetition(&self.program(body)?)),
            ExprKind::From { init, exit, body } => {
                let ls = LoopSpec::new(self.program(init)?, self.condition(exit)?, self.program(body)?)
                    .map_err(|x| model_err(pos, x))?;
                let p = while_loop(&ls);
                Value::Loop(ls, p)
            }
            ExprKind::IfThen { cond, then, otherwise } => {
                let c = self.condition(cond)?;
                let t = self.program(then)?;
                match otherwise {
                    Some(o) => me(Program::if_then_else(&c, &t, &self.program(o)?))?,
                    None => me(Program::if_then(&c, &t))?,
                }
            }
            ExprKind::Guarded(branches) => {
                let bs = branches
                    .iter()
                    .map(|(g, b)| Ok((self.condition(g)?, self.program(b)?)))
                    .collect::<EResult<Vec<_>>>()?;
                me(guarded_conditional(&bs))?
            }
            ExprKind::Contract { pre, body, post } => Value::Contract(
                ContractedProgram::new(self.condition(pre)?, self.program(body)?, self.relation(post)?)
                    .map_err(|x| model_err(pos, x))?,
            ),
        })
    }

    fn binary(&self, op: BinOp, l: &Expr, r: &Expr, want: Option<Want>, pos: Pos) -> EResult<Value> {
        let hint = |v: &Value| match v {
            Value::Cond(_) => Some(Want::Cond),
            Value::Rel(_) => Some(Want::Rel),
            _ => Some(Want::Prog),
        };
        // an empty literal takes its kind from the other operand
        let (lv, rv) = match op {
            BinOp::Guard => (self.expr(l, Some(Want::Cond))?, self.expr(r, Some(Want::Prog))?),
            BinOp::Minus => {
                let lv = self.expr(l, want)?;
                let rw = if matches!(lv, Value::Rel(_)) { Want::Rel } else { Want::Cond };
                let rv = self.expr(r, Some(rw))?;
                (lv, rv)
            }
            _ if l.kind == ExprKind::Empty && r.kind != ExprKind::Empty => {
                let rv = self.expr(r, want)?;
                (self.expr(l, hint(&rv))?, rv)
            }
            _ => {
                let lv = self.expr(l, want)?;
                let rv = self.expr(r, hint(&lv))?;
                (lv, rv)
            }
        };
        let shared = "operands share the universe";
        let v = match (op, &lv, &rv) {
            (BinOp::Union, Value::Cond(a), Value::Cond(b)) => Value::Cond(a.or(b).expect(shared)),
            (BinOp::Union, Value::Rel(a), Value::Rel(b)) => Value::Rel(a.union(b).expect(shared)),
            (BinOp::Inter, Value::Cond(a), Value::Cond(b)) => Value::Cond(a.and(b).expect(shared)),
            (BinOp::Inter, Value::Rel(a), Value::Rel(b)) => Value::Rel(a.inter(b).expect(shared)),
            (BinOp::Seq, Value::Rel(a), Value::Rel(b)) => Value::Rel(a.compose(b).expect(shared)),
            (BinOp::Minus, Value::Cond(a), Value::Cond(b)) => Value::Cond(a.diff(b).expect(shared)),
            (BinOp::Minus, Value::Rel(a), Value::Rel(b)) => Value::Rel(a.diff(b).expect(shared)),
            (BinOp::Guard, Value::Cond(c), p) if p.as_program().is_some() => {
                Value::Prog(p.as_program().unwrap().restrict(c).expect(shared))
            }
            (BinOp::Minus, p, Value::Cond(c)) if p.as_program().is_some() => {
                Value::Prog(p.as_program().unwrap().corestrict(c).expect(shared))
            }
            (_, a, b) => match (a.as_program(), b.as_program()) {
                (Some(p), Some(q)) if op != BinOp::Guard && op != BinOp::Minus => Value::Prog(
                    match op {
                        BinOp::Union => p.choice(q),
                        BinOp::Inter => p.internal_choice(q),
                        BinOp::Par => p.concurrent(q),
                        _ => p.seq(q),
                    }
                    .expect(shared),
                ),
                _ => {
                    return err(
                        pos,
                        format!(
                            "`{}` {}; found a {} and a {}",
                            op.symbol(),
                            expects(op),
                            lv.kind(),
                            rv.kind()
                        ),
                    )
                }
            },
        };
        Ok(v)
    }
}

fn expects(op: BinOp) -> &'static str {
    match op {
        BinOp::Union | BinOp::Inter => "expects two programs, two conditions or two relations",
        BinOp::Par => "expects two programs",
        BinOp::Seq => "expects two programs or two relations",
        BinOp::Minus => "expects a program and a condition, two conditions or two relations",
        BinOp::Guard => "expects a condition and a program",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn load(src: &str) -> Result<Model, Vec<Diagnostic>> {
        elaborate(&parse(src).expect("parses"))
    }

    #[test]
    fn unknown_atom_names_the_universe() {
        let errs = load("universe S = {a,b}\ncondition c = {a, x}").unwrap_err();
        assert_eq!(errs.len(), 1);
        assert!(errs[0].message.contains("`x`") && errs[0].message.contains("S = {a,b}"));
    }

    #[test]
    fn refinement_check_is_queued() {
        let m = load("universe S = {a,b}\nprogram p = havoc\nprogram q = skip\ncheck refines q p").unwrap();
        assert_eq!(m.directives.len(), 1);
        assert!(matches!(m.directives[0].action, Action::Check { check: Check::Refines(..), .. }));
    }

    #[test]
    fn rebinding_is_an_error() {
        let errs = load("universe S = {a}\nprogram p = skip\nprogram p = fail").unwrap_err();
        assert!(errs[0].message.contains("duplicate binding `p`"));
        assert_eq!(errs[0].pos, Pos::new(3, 1));
    }

    #[test]
    fn universe_rules() {
        let errs = load("program p = skip").unwrap_err();
        assert!(errs[0].message.contains("missing universe"));
        let errs = load("").unwrap_err();
        assert!(errs[0].message.contains("missing universe"));
        let errs = load("universe S = {a}\nuniverse T = {b}").unwrap_err();
        assert!(errs[0].message.contains("second universe"));
        let errs = load("universe S = {a, a}").unwrap_err();
        assert!(errs[0].message.contains("twice"));
    }

    #[test]
    fn operators_are_typed() {
        let errs = load("universe S = {a}\ncondition c = {a}\nprogram p = c ; skip").unwrap_err();
        assert!(errs[0].message.contains("`;`"), "{errs:?}");
        let errs = load("universe S = {a}\nprogram p = skip : {a}").unwrap_err();
        assert!(errs[0].message.contains("`:` expects a condition and a program"), "{errs:?}");
        let m = load("universe S = {a,b}\nrelation r = {(a,b)} ; {(b,a)} | {}\ncondition c = {} | {b}").unwrap();
        assert_eq!(rel_text(m.get("r").map(|v| match v { Value::Rel(r) => r, _ => panic!() }).unwrap()), "{(a,a)}");
    }

    #[test]
    fn failed_bindings_do_not_cascade() {
        let errs = load("universe S = {a}\nprogram p = <{(a,z)},{a}>\nprogram q = p ; p\ncheck feasible q").unwrap_err();
        assert_eq!(errs.len(), 1);
    }

    #[test]
    fn loops_keep_their_parts() {
        let m = load(
            "universe S = {s0,s1,s2}\n\
             program l = from <{(s0,s0)},{s0}> until {s2} loop <{(s0,s1),(s1,s2)},{s0,s1}> end\n\
             check loop_feasible l\ncheck variant l {s0:2, s1:1, s2:0}",
        )
        .unwrap();
        assert!(matches!(m.get("l"), Some(Value::Loop(..))));
        let errs = load("universe S = {a}\ncheck loop_feasible skip").unwrap_err();
        assert!(errs[0].message.contains("loop"));
        let errs = load(
            "universe S = {a,b}\nprogram l = from skip until {a} loop skip end\ncheck variant l {a:1}",
        )
        .unwrap_err();
        assert!(errs[0].message.contains("not total"));
    }

    #[test]
    fn unknown_law_is_an_error() {
        let errs = load("universe S = {a}\ncheck law P99").unwrap_err();
        assert!(errs[0].message.contains("P99"));
        assert!(load("universe S = {a}\ncheck law P13\ncheck law P32.associative 3").is_ok());
    }

    #[test]
    fn canonical_model_round_trips() {
        let m = load(
            "universe S = {s0,s1,s2}\n\
             condition c = {s2, s0}\n\
             program l = from skip until c loop <{(s0,s1),(s1,s2)},{s0,s1}> end\n\
             program k = require {s0} do l ensure {(s0,s2)} end\n\
             check not loop_feasible l\nprint post l ; l\ncheck variant l {s0:2,s1:1,s2:0}\ncheck correct k",
        )
        .unwrap();
        let again = load(&m.canonical()).unwrap();
        assert_eq!(again, m);
        assert_eq!(again.canonical(), m.canonical());
    }
}
