//! Canonical text. Atoms and pairs inside literals are sorted and
//! deduplicated; the universe keeps its declaration order because that
//! order is the space itself. Parentheses appear only where precedence
//! needs them.

use tp_core::{Condition, Program, Relation};

use crate::ast::*;

pub fn cond_text(c: &Condition) -> String {
    atoms_text(c.atom_names().map(str::to_string).collect())
}

pub fn rel_text(r: &Relation) -> String {
    pairs_text(r.atom_pairs().map(|(x, y)| (x.to_string(), y.to_string())).collect())
}

pub fn prog_text(p: &Program) -> String {
    format!("<{},{}>", rel_text(p.post()), cond_text(p.pre()))
}

fn atoms_text(mut atoms: Vec<String>) -> String {
    atoms.sort();
    atoms.dedup();
    format!("{{{}}}", atoms.join(","))
}

fn pairs_text(mut pairs: Vec<(String, String)>) -> String {
    pairs.sort();
    pairs.dedup();
    let inner: Vec<String> = pairs.iter().map(|(x, y)| format!("({x},{y})")).collect();
    format!("{{{}}}", inner.join(","))
}

pub fn print_ast(ast: &Ast) -> String {
    let mut out = String::new();
    for item in &ast.items {
        out.push_str(&print_item(&item.kind));
        out.push('\n');
    }
    out
}

pub fn print_item(item: &ItemKind) -> String {
    match item {
        ItemKind::Universe { name, atoms } => format!("universe {name} = {{{}}}", atoms.join(",")),
        ItemKind::Bind { kind, name, value } => format!("{} {name} = {}", kind.keyword(), print_expr(value)),
        ItemKind::Directive(d) => print_directive(d),
    }
}

pub fn print_directive(d: &Directive) -> String {
    match d {
        Directive::Check {
            negated,
            kind,
            args,
            table,
            law,
        } => {
            let mut parts = vec!["check".to_string()];
            if *negated {
                parts.push("not".into());
            }
            parts.push(kind.name().into());
            // juxtaposed arguments must not run into each other
            parts.extend(args.iter().map(|a| expr_at(a, u8::MAX)));
            if *kind == CheckKind::Variant {
                let mut rows = table.clone();
                rows.sort();
                let rows: Vec<String> = rows.iter().map(|(a, n)| format!("{a}:{n}")).collect();
                parts.push(format!("{{{}}}", rows.join(",")));
            }
            if let Some((id, size)) = law {
                parts.push(id.clone());
                if let Some(n) = size {
                    parts.push(n.to_string());
                }
            }
            parts.join(" ")
        }
        Directive::Print { query, arg } => format!("print {} {}", query.name(), print_expr(arg)),
    }
}

pub fn print_expr(e: &Expr) -> String {
    expr_at(e, 0)
}

/// Prints `e` where the context binds with power `min`.
fn expr_at(e: &Expr, min: u8) -> String {
    let (text, power) = match &e.kind {
        ExprKind::Name(n) => (n.clone(), u8::MAX),
        ExprKind::Empty => ("{}".into(), u8::MAX),
        ExprKind::Atoms(atoms) => (atoms_text(atoms.clone()), u8::MAX),
        ExprKind::Pairs(pairs) => (pairs_text(pairs.clone()), u8::MAX),
        ExprKind::Literal(post, pre) => (format!("<{},{}>", print_expr(post), print_expr(pre)), u8::MAX),
        ExprKind::Skip => ("skip".into(), u8::MAX),
        ExprKind::Fail => ("fail".into(), u8::MAX),
        ExprKind::Havoc => ("havoc".into(), u8::MAX),
        ExprKind::Not(inner) => (format!("not {}", expr_at(inner, POWER_NOT)), POWER_NOT),
        ExprKind::Binary(op, l, r) => {
            let p = op.power();
            let (lp, rp) = if op.right_assoc() { (p + 1, p) } else { (p, p + 1) };
            (format!("{} {} {}", expr_at(l, lp), op.symbol(), expr_at(r, rp)), p)
        }
        ExprKind::Power(inner, n) => (format!("{}^{n}", expr_at(inner, POWER_CARET)), POWER_CARET),
        ExprKind::Interleave(steps, q) => {
            let steps: Vec<String> = steps.iter().map(print_expr).collect();
            let p = BinOp::Par.power();
            (format!("({}) || {}", steps.join(", "), expr_at(q, p + 1)), p)
        }
        ExprKind::Star(body) => (format!("loop {} end", print_expr(body)), u8::MAX),
        ExprKind::From { init, exit, body } => (
            format!("from {} until {} loop {} end", print_expr(init), print_expr(exit), print_expr(body)),
            u8::MAX,
        ),
        ExprKind::IfThen { cond, then, otherwise } => {
            let mut s = format!("if {} then {}", guard_text(cond), print_expr(then));
            if let Some(o) = otherwise {
                s.push_str(&format!(" else {}", print_expr(o)));
            }
            s.push_str(" end");
            (s, u8::MAX)
        }
        ExprKind::Guarded(branches) => {
            let bs: Vec<String> = branches
                .iter()
                .map(|(g, b)| format!("{} : {}", guard_text(g), print_expr(b)))
                .collect();
            (format!("if {} end", bs.join(" [] ")), u8::MAX)
        }
        ExprKind::Contract { pre, body, post } => (
            format!("require {} do {} ensure {} end", print_expr(pre), print_expr(body), print_expr(post)),
            u8::MAX,
        ),
    };
    if power < min {
        format!("({text})")
    } else {
        text
    }
}

/// Guards are cut at the first bare `:`, so one inside them needs brackets.
fn guard_text(g: &Expr) -> String {
    if bare_colon(g) {
        format!("({})", print_expr(g))
    } else {
        print_expr(g)
    }
}

fn bare_colon(e: &Expr) -> bool {
    match &e.kind {
        ExprKind::Binary(BinOp::Guard, ..) => true,
        ExprKind::Binary(_, l, r) => bare_colon(l) || bare_colon(r),
        ExprKind::Not(inner) | ExprKind::Power(inner, _) => bare_colon(inner),
        ExprKind::Interleave(_, q) => bare_colon(q),
        _ => false,
    }
}
