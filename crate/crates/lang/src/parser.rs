//! Pratt parser for TP files.
//!
//! Program operators, loosest first: `|`, `&`, `||`, `;`, `\`, `:`, then
//! prefix `not` and postfix `^ n`. All binary operators associate to the
//! left except `:`, which associates to the right so that `C : D : p` is
//! `C : (D : p)`.

use crate::ast::*;
use crate::diag::{Diagnostic, Pos};
use crate::lexer::{tokenize, Kw, Tok, Token};

type PResult<T> = Result<T, Diagnostic>;

struct Parser {
    toks: Vec<Token>,
    at: usize,
    /// Inside an `if` guard, `:` ends the guard instead of restricting.
    no_colon: bool,
}

/// Parses a whole file. Errors are collected per item: after a syntax error
/// the parser skips to the next item keyword and carries on.
pub fn parse(src: &str) -> Result<Ast, Vec<Diagnostic>> {
    let (toks, mut diags) = tokenize(src);
    let mut p = Parser {
        toks,
        at: 0,
        no_colon: false,
    };
    let mut items = Vec::new();
    while p.peek() != &Tok::Eof {
        match p.item() {
            Ok(item) => items.push(item),
            Err(d) => {
                diags.push(d);
                p.recover();
            }
        }
    }
    if diags.is_empty() {
        Ok(Ast { items })
    } else {
        diags.sort_by_key(|d| d.pos);
        Err(diags)
    }
}

/// Parses a single expression, as given on the command line.
pub fn parse_expr(src: &str) -> Result<Expr, Vec<Diagnostic>> {
    let (toks, diags) = tokenize(src);
    if !diags.is_empty() {
        return Err(diags);
    }
    let mut p = Parser {
        toks,
        at: 0,
        no_colon: false,
    };
    let e = p.expr(0).map_err(|d| vec![d])?;
    if p.peek() != &Tok::Eof {
        return Err(vec![p.unexpected(&["end of expression"])]);
    }
    Ok(e)
}

fn binop(tok: &Tok) -> Option<BinOp> {
    Some(match tok {
        Tok::Bar => BinOp::Union,
        Tok::Amp => BinOp::Inter,
        Tok::BarBar => BinOp::Par,
        Tok::Semi => BinOp::Seq,
        Tok::Backslash => BinOp::Minus,
        Tok::Colon => BinOp::Guard,
        _ => return None,
    })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &[&str]) -> Diagnostic {
        Diagnostic::error(self.pos(), format!("syntax error: unexpected {}", self.peek()))
            .with_note(format!("expected {}", expected.join(" or ")))
    }

    fn expect(&mut self, tok: Tok) -> PResult<Pos> {
        if self.peek() == &tok {
            Ok(self.bump().pos)
        } else {
            Err(self.unexpected(&[&tok.to_string()]))
        }
    }

    fn expect_kw(&mut self, kw: Kw) -> PResult<()> {
        self.expect(Tok::Kw(kw)).map(|_| ())
    }

    fn ident(&mut self, what: &str) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(name)
            }
            _ => Err(self.unexpected(&[what])),
        }
    }

    /// An atom is an identifier or a natural number.
    fn atom(&mut self) -> PResult<String> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(name)
            }
            Tok::Nat(n) => {
                self.bump();
                Ok(n.to_string())
            }
            _ => Err(self.unexpected(&["atom"])),
        }
    }

    fn recover(&mut self) {
        // always make progress past the offending token
        self.bump();
        loop {
            match self.peek() {
                Tok::Eof => return,
                Tok::Kw(k) if k.starts_item() => return,
                _ => {
                    self.bump();
                }
            }
        }
    }

    fn item(&mut self) -> PResult<Item> {
        let pos = self.pos();
        let kind = match self.peek() {
            Tok::Kw(Kw::Universe) => {
                self.bump();
                let name = self.ident("universe name")?;
                self.expect(Tok::Eq)?;
                self.expect(Tok::LBrace)?;
                let atoms = self.comma_list(Tok::RBrace, Parser::atom)?;
                ItemKind::Universe { name, atoms }
            }
            Tok::Kw(k @ (Kw::Condition | Kw::Relation | Kw::Program)) => {
                let kind = match k {
                    Kw::Condition => BindKind::Condition,
                    Kw::Relation => BindKind::Relation,
                    _ => BindKind::Program,
                };
                self.bump();
                let name = self.ident("name")?;
                self.expect(Tok::Eq)?;
                let value = self.expr(0)?;
                ItemKind::Bind { kind, name, value }
            }
            Tok::Kw(Kw::Check) => {
                self.bump();
                ItemKind::Directive(self.check()?)
            }
            Tok::Kw(Kw::Print) => {
                self.bump();
                let names: Vec<&str> = Query::ALL.iter().map(|q| q.name()).collect();
                let word = self.ident(&names.join(", "))?;
                let query = Query::lookup(&word).ok_or_else(|| {
                    Diagnostic::error(pos, format!("unknown query `{word}`"))
                        .with_note(format!("queries are {}", names.join(", ")))
                })?;
                let arg = self.expr(0)?;
                ItemKind::Directive(Directive::Print { query, arg })
            }
            _ => {
                return Err(self.unexpected(&["universe", "condition", "relation", "program", "check", "print"]))
            }
        };
        Ok(Item { kind, pos })
    }

    fn check(&mut self) -> PResult<Directive> {
        let negated = self.eat(&Tok::Kw(Kw::Not));
        let names: Vec<&str> = CheckKind::ALL.iter().map(|k| k.name()).collect();
        let at = self.pos();
        let word = self.ident("check kind")?;
        let kind = CheckKind::lookup(&word).ok_or_else(|| {
            Diagnostic::error(at, format!("unknown check `{word}`"))
                .with_note(format!("checks are {}", names.join(", ")))
        })?;
        let mut args = Vec::new();
        for _ in 0..kind.arity() {
            args.push(self.expr(0)?);
        }
        let mut table = Vec::new();
        let mut law = None;
        match kind {
            CheckKind::Variant => {
                self.expect(Tok::LBrace)?;
                table = self.comma_list(Tok::RBrace, |p| {
                    let atom = p.atom()?;
                    p.expect(Tok::Colon)?;
                    match p.bump().tok {
                        Tok::Nat(n) => Ok((atom, n)),
                        _ => {
                            p.at -= 1;
                            Err(p.unexpected(&["natural number"]))
                        }
                    }
                })?;
            }
            CheckKind::Law => {
                let id = self.ident("law id")?;
                let size = match self.peek() {
                    Tok::Nat(n) => {
                        let n = *n;
                        self.bump();
                        Some(n)
                    }
                    _ => None,
                };
                law = Some((id, size));
            }
            _ => {}
        }
        Ok(Directive::Check {
            negated,
            kind,
            args,
            table,
            law,
        })
    }

    /// Elements separated by commas up to `close`, which is consumed.
    fn comma_list<T>(&mut self, close: Tok, mut elem: impl FnMut(&mut Parser) -> PResult<T>) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.eat(&close) {
            return Ok(out);
        }
        loop {
            out.push(elem(self)?);
            if self.eat(&close) {
                return Ok(out);
            }
            if !self.eat(&Tok::Comma) {
                return Err(self.unexpected(&["`,`", &close.to_string()]));
            }
        }
    }

    /// Parses with `no_colon` cleared, as inside brackets.
    fn nested(&mut self) -> PResult<Expr> {
        let saved = std::mem::replace(&mut self.no_colon, false);
        let e = self.expr(0);
        self.no_colon = saved;
        e
    }

    fn guard(&mut self) -> PResult<Expr> {
        let saved = std::mem::replace(&mut self.no_colon, true);
        let e = self.expr(0);
        self.no_colon = saved;
        e
    }

    fn expr(&mut self, min: u8) -> PResult<Expr> {
        let mut lhs = self.prefix()?;
        loop {
            let pos = self.pos();
            if self.peek() == &Tok::Caret {
                if POWER_CARET < min {
                    break;
                }
                self.bump();
                let n = match self.peek() {
                    Tok::Nat(n) => *n,
                    _ => return Err(self.unexpected(&["natural number"])),
                };
                self.bump();
                lhs = Expr {
                    kind: ExprKind::Power(Box::new(lhs), n),
                    pos,
                };
                continue;
            }
            let Some(op) = binop(self.peek()) else { break };
            if op == BinOp::Guard && self.no_colon {
                break;
            }
            let power = op.power();
            if power < min {
                break;
            }
            self.bump();
            let rhs = self.expr(if op.right_assoc() { power } else { power + 1 })?;
            lhs = Expr {
                kind: ExprKind::Binary(op, Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn prefix(&mut self) -> PResult<Expr> {
        let pos = self.pos();
        let kind = match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                ExprKind::Name(name)
            }
            Tok::Kw(Kw::Skip) => {
                self.bump();
                ExprKind::Skip
            }
            Tok::Kw(Kw::Fail) => {
                self.bump();
                ExprKind::Fail
            }
            Tok::Kw(Kw::Havoc) => {
                self.bump();
                ExprKind::Havoc
            }
            Tok::Kw(Kw::Not) => {
                self.bump();
                ExprKind::Not(Box::new(self.expr(POWER_NOT)?))
            }
            Tok::LBrace => {
                self.bump();
                self.set_literal()?
            }
            Tok::Lt => {
                self.bump();
                let post = self.nested()?;
                self.expect(Tok::Comma)?;
                let pre = self.nested()?;
                self.expect(Tok::Gt)?;
                ExprKind::Literal(Box::new(post), Box::new(pre))
            }
            Tok::LParen => {
                self.bump();
                let first = self.nested()?;
                if self.eat(&Tok::RParen) {
                    return Ok(first);
                }
                let mut steps = vec![first];
                while self.eat(&Tok::Comma) {
                    steps.push(self.nested()?);
                }
                self.expect(Tok::RParen)?;
                self.expect(Tok::BarBar)?;
                let q = self.expr(BinOp::Par.power() + 1)?;
                ExprKind::Interleave(steps, Box::new(q))
            }
            Tok::Kw(Kw::Loop) => {
                self.bump();
                let body = self.nested()?;
                self.expect_kw(Kw::End)?;
                ExprKind::Star(Box::new(body))
            }
            Tok::Kw(Kw::From) => {
                self.bump();
                let init = self.nested()?;
                self.expect_kw(Kw::Until)?;
                let exit = self.nested()?;
                self.expect_kw(Kw::Loop)?;
                let body = self.nested()?;
                self.expect_kw(Kw::End)?;
                ExprKind::From {
                    init: Box::new(init),
                    exit: Box::new(exit),
                    body: Box::new(body),
                }
            }
            Tok::Kw(Kw::If) => {
                self.bump();
                self.conditional()?
            }
            Tok::Kw(Kw::Require) => {
                self.bump();
                let pre = self.nested()?;
                self.expect_kw(Kw::Do)?;
                let body = self.nested()?;
                self.expect_kw(Kw::Ensure)?;
                let post = self.nested()?;
                self.expect_kw(Kw::End)?;
                ExprKind::Contract {
                    pre: Box::new(pre),
                    body: Box::new(body),
                    post: Box::new(post),
                }
            }
            _ => return Err(self.unexpected(&["expression"])),
        };
        Ok(Expr { kind, pos })
    }

    /// After `{`: `}`, atoms, or pairs.
    fn set_literal(&mut self) -> PResult<ExprKind> {
        if self.eat(&Tok::RBrace) {
            return Ok(ExprKind::Empty);
        }
        if self.peek() == &Tok::LParen {
            let pairs = self.comma_list(Tok::RBrace, |p| {
                p.expect(Tok::LParen)?;
                let x = p.atom()?;
                p.expect(Tok::Comma)?;
                let y = p.atom()?;
                p.expect(Tok::RParen)?;
                Ok((x, y))
            })?;
            return Ok(ExprKind::Pairs(pairs));
        }
        Ok(ExprKind::Atoms(self.comma_list(Tok::RBrace, Parser::atom)?))
    }

    /// After `if`: either `C then p [else q] end` or `C1 : p1 [] ... end`.
    fn conditional(&mut self) -> PResult<ExprKind> {
        let first = self.guard()?;
        if self.eat(&Tok::Kw(Kw::Then)) {
            let then = self.nested()?;
            let otherwise = if self.eat(&Tok::Kw(Kw::Else)) {
                Some(Box::new(self.nested()?))
            } else {
                None
            };
            self.expect_kw(Kw::End)?;
            return Ok(ExprKind::IfThen {
                cond: Box::new(first),
                then: Box::new(then),
                otherwise,
            });
        }
        if self.peek() != &Tok::Colon {
            return Err(self.unexpected(&["`then`", "`:`"]));
        }
        let mut branches = Vec::new();
        let mut guard = first;
        loop {
            self.expect(Tok::Colon)?;
            let body = self.nested()?;
            branches.push((guard, body));
            if self.eat(&Tok::Kw(Kw::End)) {
                return Ok(ExprKind::Guarded(branches));
            }
            if !self.eat(&Tok::Box) {
                return Err(self.unexpected(&["`[]`", "`end`"]));
            }
            guard = self.guard()?;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(src: &str) -> Expr {
        parse_expr(src).unwrap()
    }

    fn name(s: &str) -> Expr {
        Expr {
            kind: ExprKind::Name(s.into()),
            pos: Pos::default(),
        }
    }

    fn bin(op: BinOp, l: Expr, r: Expr) -> Expr {
        Expr {
            kind: ExprKind::Binary(op, Box::new(l), Box::new(r)),
            pos: Pos::default(),
        }
    }

    #[test]
    fn precedence_and_associativity() {
        use BinOp::*;
        assert_eq!(e("p | q & r"), bin(Union, name("p"), bin(Inter, name("q"), name("r"))));
        assert_eq!(e("p ; q ; r"), bin(Seq, bin(Seq, name("p"), name("q")), name("r")));
        assert_eq!(e("C : p ; q"), bin(Seq, bin(Guard, name("C"), name("p")), name("q")));
        assert_eq!(e("C : D : p"), bin(Guard, name("C"), bin(Guard, name("D"), name("p"))));
        assert_eq!(e("p \\ C ; q"), bin(Seq, bin(Minus, name("p"), name("C")), name("q")));
        assert_eq!(e("p || q | r"), bin(Union, bin(Par, name("p"), name("q")), name("r")));
        let pow = e("p ; q ^ 2");
        let ExprKind::Binary(Seq, _, rhs) = pow.kind else { panic!() };
        assert!(matches!(rhs.kind, ExprKind::Power(_, 2)));
    }

    #[test]
    fn conditionals() {
        assert!(matches!(e("if C then p else q end").kind, ExprKind::IfThen { otherwise: Some(_), .. }));
        let ExprKind::Guarded(bs) = e("if C | D : p ; q [] not C : r end").kind else { panic!() };
        assert_eq!(bs.len(), 2);
        assert_eq!(bs[0].0, bin(BinOp::Union, name("C"), name("D")));
        assert_eq!(bs[0].1, bin(BinOp::Seq, name("p"), name("q")));
    }

    #[test]
    fn interleaving_and_literals() {
        assert!(matches!(e("(p, q) || r").kind, ExprKind::Interleave(ref s, _) if s.len() == 2));
        assert!(matches!(e("<{(a,b)},{a}>").kind, ExprKind::Literal(..)));
        assert!(matches!(e("{}").kind, ExprKind::Empty));
    }

    #[test]
    fn counting_file_has_four_items() {
        let src = "universe S = {s0,s1,s2}\n\
                   program init = <{(s0,s0)},{s0}>\n\
                   program l = from init until {s2} loop <{(s0,s1),(s1,s2)},{s0,s1}> end\n\
                   check feasible l\n";
        assert_eq!(parse(src).unwrap().items.len(), 4);
    }

    #[test]
    fn correctness_directive() {
        let ast = parse("check correct require {a} do body ensure {(a,b)} end").unwrap();
        let ItemKind::Directive(Directive::Check { kind, args, .. }) = &ast.items[0].kind else { panic!() };
        assert_eq!(*kind, CheckKind::Correct);
        assert!(matches!(args[0].kind, ExprKind::Contract { .. }));
    }

    #[test]
    fn recovery_at_next_item() {
        let errs = parse("program p = ;\nprogram q = skip\nprogram r = |\ncheck feasible q").unwrap_err();
        assert_eq!(errs.len(), 2);
        assert_eq!(errs[0].pos, Pos::new(1, 13));
        assert_eq!(errs[1].pos, Pos::new(3, 13));
        assert!(errs[0].note.as_deref().unwrap().contains("expression"));
    }
}
