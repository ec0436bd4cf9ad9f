//! Tokens of TP files. Comments run from `--` to the end of the line.

use std::fmt;

use crate::diag::{Diagnostic, Pos};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Nat(u64),
    Kw(Kw),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Lt,
    Gt,
    Comma,
    Semi,
    Colon,
    Bar,
    BarBar,
    Amp,
    Backslash,
    Caret,
    Box,
    Eq,
    Eof,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kw {
    Universe,
    Condition,
    Relation,
    Program,
    Check,
    Print,
    Skip,
    Fail,
    Havoc,
    Not,
    Loop,
    From,
    Until,
    If,
    Then,
    Else,
    End,
    Require,
    Do,
    Ensure,
}

impl Kw {
    const ALL: [Kw; 20] = [
        Kw::Universe,
        Kw::Condition,
        Kw::Relation,
        Kw::Program,
        Kw::Check,
        Kw::Print,
        Kw::Skip,
        Kw::Fail,
        Kw::Havoc,
        Kw::Not,
        Kw::Loop,
        Kw::From,
        Kw::Until,
        Kw::If,
        Kw::Then,
        Kw::Else,
        Kw::End,
        Kw::Require,
        Kw::Do,
        Kw::Ensure,
    ];

    pub fn text(self) -> &'static str {
        match self {
            Kw::Universe => "universe",
            Kw::Condition => "condition",
            Kw::Relation => "relation",
            Kw::Program => "program",
            Kw::Check => "check",
            Kw::Print => "print",
            Kw::Skip => "skip",
            Kw::Fail => "fail",
            Kw::Havoc => "havoc",
            Kw::Not => "not",
            Kw::Loop => "loop",
            Kw::From => "from",
            Kw::Until => "until",
            Kw::If => "if",
            Kw::Then => "then",
            Kw::Else => "else",
            Kw::End => "end",
            Kw::Require => "require",
            Kw::Do => "do",
            Kw::Ensure => "ensure",
        }
    }

    fn lookup(word: &str) -> Option<Kw> {
        Kw::ALL.into_iter().find(|k| k.text() == word)
    }

    /// Keywords that start an item; parsing resumes at them after an error.
    pub fn starts_item(self) -> bool {
        matches!(
            self,
            Kw::Universe | Kw::Condition | Kw::Relation | Kw::Program | Kw::Check | Kw::Print
        )
    }
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Ident(name) => return write!(f, "identifier `{name}`"),
            Tok::Nat(n) => return write!(f, "number `{n}`"),
            Tok::Kw(k) => return write!(f, "`{}`", k.text()),
            Tok::LBrace => "`{`",
            Tok::RBrace => "`}`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::Lt => "`<`",
            Tok::Gt => "`>`",
            Tok::Comma => "`,`",
            Tok::Semi => "`;`",
            Tok::Colon => "`:`",
            Tok::Bar => "`|`",
            Tok::BarBar => "`||`",
            Tok::Amp => "`&`",
            Tok::Backslash => "`\\`",
            Tok::Caret => "`^`",
            Tok::Box => "`[]`",
            Tok::Eq => "`=`",
            Tok::Eof => "end of input",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

fn ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

/// Identifiers may contain dots and single dashes so that law ids such as
/// `P46.guarded-choice` are one token. `--` always starts a comment.
fn ident_continue(c: char, next: Option<char>) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\'' || c == '.' || (c == '-' && next != Some('-'))
}

/// The token stream ends with `Eof`. Illegal characters are reported and
/// skipped, so one pass finds all of them.
pub fn tokenize(src: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let chars: Vec<char> = src.chars().collect();
    let mut tokens = Vec::new();
    let mut diags = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1u32, 1u32);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos::new(line, col);
        let next = chars.get(i + 1).copied();
        let mut width = 1;
        let tok = match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => None,
            '-' if next == Some('-') => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '<' => Some(Tok::Lt),
            '>' => Some(Tok::Gt),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            ':' => Some(Tok::Colon),
            '&' => Some(Tok::Amp),
            '\\' => Some(Tok::Backslash),
            '^' => Some(Tok::Caret),
            '=' => Some(Tok::Eq),
            '|' if next == Some('|') => {
                width = 2;
                Some(Tok::BarBar)
            }
            '|' => Some(Tok::Bar),
            '[' if next == Some(']') => {
                width = 2;
                Some(Tok::Box)
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i + width < chars.len() && chars[i + width].is_ascii_digit() {
                    width += 1;
                }
                let text: String = chars[start..start + width].iter().collect();
                match text.parse() {
                    Ok(n) => Some(Tok::Nat(n)),
                    Err(_) => {
                        diags.push(Diagnostic::error(pos, format!("number `{text}` is too large")));
                        None
                    }
                }
            }
            c if ident_start(c) => {
                while i + width < chars.len()
                    && ident_continue(chars[i + width], chars.get(i + width + 1).copied())
                {
                    width += 1;
                }
                let word: String = chars[i..i + width].iter().collect();
                Some(match Kw::lookup(&word) {
                    Some(k) => Tok::Kw(k),
                    None => Tok::Ident(word),
                })
            }
            other => {
                diags.push(Diagnostic::error(pos, format!("illegal character `{other}`")));
                None
            }
        };
        if let Some(tok) = tok {
            tokens.push(Token { tok, pos });
        }
        i += width;
        col += width as u32;
    }
    tokens.push(Token {
        tok: Tok::Eof,
        pos: Pos::new(line, col),
    });
    (tokens, diags)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<Tok> {
        let (toks, diags) = tokenize(src);
        assert!(diags.is_empty(), "{diags:?}");
        toks.into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn comments_are_stripped() {
        assert_eq!(
            kinds("p ; q -- note"),
            vec![Tok::Ident("p".into()), Tok::Semi, Tok::Ident("q".into()), Tok::Eof]
        );
    }

    #[test]
    fn program_literal() {
        use Tok::*;
        assert_eq!(
            kinds("<{(a,b)},{a}>"),
            vec![
                Lt,
                LBrace,
                LParen,
                Ident("a".into()),
                Comma,
                Ident("b".into()),
                RParen,
                RBrace,
                Comma,
                LBrace,
                Ident("a".into()),
                RBrace,
                Gt,
                Eof
            ]
        );
    }

    #[test]
    fn illegal_character_position() {
        let (_, diags) = tokenize("@");
        assert_eq!(diags.len(), 1);
        assert_eq!(diags[0].pos, Pos::new(1, 1));
        let (_, diags) = tokenize("program p = skip\n  p # q");
        assert_eq!(diags[0].pos, Pos::new(2, 5));
    }

    #[test]
    fn compound_symbols_and_law_ids() {
        use Tok::*;
        assert_eq!(
            kinds("a || b [] P46.guarded-choice--x"),
            vec![Ident("a".into()), BarBar, Ident("b".into()), Box, Ident("P46.guarded-choice".into()), Eof]
        );
        assert_eq!(kinds("from")[0], Kw(super::Kw::From));
    }
}
