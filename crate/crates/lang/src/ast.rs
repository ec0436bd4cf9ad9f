//! Syntax trees. Equality ignores source positions.

use crate::diag::Pos;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    /// `|`: choice, or union of sets and relations.
    Union,
    /// `&`: internal choice, or intersection.
    Inter,
    /// `||`: atomic concurrency.
    Par,
    /// `;`: sequence, or relational composition.
    Seq,
    /// `\`: corestriction, or set difference.
    Minus,
    /// `:`: restriction.
    Guard,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Union => "|",
            BinOp::Inter => "&",
            BinOp::Par => "||",
            BinOp::Seq => ";",
            BinOp::Minus => "\\",
            BinOp::Guard => ":",
        }
    }

    /// Binding power, loosest first. `^` binds tighter than all of these.
    pub fn power(self) -> u8 {
        match self {
            BinOp::Union => 10,
            BinOp::Inter => 20,
            BinOp::Par => 30,
            BinOp::Seq => 40,
            BinOp::Minus => 50,
            BinOp::Guard => 60,
        }
    }

    pub fn right_assoc(self) -> bool {
        self == BinOp::Guard
    }
}

pub const POWER_NOT: u8 = 65;
pub const POWER_CARET: u8 = 70;

#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Name(String),
    /// `{}`, whose kind comes from its context.
    Empty,
    Atoms(Vec<String>),
    Pairs(Vec<(String, String)>),
    /// `<post, Pre>`.
    Literal(Box<Expr>, Box<Expr>),
    Skip,
    Fail,
    Havoc,
    Not(Box<Expr>),
    Binary(BinOp, Box<Expr>, Box<Expr>),
    Power(Box<Expr>, u64),
    /// `(p1, ..., pn) || q`.
    Interleave(Vec<Expr>, Box<Expr>),
    /// `loop p end`.
    Star(Box<Expr>),
    From {
        init: Box<Expr>,
        exit: Box<Expr>,
        body: Box<Expr>,
    },
    IfThen {
        cond: Box<Expr>,
        then: Box<Expr>,
        otherwise: Option<Box<Expr>>,
    },
    /// `if C1 : p1 [] C2 : p2 end`.
    Guarded(Vec<(Expr, Expr)>),
    Contract {
        pre: Box<Expr>,
        body: Box<Expr>,
        post: Box<Expr>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BindKind {
    Condition,
    Relation,
    Program,
}

impl BindKind {
    pub fn keyword(self) -> &'static str {
        match self {
            BindKind::Condition => "condition",
            BindKind::Relation => "relation",
            BindKind::Program => "program",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Feasible,
    Refines,
    Equivalent,
    Correct,
    Commutes,
    Invariant,
    LoopInvariant,
    LoopCorrect,
    LoopFeasible,
    Variant,
    Law,
}

impl CheckKind {
    pub const ALL: [CheckKind; 11] = [
        CheckKind::Feasible,
        CheckKind::Refines,
        CheckKind::Equivalent,
        CheckKind::Correct,
        CheckKind::Commutes,
        CheckKind::Invariant,
        CheckKind::LoopInvariant,
        CheckKind::LoopCorrect,
        CheckKind::LoopFeasible,
        CheckKind::Variant,
        CheckKind::Law,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Feasible => "feasible",
            CheckKind::Refines => "refines",
            CheckKind::Equivalent => "equivalent",
            CheckKind::Correct => "correct",
            CheckKind::Commutes => "commutes",
            CheckKind::Invariant => "invariant",
            CheckKind::LoopInvariant => "loop_invariant",
            CheckKind::LoopCorrect => "loop_correct",
            CheckKind::LoopFeasible => "loop_feasible",
            CheckKind::Variant => "variant",
            CheckKind::Law => "law",
        }
    }

    pub fn lookup(word: &str) -> Option<CheckKind> {
        CheckKind::ALL.into_iter().find(|k| k.name() == word)
    }

    /// Number of expression arguments. `variant` takes a table after its
    /// loop and `law` takes an id instead.
    pub fn arity(self) -> usize {
        match self {
            CheckKind::Feasible | CheckKind::Correct | CheckKind::LoopFeasible | CheckKind::Variant => 1,
            CheckKind::Law => 0,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Query {
    Post,
    Pre,
    Range,
    Dom,
    Classify,
}

impl Query {
    pub const ALL: [Query; 5] = [Query::Post, Query::Pre, Query::Range, Query::Dom, Query::Classify];

    pub fn name(self) -> &'static str {
        match self {
            Query::Post => "post",
            Query::Pre => "pre",
            Query::Range => "range",
            Query::Dom => "dom",
            Query::Classify => "classify",
        }
    }

    pub fn lookup(word: &str) -> Option<Query> {
        Query::ALL.into_iter().find(|q| q.name() == word)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Directive {
    Check {
        /// `check not ...` passes when the check fails.
        negated: bool,
        kind: CheckKind,
        args: Vec<Expr>,
        /// `variant` only: atom and measure.
        table: Vec<(String, u64)>,
        /// `law` only: id and optional space size.
        law: Option<(String, Option<u64>)>,
    },
    Print {
        query: Query,
        arg: Expr,
    },
}

#[derive(Debug, Clone)]
pub struct Item {
    pub kind: ItemKind,
    pub pos: Pos,
}

impl PartialEq for Item {
    fn eq(&self, other: &Item) -> bool {
        self.kind == other.kind
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ItemKind {
    Universe { name: String, atoms: Vec<String> },
    Bind { kind: BindKind, name: String, value: Expr },
    Directive(Directive),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Ast {
    pub items: Vec<Item>,
}
