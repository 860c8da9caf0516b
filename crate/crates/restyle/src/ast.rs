//! Syntax tree for the supported Python grammar.
//!
//! Every node carries the byte span of exactly its own source tokens, so
//! rewrites can splice verbatim slices of the original text. Parenthesized
//! expressions are wrapped in [`ExprKind::Paren`] whose span includes the
//! parentheses; slicing an expression span therefore always yields text
//! that can be re-embedded safely.

use crate::lex::{Op, StrFlags};
use crate::span::Span;

#[derive(Debug, Clone, PartialEq)]
pub struct Module {
    pub body: Vec<Stmt>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Stmt {
    pub kind: StmtKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum StmtKind {
    Expr {
        value: Expr,
    },
    Assign {
        targets: Vec<Expr>,
        value: Expr,
    },
    AugAssign {
        target: Expr,
        op: Op,
        value: Expr,
    },
    AnnAssign {
        target: Expr,
        annotation: Expr,
        value: Option<Expr>,
    },
    Return {
        value: Option<Expr>,
    },
    Pass,
    Break,
    Continue,
    Del {
        targets: Vec<Expr>,
    },
    Assert {
        test: Expr,
        msg: Option<Expr>,
    },
    Global {
        names: Vec<(String, Span)>,
    },
    Nonlocal {
        names: Vec<(String, Span)>,
    },
    Import {
        aliases: Vec<ImportAlias>,
    },
    ImportFrom {
        /// Leading dots for relative imports.
        level: usize,
        module: Option<String>,
        aliases: Vec<ImportAlias>,
        star: bool,
    },
    Raise {
        exc: Option<Expr>,
        cause: Option<Expr>,
    },
    If {
        /// `(condition, body)` for the `if` and each `elif`.
        branches: Vec<(Expr, Vec<Stmt>)>,
        orelse: Option<Vec<Stmt>>,
    },
    While {
        test: Expr,
        body: Vec<Stmt>,
        orelse: Option<Vec<Stmt>>,
    },
    For {
        target: Expr,
        iter: Expr,
        body: Vec<Stmt>,
        orelse: Option<Vec<Stmt>>,
        is_async: bool,
    },
    With {
        items: Vec<WithItem>,
        body: Vec<Stmt>,
        is_async: bool,
    },
    Try {
        body: Vec<Stmt>,
        handlers: Vec<ExceptHandler>,
        orelse: Option<Vec<Stmt>>,
        finalbody: Option<Vec<Stmt>>,
    },
    FunctionDef(FunctionDef),
    ClassDef(ClassDef),
    Match {
        subject: Expr,
        cases: Vec<MatchCase>,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct FunctionDef {
    pub name: String,
    pub name_span: Span,
    pub params: Params,
    pub body: Vec<Stmt>,
    pub decorators: Vec<Decorator>,
    pub returns: Option<Expr>,
    pub is_async: bool,
    /// Span of the `def ...` header and body, excluding decorators.
    pub def_span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassDef {
    pub name: String,
    pub name_span: Span,
    /// Base-class list and keywords, as written (may be empty).
    pub bases: Vec<CallArg>,
    pub body: Vec<Stmt>,
    pub decorators: Vec<Decorator>,
    /// Span of the `class ...` header and body, excluding decorators.
    pub def_span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Decorator {
    pub expr: Expr,
    /// Span from the `@` through the end of the decorator expression.
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WithItem {
    pub context: Expr,
    pub target: Option<Expr>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExceptHandler {
    pub typ: Option<Expr>,
    pub name: Option<(String, Span)>,
    pub body: Vec<Stmt>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchCase {
    pub pattern: Expr,
    pub as_name: Option<(String, Span)>,
    pub guard: Option<Expr>,
    pub body: Vec<Stmt>,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params {
    pub args: Vec<Param>,
    pub vararg: Option<Param>,
    pub kwonly: Vec<Param>,
    pub kwarg: Option<Param>,
}

impl Params {
    pub fn iter(&self) -> impl Iterator<Item = &Param> {
        self.args
            .iter()
            .chain(self.vararg.iter())
            .chain(self.kwonly.iter())
            .chain(self.kwarg.iter())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Param {
    pub name: String,
    pub name_span: Span,
    pub annotation: Option<Expr>,
    pub default: Option<Expr>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Name {
        id: String,
    },
    Int,
    Float,
    Imaginary,
    Str {
        parts: Vec<StrPart>,
    },
    BoolLit(bool),
    NoneLit,
    EllipsisLit,
    Paren(Box<Expr>),
    Tuple {
        elts: Vec<Expr>,
    },
    List {
        elts: Vec<Expr>,
    },
    Set {
        elts: Vec<Expr>,
    },
    Dict {
        /// `None` key marks a `**mapping` expansion.
        items: Vec<(Option<Expr>, Expr)>,
    },
    ListComp {
        elt: Box<Expr>,
        generators: Vec<Comprehension>,
    },
    SetComp {
        elt: Box<Expr>,
        generators: Vec<Comprehension>,
    },
    DictComp {
        key: Box<Expr>,
        value: Box<Expr>,
        generators: Vec<Comprehension>,
    },
    GeneratorExp {
        elt: Box<Expr>,
        generators: Vec<Comprehension>,
    },
    BoolOp {
        op: BoolOpKind,
        values: Vec<Expr>,
    },
    BinOp {
        left: Box<Expr>,
        op: Op,
        right: Box<Expr>,
    },
    UnaryOp {
        op: UnaryOpKind,
        operand: Box<Expr>,
    },
    Compare {
        left: Box<Expr>,
        ops: Vec<CmpOp>,
        comparators: Vec<Expr>,
    },
    Call {
        func: Box<Expr>,
        args: Vec<CallArg>,
    },
    Attribute {
        value: Box<Expr>,
        attr: String,
        attr_span: Span,
    },
    Subscript {
        value: Box<Expr>,
        index: Box<Expr>,
    },
    Slice {
        lower: Option<Box<Expr>>,
        upper: Option<Box<Expr>>,
        step: Option<Box<Expr>>,
    },
    Starred {
        value: Box<Expr>,
    },
    Lambda {
        params: Params,
        body: Box<Expr>,
    },
    IfExp {
        test: Box<Expr>,
        body: Box<Expr>,
        orelse: Box<Expr>,
    },
    NamedExpr {
        name: String,
        name_span: Span,
        value: Box<Expr>,
    },
    Await {
        value: Box<Expr>,
    },
    Yield {
        value: Option<Box<Expr>>,
    },
    YieldFrom {
        value: Box<Expr>,
    },
}

/// One literal in a (possibly implicitly concatenated) string expression.
#[derive(Debug, Clone, PartialEq)]
pub struct StrPart {
    pub span: Span,
    pub flags: StrFlags,
    /// Expressions embedded in an f-string part, in source order.
    pub fexprs: Vec<FStringExpr>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FStringExpr {
    pub expr: Expr,
    /// True for `{name=}` self-documenting fields, whose source text is
    /// echoed into the output; renaming inside them changes behavior.
    pub self_doc: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoolOpKind {
    And,
    Or,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnaryOpKind {
    Not,
    Minus,
    Plus,
    Invert,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CmpOp {
    Lt,
    Gt,
    Le,
    Ge,
    Eq,
    Ne,
    In,
    NotIn,
    Is,
    IsNot,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comprehension {
    pub target: Expr,
    pub iter: Expr,
    pub ifs: Vec<Expr>,
    pub is_async: bool,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CallArg {
    Positional(Expr),
    Star(Expr),
    Keyword {
        name: String,
        name_span: Span,
        value: Expr,
    },
    DoubleStar(Expr),
}

impl CallArg {
    pub fn value(&self) -> &Expr {
        match self {
            CallArg::Positional(e)
            | CallArg::Star(e)
            | CallArg::DoubleStar(e)
            | CallArg::Keyword { value: e, .. } => e,
        }
    }
}

impl Expr {
    /// Strip any layers of parentheses.
    pub fn unparen(&self) -> &Expr {
        match &self.kind {
            ExprKind::Paren(inner) => inner.unparen(),
            _ => self,
        }
    }

    pub fn as_name(&self) -> Option<&str> {
        match &self.kind {
            ExprKind::Name { id } => Some(id),
            _ => None,
        }
    }
}

impl Stmt {
    pub fn is_function_or_class(&self) -> bool {
        matches!(self.kind, StmtKind::FunctionDef(_) | StmtKind::ClassDef(_))
    }

    /// The string expression when this statement can serve as a docstring:
    /// a lone expression statement whose value is a plain (non-f, non-byte)
    /// string literal.
    pub fn docstring_expr(&self) -> Option<&Expr> {
        match &self.kind {
            StmtKind::Expr { value } => match &value.unparen().kind {
                ExprKind::Str { parts }
                    if parts.iter().all(|p| !p.flags.is_fstring && !p.flags.is_bytes) =>
                {
                    Some(value)
                }
                _ => None,
            },
            _ => None,
        }
    }
}

/// Apply `f` to every statement in the module, pre-order, including nested
/// bodies.
pub fn walk_stmts<'a>(body: &'a [Stmt], f: &mut dyn FnMut(&'a Stmt)) {
    for stmt in body {
        f(stmt);
        for block in stmt_blocks(stmt) {
            walk_stmts(block, f);
        }
    }
}

/// All statement blocks directly contained in `stmt`.
pub fn stmt_blocks(stmt: &Stmt) -> Vec<&[Stmt]> {
    let mut out: Vec<&[Stmt]> = Vec::new();
    match &stmt.kind {
        StmtKind::If { branches, orelse } => {
            for (_, body) in branches {
                out.push(body);
            }
            if let Some(e) = orelse {
                out.push(e);
            }
        }
        StmtKind::While { body, orelse, .. } | StmtKind::For { body, orelse, .. } => {
            out.push(body);
            if let Some(e) = orelse {
                out.push(e);
            }
        }
        StmtKind::With { body, .. } => out.push(body),
        StmtKind::Try {
            body,
            handlers,
            orelse,
            finalbody,
        } => {
            out.push(body);
            for h in handlers {
                out.push(&h.body);
            }
            if let Some(e) = orelse {
                out.push(e);
            }
            if let Some(e) = finalbody {
                out.push(e);
            }
        }
        StmtKind::FunctionDef(f) => out.push(&f.body),
        StmtKind::ClassDef(c) => out.push(&c.body),
        StmtKind::Match { cases, .. } => {
            for c in cases {
                out.push(&c.body);
            }
        }
        _ => {}
    }
    out
}
