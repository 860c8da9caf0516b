//! Tokenizer for Python source.
//!
//! Produces a flat token stream with byte spans, including synthetic
//! `Newline`/`Indent`/`Dedent` tokens that encode logical-line and block
//! structure. Comments and blank lines are dropped; their bytes survive
//! in the source text and are preserved verbatim by span-based rendering.

use crate::error::ParseError;
use crate::span::Span;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kw {
    False,
    None,
    True,
    And,
    As,
    Assert,
    Async,
    Await,
    Break,
    Class,
    Continue,
    Def,
    Del,
    Elif,
    Else,
    Except,
    Finally,
    For,
    From,
    Global,
    If,
    Import,
    In,
    Is,
    Lambda,
    Nonlocal,
    Not,
    Or,
    Pass,
    Raise,
    Return,
    Try,
    While,
    With,
    Yield,
}

pub const KEYWORDS: &[(&str, Kw)] = &[
    ("False", Kw::False),
    ("None", Kw::None),
    ("True", Kw::True),
    ("and", Kw::And),
    ("as", Kw::As),
    ("assert", Kw::Assert),
    ("async", Kw::Async),
    ("await", Kw::Await),
    ("break", Kw::Break),
    ("class", Kw::Class),
    ("continue", Kw::Continue),
    ("def", Kw::Def),
    ("del", Kw::Del),
    ("elif", Kw::Elif),
    ("else", Kw::Else),
    ("except", Kw::Except),
    ("finally", Kw::Finally),
    ("for", Kw::For),
    ("from", Kw::From),
    ("global", Kw::Global),
    ("if", Kw::If),
    ("import", Kw::Import),
    ("in", Kw::In),
    ("is", Kw::Is),
    ("lambda", Kw::Lambda),
    ("nonlocal", Kw::Nonlocal),
    ("not", Kw::Not),
    ("or", Kw::Or),
    ("pass", Kw::Pass),
    ("raise", Kw::Raise),
    ("return", Kw::Return),
    ("try", Kw::Try),
    ("while", Kw::While),
    ("with", Kw::With),
    ("yield", Kw::Yield),
];

pub fn keyword(name: &str) -> Option<Kw> {
    KEYWORDS
        .binary_search_by(|(k, _)| k.cmp(&name))
        .ok()
        .map(|i| KEYWORDS[i].1)
}

pub fn is_keyword(name: &str) -> bool {
    keyword(name).is_some()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Plus,
    Minus,
    Star,
    DoubleStar,
    Slash,
    DoubleSlash,
    Percent,
    At,
    Shl,
    Shr,
    Amp,
    Pipe,
    Caret,
    Tilde,
    Lt,
    Gt,
    Le,
    Ge,
    EqEq,
    Ne,
    Assign,
    Walrus,
    Arrow,
    Dot,
    Ellipsis,
    Comma,
    Colon,
    Semi,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    PlusEq,
    MinusEq,
    StarEq,
    SlashEq,
    DoubleSlashEq,
    PercentEq,
    AtEq,
    AmpEq,
    PipeEq,
    CaretEq,
    ShlEq,
    ShrEq,
    DoubleStarEq,
}

impl Op {
    pub fn is_augmented_assign(self) -> bool {
        matches!(
            self,
            Op::PlusEq
                | Op::MinusEq
                | Op::StarEq
                | Op::SlashEq
                | Op::DoubleSlashEq
                | Op::PercentEq
                | Op::AtEq
                | Op::AmpEq
                | Op::PipeEq
                | Op::CaretEq
                | Op::ShlEq
                | Op::ShrEq
                | Op::DoubleStarEq
        )
    }

    /// Source spelling of the operator without the trailing `=` for
    /// augmented assignments.
    pub fn aug_base_str(self) -> &'static str {
        match self {
            Op::PlusEq => "+",
            Op::MinusEq => "-",
            Op::StarEq => "*",
            Op::SlashEq => "/",
            Op::DoubleSlashEq => "//",
            Op::PercentEq => "%",
            Op::AtEq => "@",
            Op::AmpEq => "&",
            Op::PipeEq => "|",
            Op::CaretEq => "^",
            Op::ShlEq => "<<",
            Op::ShrEq => ">>",
            Op::DoubleStarEq => "**",
            _ => "",
        }
    }
}

/// String-literal details needed for docstring detection and f-string
/// sub-expression scanning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StrFlags {
    pub is_raw: bool,
    pub is_bytes: bool,
    pub is_fstring: bool,
    /// Byte range of the literal body, between the quotes.
    pub content_start: usize,
    pub content_end: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokKind {
    Name,
    Keyword(Kw),
    Int,
    Float,
    Imaginary,
    Str(StrFlags),
    Op(Op),
    Newline,
    Indent,
    Dedent,
    Eof,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tok {
    pub kind: TokKind,
    pub span: Span,
}

impl Tok {
    pub fn text<'a>(&self, source: &'a str) -> &'a str {
        &source[self.span.start..self.span.end]
    }
}

/// Tokenize a whole module.
pub fn tokenize(source: &str) -> Result<Vec<Tok>, ParseError> {
    Lexer::new(source, false).run()
}

/// Tokenize an expression fragment: no indentation handling, newlines
/// inside the fragment are treated as insignificant (as if bracketed).
pub fn tokenize_fragment(source: &str, offset: usize) -> Result<Vec<Tok>, ParseError> {
    let toks = Lexer::new(source, true).run()?;
    Ok(toks
        .into_iter()
        .filter(|t| !matches!(t.kind, TokKind::Newline | TokKind::Indent | TokKind::Dedent))
        .map(|t| Tok {
            kind: shift_kind(t.kind, offset),
            span: Span::new(t.span.start + offset, t.span.end + offset),
        })
        .collect())
}

fn shift_kind(kind: TokKind, offset: usize) -> TokKind {
    match kind {
        TokKind::Str(f) => TokKind::Str(StrFlags {
            content_start: f.content_start + offset,
            content_end: f.content_end + offset,
            ..f
        }),
        other => other,
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
    /// Open bracket depth; newlines are insignificant while > 0.
    depth: usize,
    /// Indentation stack in tabstop-8 columns.
    indents: Vec<usize>,
    /// True while at the start of a logical line (pending indent check).
    at_line_start: bool,
    /// Fragment mode: skip all indentation handling.
    fragment: bool,
    toks: Vec<Tok>,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str, fragment: bool) -> Self {
        Lexer {
            src: text.as_bytes(),
            text,
            pos: 0,
            depth: 0,
            indents: vec![0],
            at_line_start: !fragment,
            fragment,
            toks: Vec::new(),
        }
    }

    fn err(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError::new(pos, message.into())
    }

    fn peek(&self) -> u8 {
        self.src.get(self.pos).copied().unwrap_or(0)
    }

    fn peek_at(&self, n: usize) -> u8 {
        self.src.get(self.pos + n).copied().unwrap_or(0)
    }

    fn push(&mut self, kind: TokKind, start: usize) {
        self.toks.push(Tok {
            kind,
            span: Span::new(start, self.pos),
        });
    }

    fn run(mut self) -> Result<Vec<Tok>, ParseError> {
        while self.pos < self.src.len() {
            if self.at_line_start {
                if self.handle_indentation()? {
                    continue;
                }
            }
            if self.pos >= self.src.len() {
                break;
            }
            let c = self.peek();
            match c {
                b' ' | b'\t' | b'\x0c' => {
                    self.pos += 1;
                }
                b'#' => {
                    while self.pos < self.src.len() && self.peek() != b'\n' {
                        self.pos += 1;
                    }
                }
                b'\\' if self.peek_at(1) == b'\n' => {
                    // Explicit line joining.
                    self.pos += 2;
                }
                b'\\' if self.peek_at(1) == b'\r' && self.peek_at(2) == b'\n' => {
                    self.pos += 3;
                }
                b'\r' | b'\n' => {
                    let start = self.pos;
                    if c == b'\r' {
                        self.pos += 1;
                    }
                    if self.peek() == b'\n' {
                        self.pos += 1;
                    }
                    if self.depth == 0 && !self.fragment {
                        // Suppress NEWLINE for blank/comment-only lines: one
                        // was only meaningful if a real token preceded it on
                        // this logical line.
                        if self
                            .toks
                            .last()
                            .is_some_and(|t| !matches!(t.kind, TokKind::Newline | TokKind::Indent | TokKind::Dedent))
                            && !self.last_is_newline()
                        {
                            self.push(TokKind::Newline, start);
                        }
                        self.at_line_start = true;
                    }
                }
                _ if c.is_ascii_digit() => self.number()?,
                b'.' if self.peek_at(1).is_ascii_digit() => self.number()?,
                _ if is_ident_start(c) => self.name_or_string()?,
                b'\'' | b'"' => self.string(self.pos, StrPrefix::default())?,
                _ => self.operator()?,
            }
        }
        // Close the final logical line and any open blocks.
        if !self.fragment {
            if self
                .toks
                .last()
                .is_some_and(|t| !matches!(t.kind, TokKind::Newline | TokKind::Indent | TokKind::Dedent))
            {
                self.push(TokKind::Newline, self.pos);
            }
            while self.indents.len() > 1 {
                self.indents.pop();
                self.push(TokKind::Dedent, self.pos);
            }
        }
        self.push(TokKind::Eof, self.pos);
        Ok(self.toks)
    }

    fn last_is_newline(&self) -> bool {
        self.toks
            .last()
            .is_some_and(|t| matches!(t.kind, TokKind::Newline))
    }

    /// Measure leading whitespace and emit Indent/Dedent. Returns true if a
    /// blank or comment-only line was consumed entirely.
    fn handle_indentation(&mut self) -> Result<bool, ParseError> {
        let line_start = self.pos;
        let mut col = 0usize;
        while self.pos < self.src.len() {
            match self.peek() {
                b' ' => {
                    col += 1;
                    self.pos += 1;
                }
                b'\t' => {
                    col = (col / 8 + 1) * 8;
                    self.pos += 1;
                }
                b'\x0c' => {
                    col = 0;
                    self.pos += 1;
                }
                _ => break,
            }
        }
        match self.peek() {
            b'\n' | b'\r' | b'#' | 0 => {
                // Blank or comment-only line: no indentation effect.
                while self.pos < self.src.len() && self.peek() != b'\n' {
                    self.pos += 1;
                }
                if self.pos < self.src.len() {
                    self.pos += 1;
                }
                return Ok(true);
            }
            _ => {}
        }
        self.at_line_start = false;
        let current = *self.indents.last().unwrap();
        if col > current {
            self.indents.push(col);
            self.toks.push(Tok {
                kind: TokKind::Indent,
                span: Span::new(line_start, self.pos),
            });
        } else if col < current {
            while *self.indents.last().unwrap() > col {
                self.indents.pop();
                self.toks.push(Tok {
                    kind: TokKind::Dedent,
                    span: Span::new(line_start, self.pos),
                });
            }
            if *self.indents.last().unwrap() != col {
                return Err(self.err(line_start, "unindent does not match any outer indentation level"));
            }
        }
        Ok(false)
    }

    fn number(&mut self) -> Result<(), ParseError> {
        let start = self.pos;
        let mut is_float = false;
        if self.peek() == b'0' && matches!(self.peek_at(1), b'x' | b'X' | b'o' | b'O' | b'b' | b'B') {
            let radix_char = self.peek_at(1);
            self.pos += 2;
            let digits = |c: u8| match radix_char {
                b'x' | b'X' => c.is_ascii_hexdigit(),
                b'o' | b'O' => (b'0'..=b'7').contains(&c),
                _ => c == b'0' || c == b'1',
            };
            let mut any = false;
            while digits(self.peek()) || self.peek() == b'_' {
                any |= self.peek() != b'_';
                self.pos += 1;
            }
            if !any {
                return Err(self.err(start, "invalid numeric literal"));
            }
            self.push(TokKind::Int, start);
            return Ok(());
        }
        while self.peek().is_ascii_digit() || self.peek() == b'_' {
            self.pos += 1;
        }
        if self.peek() == b'.' && !is_ident_start(self.peek_at(1)) && self.peek_at(1) != b'.' {
            is_float = true;
            self.pos += 1;
            while self.peek().is_ascii_digit() || self.peek() == b'_' {
                self.pos += 1;
            }
        }
        if matches!(self.peek(), b'e' | b'E')
            && (self.peek_at(1).is_ascii_digit()
                || (matches!(self.peek_at(1), b'+' | b'-') && self.peek_at(2).is_ascii_digit()))
        {
            is_float = true;
            self.pos += 2;
            while self.peek().is_ascii_digit() || matches!(self.peek(), b'+' | b'-') {
                self.pos += 1;
            }
        }
        if matches!(self.peek(), b'j' | b'J') {
            self.pos += 1;
            self.push(TokKind::Imaginary, start);
        } else if is_float {
            self.push(TokKind::Float, start);
        } else {
            self.push(TokKind::Int, start);
        }
        Ok(())
    }

    fn name_or_string(&mut self) -> Result<(), ParseError> {
        let start = self.pos;
        while is_ident_continue(self.peek()) || self.peek() >= 0x80 {
            if self.peek() >= 0x80 {
                // Step over a full UTF-8 sequence; identifiers may be unicode.
                let ch = self.text[self.pos..].chars().next().unwrap();
                self.pos += ch.len_utf8();
            } else {
                self.pos += 1;
            }
        }
        let word = &self.text[start..self.pos];
        // String prefix immediately followed by a quote?
        if word.len() <= 2 && matches!(self.peek(), b'\'' | b'"') {
            if let Some(prefix) = StrPrefix::parse(word) {
                return self.string(start, prefix);
            }
        }
        match keyword(word) {
            Some(kw) => self.push(TokKind::Keyword(kw), start),
            None => self.push(TokKind::Name, start),
        }
        Ok(())
    }

    fn string(&mut self, start: usize, prefix: StrPrefix) -> Result<(), ParseError> {
        let quote = self.peek();
        let triple = self.peek_at(1) == quote && self.peek_at(2) == quote;
        let quote_len = if triple { 3 } else { 1 };
        self.pos += quote_len;
        let content_start = self.pos;
        loop {
            if self.pos >= self.src.len() {
                return Err(self.err(start, "unterminated string literal"));
            }
            let c = self.peek();
            if c == b'\\' && self.pos + 1 < self.src.len() {
                // Even in raw strings a backslash prevents the following
                // quote from terminating the literal.
                self.pos += 2;
                continue;
            }
            if c == quote {
                if !triple {
                    break;
                }
                if self.peek_at(1) == quote && self.peek_at(2) == quote {
                    break;
                }
                self.pos += 1;
                continue;
            }
            if c == b'\n' && !triple {
                return Err(self.err(start, "unterminated string literal (newline)"));
            }
            self.pos += 1;
        }
        let content_end = self.pos;
        self.pos += quote_len;
        self.push(
            TokKind::Str(StrFlags {
                is_raw: prefix.raw,
                is_bytes: prefix.bytes,
                is_fstring: prefix.fstring,
                content_start,
                content_end,
            }),
            start,
        );
        Ok(())
    }

    fn operator(&mut self) -> Result<(), ParseError> {
        let start = self.pos;
        let rest = &self.src[self.pos..];
        let table: &[(&[u8], Op)] = &[
            (b"**=", Op::DoubleStarEq),
            (b"//=", Op::DoubleSlashEq),
            (b"<<=", Op::ShlEq),
            (b">>=", Op::ShrEq),
            (b"...", Op::Ellipsis),
            (b"**", Op::DoubleStar),
            (b"//", Op::DoubleSlash),
            (b"<<", Op::Shl),
            (b">>", Op::Shr),
            (b"<=", Op::Le),
            (b">=", Op::Ge),
            (b"==", Op::EqEq),
            (b"!=", Op::Ne),
            (b"->", Op::Arrow),
            (b":=", Op::Walrus),
            (b"+=", Op::PlusEq),
            (b"-=", Op::MinusEq),
            (b"*=", Op::StarEq),
            (b"/=", Op::SlashEq),
            (b"%=", Op::PercentEq),
            (b"@=", Op::AtEq),
            (b"&=", Op::AmpEq),
            (b"|=", Op::PipeEq),
            (b"^=", Op::CaretEq),
            (b"+", Op::Plus),
            (b"-", Op::Minus),
            (b"*", Op::Star),
            (b"/", Op::Slash),
            (b"%", Op::Percent),
            (b"@", Op::At),
            (b"&", Op::Amp),
            (b"|", Op::Pipe),
            (b"^", Op::Caret),
            (b"~", Op::Tilde),
            (b"<", Op::Lt),
            (b">", Op::Gt),
            (b"=", Op::Assign),
            (b".", Op::Dot),
            (b",", Op::Comma),
            (b":", Op::Colon),
            (b";", Op::Semi),
            (b"(", Op::LParen),
            (b")", Op::RParen),
            (b"[", Op::LBracket),
            (b"]", Op::RBracket),
            (b"{", Op::LBrace),
            (b"}", Op::RBrace),
        ];
        for (pat, op) in table {
            if rest.starts_with(pat) {
                self.pos += pat.len();
                match op {
                    Op::LParen | Op::LBracket | Op::LBrace => self.depth += 1,
                    Op::RParen | Op::RBracket | Op::RBrace => {
                        self.depth = self.depth.saturating_sub(1)
                    }
                    _ => {}
                }
                self.push(TokKind::Op(*op), start);
                return Ok(());
            }
        }
        Err(self.err(start, format!("unexpected character {:?}", self.peek() as char)))
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct StrPrefix {
    raw: bool,
    bytes: bool,
    fstring: bool,
}

impl StrPrefix {
    fn parse(word: &str) -> Option<StrPrefix> {
        let mut p = StrPrefix::default();
        for c in word.chars() {
            match c.to_ascii_lowercase() {
                'r' if !p.raw => p.raw = true,
                'b' if !p.bytes && !p.fstring => p.bytes = true,
                'f' if !p.fstring && !p.bytes => p.fstring = true,
                'u' if word.len() == 1 => {}
                _ => return None,
            }
        }
        Some(p)
    }
}

fn is_ident_start(c: u8) -> bool {
    c.is_ascii_alphabetic() || c == b'_' || c >= 0x80
}

fn is_ident_continue(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<TokKind> {
        tokenize(src).unwrap().into_iter().map(|t| t.kind).collect()
    }

    fn texts(src: &str) -> Vec<String> {
        tokenize(src)
            .unwrap()
            .into_iter()
            .map(|t| t.text(src).to_string())
            .collect()
    }

    #[test]
    fn simple_assignment() {
        assert_eq!(
            kinds("x = 1\n"),
            vec![
                TokKind::Name,
                TokKind::Op(Op::Assign),
                TokKind::Int,
                TokKind::Newline,
                TokKind::Eof
            ]
        );
    }

    #[test]
    fn indent_dedent() {
        let k = kinds("if x:\n    y = 1\nz = 2\n");
        assert!(k.contains(&TokKind::Indent));
        assert!(k.contains(&TokKind::Dedent));
    }

    #[test]
    fn implicit_joining_suppresses_newline() {
        let k = kinds("x = (1 +\n     2)\n");
        let newlines = k.iter().filter(|k| matches!(k, TokKind::Newline)).count();
        assert_eq!(newlines, 1);
    }

    #[test]
    fn blank_and_comment_lines_ignored() {
        let k = kinds("x = 1\n\n# comment\n    # indented comment\ny = 2\n");
        assert!(!k.contains(&TokKind::Indent));
        let newlines = k.iter().filter(|k| matches!(k, TokKind::Newline)).count();
        assert_eq!(newlines, 2);
    }

    #[test]
    fn string_prefixes() {
        for src in ["r'a\\'", "f\"{x}\"", "b'bytes'", "rb'\\d'", "'''multi\nline'''"] {
            let toks = tokenize(src).unwrap();
            assert!(
                matches!(toks[0].kind, TokKind::Str(_)),
                "{src:?} -> {:?}",
                toks[0].kind
            );
        }
    }

    #[test]
    fn fstring_flag() {
        let toks = tokenize("f'{x}'\n").unwrap();
        match toks[0].kind {
            TokKind::Str(f) => {
                assert!(f.is_fstring);
                assert_eq!(f.content_start, 2);
                assert_eq!(f.content_end, 5);
            }
            _ => panic!("expected string"),
        }
    }

    #[test]
    fn numbers() {
        assert_eq!(
            texts("10 0x1f 0b01 1_000 3.14 1e-9 2j .5\n")[..8],
            ["10", "0x1f", "0b01", "1_000", "3.14", "1e-9", "2j", ".5"]
        );
    }

    #[test]
    fn method_call_on_float_vs_attribute() {
        // `1 .real` is attribute access on an int; `1.real` would be a float parse.
        let k = kinds("x = 1 .real\n");
        assert!(k.contains(&TokKind::Op(Op::Dot)));
    }

    #[test]
    fn explicit_line_join() {
        let k = kinds("x = 1 + \\\n    2\n");
        let newlines = k.iter().filter(|k| matches!(k, TokKind::Newline)).count();
        assert_eq!(newlines, 1);
    }

    #[test]
    fn bad_dedent() {
        assert!(tokenize("if x:\n        y = 1\n    z = 2\n").is_err());
    }

    #[test]
    fn unterminated_string() {
        assert!(tokenize("x = 'abc\n").is_err());
    }

    #[test]
    fn walrus_and_arrow() {
        let k = kinds("def f() -> int:\n    return (n := 3)\n");
        assert!(k.contains(&TokKind::Op(Op::Arrow)));
        assert!(k.contains(&TokKind::Op(Op::Walrus)));
    }

    #[test]
    fn tab_indentation() {
        let k = kinds("if x:\n\ty = 1\n");
        assert!(k.contains(&TokKind::Indent));
    }
}
