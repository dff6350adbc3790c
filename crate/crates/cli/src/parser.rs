//! Recursive-descent parser for `.qmon` documents and the diagnostic
//! type shared with the resolver. Clause bodies are classified purely
//! syntactically (presence of `<=`, `->`, or commas), so parsing needs
//! no knowledge of what each keyword means.

use crate::ast::{Clause, ClauseBody, Def, DefKind, Document, Row};
use crate::lexer::{lex, Token, TokenKind};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticClass {
    Syntax,
    DuplicateName,
    UnresolvedReference,
    ArityMismatch,
}

impl fmt::Display for DiagnosticClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagnosticClass::Syntax => "syntax error",
            DiagnosticClass::DuplicateName => "duplicate name",
            DiagnosticClass::UnresolvedReference => "unresolved reference",
            DiagnosticClass::ArityMismatch => "arity mismatch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub class: DiagnosticClass,
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}: {}", self.line, self.col, self.class, self.message)
    }
}

impl std::error::Error for Diagnostic {}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

pub fn parse(text: &str) -> Result<Document, Diagnostic> {
    let tokens = lex(text).map_err(|e| Diagnostic {
        class: DiagnosticClass::Syntax,
        line: e.line,
        col: e.col,
        message: format!("unexpected character `{}`", e.ch),
    })?;
    let mut p = Parser { tokens, pos: 0 };
    let mut defs = Vec::new();
    while p.peek().is_some() {
        defs.push(p.def()?);
    }
    Ok(Document { defs })
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek()
            .map(|t| (t.line, t.col))
            .or_else(|| self.tokens.last().map(|t| (t.line, t.col + 1)))
            .unwrap_or((1, 1))
    }

    fn err(&self, message: impl Into<String>) -> Diagnostic {
        let (line, col) = self.here();
        Diagnostic {
            class: DiagnosticClass::Syntax,
            line,
            col,
            message: message.into(),
        }
    }

    fn expect(&mut self, kind: &TokenKind) -> Result<Token, Diagnostic> {
        match self.peek() {
            Some(t) if &t.kind == kind => Ok(self.next().unwrap()),
            Some(t) => Err(self.err(format!("expected {kind}, found {}", t.kind))),
            None => Err(self.err(format!("expected {kind}, found end of input"))),
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize), Diagnostic> {
        match self.peek() {
            Some(Token { kind: TokenKind::Ident(_), .. }) => {
                let t = self.next().unwrap();
                let TokenKind::Ident(s) = t.kind else { unreachable!() };
                Ok((s, t.line, t.col))
            }
            Some(t) => Err(self.err(format!("expected {what}, found {}", t.kind))),
            None => Err(self.err(format!("expected {what}, found end of input"))),
        }
    }

    fn def(&mut self) -> Result<Def, Diagnostic> {
        let (kw, line, col) = self.ident("a definition kind")?;
        let kind = DefKind::from_keyword(&kw).ok_or_else(|| Diagnostic {
            class: DiagnosticClass::Syntax,
            line,
            col,
            message: format!("unknown definition kind `{kw}`"),
        })?;
        let (name, ..) = self.ident("a definition name")?;
        self.expect(&TokenKind::LBrace)?;
        let mut clauses = Vec::new();
        loop {
            match self.peek().map(|t| &t.kind) {
                Some(TokenKind::RBrace) => {
                    self.next();
                    break;
                }
                Some(TokenKind::Semicolon) => {
                    self.next();
                }
                Some(_) => clauses.push(self.clause()?),
                None => return Err(self.err("expected `}`, found end of input")),
            }
        }
        Ok(Def { kind, name, line, col, clauses })
    }

    fn clause(&mut self) -> Result<Clause, Diagnostic> {
        let (keyword, line, col) = self.ident("a clause keyword")?;
        let body = self.body()?;
        Ok(Clause { keyword, line, col, body })
    }

    fn at_body_end(&self) -> bool {
        matches!(
            self.peek().map(|t| &t.kind),
            None | Some(TokenKind::Semicolon) | Some(TokenKind::RBrace)
        )
    }

    /// One segment of a clause body: the words, tuples, and at most one
    /// `->` or `<=` up to the next comma, semicolon, or closing brace.
    fn segment(&mut self) -> Result<Segment, Diagnostic> {
        let mut words = Vec::new();
        let mut tuple = None;
        let mut sep = None;
        let mut rhs = Vec::new();
        loop {
            match self.peek().map(|t| &t.kind) {
                None
                | Some(TokenKind::Semicolon)
                | Some(TokenKind::RBrace)
                | Some(TokenKind::Comma) => break,
                Some(TokenKind::Ident(_)) => {
                    let (w, ..) = self.ident("a word")?;
                    if sep.is_some() { &mut rhs } else { &mut words }.push(w);
                }
                Some(TokenKind::LParen) => {
                    if sep.is_some() || tuple.is_some() || !words.is_empty() {
                        return Err(self.err("unexpected `(`"));
                    }
                    self.next();
                    let mut items = Vec::new();
                    loop {
                        let (w, ..) = self.ident("a tuple component")?;
                        items.push(w);
                        match self.peek().map(|t| &t.kind) {
                            Some(TokenKind::Comma) => {
                                self.next();
                            }
                            Some(TokenKind::RParen) => {
                                self.next();
                                break;
                            }
                            _ => return Err(self.err("expected `,` or `)` in tuple")),
                        }
                    }
                    tuple = Some(items);
                }
                Some(TokenKind::Arrow) => {
                    if sep.is_some() {
                        return Err(self.err("unexpected second `->`"));
                    }
                    self.next();
                    sep = Some(Sep::Arrow);
                }
                Some(TokenKind::Leq) => {
                    if sep.is_some() {
                        return Err(self.err("unexpected second `<=`"));
                    }
                    self.next();
                    sep = Some(Sep::Leq);
                }
                Some(other) => return Err(self.err(format!("unexpected {other}"))),
            }
        }
        Ok(Segment { words, tuple, sep, rhs })
    }

    fn body(&mut self) -> Result<ClauseBody, Diagnostic> {
        if self.at_body_end() {
            return Ok(ClauseBody::Names(Vec::new()));
        }
        let mut segments = vec![self.segment()?];
        while matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Comma)) {
            self.next();
            segments.push(self.segment()?);
        }
        // Classify: any `<=` makes an order list, any `->` a row list,
        // multiple segments without separators a matrix, one plain
        // segment a name list.
        if segments.iter().any(|s| s.sep == Some(Sep::Leq)) {
            let mut pairs = Vec::new();
            for s in segments {
                match s {
                    Segment { words, tuple: None, sep: Some(Sep::Leq), rhs }
                        if words.len() == 1 && rhs.len() == 1 =>
                    {
                        pairs.push((words.into_iter().next().unwrap(), rhs.into_iter().next().unwrap()));
                    }
                    _ => return Err(self.err("each order item must be `a <= b`")),
                }
            }
            return Ok(ClauseBody::Pairs(pairs));
        }
        if segments.iter().any(|s| s.sep == Some(Sep::Arrow)) {
            let mut rows = Vec::new();
            for s in segments {
                match s {
                    Segment { words, tuple: None, sep: Some(Sep::Arrow), rhs }
                        if !words.is_empty() && rhs.len() == 1 =>
                    {
                        rows.push(Row { lhs: words, tuple: false, rhs: rhs.into_iter().next().unwrap() });
                    }
                    Segment { words, tuple: Some(items), sep: Some(Sep::Arrow), rhs }
                        if words.is_empty() && rhs.len() == 1 =>
                    {
                        rows.push(Row { lhs: items, tuple: true, rhs: rhs.into_iter().next().unwrap() });
                    }
                    _ => return Err(self.err("each mapping item must be `a b -> c`, `a -> c`, or `(a, b) -> c`")),
                }
            }
            return Ok(ClauseBody::Rows(rows));
        }
        if segments.len() > 1 {
            let mut matrix = Vec::new();
            for s in segments {
                match s {
                    Segment { words, tuple: None, sep: None, .. } if !words.is_empty() => {
                        matrix.push(words)
                    }
                    _ => return Err(self.err("each matrix row must be a list of entries")),
                }
            }
            return Ok(ClauseBody::Matrix(matrix));
        }
        match segments.into_iter().next().unwrap() {
            Segment { words, tuple: None, sep: None, .. } => Ok(ClauseBody::Names(words)),
            _ => Err(self.err("expected a list of words")),
        }
    }
}

#[derive(PartialEq, Eq, Clone, Copy)]
enum Sep {
    Arrow,
    Leq,
}

struct Segment {
    words: Vec<String>,
    tuple: Option<Vec<String>>,
    sep: Option<Sep>,
    rhs: Vec<String>,
}
