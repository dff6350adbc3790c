//! Syntax tree for `.qmon` documents. The tree is faithful to the
//! source: clause bodies keep their written shape so that printing a
//! parsed document reproduces it token for token.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub defs: Vec<Def>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DefKind {
    Quantale,
    Monoid,
    VRelation,
    VMonoid,
    Action,
    Cone,
    EnrichedAction,
    Extension,
}

impl DefKind {
    pub fn keyword(self) -> &'static str {
        match self {
            DefKind::Quantale => "quantale",
            DefKind::Monoid => "monoid",
            DefKind::VRelation => "vrelation",
            DefKind::VMonoid => "vmonoid",
            DefKind::Action => "action",
            DefKind::Cone => "cone",
            DefKind::EnrichedAction => "enriched_action",
            DefKind::Extension => "extension",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Self> {
        Some(match word {
            "quantale" => DefKind::Quantale,
            "monoid" => DefKind::Monoid,
            "vrelation" => DefKind::VRelation,
            "vmonoid" => DefKind::VMonoid,
            "action" => DefKind::Action,
            "cone" => DefKind::Cone,
            "enriched_action" => DefKind::EnrichedAction,
            "extension" => DefKind::Extension,
            _ => return None,
        })
    }
}

impl fmt::Display for DefKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Def {
    pub kind: DefKind,
    pub name: String,
    pub line: usize,
    pub col: usize,
    pub clauses: Vec<Clause>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub keyword: String,
    pub line: usize,
    pub col: usize,
    pub body: ClauseBody,
}

/// One mapping row: `a b -> c`, `x -> v`, or `(x, y) -> v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub lhs: Vec<String>,
    /// Whether the left side was written as a parenthesized tuple.
    pub tuple: bool,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseBody {
    /// A plain list of words: `elements 0 1`, `unit 1`, `tensor meet`,
    /// `monoid M`, or a single matrix row.
    Names(Vec<String>),
    /// Ordered pairs: `order 0 <= 1, 1 <= 2`.
    Pairs(Vec<(String, String)>),
    /// Mapping rows separated by commas.
    Rows(Vec<Row>),
    /// Comma-separated rows of words: `matrix 1 0, 0 1`.
    Matrix(Vec<Vec<String>>),
}

impl Def {
    pub fn clause(&self, keyword: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.keyword == keyword)
    }
}

impl Document {
    /// The document with source positions zeroed, for comparing trees
    /// that came from differently laid-out text.
    pub fn normalized(&self) -> Document {
        let mut doc = self.clone();
        for def in &mut doc.defs {
            def.line = 0;
            def.col = 0;
            for clause in &mut def.clauses {
                clause.line = 0;
                clause.col = 0;
            }
        }
        doc
    }
}
