//! Pretty-printer for `.qmon` documents. Printing a parsed document and
//! reparsing yields the same tree; the formatter only chooses layout.

use crate::ast::{Clause, ClauseBody, Def, Document};
use std::fmt::Write;

pub fn print(doc: &Document) -> String {
    let mut out = String::new();
    for (i, def) in doc.defs.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        print_def(&mut out, def);
    }
    out
}

fn print_def(out: &mut String, def: &Def) {
    let _ = writeln!(out, "{} {} {{", def.kind, def.name);
    for clause in &def.clauses {
        let _ = writeln!(out, "  {};", format_clause(clause));
    }
    out.push_str("}\n");
}

fn format_clause(clause: &Clause) -> String {
    let body = match &clause.body {
        ClauseBody::Names(names) => names.join(" "),
        ClauseBody::Pairs(pairs) => pairs
            .iter()
            .map(|(a, b)| format!("{a} <= {b}"))
            .collect::<Vec<_>>()
            .join(", "),
        ClauseBody::Rows(rows) => rows
            .iter()
            .map(|r| {
                if r.tuple {
                    format!("({}) -> {}", r.lhs.join(", "), r.rhs)
                } else {
                    format!("{} -> {}", r.lhs.join(" "), r.rhs)
                }
            })
            .collect::<Vec<_>>()
            .join(", "),
        ClauseBody::Matrix(rows) => rows
            .iter()
            .map(|r| r.join(" "))
            .collect::<Vec<_>>()
            .join(", "),
    };
    if body.is_empty() {
        clause.keyword.clone()
    } else {
        format!("{} {}", clause.keyword, body)
    }
}
