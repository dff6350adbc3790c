//! Library behind the `qmon` binary: the `.qmon` definition language
//! (lexer, parser, printer, resolver) and the command runners.

pub mod ast;
pub mod lexer;
pub mod parser;
pub mod printer;
pub mod resolver;
pub mod runner;
