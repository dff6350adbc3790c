//! Tokenizer for `.qmon` documents. Words (including bare numerals) are
//! identifiers; `#` starts a comment running to the end of the line.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semicolon,
    Comma,
    Arrow,
    Leq,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Ident(s) => write!(f, "`{s}`"),
            TokenKind::LBrace => f.write_str("`{`"),
            TokenKind::RBrace => f.write_str("`}`"),
            TokenKind::LParen => f.write_str("`(`"),
            TokenKind::RParen => f.write_str("`)`"),
            TokenKind::Semicolon => f.write_str("`;`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Arrow => f.write_str("`->`"),
            TokenKind::Leq => f.write_str("`<=`"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub col: usize,
}

/// A lexical diagnostic: an unexpected character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub line: usize,
    pub col: usize,
    pub ch: char,
}

pub fn lex(text: &str) -> Result<Vec<Token>, LexError> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut col) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, col);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while let Some(&c) = chars.peek() {
                if c == '\n' {
                    break;
                }
                bump(&mut chars);
            }
            continue;
        }
        let kind = match c {
            '{' => {
                bump(&mut chars);
                TokenKind::LBrace
            }
            '}' => {
                bump(&mut chars);
                TokenKind::RBrace
            }
            '(' => {
                bump(&mut chars);
                TokenKind::LParen
            }
            ')' => {
                bump(&mut chars);
                TokenKind::RParen
            }
            ';' => {
                bump(&mut chars);
                TokenKind::Semicolon
            }
            ',' => {
                bump(&mut chars);
                TokenKind::Comma
            }
            '-' => {
                bump(&mut chars);
                if chars.peek() == Some(&'>') {
                    bump(&mut chars);
                    TokenKind::Arrow
                } else {
                    return Err(LexError { line: tl, col: tc, ch: '-' });
                }
            }
            '<' => {
                bump(&mut chars);
                if chars.peek() == Some(&'=') {
                    bump(&mut chars);
                    TokenKind::Leq
                } else {
                    return Err(LexError { line: tl, col: tc, ch: '<' });
                }
            }
            c if c.is_alphanumeric() || c == '_' || c == '.' || c == '*' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' || c == '.' || c == '*' {
                        word.push(bump(&mut chars));
                    } else {
                        break;
                    }
                }
                TokenKind::Ident(word)
            }
            other => return Err(LexError { line: tl, col: tc, ch: other }),
        };
        tokens.push(Token { kind, line: tl, col: tc });
    }
    Ok(tokens)
}
