//! Expressions: `expr := NAT | PERM | IDENT | IDENT '(' [expr (',' expr)*] ')'`.
//!
//! Permutation literals are `[p0 p1 ...]` (commas are accepted as well).
//! Identifiers start with a letter, `_`, `.` or `/` and may continue with
//! digits, `-` and `?`, so that both `simple?` and file paths like
//! `groups/z30.grp` are single tokens.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Nat(usize),
    Perm(Vec<usize>),
    Ident(String),
    Call(String, Vec<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Nat(n) => write!(f, "{n}"),
            Expr::Perm(v) => {
                f.write_str("[")?;
                for (i, k) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{k}")?;
                }
                f.write_str("]")
            }
            Expr::Ident(s) => f.write_str(s),
            Expr::Call(name, args) => {
                write!(f, "{name}(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at offset {}: expected ", self.offset)?;
        for (i, e) in self.expected.iter().enumerate() {
            if i > 0 {
                f.write_str(if i + 1 == self.expected.len() { " or " } else { ", " })?;
            }
            f.write_str(e)?;
        }
        match self.found {
            Some(c) => write!(f, ", found `{c}`"),
            None => f.write_str(", found end of input"),
        }
    }
}

impl std::error::Error for ParseError {}

pub fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || matches!(c, '_' | '.' | '/')
}

pub fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '/' | '-' | '?')
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        ParseError {
            offset: self.pos,
            expected,
            found: self.peek(),
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !pred(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn nat(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| ParseError {
            offset: start,
            expected: vec!["a number that fits in 64 bits"],
            found: digits.chars().next(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Expr::Nat(self.nat()?)),
            Some('[') => self.perm(),
            Some(c) if is_ident_start(c) => {
                let name = self.take_while(is_ident_char).to_string();
                self.skip_ws();
                if self.peek() == Some('(') {
                    self.pos += 1;
                    Ok(Expr::Call(name, self.args()?))
                } else {
                    Ok(Expr::Ident(name))
                }
            }
            _ => Err(self.error(vec!["a number", "`[`", "an identifier"])),
        }
    }

    fn perm(&mut self) -> Result<Expr, ParseError> {
        self.pos += 1;
        let mut images = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => images.push(self.nat()?),
                Some(']') if !images.is_empty() => {
                    self.pos += 1;
                    return Ok(Expr::Perm(images));
                }
                Some(',') if !images.is_empty() => self.pos += 1,
                _ if images.is_empty() => return Err(self.error(vec!["a number"])),
                _ => return Err(self.error(vec!["a number", "`]`"])),
            }
        }
    }

    fn args(&mut self) -> Result<Vec<Expr>, ParseError> {
        let mut args = Vec::new();
        self.skip_ws();
        if self.peek() == Some(')') {
            self.pos += 1;
            return Ok(args);
        }
        loop {
            args.push(self.expr()?);
            self.skip_ws();
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(')') => {
                    self.pos += 1;
                    return Ok(args);
                }
                _ => return Err(self.error(vec!["`)`", "`,`"])),
            }
        }
    }
}

/// Parses one complete expression; trailing input is an error.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < src.len() {
        return Err(p.error(vec!["end of input"]));
    }
    Ok(e)
}
