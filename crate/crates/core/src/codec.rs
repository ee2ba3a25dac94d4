//! Text format for diagrams.
//!
//! ```text
//! record := ("C+" | "C-") "[" n "," n "," n "," n "]"
//!         | "V[" n "," n "," n "," n "]"
//!         | "M[" n "," n "," n "," n "]"
//!         | "O[" n "]"
//! ```
//!
//! Crossing records list `[under-in, over-in, under-out, over-out]`.
//! `#` starts a comment that runs to the end of the line.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use crate::diagram::{ClassicalCrossing, Diagram, Label, MarkedVertex, Node, Sign, Violation, VirtualNode};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseError {
    Syntax { line: usize, column: usize, message: &'static str },
    Empty,
    Invalid(Vec<Violation>),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, column, message } => {
                write!(f, "syntax error at {line}:{column}: {message}")
            }
            ParseError::Empty => write!(f, "empty diagram"),
            ParseError::Invalid(report) => {
                write!(f, "invalid diagram:")?;
                for v in report {
                    write!(f, " {v};")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for ParseError {}

struct Cursor<'a> {
    chars: core::iter::Peekable<core::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: &'static str) -> ParseError {
        ParseError::Syntax { line: self.line, column: self.column, message }
    }

    fn skip_blank(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while let Some(c) = self.bump() {
                    if c == '\n' {
                        break;
                    }
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(c) if c == ' ' || c == '\t') {
            self.bump();
        }
    }

    fn expect(&mut self, want: char, message: &'static str) -> Result<(), ParseError> {
        self.skip_spaces();
        if self.peek() == Some(want) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(message))
        }
    }

    fn number(&mut self) -> Result<Label, ParseError> {
        self.skip_spaces();
        let mut value: Option<Label> = None;
        while let Some(c) = self.peek() {
            let Some(digit) = c.to_digit(10) else { break };
            let v = value.unwrap_or(0);
            value = Some(
                v.checked_mul(10).and_then(|v| v.checked_add(digit)).ok_or_else(|| self.error("label too large"))?,
            );
            self.bump();
        }
        value.ok_or_else(|| self.error("expected a label"))
    }

    fn labels<const N: usize>(&mut self) -> Result<[Label; N], ParseError> {
        self.expect('[', "expected '['")?;
        let mut out = [0; N];
        for (i, slot) in out.iter_mut().enumerate() {
            if i > 0 {
                self.expect(',', "expected ','")?;
            }
            *slot = self.number()?;
        }
        self.expect(']', "expected ']'")?;
        Ok(out)
    }
}

/// Parse and validate one diagram.
pub fn parse_diagram(text: &str) -> Result<Diagram, ParseError> {
    let mut cur = Cursor::new(text);
    let mut nodes = Vec::new();
    loop {
        cur.skip_blank();
        let Some(c) = cur.bump() else { break };
        let node = match c {
            'C' => {
                let sign = match cur.bump() {
                    Some('+') => Sign::Pos,
                    Some('-') | Some('\u{2212}') => Sign::Neg,
                    _ => return Err(cur.error("expected '+' or '-' after 'C'")),
                };
                Node::Crossing(ClassicalCrossing::from_oriented(sign, cur.labels::<4>()?))
            }
            'V' => {
                let [a, b, c, d] = cur.labels::<4>()?;
                Node::Virtual(VirtualNode { a, b, c, d })
            }
            'M' => {
                let [a, b, c, d] = cur.labels::<4>()?;
                Node::Marked(MarkedVertex { a, b, c, d })
            }
            'O' => Node::Loop(cur.labels::<1>()?[0]),
            _ => return Err(cur.error("expected a record 'C+', 'C-', 'V', 'M' or 'O'")),
        };
        nodes.push(node);
        // records must be separated by whitespace
        match cur.peek() {
            None => {}
            Some(c) if c.is_whitespace() || c == '#' => {}
            Some(_) => return Err(cur.error("expected whitespace between records")),
        }
    }
    if nodes.is_empty() {
        return Err(ParseError::Empty);
    }
    Diagram::new(nodes).map_err(ParseError::Invalid)
}

/// One record per line, in node order.
pub fn serialize(d: &Diagram) -> String {
    let mut out = String::new();
    for n in d.nodes() {
        // writing into a String cannot fail
        let _ = match *n {
            Node::Crossing(x) => {
                let [ui, oi, uo, oo] = x.oriented();
                let s = if x.sign == Sign::Pos { '+' } else { '-' };
                writeln!(out, "C{s}[{ui},{oi},{uo},{oo}]")
            }
            Node::Virtual(VirtualNode { a, b, c, d }) => writeln!(out, "V[{a},{b},{c},{d}]"),
            Node::Marked(MarkedVertex { a, b, c, d }) => writeln!(out, "M[{a},{b},{c},{d}]"),
            Node::Loop(k) => writeln!(out, "O[{k}]"),
        };
    }
    out
}
