//! Text format for polynomials: variable tokens `y0_1`, `z1_3`, rationals
//! `p` or `p/q`, operators `+ - *`, parentheses, postfix `^#` for the
//! involution. Whitespace is insignificant; juxtaposition is not a product.

use super::{Mode, SuperPolynomial, VarType, Variable};
use crate::rat::{parse_rat, Rat};
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Sharp,
    Rational(Rat),
    Var(Variable),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'^' => {
                if bytes.get(i + 1) == Some(&b'#') {
                    out.push((i, Tok::Sharp));
                    i += 2;
                } else {
                    return err(i, "expected '#' after '^'");
                }
            }
            b'y' | b'z' => {
                let start = i;
                let parity = match bytes.get(i + 1) {
                    Some(b'0') => 0,
                    Some(b'1') => 1,
                    _ => {
                        return err(
                            start,
                            "unknown variable token (expected y0_, z0_, y1_ or z1_)",
                        );
                    }
                };
                if bytes.get(i + 2) != Some(&b'_') {
                    return err(
                        start,
                        "unknown variable token (expected y0_, z0_, y1_ or z1_)",
                    );
                }
                let digits_start = i + 3;
                let mut j = digits_start;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == digits_start {
                    return err(start, "missing variable index");
                }
                let index: u32 = text[digits_start..j]
                    .parse()
                    .map_err(|_| ParseError { pos: start, msg: "variable index out of range".into() })?;
                if index == 0 {
                    return err(start, "variable index must be at least 1");
                }
                let vtype = match (b, parity) {
                    (b'y', 0) => VarType::Y0,
                    (b'y', 1) => VarType::Y1,
                    (b'z', 0) => VarType::Z0,
                    _ => VarType::Z1,
                };
                out.push((start, Tok::Var(Variable::new(vtype, index))));
                i = j;
            }
            b'0'..=b'9' => {
                let start = i;
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if bytes.get(j) == Some(&b'/') {
                    j += 1;
                    let denom_start = j;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if j == denom_start {
                        return err(start, "malformed rational: missing denominator");
                    }
                }
                let value = parse_rat(&text[start..j])
                    .map_err(|e| ParseError { pos: start, msg: format!("malformed rational: {e}") })?;
                out.push((start, Tok::Rational(value)));
                i = j;
            }
            _ => {
                return err(i, format!("unexpected character {:?}", text[i..].chars().next().unwrap()));
            }
        }
    }
    Ok(out)
}

/// Intermediate fold value: scalars only embed into the non-unitary algebra
/// as 0, so they are tracked separately until they multiply a variable.
enum Value {
    Scalar(Rat),
    Poly(SuperPolynomial),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    mode: Mode,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_pos(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let negate = self.eat(&Tok::Minus);
        let mut acc = self.term()?;
        if negate {
            acc = neg_value(acc);
        }
        loop {
            let op_pos = self.peek_pos();
            if self.eat(&Tok::Plus) {
                let rhs = self.term()?;
                acc = add_value(acc, rhs, op_pos)?;
            } else if self.eat(&Tok::Minus) {
                let rhs = self.term()?;
                acc = add_value(acc, neg_value(rhs), op_pos)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            let rhs = self.factor()?;
            acc = mul_value(acc, rhs);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value, ParseError> {
        let mut v = self.primary()?;
        while self.eat(&Tok::Sharp) {
            v = match v {
                Value::Scalar(c) => Value::Scalar(c),
                Value::Poly(f) => Value::Poly(f.sharp()),
            };
        }
        Ok(v)
    }

    fn primary(&mut self) -> Result<Value, ParseError> {
        let pos = self.peek_pos();
        match self.bump() {
            Some(Tok::Rational(c)) => Ok(Value::Scalar(c)),
            Some(Tok::Var(v)) => Ok(Value::Poly(SuperPolynomial::variable(self.mode, v))),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return err(self.peek_pos(), "unbalanced parentheses: expected ')'");
                }
                Ok(inner)
            }
            Some(_) => err(pos, "expected a rational, a variable, or '('"),
            None => err(pos, "unexpected end of input"),
        }
    }
}

fn neg_value(v: Value) -> Value {
    match v {
        Value::Scalar(c) => Value::Scalar(-c),
        Value::Poly(f) => Value::Poly(f.neg()),
    }
}

fn add_value(a: Value, b: Value, op_pos: usize) -> Result<Value, ParseError> {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(x + y)),
        (Value::Poly(f), Value::Poly(g)) => {
            Ok(Value::Poly(f.add(&g).expect("parser uses one mode")))
        }
        (Value::Scalar(x), Value::Poly(f)) | (Value::Poly(f), Value::Scalar(x)) => {
            if x.is_zero() {
                Ok(Value::Poly(f))
            } else {
                err(op_pos, "constant term: the free algebra has no unit")
            }
        }
    }
}

fn mul_value(a: Value, b: Value) -> Value {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
        (Value::Scalar(x), Value::Poly(f)) => Value::Poly(f.scale(&x)),
        (Value::Poly(f), Value::Scalar(x)) => Value::Poly(f.scale(&x)),
        (Value::Poly(f), Value::Poly(g)) => {
            Value::Poly(f.mul(&g).expect("parser uses one mode"))
        }
    }
}

/// Parses the polynomial grammar; round-trips with the canonical printer.
pub fn parse(text: &str, mode: Mode) -> Result<SuperPolynomial, ParseError> {
    let toks = lex(text)?;
    let mut parser = Parser { toks, pos: 0, end: text.len(), mode };
    let value = parser.expr()?;
    if parser.pos != parser.toks.len() {
        let (pos, tok) = &parser.toks[parser.pos];
        let msg = if *tok == Tok::RParen {
            "unbalanced parentheses: unmatched ')'"
        } else {
            "expected an operator between factors"
        };
        return err(*pos, msg);
    }
    match value {
        Value::Poly(f) => Ok(f),
        Value::Scalar(c) if c.is_zero() => Ok(SuperPolynomial::zero(mode)),
        Value::Scalar(_) => err(0, "constant term: the free algebra has no unit"),
    }
}
