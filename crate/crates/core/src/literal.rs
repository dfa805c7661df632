//! Text forms used on the command line and in reports.
//!
//! ```text
//! divisor   := int "*h" ("+" | "-") digits "*f"        e.g. -2*h+3*f
//! type      := "(" int ("," int)* ")"                  e.g. (2,1,0)
//! bundle    := "r=" int "; c1=" divisor "; c2=" int "; e=" int "; q=" int
//! summands  := divisor ("," divisor)*
//! rational  := int ("/" digits)?
//! cycle     := rational ";" rational ";" rational ";" rational   (r0; h; f; point)
//! curve     := rational ";" rational                             (rank; point)
//! ```
//!
//! Errors carry the 1-based column of the offending character.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use thiserror::Error;

use crate::bundle::BundleNumerics;
use crate::geometry::{CurveCycle, CycleClass, DivisorClass, RationalClass, SurfaceGeometry};
use crate::splitting::SplittingType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid {literal} literal {input:?} at column {column}: {message}")]
pub struct ParseError {
    pub literal: &'static str,
    pub input: String,
    pub column: usize,
    pub message: String,
}

struct Cursor<'a> {
    literal: &'static str,
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(literal: &'static str, input: &'a str) -> Self {
        Self { literal, input, pos: 0 }
    }

    fn error_at(&self, pos: usize, message: impl Into<String>) -> ParseError {
        ParseError { literal: self.literal, input: self.input.to_string(), column: pos + 1, message: message.into() }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.input[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(format!("expected {token:?}")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn skip_spaces(&mut self) {
        while self.eat(' ') {}
    }

    fn digits(&mut self) -> Result<u64, ParseError> {
        let start = self.pos;
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected digits"));
        }
        self.pos += len;
        self.input[start..self.pos].parse().map_err(|_| self.error_at(start, "integer out of range"))
    }

    fn signed(&mut self, sign: i64) -> Result<i64, ParseError> {
        let start = self.pos;
        let magnitude = self.digits()?;
        i64::try_from(magnitude).map(|m| sign * m).map_err(|_| self.error_at(start, "integer out of range"))
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        self.signed(sign)
    }

    fn rational(&mut self) -> Result<Rational64, ParseError> {
        let num = self.int()?;
        if !self.eat('/') {
            return Ok(Rational64::from_integer(num));
        }
        let den_pos = self.pos;
        let den = self.signed(1)?;
        if den == 0 {
            return Err(self.error_at(den_pos, "zero denominator"));
        }
        Ok(Rational64::new(num, den))
    }

    fn divisor(&mut self) -> Result<DivisorClass, ParseError> {
        let a = self.int()?;
        self.expect("*h")?;
        let sign = if self.eat('+') {
            1
        } else if self.eat('-') {
            -1
        } else {
            return Err(self.error("expected '+' or '-' before the f-coefficient"));
        };
        let b = self.signed(sign)?;
        self.expect("*f")?;
        Ok(DivisorClass::new(a, b))
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos == self.input.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

impl FromStr for DivisorClass {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new("divisor", s);
        let d = cur.divisor()?;
        cur.finish()?;
        Ok(d)
    }
}

impl FromStr for SplittingType {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new("splitting type", s);
        cur.expect("(")?;
        let mut parts = Vec::new();
        loop {
            let start = cur.pos;
            let v = cur.int()?;
            if let Some(&prev) = parts.last() {
                if v > prev {
                    return Err(
                        cur.error_at(start, format!("{v} exceeds preceding part {prev}; parts must be nonincreasing"))
                    );
                }
            }
            parts.push(v);
            if cur.eat(',') {
                continue;
            }
            cur.expect(")")?;
            break;
        }
        cur.finish()?;
        Ok(SplittingType::new(parts).expect("validated while parsing"))
    }
}

impl FromStr for BundleNumerics {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new("bundle", s);
        cur.expect("r=")?;
        let r_pos = cur.pos;
        let r = cur.int()?;
        cur.expect(";")?;
        cur.skip_spaces();
        cur.expect("c1=")?;
        let c1 = cur.divisor()?;
        cur.expect(";")?;
        cur.skip_spaces();
        cur.expect("c2=")?;
        let c2 = cur.int()?;
        cur.expect(";")?;
        cur.skip_spaces();
        cur.expect("e=")?;
        let e_pos = cur.pos;
        let e = cur.int()?;
        cur.expect(";")?;
        cur.skip_spaces();
        cur.expect("q=")?;
        let q = cur.int()?;
        cur.finish()?;
        let g = SurfaceGeometry::new(q, e).map_err(|err| cur.error_at(e_pos, err.to_string()))?;
        BundleNumerics::new(g, r, c1, c2).map_err(|err| cur.error_at(r_pos, err.to_string()))
    }
}

/// Parses a comma-separated list of divisor literals.
pub fn parse_summands(s: &str) -> Result<Vec<DivisorClass>, ParseError> {
    let mut cur = Cursor::new("summand list", s);
    let mut out = vec![cur.divisor()?];
    while cur.eat(',') {
        out.push(cur.divisor()?);
    }
    cur.finish()?;
    Ok(out)
}

pub fn format_summands(summands: &[DivisorClass]) -> String {
    summands.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Exact rational in lowest terms, `p` or `p/q`.
pub fn format_rational(x: Rational64) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational64, ParseError> {
    let mut cur = Cursor::new("rational", s);
    let x = cur.rational()?;
    cur.finish()?;
    Ok(x)
}

pub fn parse_cycle(s: &str) -> Result<CycleClass, ParseError> {
    let mut cur = Cursor::new("cycle", s);
    let mut fields = [Rational64::from_integer(0); 4];
    for (i, field) in fields.iter_mut().enumerate() {
        if i > 0 {
            cur.expect(";")?;
        }
        *field = cur.rational()?;
    }
    cur.finish()?;
    let [r0, a, b, p2] = fields;
    Ok(CycleClass { r0, d1: RationalClass::new(a, b), p2 })
}

pub fn format_cycle(x: &CycleClass) -> String {
    format!("{};{};{};{}", x.r0, x.d1.a, x.d1.b, x.p2)
}

pub fn parse_curve_cycle(s: &str) -> Result<CurveCycle, ParseError> {
    let mut cur = Cursor::new("curve cycle", s);
    let r0 = cur.rational()?;
    cur.expect(";")?;
    let p1 = cur.rational()?;
    cur.finish()?;
    Ok(CurveCycle::new(r0, p1))
}

pub fn format_curve_cycle(x: &CurveCycle) -> String {
    format!("{};{}", x.r0, x.p1)
}

impl fmt::Display for BundleNumerics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "r={}; c1={}; c2={}; e={}; q={}",
            self.rank(),
            self.c1(),
            self.c2(),
            self.geometry().e(),
            self.geometry().q()
        )
    }
}
