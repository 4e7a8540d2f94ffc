//! Plain, LaTeX and JSON renderings, and a parser for the plain format.
//!
//! Plain format: `-2*A^2*q^-1 + q^(1/2) + 3`. Terms are listed in graded
//! lexicographic order of their exponent vectors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Value};

use super::laurent::{Exps, LaurentPoly, Vars};
use crate::error::{Error, Result};

/// Terms sorted by total degree, then lexicographically.
pub fn sorted_terms(p: &LaurentPoly) -> Vec<(&Exps, &BigInt)> {
    let mut v: Vec<_> = p.terms().collect();
    v.sort_by_key(|(e, _)| (e.iter().sum::<i32>(), (*e).clone()));
    v
}

fn exponent_plain(twice: i32) -> String {
    if twice % 2 == 0 {
        format!("{}", twice / 2)
    } else {
        format!("({twice}/2)")
    }
}

fn monomial_plain(vars: &Vars, e: &Exps) -> Vec<String> {
    vars.names()
        .iter()
        .zip(e.iter())
        .filter(|(_, &x)| x != 0)
        .map(|(n, &x)| if x == 2 { n.clone() } else { format!("{n}^{}", exponent_plain(x)) })
        .collect()
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&plain(self))
    }
}

pub fn plain(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in sorted_terms(p).into_iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        let mut parts = monomial_plain(p.vars(), e);
        if !a.is_one() || parts.is_empty() {
            parts.insert(0, a.to_string());
        }
        out.push_str(&parts.join("*"));
    }
    out
}

fn latex_name(n: &str) -> &str {
    match n {
        "phi" => "\\phi",
        "phibar" => "\\bar\\phi",
        "D" => "D_N",
        other => other,
    }
}

pub fn latex(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in sorted_terms(p).into_iter().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        let mut body = String::new();
        for (n, &x) in p.vars().names().iter().zip(e.iter()) {
            if x == 0 {
                continue;
            }
            let name = latex_name(n);
            if x == 2 {
                body.push_str(name);
            } else if x % 2 == 0 {
                body.push_str(&format!("{name}^{{{}}}", x / 2));
            } else {
                body.push_str(&format!("{name}^{{{x}/2}}"));
            }
            body.push(' ');
        }
        let body = body.trim_end();
        if !a.is_one() || body.is_empty() {
            out.push_str(&a.to_string());
            if !body.is_empty() {
                out.push(' ');
            }
        }
        out.push_str(body);
    }
    out
}

fn coeff_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => json!(x),
        None => json!(c.to_string()),
    }
}

/// JSON list of terms; exponents are integers when possible, else strings
/// like `"1/2"`.
pub fn json_terms(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = sorted_terms(p)
        .into_iter()
        .map(|(e, c)| {
            let mut m = serde_json::Map::new();
            for (n, &x) in p.vars().names().iter().zip(e.iter()) {
                let v = if x % 2 == 0 { json!(x / 2) } else { json!(format!("{x}/2")) };
                m.insert(n.clone(), v);
            }
            m.insert("c".into(), coeff_json(c));
            Value::Object(m)
        })
        .collect();
    Value::Array(terms)
}

pub(crate) struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0 }
    }

    pub(crate) fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", b as char))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn rest(&mut self) -> &'a str {
        self.skip_ws();
        std::str::from_utf8(&self.s[self.pos..]).unwrap_or("")
    }

    pub(crate) fn advance(&mut self, n: usize) {
        self.pos += n;
    }

    fn unsigned(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(t.parse().unwrap())
    }

    pub(crate) fn int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let v = self.unsigned()?;
        let v = if neg { -v } else { v };
        match v.to_i64() {
            Some(x) => Ok(x),
            None => self.err("integer out of range"),
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    /// Doubled exponent: `n`, `-n`, `(n)` or `(n/2)`.
    fn exponent(&mut self) -> Result<i32> {
        let twice = if self.eat(b'(') {
            let n = self.int()?;
            let twice = if self.eat(b'/') {
                let d = self.int()?;
                if d != 2 {
                    return self.err("only halves are allowed as fractional exponents");
                }
                n
            } else {
                2 * n
            };
            self.expect(b')')?;
            twice
        } else {
            2 * self.int()?
        };
        i32::try_from(twice).or_else(|_| self.err("exponent out of range"))
    }

    fn term(&mut self, vars: &Vars) -> Result<(Exps, BigInt)> {
        let mut e: Exps = Exps::from_elem(0, vars.len());
        let mut c = BigInt::one();
        let mut seen = false;
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    c *= self.unsigned()?;
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    let save = self.pos;
                    let name = self.ident().unwrap();
                    let Some(i) = vars.index(&name) else {
                        self.pos = save;
                        return self.err(format!("unknown variable '{name}'"));
                    };
                    let x = if self.eat(b'^') { self.exponent()? } else { 2 };
                    e[i] += x;
                }
                _ => {
                    if !seen {
                        return self.err("expected a term");
                    }
                    return Ok((e, c));
                }
            }
            seen = true;
            if !self.eat(b'*') {
                match self.peek() {
                    Some(b) if b.is_ascii_alphanumeric() => {}
                    _ => return Ok((e, c)),
                }
            }
        }
    }

    pub(crate) fn sum(&mut self, vars: &Vars) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero(vars);
        let mut neg = self.eat(b'-');
        loop {
            let (e, c) = self.term(vars)?;
            p.add_term(e, if neg { -c } else { c });
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(p);
            }
        }
    }
}

/// Parse the plain format over the given variables.
pub fn parse_plain(s: &str, vars: &Vars) -> Result<LaurentPoly> {
    let mut p = Parser::new(s);
    if p.rest() == "0" {
        return Ok(LaurentPoly::zero(vars));
    }
    let r = p.sum(vars)?;
    if !p.at_end() {
        return p.err("trailing input");
    }
    Ok(r)
}
