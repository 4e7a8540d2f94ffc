//! Arithmetic expressions evaluated to [`PolyValue`].
//!
//! Accepts `+ - * /`, integer powers `^n` or `^(n)`, parentheses, implicit
//! products, and the symbols `A`, `q`, `D_N` (also `D`), `phi`, `phibar`,
//! `{A}` and `{q}`. Division must be exact in the sense of
//! [`PolyValue::div`].

use super::laurent::LaurentPoly;
use super::value::{aq_vars, bracket, PolyValue};
use crate::error::{Error, Result};

fn symbol(name: &str) -> Option<PolyValue> {
    let v = aq_vars();
    let qb = PolyValue::from_poly(bracket("q"));
    Some(match name {
        "A" => PolyValue::from_poly(LaurentPoly::var_pow(v, "A", 1)),
        "q" => PolyValue::from_poly(LaurentPoly::var_pow(v, "q", 1)),
        "D" | "D_N" => PolyValue::d_n(),
        "phi" => qb.shift(1, 0),
        "phibar" => qb.shift(-1, 0).neg(),
        _ => return None,
    })
}

struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn peek(&mut self) -> Option<u8> {
        self.skip();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn skip(&mut self) {
        while self.src.as_bytes().get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn int(&mut self) -> Result<i64> {
        self.skip();
        let neg = self.eat(b'-');
        self.skip();
        let start = self.pos;
        while self.src.as_bytes().get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let v: i64 = match self.src[start..self.pos].parse() {
            Ok(v) => v,
            Err(_) => return self.err("integer out of range"),
        };
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<PolyValue> {
        let mut acc = if self.eat(b'-') { self.term()?.neg() } else { self.term()? };
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?);
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<PolyValue> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc.mul(&self.power()?);
            } else if self.eat(b'/') {
                let d = self.power()?;
                acc = match acc.div(&d) {
                    Ok(v) => v,
                    Err(e) => return self.err(&e.to_string()),
                };
            } else if matches!(self.peek(), Some(b) if b == b'(' || b == b'{' || b.is_ascii_alphanumeric()) {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<PolyValue> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let n = if self.eat(b'(') {
            let n = self.int()?;
            if !self.eat(b')') {
                return self.err("expected ')'");
            }
            n
        } else if self.eat(b'{') {
            let n = self.int()?;
            if !self.eat(b'}') {
                return self.err("expected '}'");
            }
            n
        } else {
            self.int()?
        };
        let p = base.pow(n.unsigned_abs() as u32);
        if n >= 0 {
            Ok(p)
        } else {
            match PolyValue::one().div(&p) {
                Ok(v) => Ok(v),
                Err(e) => self.err(&e.to_string()),
            }
        }
    }

    fn atom(&mut self) -> Result<PolyValue> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                Ok(v)
            }
            Some(b'{') => {
                self.pos += 1;
                self.skip();
                let v = match self.peek() {
                    Some(b'A') => bracket("A"),
                    Some(b'q') => bracket("q"),
                    _ => return self.err("expected {A} or {q}"),
                };
                self.pos += 1;
                if !self.eat(b'}') {
                    return self.err("expected '}'");
                }
                Ok(PolyValue::from_poly(v))
            }
            Some(b) if b.is_ascii_digit() => {
                let n = self.int()?;
                Ok(PolyValue::monomial(n, 0, 0))
            }
            Some(b) if b.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.src.as_bytes().get(self.pos).is_some_and(|b| b.is_ascii_alphabetic() || *b == b'_') {
                    self.pos += 1;
                }
                let name = &self.src[start..self.pos];
                match symbol(name) {
                    Some(v) => Ok(v),
                    None => {
                        self.pos = start;
                        self.err(&format!("unknown symbol '{name}'"))
                    }
                }
            }
            _ => self.err("expected a value"),
        }
    }
}

/// Evaluate an expression such as `(A^2 - q^2)(A - A^-1)/(A^4 q^2 (q - q^-1))`.
pub fn eval_expr(s: &str) -> Result<PolyValue> {
    let mut e = ExprParser { src: s, pos: 0 };
    let v = e.expr()?;
    if e.peek().is_some() {
        return e.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_values() {
        assert_eq!(eval_expr("D_N").unwrap(), PolyValue::d_n());
        assert_eq!(eval_expr("{A}/{q}").unwrap(), PolyValue::d_n());
        assert_eq!(eval_expr("1 + D_N phibar").unwrap(), PolyValue::monomial(1, -2, 0));
        assert_eq!(eval_expr("phi*D_N").unwrap(), PolyValue::parse("A^2 - 1").unwrap());
    }

    #[test]
    fn division_by_polynomials() {
        let v = eval_expr("(A^4 - 1)/(A^2 + 1)").unwrap();
        assert_eq!(v, PolyValue::parse("A^2 - 1").unwrap());
        assert_eq!(eval_expr("(q^4 - 1)/(q^2 - 1)").unwrap(), PolyValue::parse("q^2 + 1").unwrap());
        assert!(eval_expr("1/(A + 1)").is_err());
    }

    #[test]
    fn negative_powers_and_implicit_products() {
        assert_eq!(eval_expr("A^-2 q^(-1) 3").unwrap(), PolyValue::monomial(3, -2, -1));
        assert_eq!(eval_expr("(q - q^-1)^-2 (q - q^-1)^2").unwrap(), PolyValue::one());
    }

    #[test]
    fn errors_have_positions() {
        assert!(matches!(eval_expr("A + x"), Err(crate::Error::Parse { pos: 4, .. })));
        assert!(eval_expr("(A").is_err());
    }
}
