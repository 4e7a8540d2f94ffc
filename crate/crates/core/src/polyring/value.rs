use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};
use smallvec::smallvec;

use super::kauff::q_vars;
use super::laurent::{rational_pow, LaurentPoly, Vars};
use super::text::{self, Parser};
use crate::error::{Error, Result};

/// Variables `(A, q)`.
pub fn aq_vars() -> &'static Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| Vars::new(&["A", "q"]))
}

/// `{x} = x - x^-1` for variable `name` of `(A, q)`.
pub fn bracket(name: &str) -> LaurentPoly {
    let v = aq_vars();
    &LaurentPoly::var_pow(v, name, 1) - &LaurentPoly::var_pow(v, name, -1)
}

/// Exact quotient by `q - q^-1`, or `None` if it does not divide.
fn div_q_bracket(p: &LaurentPoly) -> Option<LaurentPoly> {
    // p / (q - q^-1) = q * p / (q^2 - 1); q^2 - 1 divides p iff it divides
    // the q-polynomial attached to every power of A.
    let mut groups: BTreeMap<i32, BTreeMap<i32, BigInt>> = BTreeMap::new();
    for (e, c) in p.terms() {
        groups.entry(e[0]).or_default().insert(e[1] / 2, c.clone());
    }
    let mut out = LaurentPoly::zero(p.vars());
    for (a, qs) in groups {
        let lo = *qs.keys().next().unwrap();
        let hi = *qs.keys().next_back().unwrap();
        let mut r: Vec<BigInt> = (lo..=hi).map(|i| qs.get(&i).cloned().unwrap_or_default()).collect();
        let n = r.len();
        if n < 3 {
            return None;
        }
        let mut g = vec![BigInt::zero(); n - 2];
        for i in (2..n).rev() {
            let c = std::mem::take(&mut r[i]);
            r[i - 2] += &c;
            g[i - 2] = c;
        }
        if !r[0].is_zero() || !r[1].is_zero() {
            return None;
        }
        for (i, c) in g.into_iter().enumerate() {
            out.add_term(smallvec![a, 2 * (lo + i as i32 + 1)], c);
        }
    }
    Some(out)
}

/// `numerator / (q - q^-1)^k` with numerator in `Z[A^±1, q^±1]`, kept with
/// the numerator not divisible by `q - q^-1` whenever `k > 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyValue {
    num: LaurentPoly,
    k: u32,
}

impl PolyValue {
    pub fn new(num: LaurentPoly, k: u32) -> Self {
        assert_eq!(num.vars(), aq_vars(), "PolyValue numerator must be over (A, q)");
        assert!(num.has_integer_exponents(), "PolyValue numerator needs integer exponents");
        let mut v = PolyValue { num, k };
        v.canonicalize();
        v
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self::new(num, 0)
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero(aq_vars()))
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one(aq_vars()))
    }

    /// `A^a q^b`.
    pub fn monomial(c: impl Into<BigInt>, a: i32, b: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(aq_vars(), c, &[2 * a, 2 * b]))
    }

    /// `D_N = {A}/{q}`.
    pub fn d_n() -> Self {
        Self::new(bracket("A"), 1)
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.k = 0;
            return;
        }
        while self.k > 0 {
            match div_q_bracket(&self.num) {
                Some(n) => {
                    self.num = n;
                    self.k -= 1;
                }
                None => break,
            }
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn qbracket_power(&self) -> u32 {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn lift(&self, k: u32) -> LaurentPoly {
        &self.num * &bracket("q").pow(k - self.k)
    }

    pub fn add(&self, other: &PolyValue) -> PolyValue {
        let k = self.k.max(other.k);
        PolyValue::new(&self.lift(k) + &other.lift(k), k)
    }

    pub fn sub(&self, other: &PolyValue) -> PolyValue {
        let k = self.k.max(other.k);
        PolyValue::new(&self.lift(k) - &other.lift(k), k)
    }

    pub fn mul(&self, other: &PolyValue) -> PolyValue {
        PolyValue::new(&self.num * &other.num, self.k + other.k)
    }

    pub fn neg(&self) -> PolyValue {
        PolyValue { num: -&self.num, k: self.k }
    }

    pub fn pow(&self, n: u32) -> PolyValue {
        PolyValue::new(self.num.pow(n), self.k * n)
    }

    /// Exact quotient. Fails when the result is not of the form
    /// `numerator / (q - q^-1)^k`.
    pub fn div(&self, other: &PolyValue) -> Result<PolyValue> {
        if other.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut den = other.num.clone();
        let mut j = 0;
        while let Some(d) = div_q_bracket(&den) {
            den = d;
            j += 1;
        }
        let num = &self.num * &bracket("q").pow(other.k);
        match num.div_exact(&den) {
            Some(n) => Ok(PolyValue::new(n, self.k + j)),
            None => Err(Error::Input(format!("({}) does not divide ({})", text::plain(&den), text::plain(&num)))),
        }
    }

    /// Multiply by `A^a q^b`.
    pub fn shift(&self, a: i32, b: i32) -> PolyValue {
        PolyValue { num: self.num.shift(&[2 * a, 2 * b]), k: self.k }
    }

    /// Substitute `A = q^n`. The result has no `A`.
    pub fn specialize_a(&self, n: i32) -> PolyValue {
        let mut num = LaurentPoly::zero(aq_vars());
        for (e, c) in self.num.terms() {
            num.add_term(smallvec![0, e[1] + n * e[0]], c.clone());
        }
        PolyValue::new(num, self.k)
    }

    /// The value as a Laurent polynomial in `q` alone, when it is one.
    pub fn as_q_poly(&self) -> Option<LaurentPoly> {
        if self.k != 0 || self.num.terms().any(|(e, _)| e[0] != 0) {
            return None;
        }
        Some(self.num.project(q_vars(), &[Some(1)]))
    }

    /// Apply `A -> A^-1, q -> q^-1`.
    pub fn invert(&self) -> PolyValue {
        // {q}^-k maps to (-1)^k {q}^-k.
        let mut num = LaurentPoly::zero(aq_vars());
        for (e, c) in self.num.terms() {
            let c = if self.k % 2 == 1 { -c.clone() } else { c.clone() };
            num.add_term(smallvec![-e[0], -e[1]], c);
        }
        PolyValue::new(num, self.k)
    }

    /// Exact value at a rational point `(A, q)`.
    pub fn eval(&self, a: &BigRational, q: &BigRational) -> Result<BigRational> {
        let den = q - q.recip_checked()?;
        if self.k > 0 && den.is_zero() {
            return Err(Error::Pole(format!("q - q^-1 vanishes at q = {q}")));
        }
        if a.is_zero() && self.num.terms().any(|(e, _)| e[0] < 0) {
            return Err(Error::Pole("A = 0".into()));
        }
        let n = self.num.eval(&[a.clone(), q.clone()])?;
        Ok(n / rational_pow(&den, self.k as i32))
    }

    pub fn to_plain(&self) -> String {
        let n = text::plain(&self.num);
        match self.k {
            0 => n,
            1 => format!("({n})/(q - q^-1)"),
            k => format!("({n})/(q - q^-1)^{k}"),
        }
    }

    pub fn to_latex(&self) -> String {
        let n = text::latex(&self.num);
        match self.k {
            0 => n,
            1 => format!("\\frac{{{n}}}{{q - q^{{-1}}}}"),
            k => format!("\\frac{{{n}}}{{(q - q^{{-1}})^{{{k}}}}}"),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "terms": text::json_terms(&self.num), "qbracket": self.k })
    }

    /// Parse the plain format, e.g. `(A^2 - 1)/(q - q^-1)^2` or `q + q^-1`.
    pub fn parse(s: &str) -> Result<PolyValue> {
        let mut p = Parser::new(s);
        let num = if p.eat(b'(') {
            let n = p.sum(aq_vars())?;
            p.expect(b')')?;
            n
        } else if p.rest() == "0" {
            p.advance(1);
            LaurentPoly::zero(aq_vars())
        } else {
            p.sum(aq_vars())?
        };
        let mut k = 0u32;
        if p.eat(b'/') {
            let den = p.rest();
            let compact: String = den.chars().filter(|c| !c.is_whitespace()).collect();
            let Some(tail) = compact.strip_prefix("(q-q^-1)") else {
                return p.err("denominator must be (q - q^-1)^k");
            };
            k = if tail.is_empty() {
                1
            } else if let Some(t) = tail.strip_prefix('^') {
                t.parse().or_else(|_| p.err("bad denominator exponent"))?
            } else {
                return p.err("trailing input");
            };
        } else if !p.at_end() {
            return p.err("trailing input");
        }
        if num.first_half_power().is_some() {
            return p.err("PolyValue exponents must be integers");
        }
        Ok(PolyValue::new(num, k))
    }
}

trait RecipChecked: Sized {
    fn recip_checked(&self) -> Result<Self>;
}

impl RecipChecked for BigRational {
    fn recip_checked(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::Pole("q = 0".into()))
        } else {
            Ok(self.recip())
        }
    }
}

impl fmt::Display for PolyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_plain())
    }
}

/// Checks that two values agree at a rational point. Agreement at a few
/// points is only evidence; symbolic equality is `==`.
pub fn agree_at(a: &PolyValue, b: &PolyValue, pa: &BigRational, pq: &BigRational) -> Result<bool> {
    Ok(a.eval(pa, pq)? == b.eval(pa, pq)?)
}
