//! Continued fractions with even coefficients.

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EvenCF {
    /// `[a1, a2, ...]` for `a1 + 1/(a2 + 1/(...))`.
    pub coefficients: Vec<i64>,
    /// The fraction actually expanded, when both parts of the input were odd.
    pub adjusted: Option<(i64, i64)>,
}

impl EvenCF {
    /// Evaluate back to a fraction.
    pub fn value(&self) -> Ratio<i64> {
        eval_cf(&self.coefficients)
    }
}

/// Value of `a1 + 1/(a2 + 1/(...))`; a zero tail evaluates as infinity
/// and is avoided by construction.
pub fn eval_cf(coefficients: &[i64]) -> Ratio<i64> {
    let mut it = coefficients.iter().rev();
    let mut acc = Ratio::from_integer(*it.next().expect("nonempty expansion"));
    for &a in it {
        acc = Ratio::from_integer(a) + acc.recip();
    }
    acc
}

/// The unique expansion of `p/q` with all coefficients even. If both `p`
/// and `q` are odd, `p/q` is first replaced by `(p - q)/q` for `p > 0` and
/// by `(p + q)/q` otherwise.
pub fn even_continued_fraction(p: i64, q: i64) -> Result<EvenCF> {
    if q == 0 {
        return Err(Error::ZeroDenominator);
    }
    if p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let (mut a, mut b) = (p, q);
    let mut adjusted = None;
    if a.is_odd() && b.is_odd() {
        a = if a > 0 { a - b } else { a + b };
        adjusted = Some((a, b));
    }
    let mut coefficients = Vec::new();
    loop {
        // Even integer nearest to a/b; ties cannot occur since a/b is
        // never an odd integer here.
        let c = 2 * (Ratio::new(a, 2 * b)).round().to_integer();
        coefficients.push(c);
        let r = a - c * b;
        if r == 0 {
            break;
        }
        (a, b) = (b, r);
    }
    Ok(EvenCF { coefficients, adjusted })
}
