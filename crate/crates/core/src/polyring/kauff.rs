use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use smallvec::smallvec;

use super::laurent::{Exps, LaurentPoly, Vars};
use super::text;
use crate::error::{Error, Result};

/// Variables `(u, q)` where `u` stands for `(-q)^(1/2)`.
pub fn uq_vars() -> &'static Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| Vars::new(&["u", "q"]))
}

/// The single variable `q`.
pub fn q_vars() -> &'static Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| Vars::new(&["q"]))
}

/// Polynomial in `q^(±1)` and `u = (-q)^(1/2)`, kept in the canonical form
/// where every term carries `u^0` or `u^1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KauffPoly(LaurentPoly);

impl KauffPoly {
    /// Rewrite with `u^2 = -q` until every `u` exponent is 0 or 1.
    /// Input exponents must be integers.
    pub fn canonical(p: &LaurentPoly) -> Self {
        assert_eq!(p.vars(), uq_vars(), "KauffPoly needs variables (u, q)");
        let mut r = LaurentPoly::zero(uq_vars());
        for (e, c) in p.terms() {
            assert!(e[0] % 2 == 0 && e[1] % 2 == 0, "KauffPoly exponents are integers");
            let (k, rem) = (e[0] / 2).div_mod_floor(&2);
            let c = if k.is_odd() { -c.clone() } else { c.clone() };
            r.add_term(smallvec![2 * rem, e[1] + 2 * k], c);
        }
        KauffPoly(r)
    }

    pub fn zero() -> Self {
        KauffPoly(LaurentPoly::zero(uq_vars()))
    }

    pub fn one() -> Self {
        KauffPoly(LaurentPoly::one(uq_vars()))
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        KauffPoly(LaurentPoly::constant(uq_vars(), c))
    }

    /// `u^n = (-q)^(n/2)`.
    pub fn u_pow(n: i32) -> Self {
        Self::canonical(&LaurentPoly::monomial(uq_vars(), 1, &[2 * n, 0]))
    }

    pub fn q_pow(n: i32) -> Self {
        KauffPoly(LaurentPoly::monomial(uq_vars(), 1, &[0, 2 * n]))
    }

    /// `D_2 = q + q^-1`.
    pub fn d2() -> Self {
        &Self::q_pow(1) + &Self::q_pow(-1)
    }

    pub fn from_q(p: &LaurentPoly) -> Self {
        assert_eq!(p.vars(), q_vars());
        KauffPoly(p.project(uq_vars(), &[None, Some(0)]))
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    /// Drop `u`, failing if an odd power of `u` survives.
    pub fn to_q(&self) -> Result<LaurentPoly> {
        if self.0.terms().any(|(e, _)| e[0] != 0) {
            return Err(Error::InconsistentWrithe);
        }
        Ok(self.0.project(q_vars(), &[Some(1)]))
    }

    /// Apply `q -> q^-1`; `u` maps to `(-q^-1)^(1/2) = u^-1`.
    pub fn invert_q(&self) -> Self {
        let mut r = LaurentPoly::zero(uq_vars());
        for (e, c) in self.0.terms() {
            let ne: Exps = smallvec![-e[0], -e[1]];
            r.add_term(ne, c.clone());
        }
        Self::canonical(&r)
    }
}

impl<'a> Add<&'a KauffPoly> for &'a KauffPoly {
    type Output = KauffPoly;
    fn add(self, rhs: &KauffPoly) -> KauffPoly {
        KauffPoly(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a KauffPoly> for &'a KauffPoly {
    type Output = KauffPoly;
    fn sub(self, rhs: &KauffPoly) -> KauffPoly {
        KauffPoly(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a KauffPoly> for &'a KauffPoly {
    type Output = KauffPoly;
    fn mul(self, rhs: &KauffPoly) -> KauffPoly {
        KauffPoly::canonical(&(&self.0 * &rhs.0))
    }
}

impl Neg for &KauffPoly {
    type Output = KauffPoly;
    fn neg(self) -> KauffPoly {
        KauffPoly(-&self.0)
    }
}

impl fmt::Display for KauffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::plain(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u_squared_is_minus_q() {
        let u = KauffPoly::u_pow(1);
        assert_eq!(&u * &u, -&KauffPoly::q_pow(1));
    }

    #[test]
    fn canonical_u_exponent_is_bit() {
        for n in -12..=12 {
            let p = KauffPoly::u_pow(n);
            assert!(p.poly().terms().all(|(e, _)| e[0] == 0 || e[0] == 2));
            assert_eq!(&p * &KauffPoly::u_pow(-n), KauffPoly::one());
        }
    }

    #[test]
    fn squaring_agrees_with_conversion() {
        let u2 = KauffPoly::u_pow(2);
        for m in 0..8u32 {
            assert_eq!(u2.pow(m), KauffPoly::u_pow(2 * m as i32));
        }
    }

    #[test]
    fn odd_power_blocks_q_conversion() {
        assert_eq!(KauffPoly::u_pow(3).to_q(), Err(Error::InconsistentWrithe));
        let q = KauffPoly::u_pow(4).to_q().unwrap();
        assert_eq!(q, LaurentPoly::var_pow(q_vars(), "q", 2));
    }

    #[test]
    fn invert_q_is_involution() {
        let p = &(&KauffPoly::u_pow(3) + &KauffPoly::q_pow(-2)) * &KauffPoly::d2();
        assert_eq!(p.invert_q().invert_q(), p);
    }
}
