use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use super::kauff::{uq_vars, KauffPoly};
use super::laurent::{LaurentPoly, Vars};
use super::text;
use super::value::{aq_vars, bracket, PolyValue};
use crate::error::{Error, Result};

/// Variables `(phi, phibar, D)`.
pub fn bip_vars() -> &'static Vars {
    static V: OnceLock<Vars> = OnceLock::new();
    V.get_or_init(|| Vars::new(&["phi", "phibar", "D"]))
}

const PHI: usize = 0;
const PHIBAR: usize = 1;
const D: usize = 2;

/// Polynomial in `phi = A{q}`, `phibar = -A^-1{q}` and `D_N = {A}/{q}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipPoly(LaurentPoly);

impl BipPoly {
    pub fn from_poly(p: LaurentPoly) -> Self {
        assert_eq!(p.vars(), bip_vars());
        BipPoly(p)
    }

    pub fn zero() -> Self {
        BipPoly(LaurentPoly::zero(bip_vars()))
    }

    pub fn one() -> Self {
        BipPoly(LaurentPoly::one(bip_vars()))
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        BipPoly(LaurentPoly::constant(bip_vars(), c))
    }

    /// `c * phi^(a/2) phibar^(b/2) D^d`.
    pub fn monomial(c: impl Into<BigInt>, twice_phi: i32, twice_phibar: i32, d: i32) -> Self {
        BipPoly(LaurentPoly::monomial(bip_vars(), c, &[twice_phi, twice_phibar, 2 * d]))
    }

    /// `phi^(n/2)`.
    pub fn phi_half(n: i32) -> Self {
        Self::monomial(1, n, 0, 0)
    }

    /// `phibar^(n/2)`.
    pub fn phibar_half(n: i32) -> Self {
        Self::monomial(1, 0, n, 0)
    }

    pub fn d() -> Self {
        Self::monomial(1, 0, 0, 1)
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pow(&self, n: u32) -> Self {
        BipPoly(self.0.pow(n))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        BipPoly(self.0.scale(c))
    }

    /// Multiply by `phi^(a/2) phibar^(b/2)`.
    pub fn shift_half(&self, twice_phi: i32, twice_phibar: i32) -> Self {
        BipPoly(self.0.shift(&[twice_phi, twice_phibar, 0]))
    }

    /// Substitute `phi = A{q}`, `phibar = -A^-1{q}`, `D_N = {A}/{q}`.
    pub fn substitute(&self) -> Result<PolyValue> {
        let names = bip_vars().names();
        let mut k = 0i32;
        for (e, _) in self.0.terms() {
            for i in [PHI, PHIBAR, D] {
                if e[i] % 2 != 0 {
                    return Err(Error::Unnormalized(names[i].clone()));
                }
            }
            if e[D] < 0 {
                return Err(Error::Input("negative power of D_N".into()));
            }
            k = k.max((e[D] - e[PHI] - e[PHIBAR]) / 2);
        }
        let qb = bracket("q");
        let ab = bracket("A");
        let mut qpow: Vec<LaurentPoly> = vec![LaurentPoly::one(aq_vars())];
        let mut apow: Vec<LaurentPoly> = vec![LaurentPoly::one(aq_vars())];
        let mut num = LaurentPoly::zero(aq_vars());
        for (e, c) in self.0.terms() {
            let (a, b, d) = (e[PHI] / 2, e[PHIBAR] / 2, e[D] / 2);
            // (-1)^b A^(a-b) {A}^d {q}^(a+b-d+k)
            let qe = (a + b - d + k) as usize;
            while qpow.len() <= qe {
                let next = qpow.last().unwrap() * &qb;
                qpow.push(next);
            }
            while apow.len() <= d as usize {
                let next = apow.last().unwrap() * &ab;
                apow.push(next);
            }
            let sign = if b.is_odd() { -c.clone() } else { c.clone() };
            let t = (&apow[d as usize] * &qpow[qe]).shift(&[2 * (a - b), 0]);
            num += &t.scale(&sign);
        }
        Ok(PolyValue::new(num, k as u32))
    }

    /// Substitute `phi -> -q`, `phibar -> -q^-1`, `D_N -> q + q^-1`, with
    /// `phi^(1/2) -> u` and `phibar^(1/2) -> u^-1`.
    pub fn reduce_to_jones_vars(&self) -> KauffPoly {
        let d2 = KauffPoly::d2();
        let mut dpow = vec![KauffPoly::one()];
        let mut out = KauffPoly::zero();
        for (e, c) in self.0.terms() {
            let d = (e[D] / 2) as usize;
            while dpow.len() <= d {
                let next = dpow.last().unwrap() * &d2;
                dpow.push(next);
            }
            let u = e[PHI] - e[PHIBAR];
            let mono = KauffPoly::canonical(&LaurentPoly::monomial(uq_vars(), c.clone(), &[2 * u, 0]));
            out = &out + &(&mono * &dpow[d]);
        }
        out
    }

    /// Exact value at a rational point, through the substitution.
    pub fn eval_substituted(&self, a: &BigRational, q: &BigRational) -> Result<BigRational> {
        self.substitute()?.eval(a, q)
    }
}

impl<'a> Add<&'a BipPoly> for &'a BipPoly {
    type Output = BipPoly;
    fn add(self, rhs: &BipPoly) -> BipPoly {
        BipPoly(&self.0 + &rhs.0)
    }
}

impl<'a> Sub<&'a BipPoly> for &'a BipPoly {
    type Output = BipPoly;
    fn sub(self, rhs: &BipPoly) -> BipPoly {
        BipPoly(&self.0 - &rhs.0)
    }
}

impl<'a> Mul<&'a BipPoly> for &'a BipPoly {
    type Output = BipPoly;
    fn mul(self, rhs: &BipPoly) -> BipPoly {
        BipPoly(&self.0 * &rhs.0)
    }
}

impl Neg for &BipPoly {
    type Output = BipPoly;
    fn neg(self) -> BipPoly {
        BipPoly(-&self.0)
    }
}

impl fmt::Display for BipPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::plain(&self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::value::aq_vars;

    fn v(s: &str) -> PolyValue {
        PolyValue::parse(s).unwrap()
    }

    #[test]
    fn d_n_substitutes_to_bracket_ratio() {
        let p = BipPoly::d().substitute().unwrap();
        assert_eq!(p.qbracket_power(), 1);
        assert_eq!(p.numerator(), &bracket("A"));
    }

    #[test]
    fn phi_phibar_is_minus_bracket_squared() {
        let p = (&BipPoly::phi_half(2) * &BipPoly::phibar_half(2)).substitute().unwrap();
        assert_eq!(p, PolyValue::from_poly(-(bracket("q").pow(2))));
    }

    #[test]
    fn one_plus_d_phibar_is_a_inverse_squared() {
        let p = &BipPoly::one() + &(&BipPoly::d() * &BipPoly::phibar_half(2));
        assert_eq!(p.substitute().unwrap(), v("A^-2"));
    }

    #[test]
    fn phi_times_d_is_a_squared_minus_one() {
        let p = &BipPoly::phi_half(2) * &BipPoly::d();
        assert_eq!(p.substitute().unwrap(), v("A^2 - 1"));
    }

    #[test]
    fn half_power_is_rejected() {
        assert_eq!(BipPoly::phi_half(1).substitute(), Err(Error::Unnormalized("phi".into())));
    }

    #[test]
    fn negative_phi_power_adds_denominator() {
        let p = BipPoly::phi_half(-2).substitute().unwrap();
        assert_eq!(p, PolyValue::new(LaurentPoly::var_pow(aq_vars(), "A", -1), 1));
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(BipPoly::d().reduce_to_jones_vars(), KauffPoly::d2());
        assert_eq!(BipPoly::phi_half(1).reduce_to_jones_vars(), KauffPoly::u_pow(1));
        let s = &BipPoly::phi_half(2) + &BipPoly::d();
        assert_eq!(s.reduce_to_jones_vars(), KauffPoly::q_pow(-1));
        assert_eq!(BipPoly::phibar_half(2).reduce_to_jones_vars(), -&KauffPoly::q_pow(-1));
    }
}
