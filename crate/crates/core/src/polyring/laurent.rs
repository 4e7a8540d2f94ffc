use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector; every entry is twice the actual exponent.
pub type Exps = SmallVec<[i32; 3]>;

/// An ordered set of variable names.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new(names: &[&str]) -> Self {
        Vars(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    fn same(&self, other: &Vars) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}

/// Sparse Laurent polynomial with integer coefficients and half-integer
/// exponents over a fixed ordered set of variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exps, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, c, &vec![0; vars.len()])
    }

    /// `c * prod x_i^(twice_exps[i] / 2)`.
    pub fn monomial(vars: &Vars, c: impl Into<BigInt>, twice_exps: &[i32]) -> Self {
        assert_eq!(twice_exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        p.add_term(Exps::from_slice(twice_exps), c.into());
        p
    }

    /// The variable `name` raised to the integer power `e`.
    pub fn var_pow(vars: &Vars, name: &str, e: i32) -> Self {
        Self::var_half_pow(vars, name, 2 * e)
    }

    /// The variable `name` raised to `twice_e / 2`.
    pub fn var_half_pow(vars: &Vars, name: &str, twice_e: i32) -> Self {
        let i = vars.index(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        let mut e = vec![0; vars.len()];
        e[i] = twice_e;
        Self::monomial(vars, 1, &e)
    }

    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exps, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of the doubled exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exps, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, twice_exps: &[i32]) -> BigInt {
        self.terms.get(twice_exps).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exps, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn check_vars(&self, other: &LaurentPoly) -> Result<()> {
        if self.vars.same(&other.vars) {
            Ok(())
        } else {
            Err(Error::VarMismatch(self.vars.to_string(), other.vars.to_string()))
        }
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_vars(other)?;
        if let Some(r) = self.mul_small(other) {
            return Ok(r);
        }
        let mut r = LaurentPoly::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Exps = e1.iter().zip(e2.iter()).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        Ok(r)
    }

    /// Product with machine-word coefficients, or `None` on overflow.
    fn mul_small(&self, other: &LaurentPoly) -> Option<LaurentPoly> {
        fn small(p: &LaurentPoly) -> Option<Vec<(&Exps, i128)>> {
            p.terms.iter().map(|(e, c)| c.to_i64().map(|c| (e, c as i128))).collect()
        }
        let (a, b) = (small(self)?, small(other)?);
        let mut prods: Vec<(Exps, i128)> = Vec::with_capacity(a.len() * b.len());
        for (e1, c1) in &a {
            for (e2, c2) in &b {
                prods.push((e1.iter().zip(e2.iter()).map(|(x, y)| x + y).collect(), c1 * c2));
            }
        }
        prods.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        let mut merged: Vec<(Exps, i128)> = Vec::with_capacity(prods.len());
        for (e, c) in prods {
            match merged.last_mut() {
                Some((le, lc)) if *le == e => *lc = lc.checked_add(c)?,
                _ => merged.push((e, c)),
            }
        }
        let terms = merged.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (e, BigInt::from(c))).collect();
        Some(LaurentPoly { vars: self.vars.clone(), terms })
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(&self.vars);
        }
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiply by the monomial with the given doubled exponents.
    pub fn shift(&self, twice_exps: &[i32]) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(twice_exps).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Index of the first variable carrying an odd doubled exponent, if any.
    pub fn first_half_power(&self) -> Option<usize> {
        self.terms.keys().find_map(|e| e.iter().position(|x| x.rem_euclid(2) != 0))
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.first_half_power().is_none()
    }

    /// Rename the variables without touching the terms.
    pub fn with_vars(&self, vars: &Vars) -> LaurentPoly {
        assert_eq!(vars.len(), self.vars.len());
        LaurentPoly { vars: vars.clone(), terms: self.terms.clone() }
    }

    /// Reorder/select variables: variable `i` of the result takes the
    /// exponents of variable `map[i]` of `self`. Variables not selected must
    /// carry exponent zero in every term.
    pub fn project(&self, vars: &Vars, map: &[Option<usize>]) -> LaurentPoly {
        let mut r = LaurentPoly::zero(vars);
        for (e, c) in &self.terms {
            let ne: Exps = map.iter().map(|m| m.map_or(0, |i| e[i])).collect();
            let dropped = (0..e.len()).filter(|i| !map.contains(&Some(*i))).any(|i| e[i] != 0);
            assert!(!dropped, "project drops a variable with nonzero exponent");
            r.add_term(ne, c.clone());
        }
        r
    }

    /// Exact evaluation at a rational point. Exponents must be integers.
    pub fn eval(&self, point: &[BigRational]) -> Result<BigRational> {
        assert_eq!(point.len(), self.vars.len());
        let mut sum = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, &x) in e.iter().enumerate() {
                if x % 2 != 0 {
                    return Err(Error::Unnormalized(self.vars.0[i].clone()));
                }
                let k = x / 2;
                if k == 0 {
                    continue;
                }
                if point[i].is_zero() && k < 0 {
                    return Err(Error::Pole(format!("{} = 0", self.vars.0[i])));
                }
                t *= rational_pow(&point[i], k);
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Minimum and maximum doubled exponent of variable `i`.
    pub fn degree_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        self.check_vars(d).ok()?;
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let n = self.vars.len();
        // Degrees add under multiplication, so every quotient exponent lies
        // in a box fixed by the degree ranges of self and d.
        let bounds: Vec<(i32, i32)> = (0..n)
            .map(|i| {
                let (a, b) = self.degree_range(i).unwrap();
                let (c, e) = d.degree_range(i).unwrap();
                (a - c, b - e)
            })
            .collect();
        let (ld, cd) = d.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut r = self.clone();
        let mut q = LaurentPoly::zero(&self.vars);
        while let Some((lr, cr)) = r.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            let m: Exps = lr.iter().zip(&ld).map(|(a, b)| a - b).collect();
            if m.iter().zip(&bounds).any(|(x, (lo, hi))| x < lo || x > hi) {
                return None;
            }
            if !(&cr % &cd).is_zero() {
                return None;
            }
            let c = &cr / &cd;
            r = &r - &d.shift(&m).scale(&c);
            q.add_term(m, c);
        }
        Some(q)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }
}

pub(crate) fn rational_pow(x: &BigRational, k: i32) -> BigRational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, k.unsigned_abs() as usize)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("LaurentPoly add")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.check_vars(rhs).expect("LaurentPoly add");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.check_vars(rhs).expect("LaurentPoly sub");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        r -= rhs;
        r
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("LaurentPoly mul")
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn aq() -> Vars {
        Vars::new(&["A", "q"])
    }

    #[test]
    fn d2_from_sum() {
        let v = aq();
        let d2 = &LaurentPoly::var_pow(&v, "q", 1) + &LaurentPoly::var_pow(&v, "q", -1);
        assert_eq!(d2.len(), 2);
        assert_eq!(d2.coeff(&[0, 2]), BigInt::from(1));
        assert_eq!(d2.coeff(&[0, -2]), BigInt::from(1));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let v = aq();
        let b = &LaurentPoly::var_pow(&v, "q", 1) - &LaurentPoly::var_pow(&v, "q", -1);
        assert!((&b + &(-&b)).is_zero());
        assert_eq!(&b + &LaurentPoly::zero(&v), b);
    }

    #[test]
    fn half_powers_add() {
        let v = Vars::new(&["phi"]);
        let h = LaurentPoly::var_half_pow(&v, "phi", 1);
        assert!(!h.has_integer_exponents());
        assert_eq!(&h * &h, LaurentPoly::var_pow(&v, "phi", 1));
    }

    #[test]
    fn mismatched_vars_error() {
        let a = LaurentPoly::one(&aq());
        let b = LaurentPoly::one(&Vars::new(&["u", "q"]));
        assert!(matches!(a.try_add(&b), Err(Error::VarMismatch(..))));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let v = aq();
        let p = &LaurentPoly::var_pow(&v, "A", 1) - &LaurentPoly::var_pow(&v, "q", -2);
        let mut r = LaurentPoly::one(&v);
        for _ in 0..5 {
            r = &r * &p;
        }
        assert_eq!(p.pow(5), r);
    }

    #[test]
    fn eval_rejects_half_powers() {
        let v = Vars::new(&["phi"]);
        let h = LaurentPoly::var_half_pow(&v, "phi", 1);
        let pt = [BigRational::from_integer(4.into())];
        assert!(matches!(h.eval(&pt), Err(Error::Unnormalized(_))));
    }
}
