//! Quadruple Goeritz matrices and the HOMFLY-PT polynomial of bipartite
//! links.
//!
//! An entry `(x, y, z, t)` holds the coefficients of the four lock units
//! `1`, `1~`, `1-` and `1^`. Off-diagonal entries of a diagram's matrix have
//! `x, y >= 0` and `z, t <= 0`. Locks counted by `x` and `t` carry the weight
//! `phi`, those counted by `y` and `z` carry `phibar`.

use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::goeritz::{Entry, Evaluator, JonesNormData, Reduced, StateAlgebra, SymMatrix, Unreduced};
use crate::polyring::{BipPoly, PolyValue};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct QuadEntry {
    pub x: i64,
    pub y: i64,
    pub z: i64,
    pub t: i64,
}

impl QuadEntry {
    pub const fn new(x: i64, y: i64, z: i64, t: i64) -> Self {
        QuadEntry { x, y, z, t }
    }

    pub const fn x(n: i64) -> Self {
        Self::new(n, 0, 0, 0)
    }

    pub const fn y(n: i64) -> Self {
        Self::new(0, n, 0, 0)
    }

    pub const fn z(n: i64) -> Self {
        Self::new(0, 0, n, 0)
    }

    pub const fn t(n: i64) -> Self {
        Self::new(0, 0, 0, n)
    }

    /// The integer entry of the precursor matrix.
    pub fn precursor(&self) -> i64 {
        self.x + self.y + self.z + self.t
    }

    /// The entry of the mirror diagram.
    pub fn mirror(&self) -> Self {
        Self::new(-self.z, -self.t, -self.x, -self.y)
    }
}

impl Add for QuadEntry {
    type Output = QuadEntry;
    fn add(self, o: QuadEntry) -> QuadEntry {
        QuadEntry::new(self.x + o.x, self.y + o.y, self.z + o.z, self.t + o.t)
    }
}

impl Entry for QuadEntry {
    fn zero() -> Self {
        QuadEntry::default()
    }
    fn is_zero(&self) -> bool {
        *self == QuadEntry::default()
    }
    fn neg(&self) -> Self {
        QuadEntry::new(-self.x, -self.y, -self.z, -self.t)
    }
}

impl fmt::Display for QuadEntry {
    /// `1^ - 2` style with units `1`, `1~`, `1_` (bar) and `1^` (hat).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [(self.t, "^"), (self.z, "_"), (self.y, "~"), (self.x, "")]
            .iter()
            .filter(|(c, _)| *c != 0)
            .map(|(c, u)| format!("{c}{u}"))
            .collect();
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + ").replace("+ -", "- "))
    }
}

pub type QuadGoeritzMatrix = Reduced<QuadEntry>;
pub type UnreducedQuad = Unreduced<QuadEntry>;

fn binom_sum(n: i64, mono: impl Fn(i32) -> BipPoly) -> BipPoly {
    let a = n.unsigned_abs();
    let mut out = BipPoly::zero();
    let mut dk = BipPoly::one();
    for k in 1..=a {
        let c = binomial(BigInt::from(a), BigInt::from(k));
        out = &out + &(&dk * &mono(k as i32)).scale(&c);
        dk = &dk * &BipPoly::d();
    }
    out
}

/// `P_x(n) = sum C(|n|,k) D^(k-1) phi^(|n|/2 - k)`.
pub fn p_x(n: i64) -> BipPoly {
    let a = n.unsigned_abs() as i32;
    binom_sum(n, |k| BipPoly::phi_half(a - 2 * k))
}

/// `P~_y(n) = sum C(|n|,k) D^(k-1) phibar^(k - |n|/2)`.
pub fn pt_y(n: i64) -> BipPoly {
    let a = n.unsigned_abs() as i32;
    binom_sum(n, |k| BipPoly::phibar_half(2 * k - a))
}

/// `P-_z(n) = sum C(|n|,k) D^(k-1) phibar^(|n|/2 - k)`.
pub fn pb_z(n: i64) -> BipPoly {
    let a = n.unsigned_abs() as i32;
    binom_sum(n, |k| BipPoly::phibar_half(a - 2 * k))
}

/// `P^_t(n) = sum C(|n|,k) D^(k-1) phi^(k - |n|/2)`.
pub fn ph_t(n: i64) -> BipPoly {
    let a = n.unsigned_abs() as i32;
    binom_sum(n, |k| BipPoly::phi_half(2 * k - a))
}

fn h(tp: i64, tpb: i64) -> BipPoly {
    BipPoly::monomial(1, tp as i32, tpb as i32, 0)
}

/// Weight of the transformation I branch.
pub fn u1(e: &QuadEntry) -> BipPoly {
    h(e.x + e.t, -(e.y + e.z))
}

/// Weight of the transformation II branch.
pub fn u2(e: &QuadEntry) -> BipPoly {
    let QuadEntry { x, y, z, t } = *e;
    let d = BipPoly::d();
    let (px, pty, pbz, pht) = (p_x(x), pt_y(-y), pb_z(-z), ph_t(t));
    let first = &h(t, -(y + z)) * &px;
    let left = &h(x, 0) + &(&d * &px);
    let ybr = &h(0, -y) + &(&d * &pty);
    let zt = &(&(&h(0, -z) * &pht) + &(&h(t, 0) * &pbz)) + &(&d * &(&pbz * &pht));
    let tail = &h(t, -z) * &pty;
    &first + &(&left * &(&(&ybr * &zt) + &tail))
}

/// Factor of a diagonal entry.
pub fn dfac(e: &QuadEntry) -> BipPoly {
    let QuadEntry { x, y, z, t } = *e;
    let d = BipPoly::d();
    let (px, pty, pbz, pht) = (p_x(-x), pt_y(y), pb_z(z), ph_t(-t));
    let first = &h(-(x + t), y + z) * &d;
    let second = &h(-t, y + z) * &px;
    let left = &h(-x, 0) + &(&d * &px);
    let ybr = &h(0, y) + &(&d * &pty);
    let zt = &(&(&h(0, z) * &pht) + &(&h(-t, 0) * &pbz)) + &(&d * &(&pbz * &pht));
    let tail = &h(-t, z) * &pty;
    &(&first + &second) + &(&left * &(&(&ybr * &zt) + &tail))
}

/// The algebra of the quadruple recursion.
#[derive(Clone, Copy, Debug, Default)]
pub struct QuadAlgebra;

impl StateAlgebra for QuadAlgebra {
    type Entry = QuadEntry;
    type Value = BipPoly;

    fn empty(&self) -> BipPoly {
        BipPoly::d()
    }

    fn split(&self, g: &QuadEntry) -> (BipPoly, BipPoly) {
        (u1(g), u2(g))
    }

    fn diag(&self, g: &QuadEntry) -> BipPoly {
        dfac(g)
    }

    fn add(&self, a: &BipPoly, b: &BipPoly) -> BipPoly {
        a + b
    }

    fn mul(&self, a: &BipPoly, b: &BipPoly) -> BipPoly {
        a * b
    }
}

pub fn m_evaluator() -> Evaluator<QuadAlgebra> {
    Evaluator::new(QuadAlgebra)
}

/// The invariant `M` with the default pivot rule.
pub fn m_invariant(g: &SymMatrix<QuadEntry>) -> BipPoly {
    m_evaluator().eval(g)
}

/// Lock counts of the diagram: totals of positive (`phi`) and negative
/// (`phibar`) locks, and how many of each are vertical or horizontal
/// self-crossings of a white region.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct LockCounts {
    #[serde(rename = "Np", default)]
    pub np: u32,
    #[serde(rename = "Nn", default)]
    pub nn: u32,
    #[serde(rename = "Npv", default)]
    pub npv: u32,
    #[serde(rename = "Nnv", default)]
    pub nnv: u32,
    #[serde(rename = "Nph", default)]
    pub nph: u32,
    #[serde(rename = "Nnh", default)]
    pub nnh: u32,
}

impl LockCounts {
    pub fn new(np: u32, nn: u32) -> Self {
        LockCounts { np, nn, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.npv + self.nph > self.np || self.nnv + self.nnh > self.nn {
            return Err(Error::Input(format!("self-crossing counts exceed totals in {self:?}")));
        }
        Ok(())
    }

    fn map_i32(&self) -> [i32; 6] {
        [self.np, self.nn, self.npv, self.nnv, self.nph, self.nnh].map(|v| v as i32)
    }

    pub fn mirror(&self) -> Self {
        LockCounts { np: self.nn, nn: self.np, npv: self.nnv, nnv: self.npv, nph: self.nnh, nnh: self.nph }
    }
}

/// Split the normalization into its `A` exponent and its symbol part.
pub fn normalization(counts: &LockCounts) -> (i32, BipPoly) {
    let c = counts.map_i32();
    let a = -2 * (c[0] - c[2] - c[1] + c[3]);
    let d = BipPoly::d();
    let phi_d = &BipPoly::phi_half(2) + &d;
    let phibar_d = &BipPoly::phibar_half(2) + &d;
    let sym = &(&h((c[0] - c[4] - c[2]) as i64, (c[1] - c[5] - c[3]) as i64) * &phi_d.pow(counts.nph))
        * &phibar_d.pow(counts.nnh);
    (a, sym)
}

/// Normalize a precomputed `M` into `H(A, q)`.
pub fn normalize_homfly(m: &BipPoly, counts: &LockCounts) -> Result<PolyValue> {
    counts.validate()?;
    let (a, sym) = normalization(counts);
    let v = (&sym * m).substitute().map_err(|e| match e {
        Error::Unnormalized(v) => Error::LockCountMismatch(v),
        e => e,
    })?;
    Ok(v.shift(a, 0))
}

/// The HOMFLY-PT polynomial of a bipartite link.
pub fn homfly(g: &QuadGoeritzMatrix, counts: &LockCounts) -> Result<PolyValue> {
    normalize_homfly(&m_invariant(&g.matrix), counts)
}

/// Replace each lock by a single crossing of the same sign.
pub fn to_precursor(g: &SymMatrix<QuadEntry>, counts: &LockCounts) -> (SymMatrix<i64>, JonesNormData) {
    let c = counts.map_i32();
    let w = (c[0] - c[1]) as i64;
    let wr = ((c[2] + c[4]) - (c[3] + c[5])) as i64;
    (g.map(QuadEntry::precursor), JonesNormData::new(w, wr))
}

/// JSON quadruple-matrix input.
#[derive(Clone, Debug, Deserialize)]
pub struct QuadInput {
    pub entries: Vec<Vec<[i64; 4]>>,
    #[serde(default)]
    pub counts: LockCounts,
    #[serde(default)]
    pub unreduced: bool,
    #[serde(default)]
    pub delete: Option<usize>,
}

impl QuadInput {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))
    }

    pub fn build(&self, delete_override: Option<usize>) -> Result<(QuadGoeritzMatrix, LockCounts)> {
        let rows =
            self.entries.iter().map(|r| r.iter().map(|&[x, y, z, t]| QuadEntry::new(x, y, z, t)).collect()).collect();
        let m = SymMatrix::from_rows(rows)?;
        let k = delete_override.or(self.delete);
        let g = if self.unreduced {
            Unreduced::new(m)?.reduce(k.unwrap_or(0))?
        } else {
            match k {
                Some(_) => return Err(Error::Input("delete applies to unreduced matrices only".into())),
                None => Reduced::new(m),
            }
        };
        self.counts.validate()?;
        Ok((g, self.counts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::bip_vars;
    use crate::polyring::text::parse_plain;

    fn b(s: &str) -> BipPoly {
        BipPoly::from_poly(parse_plain(s, bip_vars()).unwrap())
    }

    #[test]
    fn p_values() {
        assert_eq!(p_x(1), BipPoly::phi_half(-1));
        assert_eq!(pt_y(0), BipPoly::zero());
        assert_eq!(pb_z(2), b("2 + D*phibar^-1"));
        assert_eq!(ph_t(2), b("2 + D*phi"));
    }

    #[test]
    fn u_examples() {
        assert_eq!(u1(&QuadEntry::new(1, 0, 0, -1)), BipPoly::one());
        assert_eq!(u1(&QuadEntry::t(-1)), BipPoly::phi_half(-1));
        assert_eq!(u1(&QuadEntry::x(1)), BipPoly::phi_half(1));
        assert_eq!(u2(&QuadEntry::x(1)), BipPoly::phi_half(-1));
        assert_eq!(u2(&QuadEntry::t(-1)), BipPoly::phi_half(1));
    }

    #[test]
    fn dfac_examples() {
        assert_eq!(dfac(&QuadEntry::default()), BipPoly::d());
        assert_eq!(dfac(&QuadEntry::x(-1)), b("phi^(1/2)*D + phi^(-1/2)"));
    }

    #[test]
    fn m_empty() {
        assert_eq!(m_invariant(&SymMatrix::empty()), BipPoly::d());
    }

    #[test]
    fn entry_display() {
        assert_eq!(QuadEntry::new(-1, 0, 0, 1).to_string(), "1^ - 1");
        assert_eq!(QuadEntry::default().to_string(), "0");
    }

    #[test]
    fn merge_example() {
        let e = QuadEntry::new(-2, 0, 0, 1);
        let f = QuadEntry::new(1, 0, 0, -1);
        let m = SymMatrix::from_rows(vec![vec![e, f], vec![f, e]]).unwrap();
        assert_eq!(m.transform_ii(0, 1).unwrap().get(0, 0), &QuadEntry::x(-2));
    }

    #[test]
    fn trefoil_homfly() {
        let g = Reduced::new(SymMatrix::from_rows(vec![vec![QuadEntry::new(-1, 0, 0, 1)]]).unwrap());
        let hv = homfly(&g, &LockCounts::new(2, 0)).unwrap();
        let expect = crate::polyring::eval_expr("(A^2 - q^2 + A^2 q^4)(A - A^-1)/(A^4 q^2 (q - q^-1))");
        assert_eq!(Ok(hv), expect);
    }
}
