//! Classical Goeritz matrices and the Jones polynomial.
//!
//! The invariant `mu` resolves a reduced Goeritz matrix into diagonal pieces
//! and agrees with the Kauffman bracket of the diagram up to the region
//! self-crossings, which the matrix cannot see. [`jones`] restores them
//! through the normalization `(-u^3)^(-W + W_r)`.

pub mod matrix;
pub mod recursion;

use num_bigint::BigInt;
use num_integer::binomial;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::polyring::{KauffPoly, LaurentPoly};
pub use matrix::{Entry, Reduced, SymMatrix, Unreduced};
pub use recursion::{Evaluator, PivotRule, StateAlgebra, DEFAULT_MEMO_LIMIT};

pub type GoeritzMatrix = Reduced<i64>;
pub type UnreducedGoeritz = Unreduced<i64>;

/// Writhe data the matrix alone cannot determine.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct JonesNormData {
    /// Algebraic crossing number.
    pub w: i64,
    /// Algebraic number of region self-crossings.
    pub wr: i64,
}

impl JonesNormData {
    pub fn new(w: i64, wr: i64) -> Self {
        JonesNormData { w, wr }
    }
}

/// `P_n = sum_{k=1}^{|n|} C(|n|, k) D_2^(k-1) u^(sgn(n)(|n| - 2k))`.
pub fn p_n(n: i64) -> KauffPoly {
    let a = n.unsigned_abs();
    let s = n.signum() as i32;
    let d2 = KauffPoly::d2();
    let mut dk = KauffPoly::one();
    let mut out = KauffPoly::zero();
    for k in 1..=a {
        let c = KauffPoly::constant(binomial(BigInt::from(a), BigInt::from(k)));
        let e = s * (a as i32 - 2 * k as i32);
        out = &out + &(&(&c * &dk) * &KauffPoly::u_pow(e));
        dk = &dk * &d2;
    }
    out
}

/// The algebra of the classical recursion.
#[derive(Clone, Copy, Debug, Default)]
pub struct MuAlgebra;

impl StateAlgebra for MuAlgebra {
    type Entry = i64;
    type Value = KauffPoly;

    fn empty(&self) -> KauffPoly {
        KauffPoly::d2()
    }

    fn split(&self, g: &i64) -> (KauffPoly, KauffPoly) {
        (KauffPoly::u_pow(*g as i32), p_n(*g))
    }

    fn diag(&self, g: &i64) -> KauffPoly {
        &(&KauffPoly::u_pow(-*g as i32) * &KauffPoly::d2()) + &p_n(-g)
    }

    fn add(&self, a: &KauffPoly, b: &KauffPoly) -> KauffPoly {
        a + b
    }

    fn mul(&self, a: &KauffPoly, b: &KauffPoly) -> KauffPoly {
        a * b
    }
}

pub fn mu_evaluator() -> Evaluator<MuAlgebra> {
    Evaluator::new(MuAlgebra)
}

/// The invariant `mu` with the default pivot rule.
pub fn mu(g: &SymMatrix<i64>) -> KauffPoly {
    mu_evaluator().eval(g)
}

/// `(-u^3)^n`.
pub fn writhe_factor(n: i64) -> KauffPoly {
    let f = KauffPoly::u_pow(3 * n as i32);
    if n % 2 == 0 {
        f
    } else {
        -&f
    }
}

/// Normalize a precomputed `mu` into the Jones polynomial in `q`.
pub fn normalize_jones(mu: &KauffPoly, norm: JonesNormData) -> Result<LaurentPoly> {
    (&writhe_factor(norm.wr - norm.w) * mu).to_q()
}

/// Jones polynomial `(-u^3)^(-W + W_r) mu[G]` with `u = (-q)^(1/2)`.
pub fn jones(g: &GoeritzMatrix, norm: JonesNormData) -> Result<LaurentPoly> {
    normalize_jones(&mu(&g.matrix), norm)
}

/// The normalization `(-u)^(3 (sum_{i<=j} g_ij - e)) mu[G]` with `e = 0`,
/// which ignores the writhe. Kept to show where it fails.
pub fn boninger_jones(g: &GoeritzMatrix) -> Result<LaurentPoly> {
    let m = &g.matrix;
    let s: i64 = (0..m.size()).flat_map(|i| (i..m.size()).map(move |j| (i, j))).map(|(i, j)| *m.get(i, j)).sum();
    let f = KauffPoly::u_pow(3 * s as i32);
    let f = if s % 2 == 0 { f } else { -&f };
    (&f * &mu(m)).to_q()
}

pub fn determinant(g: &GoeritzMatrix) -> BigInt {
    g.matrix.abs_determinant()
}

/// JSON matrix input.
#[derive(Clone, Debug, Deserialize)]
pub struct MatrixInput {
    pub matrix: Vec<Vec<i64>>,
    #[serde(rename = "W", default)]
    pub w: i64,
    #[serde(rename = "Wr", default)]
    pub wr: i64,
    #[serde(default)]
    pub unreduced: bool,
    #[serde(default)]
    pub delete: Option<usize>,
}

impl MatrixInput {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Input(e.to_string()))
    }

    /// The reduced matrix, deleting `delete_override`, then `delete`, then
    /// row 0 when the input is unreduced.
    pub fn build(&self, delete_override: Option<usize>) -> Result<(GoeritzMatrix, JonesNormData)> {
        let m = SymMatrix::from_rows(self.matrix.clone())?;
        let norm = JonesNormData::new(self.w, self.wr);
        let k = delete_override.or(self.delete);
        let g = if self.unreduced {
            Unreduced::new(m)?.reduce(k.unwrap_or(0))?
        } else {
            match k {
                Some(_) => return Err(Error::Input("delete applies to unreduced matrices only".into())),
                None => Reduced::new(m),
            }
        };
        Ok((g, norm))
    }
}
