//! Built-in link families: matrix generators, normalization data and
//! closed-form answers.
//!
//! Family specs use the grammar `name[:param[,param]]`:
//!
//! | spec            | link                                  |
//! |-----------------|---------------------------------------|
//! | `torus2:P`      | two-strand torus link `T[2,P]`        |
//! | `twist:M`       | twist knot with `M` half twists       |
//! | `knot52`        | the knot `5_2`                        |
//! | `pretzel332`    | the pretzel knot `P(3,3,2)` (`8_5`)   |
//! | `rational:B,S`  | rational knot `(8B+4)/(-12B-7)`, `S` is `+` or `-` |
//! | `m10140`        | the Montesinos knot `10_140`          |

pub mod cf;

use std::fmt;
use std::str::FromStr;

use crate::bipartite::{LockCounts, QuadEntry, UnreducedQuad};
use crate::error::{Error, Result};
use crate::goeritz::{JonesNormData, SymMatrix, UnreducedGoeritz};
use crate::polyring::{eval_expr, q_vars, BipPoly, LaurentPoly, PolyValue};
pub use cf::{eval_cf, even_continued_fraction, EvenCF};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coloring {
    I,
    II,
}

impl Coloring {
    pub fn from_index(i: u8) -> Result<Self> {
        match i {
            1 => Ok(Coloring::I),
            2 => Ok(Coloring::II),
            _ => Err(Error::InvalidFamily(format!("coloring must be 1 or 2, got {i}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Torus2 { p: i64 },
    Twist { m: i64 },
    Knot52,
    Pretzel332,
    RationalB { b: i64, positive: bool },
    Montesinos10140,
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Torus2 { p } => write!(f, "torus2:{p}"),
            FamilyKind::Twist { m } => write!(f, "twist:{m}"),
            FamilyKind::Knot52 => f.write_str("knot52"),
            FamilyKind::Pretzel332 => f.write_str("pretzel332"),
            FamilyKind::RationalB { b, positive } => write!(f, "rational:{b},{}", if *positive { '+' } else { '-' }),
            FamilyKind::Montesinos10140 => f.write_str("m10140"),
        }
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidFamily(format!("{s}: {msg}"));
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), p.split(',').map(str::trim).collect::<Vec<_>>()),
            None => (s.trim(), Vec::new()),
        };
        let int = |i: usize| -> Result<i64> {
            params
                .get(i)
                .ok_or_else(|| bad("missing parameter"))?
                .parse()
                .map_err(|_| bad("parameter is not an integer"))
        };
        let arity = |n: usize| if params.len() == n { Ok(()) } else { Err(bad(&format!("expected {n} parameter(s)"))) };
        let kind = match name {
            "torus2" => {
                arity(1)?;
                FamilyKind::Torus2 { p: int(0)? }
            }
            "twist" => {
                arity(1)?;
                FamilyKind::Twist { m: int(0)? }
            }
            "knot52" => {
                arity(0)?;
                FamilyKind::Knot52
            }
            "pretzel332" => {
                arity(0)?;
                FamilyKind::Pretzel332
            }
            "rational" => {
                arity(2)?;
                let positive = match params[1] {
                    "+" => true,
                    "-" => false,
                    _ => return Err(bad("sign must be + or -")),
                };
                FamilyKind::RationalB { b: int(0)?, positive }
            }
            "m10140" => {
                arity(0)?;
                FamilyKind::Montesinos10140
            }
            _ => return Err(bad("unknown family")),
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl FamilyKind {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            FamilyKind::Torus2 { p } if p.abs() < 2 => bad("|p| must be at least 2"),
            FamilyKind::Twist { m } if m < 1 => bad("m must be at least 1"),
            FamilyKind::RationalB { b, .. } if b < 0 => bad("b must be non-negative"),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub coloring: Coloring,
    pub mirrored: bool,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, coloring: Coloring) -> Self {
        FamilySpec { kind, coloring, mirrored: false }
    }

    pub fn mirror(mut self) -> Self {
        self.mirrored = !self.mirrored;
        self
    }
}

/// A classical matrix with its normalization data and the region deleted by
/// default.
#[derive(Clone, Debug)]
pub struct ClassicalBuild {
    pub matrix: UnreducedGoeritz,
    pub norm: JonesNormData,
    pub delete: usize,
}

/// A quadruple matrix with its lock counts and the region deleted by
/// default.
#[derive(Clone, Debug)]
pub struct QuadBuild {
    pub matrix: UnreducedQuad,
    pub counts: LockCounts,
    pub delete: usize,
}

fn no_coloring(spec: &FamilySpec, what: &str) -> Error {
    Error::InvalidFamily(format!("{}: no {what} matrix for coloring {:?}", spec.kind, spec.coloring))
}

/// Edges `(i, i+1)` around a cycle of `n` regions, with the closing edge
/// `(0, n-1)` given separately.
fn cycle<T: Clone>(n: usize, edge: T, closing: T) -> Vec<(usize, usize, T)> {
    let mut e: Vec<_> = (0..n - 1).map(|i| (i, i + 1, edge.clone())).collect();
    e.push((0, n - 1, closing));
    e
}

/// Unreduced matrix of the `5_2` knot, with signs matching writhe `4`.
pub fn knot52(coloring: Coloring) -> UnreducedGoeritz {
    let rows: Vec<Vec<i64>> = match coloring {
        Coloring::I => vec![vec![-2, 3, -1], vec![3, -1, -2], vec![-1, -2, 3]],
        Coloring::II => vec![
            vec![-1, -1, 0, 1, 1],
            vec![-1, 2, -1, 0, 0],
            vec![0, -1, 2, -1, 0],
            vec![1, 0, -1, -1, 1],
            vec![1, 0, 0, 1, -2],
        ],
    };
    UnreducedGoeritz::new(SymMatrix::from_rows(rows).unwrap()).unwrap()
}

pub fn build_classical(spec: &FamilySpec) -> Result<ClassicalBuild> {
    spec.kind.validate()?;
    let (matrix, norm, delete) = match spec.kind {
        FamilyKind::Torus2 { p } if p < 0 => {
            let b = build_classical(&FamilySpec { kind: FamilyKind::Torus2 { p: -p }, ..*spec }.mirror())?;
            return Ok(b);
        }
        FamilyKind::Torus2 { p } => {
            let n = p as usize;
            let m = match spec.coloring {
                Coloring::I => UnreducedGoeritz::from_edges(2, &[(0, 1, p)])?,
                Coloring::II => UnreducedGoeritz::from_edges(n, &cycle(n, -1, -1))?,
            };
            (m, JonesNormData::new(p, 0), 0)
        }
        FamilyKind::Twist { m } => {
            let w = if m % 2 == 0 { 2 - m } else { -m - 2 };
            let g = match spec.coloring {
                Coloring::I => UnreducedGoeritz::from_edges(3, &[(0, 1, m), (0, 2, 1), (1, 2, 1)])?,
                Coloring::II => UnreducedGoeritz::from_edges(m as usize + 1, &cycle(m as usize + 1, -1, -2))?,
            };
            (g, JonesNormData::new(w, 0), 0)
        }
        FamilyKind::Knot52 => {
            let delete = if spec.coloring == Coloring::I { 0 } else { 4 };
            (knot52(spec.coloring), JonesNormData::new(4, 0), delete)
        }
        _ => return Err(no_coloring(spec, "classical")),
    };
    Ok(if spec.mirrored {
        ClassicalBuild { matrix: matrix.negated(), norm: JonesNormData::new(-norm.w, -norm.wr), delete }
    } else {
        ClassicalBuild { matrix, norm, delete }
    })
}

/// Complete a reduced matrix to an unreduced one by appending a region.
fn complete(rows: Vec<Vec<QuadEntry>>) -> UnreducedQuad {
    let m = SymMatrix::from_rows(rows).unwrap();
    let n = m.size();
    UnreducedQuad::new(m.unreduce(n).unwrap()).unwrap()
}

const fn q(x: i64, y: i64, z: i64, t: i64) -> QuadEntry {
    QuadEntry::new(x, y, z, t)
}

/// Unreduced `S_n` (`C_n` when `closing`) matrix of `T[2, 2n+1]`
/// (`T[2, 2n+2]`).
fn torus_quad(n: usize, closing: bool) -> Result<UnreducedQuad> {
    let mut e = vec![(0, 1, q(1, 0, 0, -1))];
    e.extend((1..n).map(|i| (i, i + 1, QuadEntry::t(-1))));
    e.extend((0..n.saturating_sub(1)).map(|i| (i, i + 2, QuadEntry::x(1))));
    if closing {
        e.push((n - 1, n, QuadEntry::x(1)));
    }
    UnreducedQuad::from_edges(n + 1, &e)
}

pub fn build_quad(spec: &FamilySpec) -> Result<QuadBuild> {
    spec.kind.validate()?;
    let (matrix, counts, delete) = match spec.kind {
        FamilyKind::Torus2 { p } if p < 0 => {
            return build_quad(&FamilySpec { kind: FamilyKind::Torus2 { p: -p }, ..*spec }.mirror());
        }
        FamilyKind::Torus2 { p } => {
            if spec.coloring != Coloring::I {
                return Err(no_coloring(spec, "bipartite"));
            }
            if p < 3 {
                return Err(Error::InvalidFamily(format!("{}: bipartite torus links need p >= 3", spec.kind)));
            }
            let n = ((p - 1) / 2) as usize;
            (torus_quad(n, p % 2 == 0)?, LockCounts::new(p as u32 - 1, 0), 0)
        }
        FamilyKind::Twist { m } if m % 2 == 0 => {
            let k = (m / 2) as usize;
            let g = match spec.coloring {
                Coloring::I => UnreducedQuad::from_edges(2, &[(0, 1, q(1, k as i64, 0, 0))])?,
                Coloring::II => UnreducedQuad::from_edges(k + 1, &cycle(k + 1, QuadEntry::z(-1), QuadEntry::t(-1)))?,
            };
            (g, LockCounts::new(1, k as u32), 0)
        }
        FamilyKind::Twist { m } => {
            let k = ((m + 1) / 2) as usize;
            let g = match spec.coloring {
                Coloring::I => UnreducedQuad::from_edges(2, &[(0, 1, q(0, k as i64, -1, 0))])?,
                Coloring::II => UnreducedQuad::from_edges(k + 1, &cycle(k + 1, QuadEntry::z(-1), QuadEntry::y(1)))?,
            };
            (g, LockCounts::new(0, k as u32 + 1), 0)
        }
        FamilyKind::Pretzel332 => {
            let rows = match spec.coloring {
                Coloring::I => vec![
                    vec![q(-2, 0, 0, 2), q(1, 0, 0, -1), q(0, 0, 0, 0)],
                    vec![q(1, 0, 0, -1), q(-1, -1, 0, 1), q(0, 1, 0, 0)],
                    vec![q(0, 0, 0, 0), q(0, 1, 0, 0), q(-1, -1, 0, 0)],
                ],
                Coloring::II => vec![
                    vec![q(0, 0, 1, 3), q(0, 0, 0, -1), q(0, 0, 0, -1)],
                    vec![q(0, 0, 0, -1), q(-1, 0, 0, 1), q(0, 0, 0, 0)],
                    vec![q(0, 0, 0, -1), q(0, 0, 0, 0), q(-1, 0, 0, 1)],
                ],
            };
            (complete(rows), LockCounts::new(5, 1), 3)
        }
        FamilyKind::RationalB { b, positive } => {
            if spec.coloring != Coloring::I {
                return Err(no_coloring(spec, "bipartite"));
            }
            let (corner, counts) = if positive {
                (q(-2, -b, 0, 0), LockCounts::new(3, b as u32))
            } else {
                (q(-2, 0, 0, b), LockCounts::new(3 + b as u32, 0))
            };
            let rows = vec![vec![corner, QuadEntry::x(1)], vec![QuadEntry::x(1), q(-1, 0, 0, 1)]];
            (complete(rows), counts, 2)
        }
        FamilyKind::Montesinos10140 => {
            if spec.coloring != Coloring::I {
                return Err(no_coloring(spec, "bipartite"));
            }
            let rows = vec![vec![q(-1, 0, 0, 3), q(1, 0, 0, -1)], vec![q(1, 0, 0, -1), q(-1, -1, 1, 1)]];
            (complete(rows), LockCounts::new(4, 2), 2)
        }
        FamilyKind::Knot52 => return Err(no_coloring(spec, "bipartite")),
    };
    Ok(if spec.mirrored {
        QuadBuild {
            matrix: UnreducedQuad::new(matrix.matrix().map(QuadEntry::mirror))?,
            counts: counts.mirror(),
            delete,
        }
    } else {
        QuadBuild { matrix, counts, delete }
    })
}

fn qpoly(s: &str) -> LaurentPoly {
    crate::polyring::text::parse_plain(s, q_vars()).expect("valid closed form")
}

fn invert_q(p: &LaurentPoly) -> LaurentPoly {
    let mut r = LaurentPoly::zero(q_vars());
    for (e, c) in p.terms() {
        r.add_term(e.iter().map(|x| -x).collect(), c.clone());
    }
    r
}

/// The closed form of the Jones polynomial, normalized so that the
/// unknot has `q + q^-1`.
pub fn jones_closed_form(spec: &FamilySpec) -> Result<LaurentPoly> {
    spec.kind.validate()?;
    let j = match spec.kind {
        FamilyKind::Torus2 { p } => {
            // q^-p (q^-2 + 1 + (-1)^p q^-2p + q^2)
            let s = if p % 2 == 0 { '+' } else { '-' };
            qpoly(&format!("q^{} + q^{} {s} q^{} + q^{}", -p - 2, -p, -3 * p, 2 - p))
        }
        FamilyKind::Twist { m } if m % 2 == 0 => {
            // q^(2m-3) (q^4 + q^-2m (q^-2 + q^2) - q^-2)
            qpoly(&format!("q^{} + q^{} + q^{} - q^{}", 2 * m + 1, -5, -1, 2 * m - 5))
        }
        FamilyKind::Twist { m } => {
            // q^(2m+3) (q^-2 + q^-2m (q^-2 + q^2) - q^4)
            qpoly(&format!("q^{} + q^{} + q^{} - q^{}", 2 * m + 1, 1, 5, 2 * m + 7))
        }
        FamilyKind::Knot52 => qpoly("q^-1 + q^-5 + q^-7 - q^-13"),
        _ => return Err(Error::NoClosedForm(spec.kind.to_string())),
    };
    Ok(if spec.mirrored { invert_q(&j) } else { j })
}

/// The closed form of the HOMFLY-PT polynomial.
pub fn homfly_closed_form(spec: &FamilySpec) -> Result<PolyValue> {
    spec.kind.validate()?;
    let expr = match spec.kind {
        FamilyKind::Torus2 { p } if p < 0 => {
            return homfly_closed_form(&FamilySpec { kind: FamilyKind::Torus2 { p: -p }, ..*spec }.mirror());
        }
        FamilyKind::Torus2 { p } if p % 2 == 1 => {
            let n = (p - 1) / 2;
            format!(
                "(q^{e}A^{a}(A^2q^2-1)+(q^2-A^2)A^{a}q^{b})(A-A^-1)/(A^2(q^4-1)(q-q^-1))",
                e = 2 + 2 * n,
                a = -2 * n,
                b = -2 * n
            )
        }
        FamilyKind::Torus2 { p } => {
            let n = (p - 2) / 2;
            format!(
                "(q^{e}A^{a}(A^2q^2-1)+(A^2-q^2)A^{a}q^{b})(A-A^-1)/(A^3 q (q^4-1)(q-q^-1))",
                e = 4 + 2 * n,
                a = -2 * n,
                b = -2 * n
            )
        }
        FamilyKind::Twist { m } if m % 2 == 0 => {
            format!("A^{}((D_N^2-1)phi+(D_N+phi)(1+D_N phibar)^{})", m - 2, m / 2)
        }
        FamilyKind::Twist { m } => {
            format!("A^{}((D_N^2-1)phibar+(D_N+phibar)(1+D_N phibar)^{})", m + 3, (m + 1) / 2)
        }
        FamilyKind::RationalB { b, positive: true } => format!(
            "(A^{}(A^2-q^2)(A^2q^2-1)(1-q^2+q^4)+(A^2(1+q^4)-q^2)(A^2(1-q^2+q^4)-q^2))/(A^7q^4(q-q^-1))",
            2 + 2 * b
        ),
        FamilyKind::RationalB { b, positive: false } => format!(
            "A^{}(A^2(A^2-q^2)(A^2q^2-1)(1-q^2+q^4)+A^{}(A^2(1+q^4)-q^2)(A^2(1-q^2+q^4)-q^2))/(A^7q^4(q-q^-1))",
            -2 * b,
            2 * b
        ),
        _ => return Err(Error::NoClosedForm(spec.kind.to_string())),
    };
    let v = eval_expr(&expr)?;
    Ok(if spec.mirrored { v.invert() } else { v })
}

/// `(M[S_n], M[C_n])` from `(M[S_3], M[C_3])` by the transfer matrix
/// `[[phi^-1 + D, phi^(1/2)], [phi^(-1/2) + D phi^(1/2), phi^-1 + D + phi]]`.
pub fn torus_transfer(n: usize) -> Result<(BipPoly, BipPoly)> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("transfer needs n >= 3, got {n}")));
    }
    let d = BipPoly::d();
    let ph = BipPoly::phi_half;
    let t11 = &ph(-2) + &d;
    let t12 = ph(1);
    let t21 = &ph(-1) + &(&d * &ph(1));
    let t22 = &(&ph(-2) + &d) + &ph(2);
    let base = |closing| -> Result<BipPoly> {
        let g = torus_quad(3, closing)?.reduce(0)?;
        Ok(crate::bipartite::m_invariant(&g.matrix))
    };
    let (mut s, mut c) = (base(false)?, base(true)?);
    for _ in 3..n {
        let ns = &(&t11 * &s) + &(&t12 * &c);
        let nc = &(&t21 * &s) + &(&t22 * &c);
        (s, c) = (ns, nc);
    }
    Ok((s, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goeritz::jones;

    #[test]
    fn parse_specs() {
        assert_eq!("torus2:5".parse::<FamilyKind>().unwrap(), FamilyKind::Torus2 { p: 5 });
        assert_eq!("rational:2,-".parse::<FamilyKind>().unwrap(), FamilyKind::RationalB { b: 2, positive: false });
        assert!("torus2:1".parse::<FamilyKind>().is_err());
        assert!("twist:0".parse::<FamilyKind>().is_err());
        assert!("twist".parse::<FamilyKind>().is_err());
        assert!("hopf:2".parse::<FamilyKind>().is_err());
        for s in ["torus2:-3", "twist:4", "knot52", "pretzel332", "rational:0,+", "m10140"] {
            assert_eq!(s.parse::<FamilyKind>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn torus_coloring_one() {
        let b = build_classical(&FamilySpec::new(FamilyKind::Torus2 { p: 5 }, Coloring::I)).unwrap();
        let g = b.matrix.reduce(0).unwrap();
        assert_eq!(g.matrix.rows(), vec![vec![-5]]);
        assert_eq!(b.norm, JonesNormData::new(5, 0));
    }

    #[test]
    fn torus_quad_s3() {
        let b = build_quad(&FamilySpec::new(FamilyKind::Torus2 { p: 7 }, Coloring::I)).unwrap();
        let g = b.matrix.reduce(b.delete).unwrap();
        let rows = g.matrix.rows();
        assert_eq!(rows[0], vec![q(-2, 0, 0, 2), QuadEntry::t(-1), QuadEntry::x(1)]);
        assert_eq!(rows[1], vec![QuadEntry::t(-1), q(-1, 0, 0, 2), QuadEntry::t(-1)]);
        assert_eq!(rows[2], vec![QuadEntry::x(1), QuadEntry::t(-1), q(-1, 0, 0, 1)]);
        assert_eq!(b.counts, LockCounts::new(6, 0));
    }

    #[test]
    fn rational_build() {
        let b = build_quad(&FamilySpec::new(FamilyKind::RationalB { b: 2, positive: true }, Coloring::I)).unwrap();
        let g = b.matrix.reduce(b.delete).unwrap();
        assert_eq!(
            g.matrix.rows(),
            vec![vec![q(-2, -2, 0, 0), QuadEntry::x(1)], vec![QuadEntry::x(1), q(-1, 0, 0, 1)]]
        );
        assert_eq!(b.counts, LockCounts::new(3, 2));
    }

    #[test]
    fn jones_torus_three() {
        let spec = FamilySpec::new(FamilyKind::Torus2 { p: 3 }, Coloring::II);
        let b = build_classical(&spec).unwrap();
        let j = jones(&b.matrix.reduce(b.delete).unwrap(), b.norm).unwrap();
        assert_eq!(j, jones_closed_form(&spec).unwrap());
    }

    #[test]
    fn transfer_identity_power() {
        let (s, c) = torus_transfer(3).unwrap();
        let b = build_quad(&FamilySpec::new(FamilyKind::Torus2 { p: 7 }, Coloring::I)).unwrap();
        assert_eq!(s, crate::bipartite::m_invariant(&b.matrix.reduce(0).unwrap().matrix));
        assert!(!c.is_zero());
        assert!(torus_transfer(2).is_err());
    }
}
