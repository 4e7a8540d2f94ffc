//! Brute-force state sums over all resolutions of a diagram.

use std::collections::BTreeMap;

use crate::bipartite::{normalize_homfly, LockCounts};
use crate::error::{Error, Result};
use crate::goeritz::{normalize_jones, JonesNormData};
use crate::polyring::{BipPoly, KauffPoly, LaurentPoly, PolyValue};

use super::{LockDiagram, PDDiagram};

pub const BRACKET_LIMIT: usize = 16;
pub const DECOMPOSITION_LIMIT: usize = 12;

struct Dsu {
    parent: Vec<usize>,
    sets: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), sets: n }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.sets -= 1;
        }
    }
}

/// Loops of the resolution in which vertex `v` joins `(a, b)(c, d)` when
/// bit `v` of `mask` is clear and `(a, d)(b, c)` when set.
fn loops(arcs: &[[usize; 4]], narcs: usize, mask: u32) -> u32 {
    let mut dsu = Dsu::new(narcs);
    for (v, &[a, b, c, d]) in arcs.iter().enumerate() {
        if mask >> v & 1 == 0 {
            dsu.union(a, b);
            dsu.union(c, d);
        } else {
            dsu.union(a, d);
            dsu.union(b, c);
        }
    }
    dsu.sets as u32
}

fn check_limit(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        return Err(Error::SizeLimit { what, size, limit });
    }
    Ok(())
}

/// `<X> = u <(a,b)(c,d)> + u^-1 <(a,d)(b,c)>`, each loop a factor `D_2`;
/// the crossingless unknot is `D_2`.
pub fn kauffman_bracket(d: &PDDiagram) -> Result<KauffPoly> {
    let n = d.len();
    check_limit("crossings", n, BRACKET_LIMIT)?;
    if n == 0 {
        return Ok(KauffPoly::d2());
    }
    let arcs: Vec<[usize; 4]> = (0..n).map(|v| [0, 1, 2, 3].map(|s| d.arc_index(v, s))).collect();
    let mut tally: BTreeMap<(i32, u32), i64> = BTreeMap::new();
    for mask in 0..1u32 << n {
        let b = mask.count_ones() as i32;
        *tally.entry((n as i32 - 2 * b, loops(&arcs, d.arc_count(), mask))).or_default() += 1;
    }
    let d2 = KauffPoly::d2();
    Ok(tally.into_iter().fold(KauffPoly::zero(), |acc, ((e, l), c)| {
        let t = &(&KauffPoly::u_pow(e) * &d2.pow(l)) * &KauffPoly::constant(c);
        &acc + &t
    }))
}

/// `(-u^3)^(-W) <D>` as a polynomial in `q`.
pub fn jones_from_bracket(d: &PDDiagram) -> Result<LaurentPoly> {
    normalize_jones(&kauffman_bracket(d)?, JonesNormData::new(d.writhe(), 0))
}

/// Every lock resolves into its bridge pairing with weight `w^(-1/2)` and
/// the other pairing with `w^(1/2)`, where `w` is `phi` or `phibar`; each
/// loop is a factor `D`.
pub fn planar_decomposition(d: &LockDiagram) -> Result<BipPoly> {
    let n = d.len();
    check_limit("locks", n, DECOMPOSITION_LIMIT)?;
    if n == 0 {
        return Ok(BipPoly::d());
    }
    let arcs: Vec<[usize; 4]> = (0..n).map(|v| [0, 1, 2, 3].map(|s| d.arc_index(v, s))).collect();
    let mut tally: BTreeMap<(i32, i32, u32), i64> = BTreeMap::new();
    for mask in 0..1u32 << n {
        let (mut tp, mut tpb) = (0, 0);
        for (v, l) in d.locks().iter().enumerate() {
            // A set bit selects the (a, d)(b, c) pairing.
            let bridge = (mask >> v & 1 == 0) == l.kind.bridge_ab();
            let e = if bridge { -1 } else { 1 };
            if l.kind.is_phi() {
                tp += e;
            } else {
                tpb += e;
            }
        }
        *tally.entry((tp, tpb, loops(&arcs, d.arc_count(), mask))).or_default() += 1;
    }
    Ok(tally
        .into_iter()
        .fold(BipPoly::zero(), |acc, ((tp, tpb, l), c)| &acc + &BipPoly::monomial(c, tp, tpb, l as i32)))
}

/// `A^(-2(N+ - N-)) phi^(N+/2) phibar^(N-/2)` times the decomposition.
pub fn homfly_from_decomposition(d: &LockDiagram) -> Result<PolyValue> {
    let np = d.locks().iter().filter(|l| l.kind.is_phi()).count() as u32;
    normalize_homfly(&planar_decomposition(d)?, &LockCounts::new(np, d.len() as u32 - np))
}

/// Factor the self-locks of a diagram contribute to the decomposition
/// beyond `M`: `w^(-1/2) + w^(1/2) D` for each vertical and
/// `w^(1/2) + w^(-1/2) D` for each horizontal one, `w` being `phi` or `phibar`.
pub fn lock_retouch(counts: &LockCounts) -> BipPoly {
    let f = [
        (BipPoly::monomial(1, -1, 0, 0), BipPoly::monomial(1, 1, 0, 1), counts.npv),
        (BipPoly::monomial(1, 1, 0, 0), BipPoly::monomial(1, -1, 0, 1), counts.nph),
        (BipPoly::monomial(1, 0, -1, 0), BipPoly::monomial(1, 0, 1, 1), counts.nnv),
        (BipPoly::monomial(1, 0, 1, 0), BipPoly::monomial(1, 0, -1, 1), counts.nnh),
    ];
    f.iter().fold(BipPoly::one(), |acc, (a, b, n)| &acc * &(a + b).pow(*n))
}
