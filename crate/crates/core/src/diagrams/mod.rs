//! Planar diagrams, checkerboard colorings and extraction of (quadruple)
//! Goeritz matrices.
//!
//! A diagram is a 4-valent planar graph. Every vertex lists its four arcs
//! counter-clockwise; corner `p` of a vertex lies between slots `p` and
//! `p + 1`. A PD crossing `[a, b, c, d]` starts at the incoming under-strand,
//! so the under-strand runs `a -> c` and the over-strand joins `b` and `d`.
//!
//! A lock `[a, b, c, d]` joins the pairs `(a, b), (c, d)` at the ends of its
//! bridge when vertical and `(a, d), (b, c)` when horizontal. `PV` and `NH`
//! locks carry `phi`, `PH` and `NV` locks carry `phibar`. The type names
//! refer to the coloring in which corners `bc` and `da` are white.

mod corpus;
mod oracle;
mod tait;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bipartite::{LockCounts, QuadEntry, UnreducedQuad};
use crate::error::{Error, Result};
use crate::families::Coloring;
use crate::goeritz::{JonesNormData, UnreducedGoeritz};

pub use corpus::{lock_corpus, pd_corpus};
pub use oracle::{
    homfly_from_decomposition, jones_from_bracket, kauffman_bracket, lock_retouch, planar_decomposition, BRACKET_LIMIT,
    DECOMPOSITION_LIMIT,
};
pub use tait::{TaitGraph, Unit};

/// Rotation system of a 4-valent planar graph with arcs renumbered
/// `0..n` in increasing label order.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Planar {
    verts: Vec<[usize; 4]>,
    labels: Vec<i64>,
    ends: Vec<[(usize, usize); 2]>,
}

impl Planar {
    fn new(verts: &[[i64; 4]]) -> Result<Self> {
        let mut labels: Vec<i64> = verts.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        let mut ends = vec![Vec::with_capacity(2); labels.len()];
        let mut vs = Vec::with_capacity(verts.len());
        for (v, x) in verts.iter().enumerate() {
            let mut row = [0; 4];
            for s in 0..4 {
                let a = labels.binary_search(&x[s]).unwrap();
                row[s] = a;
                ends[a].push((v, s));
            }
            vs.push(row);
        }
        let ends = ends
            .into_iter()
            .enumerate()
            .map(|(a, e)| match e[..] {
                [p, q] => Ok([p, q]),
                _ => {
                    let at: Vec<String> = e.iter().map(|(v, s)| format!("({v}, {s})")).collect();
                    Err(Error::InvalidDiagram(format!(
                        "arc {} must appear exactly twice, found at (vertex, slot) {}",
                        labels[a],
                        at.join(", ")
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let p = Planar { verts: vs, labels, ends };
        p.faces()?;
        Ok(p)
    }

    fn arc_count(&self) -> usize {
        self.labels.len()
    }

    fn other_end(&self, v: usize, s: usize) -> (usize, usize) {
        let [p, q] = self.ends[self.verts[v][s]];
        if p == (v, s) {
            q
        } else {
            p
        }
    }

    /// Trace faces; corner `(v, p)` continues along the arc in slot `p + 1`.
    fn faces(&self) -> Result<Faces> {
        let n = self.verts.len();
        if n == 0 {
            return Ok(Faces { corner_face: Vec::new(), boundaries: vec![Vec::new(), Vec::new()] });
        }
        let mut corner_face = vec![usize::MAX; 4 * n];
        let mut boundaries = Vec::new();
        for start in 0..4 * n {
            if corner_face[start] != usize::MAX {
                continue;
            }
            let f = boundaries.len();
            let mut arcs = Vec::new();
            let mut c = start;
            while corner_face[c] == usize::MAX {
                corner_face[c] = f;
                let (v, p) = (c / 4, c % 4);
                let s = (p + 1) % 4;
                arcs.push(self.labels[self.verts[v][s]]);
                let (w, t) = self.other_end(v, s);
                c = 4 * w + t;
            }
            if c != start {
                return Err(Error::InvalidDiagram("inconsistent rotation system".into()));
            }
            boundaries.push(arcs);
        }
        if boundaries.len() != n + 2 {
            return Err(Error::InvalidDiagram(format!(
                "Euler check failed: V - E + F = {} - {} + {} (disconnected or non-planar)",
                n,
                2 * n,
                boundaries.len()
            )));
        }
        Ok(Faces { corner_face, boundaries })
    }

    fn checkerboard(&self, c: Coloring) -> Result<FaceColoring> {
        let faces = self.faces()?;
        let nf = faces.count();
        if self.verts.is_empty() {
            return Ok(FaceColoring { faces, white: vec![Some(0), None], whites: 1 });
        }
        let mut adj = vec![Vec::new(); nf];
        for (v, _) in self.verts.iter().enumerate() {
            for s in 0..4 {
                let (f, g) = (faces.at(v, (s + 3) % 4), faces.at(v, s));
                adj[f].push(g);
                adj[g].push(f);
            }
        }
        let mut parity = vec![u8::MAX; nf];
        let root = faces.at(0, 1);
        parity[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(f) = queue.pop_front() {
            for &g in &adj[f] {
                if parity[g] == u8::MAX {
                    parity[g] = 1 - parity[f];
                    queue.push_back(g);
                } else if parity[g] == parity[f] {
                    return Err(Error::InvalidDiagram("faces admit no checkerboard coloring".into()));
                }
            }
        }
        let want = match c {
            Coloring::I => 0,
            Coloring::II => 1,
        };
        let mut whites: Vec<usize> = (0..nf).filter(|&f| parity[f] == want).collect();
        whites.sort_by_key(|&f| faces.boundaries[f].iter().min().copied());
        let mut white = vec![None; nf];
        for (i, &f) in whites.iter().enumerate() {
            white[f] = Some(i);
        }
        Ok(FaceColoring { faces, white, whites: whites.len() })
    }

    /// White faces at the corners of vertex `v`: `(first, second, true)`
    /// when they are at corners `ab` and `cd`, `(.., false)` for `bc` and `da`.
    fn white_corners(&self, col: &FaceColoring, v: usize) -> (usize, usize, bool) {
        let f = |p| col.faces.at(v, p);
        match col.white[f(0)] {
            Some(i) => (i, col.white[f(2)].unwrap(), true),
            None => (col.white[f(1)].unwrap(), col.white[f(3)].unwrap(), false),
        }
    }
}

/// Faces traced from the rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Faces {
    corner_face: Vec<usize>,
    boundaries: Vec<Vec<i64>>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.boundaries.len()
    }

    /// Face at corner `p` of vertex `v`.
    pub fn at(&self, v: usize, p: usize) -> usize {
        self.corner_face[4 * v + p]
    }

    /// Arc labels along each face boundary.
    pub fn boundaries(&self) -> &[Vec<i64>] {
        &self.boundaries
    }
}

/// One of the two checkerboard colorings, with white faces numbered by
/// their smallest incident arc label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColoring {
    faces: Faces,
    white: Vec<Option<usize>>,
    whites: usize,
}

impl FaceColoring {
    pub fn whites(&self) -> usize {
        self.whites
    }

    /// Index of a face among the white faces, if it is white.
    pub fn white_index(&self, face: usize) -> Option<usize> {
        self.white[face]
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }
}

/// A knot or link diagram in planar-diagram notation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PDDiagram {
    crossings: Vec<[i64; 4]>,
    signs: Vec<i8>,
    planar: Planar,
}

impl PDDiagram {
    /// An empty code is the crossingless unknot.
    pub fn new(crossings: Vec<[i64; 4]>, signs: Vec<i8>) -> Result<Self> {
        if crossings.len() != signs.len() {
            return Err(Error::InvalidDiagram(format!("{} crossings but {} signs", crossings.len(), signs.len())));
        }
        if let Some((i, s)) = signs.iter().enumerate().find(|(_, s)| s.abs() != 1) {
            return Err(Error::InvalidDiagram(format!("sign {s} of crossing {i} is not +1 or -1")));
        }
        let planar = Planar::new(&crossings)?;
        Ok(PDDiagram { crossings, signs, planar })
    }

    pub fn unknot() -> Self {
        PDDiagram::new(Vec::new(), Vec::new()).unwrap()
    }

    pub fn crossings(&self) -> &[[i64; 4]] {
        &self.crossings
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn faces(&self) -> Faces {
        self.planar.faces().unwrap()
    }

    pub fn checkerboard(&self, c: Coloring) -> FaceColoring {
        self.planar.checkerboard(c).unwrap()
    }

    /// Exchange over- and under-strands.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[a, b, c, d], &s)| if s < 0 { [b, c, d, a] } else { [d, a, b, c] })
            .collect();
        PDDiagram::new(crossings, self.signs.iter().map(|s| -s).collect()).unwrap()
    }

    /// The unreduced Goeritz matrix and normalization data of a coloring.
    /// A crossing whose white corners lie in one face adds its sign to `W_r`.
    pub fn goeritz(&self, c: Coloring) -> (UnreducedGoeritz, JonesNormData) {
        let col = self.checkerboard(c);
        let mut edges = Vec::new();
        let mut wr = 0;
        for (v, &s) in self.signs.iter().enumerate() {
            let (i, j, ab) = self.planar.white_corners(&col, v);
            if i == j {
                wr += s as i64;
            } else {
                edges.push((i, j, if ab { 1 } else { -1 }));
            }
        }
        let g = UnreducedGoeritz::from_edges(col.whites(), &edges).unwrap();
        (g, JonesNormData::new(self.writhe(), wr))
    }

    fn arc_index(&self, v: usize, s: usize) -> usize {
        self.planar.verts[v][s]
    }

    fn arc_count(&self) -> usize {
        self.planar.arc_count()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum LockType {
    PV,
    PH,
    NV,
    NH,
}

impl LockType {
    /// Whether the lock carries `phi` rather than `phibar`.
    pub fn is_phi(self) -> bool {
        matches!(self, LockType::PV | LockType::NH)
    }

    /// Whether the bridge joins `(a, b)` and `(c, d)`.
    pub fn bridge_ab(self) -> bool {
        matches!(self, LockType::PV | LockType::NV)
    }

    pub fn mirror(self) -> Self {
        match self {
            LockType::PV => LockType::NV,
            LockType::NV => LockType::PV,
            LockType::PH => LockType::NH,
            LockType::NH => LockType::PH,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Lock {
    #[serde(rename = "type")]
    pub kind: LockType,
    pub arcs: [i64; 4],
}

/// A bipartite diagram built from locks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LockDiagram {
    locks: Vec<Lock>,
    planar: Planar,
}

impl LockDiagram {
    pub fn new(locks: Vec<Lock>) -> Result<Self> {
        let arcs: Vec<[i64; 4]> = locks.iter().map(|l| l.arcs).collect();
        let planar = Planar::new(&arcs)?;
        Ok(LockDiagram { locks, planar })
    }

    pub fn locks(&self) -> &[Lock] {
        &self.locks
    }

    pub fn len(&self) -> usize {
        self.locks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.locks.is_empty()
    }

    pub fn faces(&self) -> Faces {
        self.planar.faces().unwrap()
    }

    pub fn checkerboard(&self, c: Coloring) -> FaceColoring {
        self.planar.checkerboard(c).unwrap()
    }

    pub fn mirror(&self) -> Self {
        let locks = self.locks.iter().map(|l| Lock { kind: l.kind.mirror(), arcs: l.arcs }).collect();
        LockDiagram::new(locks).unwrap()
    }

    /// The unreduced quadruple matrix and lock counts of a coloring.
    pub fn quad(&self, c: Coloring) -> (UnreducedQuad, LockCounts) {
        let col = self.checkerboard(c);
        let mut edges = Vec::new();
        let mut counts = LockCounts::default();
        for (v, lock) in self.locks.iter().enumerate() {
            let (i, j, ab) = self.planar.white_corners(&col, v);
            // Whites at ab/cd merge under the (a, d)(b, c) resolution.
            let merge_is_bridge = ab != lock.kind.bridge_ab();
            let phi = lock.kind.is_phi();
            if phi {
                counts.np += 1;
            } else {
                counts.nn += 1;
            }
            if i == j {
                match (phi, merge_is_bridge) {
                    (true, true) => counts.nph += 1,
                    (true, false) => counts.npv += 1,
                    (false, true) => counts.nnh += 1,
                    (false, false) => counts.nnv += 1,
                }
                continue;
            }
            let e = match (phi, merge_is_bridge) {
                (true, true) => QuadEntry::x(1),
                (true, false) => QuadEntry::t(-1),
                (false, true) => QuadEntry::z(-1),
                (false, false) => QuadEntry::y(1),
            };
            edges.push((i, j, e));
        }
        (UnreducedQuad::from_edges(col.whites(), &edges).unwrap(), counts)
    }

    /// Replace each lock by one crossing: positive for `phi` locks.
    pub fn precursor(&self) -> PDDiagram {
        let mut crossings = Vec::with_capacity(self.locks.len());
        let mut signs = Vec::with_capacity(self.locks.len());
        for l in &self.locks {
            let [a, b, c, d] = l.arcs;
            crossings.push(if l.kind.is_phi() == l.kind.bridge_ab() { [d, a, b, c] } else { [a, b, c, d] });
            signs.push(if l.kind.is_phi() { 1 } else { -1 });
        }
        PDDiagram::new(crossings, signs).unwrap()
    }

    fn arc_index(&self, v: usize, s: usize) -> usize {
        self.planar.verts[v][s]
    }

    fn arc_count(&self) -> usize {
        self.planar.arc_count()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PdJson {
    pd: Vec<[i64; 4]>,
    signs: Vec<i8>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LocksJson {
    locks: Vec<Lock>,
}

/// A diagram read from JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagram {
    Pd(PDDiagram),
    Locks(LockDiagram),
}

impl Diagram {
    /// `{"pd": [[a,b,c,d], ...], "signs": [...]}` or
    /// `{"locks": [{"type": "PV", "arcs": [a,b,c,d]}, ...]}`.
    pub fn from_json(s: &str) -> Result<Self> {
        let bad = |e: serde_json::Error| Error::Input(format!("diagram JSON: {e}"));
        let v: serde_json::Value = serde_json::from_str(s).map_err(bad)?;
        if v.get("pd").is_some() {
            let j: PdJson = serde_json::from_str(s).map_err(bad)?;
            Ok(Diagram::Pd(PDDiagram::new(j.pd, j.signs)?))
        } else if v.get("locks").is_some() {
            let j: LocksJson = serde_json::from_str(s).map_err(bad)?;
            Ok(Diagram::Locks(LockDiagram::new(j.locks)?))
        } else {
            Err(Error::Input("diagram JSON: expected an object with a \"pd\" or \"locks\" key".into()))
        }
    }

    pub fn to_json(&self) -> String {
        let j = match self {
            Diagram::Pd(d) => serde_json::to_string(&PdJson { pd: d.crossings.clone(), signs: d.signs.clone() }),
            Diagram::Locks(d) => serde_json::to_string(&LocksJson { locks: d.locks.clone() }),
        };
        j.expect("diagrams serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::goeritz::SymMatrix;

    fn trefoil() -> PDDiagram {
        PDDiagram::new(vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], vec![-1, -1, -1]).unwrap()
    }

    #[test]
    fn face_counts() {
        assert_eq!(trefoil().faces().count(), 5);
        assert_eq!(PDDiagram::unknot().faces().count(), 2);
        let t4 =
            PDDiagram::new(vec![[1, 5, 2, 8], [5, 3, 6, 2], [3, 7, 4, 6], [7, 1, 8, 4]], vec![1, 1, 1, 1]).unwrap();
        assert_eq!(t4.faces().count(), 6);
    }

    #[test]
    fn malformed_codes_are_rejected() {
        assert!(matches!(PDDiagram::new(vec![[1, 2, 3, 4]], vec![1]), Err(Error::InvalidDiagram(_))));
        assert!(PDDiagram::new(vec![[1, 1, 2, 2]], vec![2]).is_err());
        // Two disjoint curls.
        let r = PDDiagram::new(vec![[1, 1, 2, 2], [3, 3, 4, 4]], vec![1, 1]);
        assert!(matches!(r, Err(Error::InvalidDiagram(m)) if m.contains("Euler")));
    }

    #[test]
    fn trefoil_colorings() {
        let d = trefoil();
        let sizes: Vec<usize> = [Coloring::I, Coloring::II].map(|c| d.checkerboard(c).whites()).to_vec();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![2, 3]);
        for c in [Coloring::I, Coloring::II] {
            let (g, norm) = d.goeritz(c);
            assert_eq!(norm, JonesNormData::new(-3, 0));
            let m = g.matrix();
            if m.size() == 2 {
                assert_eq!(m, &SymMatrix::from_rows(vec![vec![3, -3], vec![-3, 3]]).unwrap());
            } else {
                assert!((0..3).all(|i| *m.get(i, i) == -2));
                assert!((0..3).all(|i| (0..3).all(|j| i == j || *m.get(i, j) == 1)));
            }
        }
    }

    #[test]
    fn unknot_colorings() {
        let d = PDDiagram::unknot();
        for c in [Coloring::I, Coloring::II] {
            assert_eq!(d.checkerboard(c).whites(), 1);
            let (g, norm) = d.goeritz(c);
            assert_eq!(g.size(), 1);
            assert_eq!(norm, JonesNormData::default());
        }
    }

    #[test]
    fn curl_is_a_self_crossing() {
        let d = PDDiagram::new(vec![[1, 1, 2, 2]], vec![1]).unwrap();
        let found: Vec<_> = [Coloring::I, Coloring::II].into_iter().map(|c| d.goeritz(c)).collect();
        assert!(found.iter().any(|(g, n)| g.size() == 1 && n.wr == 1));
        assert!(found.iter().any(|(g, n)| g.size() == 2 && n.wr == 0));
    }

    #[test]
    fn mirror_flips_signs_and_matrix() {
        let d = trefoil();
        let m = d.mirror();
        assert_eq!(m.writhe(), 3);
        // Swapping strands rotates each PD tuple, which may swap the colorings.
        let neg = |d: &PDDiagram, c| d.goeritz(c).0.matrix().negated();
        let swap = m.goeritz(Coloring::I).0.size() != d.goeritz(Coloring::I).0.size();
        let (i, ii) = if swap { (Coloring::II, Coloring::I) } else { (Coloring::I, Coloring::II) };
        assert_eq!(m.goeritz(Coloring::I).0.matrix(), &neg(&d, i));
        assert_eq!(m.goeritz(Coloring::II).0.matrix(), &neg(&d, ii));
    }

    #[test]
    fn json_round_trip() {
        let s = r#"{"pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]],"signs":[-1,-1,-1]}"#;
        let d = Diagram::from_json(s).unwrap();
        assert_eq!(d, Diagram::Pd(trefoil()));
        assert_eq!(Diagram::from_json(&d.to_json()).unwrap(), d);
        let l = r#"{"locks":[{"type":"PV","arcs":[1,2,3,4]},{"type":"NH","arcs":[3,2,1,4]}]}"#;
        assert!(matches!(Diagram::from_json(l).unwrap(), Diagram::Locks(_)));
        assert!(Diagram::from_json(r#"{"pd":[[1,2]]}"#).is_err());
    }
}
