//! Diagrams drawn as the medial graph of a plane Tait graph: white regions
//! are the vertices and every edge becomes a crossing or a lock.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

use super::{Lock, LockDiagram, LockType, PDDiagram};

/// Entry of the quadruple matrix a lock contributes between its regions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    X,
    Y,
    Z,
    T,
}

impl Unit {
    fn lock(self) -> LockType {
        match self {
            Unit::X => LockType::PV,
            Unit::Y => LockType::PH,
            Unit::Z => LockType::NV,
            Unit::T => LockType::NH,
        }
    }
}

const BEND: f64 = 0.05;

#[derive(Clone, Debug)]
struct Edge<T> {
    ends: [usize; 2],
    angles: [f64; 2],
    label: T,
}

/// A plane multigraph drawn with straight edges between fixed points.
/// Bending an edge by `k` turns it left of its direction by `k` small
/// steps, which separates parallel edges.
#[derive(Clone, Debug)]
pub struct TaitGraph<T> {
    points: Vec<(f64, f64)>,
    edges: Vec<Edge<T>>,
}

// Slots of a medial vertex, counter-clockwise, with the tail region to
// the south and the head region to the north.
const SE: usize = 0;
const NE: usize = 1;
const NW: usize = 2;
const SW: usize = 3;

impl<T: Copy> TaitGraph<T> {
    pub fn new(points: Vec<(f64, f64)>) -> Self {
        TaitGraph { points, edges: Vec::new() }
    }

    pub fn edge(mut self, tail: usize, head: usize, bend: i32, label: T) -> Self {
        let (p, q) = (self.points[tail], self.points[head]);
        let out = (q.1 - p.1).atan2(q.0 - p.0);
        let back = (p.1 - q.1).atan2(p.0 - q.0);
        let k = bend as f64 * BEND;
        self.edges.push(Edge { ends: [tail, head], angles: [out + k, back - k], label });
        self
    }

    /// A loop at `v` leaving towards `angle` with nothing inside it.
    pub fn loop_at(mut self, v: usize, angle: f64, label: T) -> Self {
        self.edges.push(Edge { ends: [v, v], angles: [angle + BEND, angle - BEND], label });
        self
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Half-edges around each vertex, counter-clockwise; half-edge `2e` is
    /// the tail of edge `e`.
    fn rotation(&self) -> Result<Vec<Vec<usize>>> {
        let mut around: Vec<Vec<(f64, usize)>> = vec![Vec::new(); self.points.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            for end in 0..2 {
                around[edge.ends[end]].push((edge.angles[end].rem_euclid(TAU), 2 * e + end));
            }
        }
        around
            .into_iter()
            .enumerate()
            .map(|(v, mut hs)| {
                hs.sort_by(|a, b| a.0.total_cmp(&b.0));
                if hs.windows(2).any(|w| w[1].0 - w[0].0 < 1e-9) {
                    return Err(Error::InvalidDiagram(format!("edges overlap at vertex {v}")));
                }
                Ok(hs.into_iter().map(|(_, h)| h).collect())
            })
            .collect()
    }

    /// Arc numbers in the four slots of every medial vertex.
    fn medial(&self) -> Result<Vec<[usize; 4]>> {
        if self.edges.is_empty() {
            return match self.points.len() {
                1 => Ok(Vec::new()),
                _ => Err(Error::InvalidDiagram("Tait graph is disconnected".into())),
            };
        }
        let port = |h: usize, ccw: bool| {
            let tail = h.is_multiple_of(2);
            (
                h / 2,
                match (tail, ccw) {
                    (true, false) => SE,
                    (true, true) => SW,
                    (false, true) => NE,
                    (false, false) => NW,
                },
            )
        };
        let mut slots = vec![[usize::MAX; 4]; self.edges.len()];
        let mut arc = 0;
        for (v, hs) in self.rotation()?.iter().enumerate() {
            if hs.is_empty() {
                return Err(Error::InvalidDiagram(format!("Tait vertex {v} is isolated")));
            }
            for (i, &h) in hs.iter().enumerate() {
                let cw = hs[(i + hs.len() - 1) % hs.len()];
                for (e, s) in [port(h, false), port(cw, true)] {
                    slots[e][s] = arc;
                }
                arc += 1;
            }
        }
        Ok(slots)
    }

    fn ends(slots: &[[usize; 4]]) -> Vec<Vec<(usize, usize)>> {
        let mut ends = vec![Vec::new(); 2 * slots.len()];
        for (e, row) in slots.iter().enumerate() {
            for (s, &a) in row.iter().enumerate() {
                ends[a].push((e, s));
            }
        }
        ends
    }
}

impl TaitGraph<i8> {
    /// Edge label `+1` makes the crossing contribute `+1` to the Goeritz
    /// matrix of the vertex regions, `-1` contributes `-1`. Arcs are
    /// numbered along an orientation of each component.
    pub fn pd(&self) -> Result<PDDiagram> {
        let slots = self.medial()?;
        let ends = Self::ends(&slots);
        let mut label = vec![0i64; ends.len()];
        let mut incoming = vec![[false; 4]; slots.len()];
        let mut next = 1;
        for a0 in 0..ends.len() {
            if label[a0] != 0 {
                continue;
            }
            let (mut e, mut s) = ends[a0][0];
            let mut a = a0;
            while label[a] == 0 {
                label[a] = next;
                next += 1;
                let (e2, s2) = if ends[a][0] == (e, s) { ends[a][1] } else { ends[a][0] };
                incoming[e2][s2] = true;
                (e, s) = (e2, (s2 + 2) % 4);
                a = slots[e][s];
            }
        }
        let mut crossings = Vec::with_capacity(slots.len());
        let mut signs = Vec::with_capacity(slots.len());
        for (e, edge) in self.edges.iter().enumerate() {
            let under = if edge.label > 0 { NE } else { SE };
            let a = if incoming[e][under] { under } else { under + 2 };
            crossings.push([0, 1, 2, 3].map(|k| label[slots[e][(a + k) % 4]]));
            signs.push(if incoming[e][(a + 1) % 4] { -1 } else { 1 });
        }
        PDDiagram::new(crossings, signs)
    }
}

impl TaitGraph<Unit> {
    pub fn locks(&self) -> Result<LockDiagram> {
        let slots = self.medial()?;
        let locks = self
            .edges
            .iter()
            .zip(&slots)
            .map(|(edge, row)| Lock { kind: edge.label.lock(), arcs: row.map(|a| a as i64 + 1) })
            .collect();
        LockDiagram::new(locks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Coloring;

    #[test]
    fn parallel_edges_give_torus_links() {
        for p in 1..6 {
            let g = (0..p).fold(TaitGraph::new(vec![(0.0, 0.0), (1.0, 0.0)]), |g, k| g.edge(0, 1, k, 1));
            let d = g.pd().unwrap();
            assert_eq!(d.len(), p as usize);
            assert_eq!(d.faces().count(), p as usize + 2);
            let sizes = [Coloring::I, Coloring::II].map(|c| d.checkerboard(c).whites());
            assert!(sizes.contains(&2) && sizes.contains(&(p as usize)));
        }
    }

    #[test]
    fn crossing_signs_follow_the_goeritz_entry() {
        let g = TaitGraph::new(vec![(0.0, 0.0), (1.0, 0.0)]).edge(0, 1, 0, 1).edge(0, 1, 1, 1).edge(0, 1, 2, 1);
        let d = g.pd().unwrap();
        for c in [Coloring::I, Coloring::II] {
            let (m, _) = d.goeritz(c);
            if m.size() == 2 {
                assert_eq!(*m.matrix().get(0, 1), 3);
            }
        }
    }

    #[test]
    fn overlapping_edges_are_rejected() {
        let g = TaitGraph::new(vec![(0.0, 0.0), (1.0, 0.0)]).edge(0, 1, 0, 1).edge(0, 1, 0, 1);
        assert!(g.pd().is_err());
        let g = TaitGraph::new(vec![(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)]).edge(0, 1, 0, 1);
        assert!(g.pd().is_err());
    }

    #[test]
    fn loop_is_a_curl() {
        let d = TaitGraph::new(vec![(0.0, 0.0)]).loop_at(0, 0.0, 1i8).pd().unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.faces().count(), 3);
    }
}
