//! Named fixture diagrams. Every entry is validated on construction.

use super::tait::{TaitGraph, Unit};
use super::{LockDiagram, PDDiagram};

fn pd(crossings: &[[i64; 4]], signs: &[i8]) -> PDDiagram {
    PDDiagram::new(crossings.to_vec(), signs.to_vec()).unwrap()
}

/// Two regions joined by parallel edges.
fn bundle<T: Copy>(labels: &[T]) -> TaitGraph<T> {
    labels.iter().enumerate().fold(TaitGraph::new(vec![(0.0, 0.0), (1.0, 0.0)]), |g, (k, &l)| g.edge(0, 1, k as i32, l))
}

/// Three regions joined pairwise by bundles of parallel edges.
fn theta<T: Copy>(a: &[T], b: &[T], c: &[T]) -> TaitGraph<T> {
    let mut g = TaitGraph::new(vec![(0.0, 0.0), (2.0, 0.0), (1.0, 1.7)]);
    for (k, &l) in a.iter().enumerate() {
        g = g.edge(0, 1, -(k as i32), l);
    }
    for (k, &l) in b.iter().enumerate() {
        g = g.edge(0, 2, k as i32, l);
    }
    for (k, &l) in c.iter().enumerate() {
        g = g.edge(1, 2, -(k as i32), l);
    }
    g
}

/// A cycle of regions joined by single edges, the last region joined to
/// the first by the `closing` bundle.
fn cycle<T: Copy>(n: usize, edge: T, closing: &[T]) -> TaitGraph<T> {
    let points = (0..n).map(|i| {
        let a = std::f64::consts::TAU * i as f64 / n as f64;
        (a.cos(), a.sin())
    });
    let g = (0..n - 1).fold(TaitGraph::new(points.collect()), |g, i| g.edge(i, i + 1, 0, edge));
    let bend = if n == 2 { 1 } else { 0 };
    closing.iter().enumerate().fold(g, |g, (k, &l)| g.edge(n - 1, 0, bend + k as i32, l))
}

/// The strip of triangles behind the bipartite diagrams of `T[2, 2n+1]`
/// and, with `closing`, `T[2, 2n+2]`.
fn ladder(n: usize, closing: bool) -> TaitGraph<Unit> {
    let mut g = TaitGraph::new((0..=n).map(|i| (i as f64, (i % 2) as f64)).collect());
    g = g.edge(0, 1, 0, Unit::X).edge(0, 1, 1, Unit::T);
    for i in 1..n {
        g = g.edge(i, i + 1, 0, Unit::T);
    }
    for i in 0..n.saturating_sub(1) {
        g = g.edge(i, i + 2, 0, Unit::X);
    }
    if closing {
        g = g.edge(n - 1, n, if n == 1 { -1 } else { 1 }, Unit::X);
    }
    g
}

/// Classical diagrams: knot-table codes, small examples and drawings of
/// the torus, twist and `5_2` matrices.
pub fn pd_corpus() -> Vec<(String, PDDiagram)> {
    let mut out = vec![
        ("unknot".to_string(), PDDiagram::unknot()),
        ("trefoil".into(), pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]], &[-1, -1, -1])),
        ("figure-eight".into(), pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]], &[1, 1, -1, -1])),
        ("5_2".into(), pd(&[[1, 4, 2, 5], [3, 8, 4, 9], [5, 10, 6, 1], [9, 6, 10, 7], [7, 2, 8, 3]], &[-1; 5])),
        ("curl+".into(), TaitGraph::new(vec![(0.0, 0.0)]).loop_at(0, 0.0, 1).pd().unwrap()),
        ("curl-".into(), TaitGraph::new(vec![(0.0, 0.0)]).loop_at(0, 0.0, -1).pd().unwrap()),
        ("unlink-r2".into(), bundle(&[1, -1]).pd().unwrap()),
        ("trefoil-curl".into(), bundle(&[1, 1, 1]).loop_at(0, 3.0, -1).pd().unwrap()),
        ("twist-curls".into(), theta(&[1, 1], &[1], &[1]).loop_at(2, 1.5, 1).loop_at(0, 3.5, 1).pd().unwrap()),
        ("knot52-drawn".into(), theta(&[1, 1, 1], &[-1], &[-1, -1]).pd().unwrap()),
        (
            "knot52-drawn-ii".into(),
            TaitGraph::new(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (-1.0, 0.5)])
                .edge(0, 1, 0, -1)
                .edge(1, 2, 0, -1)
                .edge(2, 3, 0, -1)
                .edge(3, 0, 0, 1)
                .edge(0, 4, 0, 1)
                .edge(3, 4, 0, 1)
                .pd()
                .unwrap(),
        ),
    ];
    for p in 2..=8 {
        out.push((format!("torus2:{p}"), bundle(&vec![1; p]).pd().unwrap()));
    }
    for m in [2, 3, 4, 5, 8] {
        out.push((format!("twist:{m}"), theta(&vec![1; m], &[1], &[1]).pd().unwrap()));
        out.push((format!("twist:{m}-ii"), cycle(m + 1, -1, &[-1, -1]).pd().unwrap()));
    }
    out
}

/// Bipartite diagrams: drawings of the torus, twist and pretzel quadruple
/// matrices, plus locks with self-crossing regions.
pub fn lock_corpus() -> Vec<(String, LockDiagram)> {
    use Unit::*;
    let mut out = vec![("bipartite-trefoil".to_string(), bundle(&[X, T]).locks().unwrap())];
    for p in 4..=8usize {
        out.push((format!("torus2:{p}"), ladder((p - 1) / 2, p % 2 == 0).locks().unwrap()));
    }
    for m in 1..=5usize {
        let k = m.div_ceil(2);
        let g = if m % 2 == 0 {
            bundle(&[vec![X], vec![Y; m / 2]].concat())
        } else {
            bundle(&[vec![Y; k], vec![Z]].concat())
        };
        out.push((format!("twist:{m}"), g.locks().unwrap()));
        let closing = if m % 2 == 0 { T } else { Y };
        out.push((format!("twist:{m}-ii"), cycle(k + 1, Z, &[closing]).locks().unwrap()));
    }
    let sq = TaitGraph::new(vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
    let pretzel =
        sq.edge(0, 1, 0, X).edge(0, 1, -1, T).edge(0, 3, 0, X).edge(0, 3, 1, T).edge(1, 2, 0, Y).edge(2, 3, 0, X);
    out.push(("pretzel332".into(), pretzel.locks().unwrap()));
    let kite = TaitGraph::new(vec![(0.0, 0.0), (1.0, 1.0), (1.0, -1.0), (2.0, 0.0)]);
    let pretzel2 =
        kite.edge(0, 1, 0, T).edge(0, 2, 0, T).edge(0, 3, 0, Z).edge(0, 3, 1, T).edge(1, 3, 0, X).edge(2, 3, 0, X);
    out.push(("pretzel332-dual".into(), pretzel2.locks().unwrap()));
    let selfish = bundle(&[X, T]).loop_at(0, 3.0, Y).loop_at(1, 0.0, X).loop_at(1, 1.0, T).loop_at(0, 4.0, Z);
    out.push(("self-locks".into(), selfish.locks().unwrap()));
    out.push(("mixed-theta".into(), theta(&[X, Y], &[Z, T], &[T, X]).loop_at(2, 1.5, Y).locks().unwrap()));
    out
}
