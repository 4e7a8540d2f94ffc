//! Memoized resolution of a symmetric matrix into diagonal pieces.
//!
//! Both the classical and the quadruple invariants follow the same scheme:
//! a nonzero off-diagonal entry `g` splits the matrix into transformation I
//! and transformation II branches with weights `split(g)`, and a diagonal
//! matrix evaluates to the product of `diag(g_ii)` times the empty value.

use std::collections::HashMap;

use super::matrix::{Entry, SymMatrix};

/// Default number of memoized matrices kept per evaluator.
pub const DEFAULT_MEMO_LIMIT: usize = 1 << 18;

pub trait StateAlgebra {
    type Entry: Entry;
    type Value: Clone;

    /// Value of the empty matrix.
    fn empty(&self) -> Self::Value;
    /// Weights of the transformation I and II branches.
    fn split(&self, g: &Self::Entry) -> (Self::Value, Self::Value);
    /// Factor contributed by a diagonal entry.
    fn diag(&self, g: &Self::Entry) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
}

/// Chooses a pivot among the nonzero off-diagonal positions, given in
/// row-major order. Returns an index into the slice.
pub type PivotRule = Box<dyn FnMut(&[(usize, usize)]) -> usize + Send>;

pub struct Evaluator<A: StateAlgebra> {
    alg: A,
    memo: HashMap<SymMatrix<A::Entry>, A::Value>,
    splits: HashMap<A::Entry, (A::Value, A::Value)>,
    diags: HashMap<A::Entry, A::Value>,
    memo_limit: usize,
    pivot: Option<PivotRule>,
}

impl<A: StateAlgebra> Evaluator<A> {
    pub fn new(alg: A) -> Self {
        Evaluator {
            alg,
            memo: HashMap::new(),
            splits: HashMap::new(),
            diags: HashMap::new(),
            memo_limit: DEFAULT_MEMO_LIMIT,
            pivot: None,
        }
    }

    /// Cap on memoized matrices; `0` disables memoization.
    pub fn with_memo_limit(mut self, limit: usize) -> Self {
        self.memo_limit = limit;
        self
    }

    /// Replace the first-in-row-major-order pivot rule.
    pub fn with_pivot(mut self, rule: PivotRule) -> Self {
        self.pivot = Some(rule);
        self
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn split(&mut self, g: &A::Entry) -> (A::Value, A::Value) {
        if let Some(v) = self.splits.get(g) {
            return v.clone();
        }
        let v = self.alg.split(g);
        self.splits.insert(g.clone(), v.clone());
        v
    }

    fn diag(&mut self, g: &A::Entry) -> A::Value {
        if let Some(v) = self.diags.get(g) {
            return v.clone();
        }
        let v = self.alg.diag(g);
        self.diags.insert(g.clone(), v.clone());
        v
    }

    pub fn eval(&mut self, m: &SymMatrix<A::Entry>) -> A::Value {
        if let Some(v) = self.memo.get(m) {
            return v.clone();
        }
        let v = self.eval_uncached(m);
        if self.memo.len() < self.memo_limit {
            self.memo.insert(m.clone(), v.clone());
        }
        v
    }

    fn eval_uncached(&mut self, m: &SymMatrix<A::Entry>) -> A::Value {
        let pivot = match &mut self.pivot {
            None => m.first_off_diagonal(),
            Some(rule) => {
                let support = m.off_diagonal_support();
                (!support.is_empty()).then(|| support[rule(&support)])
            }
        };
        match pivot {
            Some((i, j)) => {
                let g = m.get(i, j).clone();
                let (w1, w2) = self.split(&g);
                let a = self.eval(&m.transform_i(i, j).expect("valid pivot"));
                let b = self.eval(&m.transform_ii(i, j).expect("valid pivot"));
                self.alg.add(&self.alg.mul(&w1, &a), &self.alg.mul(&w2, &b))
            }
            None => {
                let mut acc = self.alg.empty();
                for g in m.diagonal_entries() {
                    let f = self.diag(&g);
                    acc = self.alg.mul(&f, &acc);
                }
                acc
            }
        }
    }
}
