//! Exact-rational subspaces in reduced row echelon form.
//!
//! Vectors are sparse (sorted `(index, value)` pairs). Every basis row is
//! normalized to have coefficient 1 at its pivot and 0 at every other pivot,
//! so the basis of a given subspace is unique and membership is a single
//! reduction pass.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::matrix::RatMatrix;
use crate::ring::{Rationals, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseVec(Vec<(usize, BigRational)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    /// Entries must be sorted by index; zeros are dropped.
    pub fn from_sorted(entries: Vec<(usize, BigRational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseVec(entries.into_iter().filter(|(_, v)| !v.is_zero()).collect())
    }

    pub fn from_dense(v: &[BigRational]) -> Self {
        SparseVec(
            v.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, x.clone()))
                .collect(),
        )
    }

    pub fn from_matrix(m: &RatMatrix) -> Self {
        Self::from_dense(m.data())
    }

    pub fn to_dense(&self, len: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); len];
        for (k, x) in &self.0 {
            v[*k] = x.clone();
        }
        v
    }

    pub fn to_matrix(&self, n: usize) -> RatMatrix {
        RatMatrix::from_vec(n, n, self.to_dense(n * n)).expect("square")
    }

    pub fn entries(&self) -> &[(usize, BigRational)] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, k: usize) -> Option<&BigRational> {
        self.0.binary_search_by_key(&k, |(i, _)| *i).ok().map(|p| &self.0[p].1)
    }

    pub fn leading(&self) -> Option<&(usize, BigRational)> {
        self.0.first()
    }

    pub fn scale(&self, s: &BigRational) -> SparseVec {
        if s.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(k, x)| (*k, x * s)).collect())
    }

    /// `self + s·other`.
    pub fn add_scaled(&self, s: &BigRational, other: &SparseVec) -> SparseVec {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, s * y));
                        b.next();
                    } else {
                        let v = x + s * y;
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, s * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec(out)
    }
}

/// `XY` for `n × n` matrices flattened row-major.
pub fn sparse_matmul(x: &SparseVec, y: &SparseVec, n: usize) -> SparseVec {
    // row offsets of y
    let mut starts = vec![0usize; n + 1];
    for (k, _) in y.entries() {
        starts[k / n + 1] += 1;
    }
    for r in 0..n {
        starts[r + 1] += starts[r];
    }
    let mut acc: HashMap<usize, BigRational> = HashMap::new();
    for (k, a) in x.entries() {
        let (r, mid) = (k / n, k % n);
        for (k2, b) in &y.entries()[starts[mid]..starts[mid + 1]] {
            let c = k2 % n;
            let slot = acc.entry(r * n + c).or_insert_with(BigRational::zero);
            *slot += a * b;
        }
    }
    let mut entries: Vec<(usize, BigRational)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    entries.sort_by_key(|(k, _)| *k);
    SparseVec(entries)
}

pub fn sparse_bracket(x: &SparseVec, y: &SparseVec, n: usize) -> SparseVec {
    sparse_matmul(x, y, n).add_scaled(&-BigRational::one(), &sparse_matmul(y, x, n))
}

/// A subspace of `ℚ^len` with a reduced echelon basis.
#[derive(Debug, Clone)]
pub struct Span {
    len: usize,
    rows: Vec<SparseVec>,
    /// pivot column → row
    pivots: HashMap<usize, usize>,
}

impl Span {
    pub fn new(len: usize) -> Self {
        Span {
            len,
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `v` minus its projection onto the span along the pivot coordinates.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut out = v.clone();
        for (k, x) in v.entries() {
            if let Some(&r) = self.pivots.get(k) {
                out = out.add_scaled(&-x.clone(), &self.rows[r]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let r = self.reduce(v);
        let Some((pivot, lead)) = r.leading().cloned() else {
            return false;
        };
        let r = r.scale(&Rationals.inv(&lead).expect("nonzero"));
        for row in &mut self.rows {
            if let Some(x) = row.get(pivot).cloned() {
                *row = row.add_scaled(&-x, &r);
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Basis rows ordered by pivot column.
    pub fn basis(&self) -> Vec<&SparseVec> {
        let mut rows: Vec<&SparseVec> = self.rows.iter().collect();
        rows.sort_by_key(|r| r.leading().map(|(k, _)| *k));
        rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivots.keys().copied().collect();
        p.sort_unstable();
        p
    }
}

/// A [`Span`] of `n × n` matrices.
#[derive(Debug, Clone)]
pub struct MatrixSpan {
    n: usize,
    span: Span,
}

impl MatrixSpan {
    pub fn new(n: usize) -> Self {
        MatrixSpan {
            n,
            span: Span::new(n * n),
        }
    }

    pub fn side(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn insert(&mut self, m: &RatMatrix) -> bool {
        self.span.insert(&SparseVec::from_matrix(m))
    }

    pub fn insert_sparse(&mut self, v: &SparseVec) -> bool {
        self.span.insert(v)
    }

    pub fn contains(&self, m: &RatMatrix) -> bool {
        self.span.contains(&SparseVec::from_matrix(m))
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        self.span.contains(v)
    }

    pub fn basis_sparse(&self) -> Vec<&SparseVec> {
        self.span.basis()
    }

    pub fn basis(&self) -> Vec<RatMatrix> {
        self.span.basis().into_iter().map(|v| v.to_matrix(self.n)).collect()
    }

    pub fn span(&self) -> &Span {
        &self.span
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> BigRational {
        Rationals.from_i64(n)
    }

    fn dense(v: &[i64]) -> SparseVec {
        SparseVec::from_dense(&v.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    #[test]
    fn insert_and_membership() {
        let mut s = Span::new(3);
        assert!(s.insert(&dense(&[1, 2, 3])));
        assert!(s.insert(&dense(&[0, 1, 1])));
        assert!(!s.insert(&dense(&[2, 5, 7])));
        assert!(s.contains(&dense(&[1, 3, 4])));
        assert!(!s.contains(&dense(&[0, 0, 1])));
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivot_columns(), vec![0, 1]);
        // reduced: first row has zero in column 1
        assert!(s.basis()[0].get(1).is_none());
    }

    #[test]
    fn zero_is_never_inserted() {
        let mut s = Span::new(2);
        assert!(!s.insert(&SparseVec::new()));
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn sparse_product_matches_dense() {
        let a = RatMatrix::from_fn(3, 3, |r, c| q((r * 3 + c) as i64 % 4 - 1));
        let b = RatMatrix::from_fn(3, 3, |r, c| q((r + 2 * c) as i64 % 3));
        let p = sparse_matmul(&SparseVec::from_matrix(&a), &SparseVec::from_matrix(&b), 3);
        assert_eq!(p.to_matrix(3), a.mul(&b, &Rationals));
        let br = sparse_bracket(&SparseVec::from_matrix(&a), &SparseVec::from_matrix(&b), 3);
        assert_eq!(br.to_matrix(3), a.commutator(&b, &Rationals));
    }

    proptest! {
        // the echelon basis depends only on the subspace, not on insertion order
        #[test]
        fn canonical_basis(vs in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 1..6)) {
            let mut a = Span::new(5);
            for v in &vs { a.insert(&dense(v)); }
            let mut b = Span::new(5);
            for v in vs.iter().rev() { b.insert(&dense(v)); }
            prop_assert_eq!(a.basis(), b.basis());
            // re-inserting the basis changes nothing
            let before: Vec<SparseVec> = a.basis().into_iter().cloned().collect();
            for v in &before { prop_assert!(!a.insert(v)); }
            for v in &vs { prop_assert!(a.contains(&dense(v))); }
        }
    }
}
