//! Dense matrices over an exact [`Ring`].
//!
//! Column `c` of a matrix is the image of basis vector `c`; entry `(r, c)`
//! is the coefficient of basis vector `r` in that image.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Integers, Rationals, Ring};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: T) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Row-major entries.
    pub fn data(&self) -> &[T] {
        &self.data
    }

    pub fn into_data(self) -> Vec<T> {
        self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn same_shape<U>(&self, other: &Matrix<U>) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }
}

impl<T: Clone> Matrix<T> {
    pub fn zeros<R: Ring<Elem = T>>(rows: usize, cols: usize, ring: &R) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity<R: Ring<Elem = T>>(n: usize, ring: &R) -> Self {
        let mut m = Self::zeros(n, n, ring);
        for k in 0..n {
            m.set(k, k, ring.one());
        }
        m
    }

    /// Panics if the shapes differ.
    pub fn add<R: Ring<Elem = T>>(&self, other: &Self, ring: &R) -> Self {
        assert!(self.same_shape(other), "matrix shapes differ");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| ring.add(a, b)).collect(),
        }
    }

    /// Panics if the shapes differ.
    pub fn sub<R: Ring<Elem = T>>(&self, other: &Self, ring: &R) -> Self {
        assert!(self.same_shape(other), "matrix shapes differ");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| ring.sub(a, b)).collect(),
        }
    }

    pub fn neg<R: Ring<Elem = T>>(&self, ring: &R) -> Self {
        self.map(|a| ring.neg(a))
    }

    pub fn scale<R: Ring<Elem = T>>(&self, s: &T, ring: &R) -> Self {
        self.map(|a| ring.mul(s, a))
    }

    /// Matrix product; zero entries of `self` are skipped, which matters for
    /// the very sparse matrices this crate works with. Panics on a shape
    /// mismatch.
    pub fn mul<R: Ring<Elem = T>>(&self, rhs: &Self, ring: &R) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, rhs.cols, ring);
        // nonzero columns of each row of rhs
        let support: Vec<Vec<usize>> = (0..rhs.rows)
            .map(|k| (0..rhs.cols).filter(|&c| !ring.is_zero(rhs.get(k, c))).collect())
            .collect();
        for r in 0..self.rows {
            for (k, cols) in support.iter().enumerate() {
                let a = self.get(r, k);
                if ring.is_zero(a) || cols.is_empty() {
                    continue;
                }
                let out_row = r * rhs.cols;
                for &c in cols {
                    let slot = &mut out.data[out_row + c];
                    *slot = ring.add(slot, &ring.mul(a, rhs.get(k, c)));
                }
            }
        }
        out
    }

    pub fn apply<R: Ring<Elem = T>>(&self, v: &[T], ring: &R) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "vector length differs");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !ring.is_zero(a) && !ring.is_zero(b))
                    .fold(ring.zero(), |acc, (a, b)| ring.add(&acc, &ring.mul(a, b)))
            })
            .collect()
    }

    pub fn pow<R: Ring<Elem = T>>(&self, mut e: u64, ring: &R) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.rows, ring);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq, ring);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq, ring);
            }
        }
        acc
    }

    /// `XY − YX`. Panics on a shape mismatch.
    pub fn commutator<R: Ring<Elem = T>>(&self, other: &Self, ring: &R) -> Self {
        self.mul(other, ring).sub(&other.mul(self, ring), ring)
    }

    pub fn is_zero<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.data.iter().all(|a| ring.is_zero(a))
    }

    pub fn is_identity<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let a = self.get(r, c);
                    if r == c {
                        ring.is_one(a)
                    } else {
                        ring.is_zero(a)
                    }
                })
            })
    }

    pub fn trace<R: Ring<Elem = T>>(&self, ring: &R) -> T {
        (0..self.rows.min(self.cols)).fold(ring.zero(), |acc, k| ring.add(&acc, self.get(k, k)))
    }

    pub fn is_diagonal<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.nonzero_entries(ring).all(|(r, c, _)| r == c)
    }

    pub fn is_strictly_upper<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.nonzero_entries(ring).all(|(r, c, _)| r < c)
    }

    pub fn is_strictly_lower<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.nonzero_entries(ring).all(|(r, c, _)| r > c)
    }

    /// Nilpotent iff the `n`-th power vanishes.
    pub fn is_nilpotent<R: Ring<Elem = T>>(&self, ring: &R) -> bool {
        self.is_square() && self.pow(self.rows as u64, ring).is_zero(ring)
    }

    /// Smallest `k ≥ 1` with `self^k = 0`, if any.
    pub fn nilpotency_index<R: Ring<Elem = T>>(&self, ring: &R) -> Option<usize> {
        if !self.is_square() {
            return None;
        }
        let mut p = self.clone();
        for k in 1..=self.rows.max(1) {
            if p.is_zero(ring) {
                return Some(k);
            }
            p = p.mul(self, ring);
        }
        None
    }

    pub fn nonzero_entries<'a, R: Ring<Elem = T>>(
        &'a self,
        ring: &'a R,
    ) -> impl Iterator<Item = (usize, usize, &'a T)> + 'a {
        self.data
            .iter()
            .enumerate()
            .filter(move |(_, a)| !ring.is_zero(a))
            .map(move |(k, a)| (k / self.cols, k % self.cols, a))
    }

    /// Determinant by Gaussian elimination; `ring` must be a field.
    pub fn det_field<R: Ring<Elem = T>>(&self, ring: &R) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = ring.one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !ring.is_zero(a.get(r, col))) else {
                return Ok(ring.zero());
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = ring.neg(&det);
            }
            let p = a.get(col, col).clone();
            det = ring.mul(&det, &p);
            let pinv = ring.inv(&p)?;
            for r in col + 1..n {
                let f = ring.mul(a.get(r, col), &pinv);
                if ring.is_zero(&f) {
                    continue;
                }
                for c in col..n {
                    let v = ring.sub(a.get(r, c), &ring.mul(&f, a.get(col, c)));
                    a.set(r, c, v);
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss–Jordan elimination; `ring` must be a field.
    pub fn inverse_field<R: Ring<Elem = T>>(&self, ring: &R) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n, ring);
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !ring.is_zero(a.get(r, col)))
                .ok_or_else(|| Error::NotInvertible("singular matrix".into()))?;
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let pinv = ring.inv(a.get(col, col))?;
            for c in 0..n {
                a.set(col, c, ring.mul(a.get(col, c), &pinv));
                inv.set(col, c, ring.mul(inv.get(col, c), &pinv));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let f = a.get(r, col).clone();
                if ring.is_zero(&f) {
                    continue;
                }
                for c in 0..n {
                    a.set(r, c, ring.sub(a.get(r, c), &ring.mul(&f, a.get(col, c))));
                    inv.set(r, c, ring.sub(inv.get(r, c), &ring.mul(&f, inv.get(col, c))));
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl IntMatrix {
    /// Integer matrix from small entries, mostly for tests and tables.
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix::from_fn(n, m, |r, c| BigInt::from(rows[r][c])))
    }

    /// gcd of all entries (0 for the zero matrix).
    pub fn content(&self) -> BigInt {
        self.data.iter().fold(BigInt::zero(), |g, a| g.gcd(a))
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|a| Rationals.from_int(a))
    }

    /// The image in another ring under ℤ → R.
    pub fn specialize<R: Ring>(&self, ring: &R) -> Matrix<R::Elem> {
        self.map(|a| ring.from_int(a))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&r| !a.get(r, k).is_zero()) {
                    Some(r) => {
                        a.swap_rows(r, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    pub fn mul_int(&self, rhs: &Self) -> Self {
        self.mul(rhs, &Integers)
    }
}

impl RatMatrix {
    /// `Some` iff every entry is an integer.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().all(|a| a.is_integer()) {
            Some(self.map(|a| a.to_integer()))
        } else {
            None
        }
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Checks that every entry is ≥ 0.
pub fn is_nonnegative(m: &IntMatrix) -> bool {
    m.data().iter().all(|a| !a.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PrimeField;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn product_and_commutator() {
        let e = m(&[vec![0, 1], vec![0, 0]]);
        let f = m(&[vec![0, 0], vec![1, 0]]);
        let h = e.commutator(&f, &Integers);
        assert_eq!(h, m(&[vec![1, 0], vec![0, -1]]));
        assert!(e.is_strictly_upper(&Integers));
        assert!(f.is_strictly_lower(&Integers));
        assert!(h.is_diagonal(&Integers));
        assert_eq!(e.nilpotency_index(&Integers), Some(2));
        assert_eq!(h.nilpotency_index(&Integers), None);
    }

    #[test]
    fn determinants_agree() {
        let a = m(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(a.det(), BigInt::from(4));
        assert_eq!(a.to_rational().det_field(&Rationals).unwrap(), Rationals.from_i64(4));
        let z = m(&[vec![0, 1], vec![0, 3]]);
        assert_eq!(z.det(), BigInt::zero());
        let swap = m(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(swap.det(), BigInt::from(-1));
    }

    #[test]
    fn inverse_over_prime_field() {
        let f = PrimeField::new(5).unwrap();
        let a = m(&[vec![1, 2], vec![3, 4]]).specialize(&f);
        let inv = a.inverse_field(&f).unwrap();
        assert!(a.mul(&inv, &f).is_identity(&f));
        let sing = m(&[vec![1, 2], vec![2, 4]]).specialize(&f);
        assert!(sing.inverse_field(&f).is_err());
    }

    #[test]
    fn content_and_integrality() {
        assert_eq!(m(&[vec![4, -6], vec![0, 2]]).content(), BigInt::from(2));
        let half = RatMatrix::from_fn(1, 1, |_, _| BigRational::new(1.into(), 2.into()));
        assert!(half.to_integer().is_none());
    }

    #[test]
    fn shape_checks() {
        assert!(IntMatrix::from_vec(2, 2, vec![BigInt::zero(); 3]).is_err());
        assert!(IntMatrix::from_i64_rows(&[vec![1, 2], vec![3]]).is_err());
    }
}
