//! Root systems generated from a Cartan matrix.
//!
//! Roots are integer coordinate vectors over the simple roots; the bilinear
//! form is the symmetrized Cartan form `(α_i, α_j) = d_i a_ij`, so every
//! quantity here is an exact integer.

mod cartan;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use cartan::{CartanMatrix, CartanType, Family};

use crate::error::{Error, Result};

/// Upper bound on the number of roots produced before giving up.
pub const ROOT_CAP: usize = 1_000_000;

/// A root written in the basis of simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&n| n >= 0) && self.0.iter().any(|&n| n > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&n| n <= 0) && self.0.iter().any(|&n| n < 0)
    }

    /// `self + k·other`.
    pub fn add_multiple(&self, k: i64, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    pub fn plus(&self, other: &Root) -> Root {
        self.add_multiple(1, other)
    }

    pub fn minus(&self, other: &Root) -> Root {
        self.add_multiple(-1, other)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|a| -a).collect())
    }

    /// Index `i` when this is the simple root `α_i`.
    pub fn simple_index(&self) -> Option<usize> {
        let mut found = None;
        for (k, &n) in self.0.iter().enumerate() {
            match n {
                0 => {}
                1 if found.is_none() => found = Some(k),
                _ => return None,
            }
        }
        found
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Human-readable form such as `2a1+3a2` or `-a1-a2`.
impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, &n) in self.0.iter().enumerate() {
            if n == 0 {
                continue;
            }
            if n < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if n.abs() != 1 {
                out.push_str(&n.abs().to_string());
            }
            out.push_str(&format!("a{}", k + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `(p, q)` for the α-string `β − qα, …, β + pα`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootStringData {
    pub p: i64,
    pub q: i64,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanMatrix,
    /// Positive roots by ascending height then coordinates, followed by
    /// their negatives in the same order.
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
    num_positive: usize,
}

impl RootSystem {
    /// Closes the simple roots under all simple reflections.
    pub fn generate(cartan: &CartanMatrix) -> Result<Self> {
        Self::generate_with_cap(cartan, ROOT_CAP)
    }

    pub fn generate_with_cap(cartan: &CartanMatrix, cap: usize) -> Result<Self> {
        let l = cartan.rank();
        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut work: Vec<Root> = (0..l).map(|i| Root::simple(l, i)).collect();
        for r in &work {
            seen.insert(r.clone(), ());
        }
        while let Some(beta) = work.pop() {
            for i in 0..l {
                let image = beta.add_multiple(-simple_pairing(cartan, beta.coords(), i), &Root::simple(l, i));
                if !seen.contains_key(&image) {
                    if seen.len() >= cap {
                        return Err(Error::NotFiniteType(cap));
                    }
                    seen.insert(image.clone(), ());
                    work.push(image);
                }
            }
        }
        let mut positive: Vec<Root> = seen.into_keys().filter(Root::is_positive).collect();
        positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        let num_positive = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(Root::neg));
        let index = roots.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        Ok(RootSystem {
            cartan: cartan.clone(),
            roots,
            index,
            num_positive,
        })
    }

    pub fn of_type(kind: CartanType) -> Self {
        Self::generate(&kind.cartan_matrix()).expect("finite type")
    }

    /// Shorthand for `RootSystem::generate(&CartanMatrix::from_designation(s)?)`.
    pub fn from_designation(s: &str) -> Result<Self> {
        Self::generate(&CartanMatrix::from_designation(s)?)
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive]
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn highest_root(&self) -> &Root {
        &self.roots[self.num_positive - 1]
    }

    /// Ordinal of `−roots[k]`.
    pub fn negative_index(&self, k: usize) -> usize {
        if k < self.num_positive {
            k + self.num_positive
        } else {
            k - self.num_positive
        }
    }

    fn check(&self, r: &Root) -> Result<()> {
        if r.coords().len() == self.rank() && self.contains(r) {
            Ok(())
        } else {
            Err(Error::UnknownRoot(r.coords().to_vec()))
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    /// The symmetrized form `(x, y)` on coordinate vectors.
    pub fn form(&self, x: &Root, y: &Root) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if x.0[i] == 0 {
                continue;
            }
            for j in 0..l {
                s += x.0[i] * self.cartan.form(i, j) * y.0[j];
            }
        }
        s
    }

    /// `(β, α^∨) = 2(β, α)/(α, α)`.
    pub fn pairing(&self, beta: &Root, alpha: &Root) -> Result<i64> {
        self.check(beta)?;
        self.check(alpha)?;
        Ok(self.pairing_unchecked(beta, alpha))
    }

    pub(crate) fn pairing_unchecked(&self, beta: &Root, alpha: &Root) -> i64 {
        let num = 2 * self.form(beta, alpha);
        let den = self.form(alpha, alpha);
        debug_assert_eq!(num % den, 0, "non-integral pairing");
        num / den
    }

    /// `(β, α_i^∨) = Σ_j n_j a_ij`.
    pub fn simple_pairing(&self, beta: &Root, i: usize) -> i64 {
        simple_pairing(&self.cartan, beta.coords(), i)
    }

    pub fn root_string(&self, alpha: &Root, beta: &Root) -> Result<RootStringData> {
        self.check(alpha)?;
        self.check(beta)?;
        if alpha == beta || *alpha == beta.neg() {
            return Err(Error::DegenerateString);
        }
        let mut p = 0;
        while self.contains(&beta.add_multiple(p + 1, alpha)) {
            p += 1;
        }
        let mut q = 0;
        while self.contains(&beta.add_multiple(-(q + 1), alpha)) {
            q += 1;
        }
        Ok(RootStringData { p, q })
    }

    /// `m_α^−(β) = q + 1`.
    pub fn m_minus(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        Ok(self.root_string(alpha, beta)?.q + 1)
    }

    /// `m_α^+(β) = p + 1`.
    pub fn m_plus(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        Ok(self.root_string(alpha, beta)?.p + 1)
    }

    /// `m_i^−(β)` for `β ≠ ±α_i`, counting `β − kα_i ∈ Φ` directly.
    pub(crate) fn m_minus_simple(&self, i: usize, beta: &Root) -> i64 {
        let a = self.simple_root(i);
        let mut q = 0;
        while self.contains(&beta.add_multiple(-(q + 1), &a)) {
            q += 1;
        }
        q + 1
    }

    pub(crate) fn m_plus_simple(&self, i: usize, beta: &Root) -> i64 {
        let a = self.simple_root(i);
        let mut p = 0;
        while self.contains(&beta.add_multiple(p + 1, &a)) {
            p += 1;
        }
        p + 1
    }

    /// `s_i(β) = β − (β, α_i^∨) α_i`.
    pub fn reflect(&self, i: usize, beta: &Root) -> Result<Root> {
        self.check_index(i)?;
        self.check(beta)?;
        Ok(self.reflect_unchecked(i, beta))
    }

    pub(crate) fn reflect_unchecked(&self, i: usize, beta: &Root) -> Root {
        beta.add_multiple(-self.simple_pairing(beta, i), &self.simple_root(i))
    }

    /// A word `w = [i_1, …, i_k]` and base index `b` with
    /// `α = s_{i_1} ∘ … ∘ s_{i_k}(α_b)`.
    ///
    /// For positive `α` this descends greedily in height, always using the
    /// smallest index whose reflection lowers the height. For negative `α`
    /// the word of `−α` is extended by the base index, since
    /// `−α_b = s_b(α_b)`.
    pub fn weyl_word(&self, alpha: &Root) -> Result<(Vec<usize>, usize)> {
        self.check(alpha)?;
        if alpha.is_negative() {
            let (mut word, base) = self.weyl_word(&alpha.neg())?;
            word.push(base);
            return Ok((word, base));
        }
        let mut word = Vec::new();
        let mut cur = alpha.clone();
        loop {
            if let Some(b) = cur.simple_index() {
                return Ok((word, b));
            }
            let j = (0..self.rank())
                .find(|&j| self.simple_pairing(&cur, j) > 0)
                .ok_or_else(|| Error::ConstructionBroken(format!("no descent from {cur}")))?;
            cur = self.reflect_unchecked(j, &cur);
            word.push(j);
        }
    }

    /// Coefficients `x_i` with `α^∨ = Σ x_i α_i^∨`; always integers.
    pub fn coroot_coefficients(&self, alpha: &Root) -> Result<Vec<i64>> {
        self.check(alpha)?;
        // α^∨ = 2α/(α,α) and α_i^∨ = α_i/d_i, so x_i = 2 n_i d_i / (α,α)
        let norm = self.form(alpha, alpha);
        alpha
            .coords()
            .iter()
            .zip(self.cartan.symmetrizer())
            .map(|(&n, &d)| {
                let num = 2 * n * d;
                if num % norm == 0 {
                    Ok(num / norm)
                } else {
                    Err(Error::ConstructionBroken(format!("non-integral coroot of {alpha}")))
                }
            })
            .collect()
    }

    /// Distinct values of `(α, α)` over all roots, ascending.
    pub fn root_lengths(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.positive_roots().iter().map(|r| self.form(r, r)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

pub(crate) fn simple_pairing(cartan: &CartanMatrix, coords: &[i64], i: usize) -> i64 {
    coords.iter().enumerate().map(|(j, n)| n * cartan.entry(i, j)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_designation(s).unwrap()
    }

    fn r(c: &[i64]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn small_counts() {
        assert_eq!(rs("A1").len(), 2);
        assert_eq!(rs("A2").len(), 6);
        let g2 = rs("G2");
        assert_eq!(g2.len(), 12);
        assert_eq!(g2.highest_root(), &r(&[2, 3]));
        assert_eq!(g2.highest_root().height(), 5);
    }

    #[test]
    fn ordering_is_height_then_lex() {
        let g2 = rs("G2");
        let pos: Vec<Vec<i64>> = g2.positive_roots().iter().map(|x| x.coords().to_vec()).collect();
        assert_eq!(
            pos,
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(g2.root(6), &r(&[0, -1]));
        assert_eq!(g2.negative_index(2), 8);
        assert_eq!(g2.negative_index(8), 2);
    }

    #[test]
    fn pairings() {
        let g2 = rs("G2");
        assert_eq!(g2.pairing(&r(&[0, 1]), &r(&[1, 0])).unwrap(), -1);
        assert_eq!(g2.pairing(&r(&[1, 0]), &r(&[0, 1])).unwrap(), -3);
        for a in g2.roots() {
            assert_eq!(g2.pairing(a, a).unwrap(), 2);
        }
        let a2 = rs("A2");
        assert_eq!(a2.pairing(&r(&[1, 1]), &r(&[1, 0])).unwrap(), 1);
        assert!(matches!(
            a2.pairing(&r(&[2, 0]), &r(&[1, 0])),
            Err(Error::UnknownRoot(_))
        ));
    }

    #[test]
    fn strings_and_m() {
        let a2 = rs("A2");
        assert_eq!(
            a2.root_string(&r(&[1, 0]), &r(&[0, 1])).unwrap(),
            RootStringData { p: 1, q: 0 }
        );
        assert_eq!(a2.m_minus(&r(&[1, 0]), &r(&[0, 1])).unwrap(), 1);
        assert_eq!(a2.m_plus(&r(&[1, 0]), &r(&[0, 1])).unwrap(), 2);
        let g2 = rs("G2");
        assert_eq!(
            g2.root_string(&r(&[0, 1]), &r(&[1, 0])).unwrap(),
            RootStringData { p: 3, q: 0 }
        );
        assert_eq!(g2.m_minus(&r(&[0, 1]), &r(&[1, 2])).unwrap(), 3);
        assert!(matches!(
            g2.root_string(&r(&[1, 0]), &r(&[-1, 0])),
            Err(Error::DegenerateString)
        ));
        assert!(matches!(
            g2.root_string(&r(&[1, 0]), &r(&[1, 0])),
            Err(Error::DegenerateString)
        ));
        // B2: the long roots a1 and a1+2a2 are orthogonal with no string
        let b2 = rs("B2");
        let s = b2.root_string(&r(&[1, 0]), &r(&[1, 2])).unwrap();
        assert_eq!(b2.pairing(&r(&[1, 2]), &r(&[1, 0])).unwrap(), 0);
        assert_eq!(s, RootStringData { p: 0, q: 0 });
    }

    #[test]
    fn reflections() {
        let a2 = rs("A2");
        assert_eq!(a2.reflect(0, &r(&[0, 1])).unwrap(), r(&[1, 1]));
        assert_eq!(a2.reflect(0, &r(&[1, 0])).unwrap(), r(&[-1, 0]));
        assert!(matches!(a2.reflect(2, &r(&[1, 0])), Err(Error::IndexOutOfRange { .. })));
        let b2 = rs("B2");
        assert_eq!(b2.reflect(0, &r(&[1, 2])).unwrap(), r(&[1, 2]));
    }

    #[test]
    fn weyl_words() {
        let a2 = rs("A2");
        assert_eq!(a2.weyl_word(&r(&[0, 1])).unwrap(), (vec![], 1));
        assert_eq!(a2.weyl_word(&r(&[1, 1])).unwrap(), (vec![0], 1));
        let g2 = rs("G2");
        // 2a1+3a2 → s1 → a1+3a2 → s2 → a1
        assert_eq!(g2.weyl_word(&r(&[2, 3])).unwrap(), (vec![0, 1], 0));
        for t in ["A3", "B3", "C3", "G2", "F4", "D4"] {
            let sys = rs(t);
            for a in sys.roots() {
                let (word, base) = sys.weyl_word(a).unwrap();
                let mut x = sys.simple_root(base);
                for &j in word.iter().rev() {
                    x = sys.reflect(j, &x).unwrap();
                }
                assert_eq!(&x, a, "{t}");
            }
        }
    }

    #[test]
    fn coroots() {
        let g2 = rs("G2");
        // short root a2: α2^∨ itself
        assert_eq!(g2.coroot_coefficients(&r(&[0, 1])).unwrap(), vec![0, 1]);
        // long highest root 2a1+3a2 has coroot 2α1^∨ + α2^∨
        assert_eq!(g2.coroot_coefficients(&r(&[2, 3])).unwrap(), vec![2, 1]);
    }

    #[test]
    fn display() {
        assert_eq!(r(&[2, 3]).to_string(), "2a1+3a2");
        assert_eq!(r(&[-1, -1]).to_string(), "-a1-a2");
        assert_eq!(r(&[0, 1]).to_string(), "a2");
    }

    #[test]
    fn cap_triggers() {
        let c = CartanMatrix::from_designation("E8").unwrap();
        assert!(matches!(
            RootSystem::generate_with_cap(&c, 100),
            Err(Error::NotFiniteType(100))
        ));
    }
}
