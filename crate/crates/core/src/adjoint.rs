//! The canonical adjoint model `M` with basis `{u_i} ∪ {v_α}` and the integer
//! matrices of `e_i`, `f_i`, `h_i`, `h_α` and `ω` acting on it.
//!
//! Basis order is `v_{β_N}, …, v_{β_1}, u_1, …, u_l, v_{−β_1}, …, v_{−β_N}`
//! with `β_1, …, β_N` the positive roots in the root system's order, so the
//! highest root comes first. In this order every `e_i` is strictly upper
//! triangular and every `f_i` strictly lower triangular.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Matrix};
use crate::ring::{Integers, Rationals, Ring};
use crate::rootsystem::{Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BasisIndex {
    U(usize),
    V(Root),
}

impl fmt::Display for BasisIndex {
    /// `u:1` or `v:[1,2]`; simple indices are shown 1-based.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::U(i) => write!(f, "u:{}", i + 1),
            BasisIndex::V(r) => {
                let coords: Vec<String> = r.coords().iter().map(ToString::to_string).collect();
                write!(f, "v:[{}]", coords.join(","))
            }
        }
    }
}

/// The generators of one root system, acting on `M`.
#[derive(Debug, Clone)]
pub struct AdjointModel {
    rs: RootSystem,
    basis: Vec<BasisIndex>,
    position: HashMap<BasisIndex, usize>,
}

impl AdjointModel {
    pub fn new(rs: &RootSystem) -> Self {
        let n = rs.num_positive();
        let l = rs.rank();
        let mut basis = Vec::with_capacity(2 * n + l);
        basis.extend(rs.positive_roots().iter().rev().cloned().map(BasisIndex::V));
        basis.extend((0..l).map(BasisIndex::U));
        basis.extend(rs.roots()[n..].iter().cloned().map(BasisIndex::V));
        let position = basis.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        AdjointModel {
            rs: rs.clone(),
            basis,
            position,
        }
    }

    pub fn from_designation(s: &str) -> Result<Self> {
        Ok(Self::new(&RootSystem::from_designation(s)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// `l + |Φ|`.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisIndex] {
        &self.basis
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(ToString::to_string).collect()
    }

    pub fn pos_u(&self, i: usize) -> usize {
        self.rs.num_positive() + i
    }

    /// Position of `v_α` in the basis.
    pub fn pos_v(&self, alpha: &Root) -> Option<usize> {
        self.position.get(&BasisIndex::V(alpha.clone())).copied()
    }

    pub fn position(&self, b: &BasisIndex) -> Option<usize> {
        self.position.get(b).copied()
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

    fn zero(&self) -> IntMatrix {
        IntMatrix::zeros(self.dim(), self.dim(), &Integers)
    }

    fn v(&self, alpha: &Root) -> usize {
        self.pos_v(alpha).expect("root of this system")
    }

    /// `e_i`, or `f_i` when `raising` is false.
    fn raise_lower(&self, i: usize, raising: bool) -> Result<IntMatrix> {
        self.check_index(i)?;
        let rs = &self.rs;
        let l = self.rank();
        let ai = rs.simple_root(i);
        let step = if raising { ai.clone() } else { ai.neg() };
        let mut m = self.zero();
        let target = self.v(&step);
        for j in 0..l {
            // (α_i, α_j^∨) = a_ji
            let c = rs.cartan().entry(j, i).abs();
            if c != 0 {
                m.set(target, self.pos_u(j), BigInt::from(c));
            }
        }
        for alpha in rs.roots() {
            let col = self.v(alpha);
            let moved = alpha.plus(&step);
            if rs.contains(&moved) {
                let coeff = if raising {
                    rs.m_minus_simple(i, alpha)
                } else {
                    rs.m_plus_simple(i, alpha)
                };
                m.set(self.v(&moved), col, BigInt::from(coeff));
            } else if *alpha == step.neg() {
                m.set(self.pos_u(i), col, BigInt::from(1));
            }
        }
        Ok(m)
    }

    pub fn e(&self, i: usize) -> Result<IntMatrix> {
        self.raise_lower(i, true)
    }

    pub fn f(&self, i: usize) -> Result<IntMatrix> {
        self.raise_lower(i, false)
    }

    /// Diagonal: `h_i(u_j) = 0`, `h_i(v_β) = (β, α_i^∨) v_β`.
    pub fn h(&self, i: usize) -> Result<IntMatrix> {
        self.check_index(i)?;
        let mut m = self.zero();
        for beta in self.rs.roots() {
            let k = self.v(beta);
            m.set(k, k, BigInt::from(self.rs.simple_pairing(beta, i)));
        }
        Ok(m)
    }

    /// Diagonal: `h_α(u_j) = 0`, `h_α(v_β) = (β, α^∨) v_β`.
    pub fn h_alpha(&self, alpha: &Root) -> Result<IntMatrix> {
        if !self.rs.contains(alpha) {
            return Err(Error::UnknownRoot(alpha.coords().to_vec()));
        }
        let mut m = self.zero();
        for beta in self.rs.roots() {
            let k = self.v(beta);
            m.set(k, k, BigInt::from(self.rs.pairing_unchecked(beta, alpha)));
        }
        Ok(m)
    }

    /// `h_α` as the combination `Σ x_i h_i` with `α^∨ = Σ x_i α_i^∨`, the
    /// coefficients taken over ℚ and the result checked to be integral.
    pub fn h_alpha_from_coroot(&self, alpha: &Root) -> Result<IntMatrix> {
        if !self.rs.contains(alpha) {
            return Err(Error::UnknownRoot(alpha.coords().to_vec()));
        }
        let norm = self.rs.form(alpha, alpha);
        let d = self.rs.cartan().symmetrizer();
        let mut acc = Matrix::zeros(self.dim(), self.dim(), &Rationals);
        for (i, &n) in alpha.coords().iter().enumerate() {
            if n == 0 {
                continue;
            }
            let x = BigRational::new(BigInt::from(2 * n * d[i]), BigInt::from(norm));
            acc = acc.add(&self.h(i)?.to_rational().scale(&x, &Rationals), &Rationals);
        }
        acc.to_integer()
            .ok_or_else(|| Error::ConstructionBroken(format!("h_{alpha} is not integral")))
    }

    /// The involution `u_j ↦ u_j`, `v_α ↦ v_{−α}`.
    pub fn omega(&self) -> IntMatrix {
        let mut m = self.zero();
        for j in 0..self.rank() {
            m.set(self.pos_u(j), self.pos_u(j), BigInt::from(1));
        }
        for alpha in self.rs.roots() {
            m.set(self.v(&alpha.neg()), self.v(alpha), BigInt::from(1));
        }
        m
    }

    /// All `e_i`, `f_i`, `h_i` at once.
    pub fn generators(&self) -> Generators {
        let l = self.rank();
        Generators {
            e: (0..l).map(|i| self.e(i).unwrap()).collect(),
            f: (0..l).map(|i| self.f(i).unwrap()).collect(),
            h: (0..l).map(|i| self.h(i).unwrap()).collect(),
        }
    }

    /// A standard basis vector of `M` over ℚ.
    pub fn unit_vector(&self, k: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim()];
        v[k] = Rationals.one();
        v
    }
}

#[derive(Debug, Clone)]
pub struct Generators {
    pub e: Vec<IntMatrix>,
    pub f: Vec<IntMatrix>,
    pub h: Vec<IntMatrix>,
}
