//! Adjoint Chevalley groups: exponentials of nilpotent integral matrices,
//! the generators `x_i(t)`, `y_i(t)`, `x_α(t)`, and breadth-first
//! enumeration of the group over a small prime field.

use std::collections::HashSet;
use std::io::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::adjoint::AdjointModel;
use crate::chevalley::ChevalleyBasis;
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Matrix};
use crate::ring::{binomial, Integers, PrimeField, Ring};
use crate::rootsystem::{CartanType, Family, Root};

/// `X^k / k!` for `k = 0, …, ν − 1` where `ν` is the nilpotency index of `X`.
#[derive(Debug, Clone)]
pub struct DividedPowers {
    powers: Vec<IntMatrix>,
}

impl DividedPowers {
    pub fn new(x: &IntMatrix) -> Result<Self> {
        if !x.is_square() {
            return Err(Error::DimensionMismatch("divided powers of a non-square matrix".into()));
        }
        let n = x.rows();
        // raw powers first, so that a non-nilpotent input is reported as such
        // rather than as a divisibility failure
        let mut raw = vec![IntMatrix::identity(n, &Integers)];
        loop {
            let next = raw.last().unwrap().mul_int(x);
            if next.is_zero(&Integers) {
                break;
            }
            if raw.len() >= n {
                return Err(Error::NotNilpotent);
            }
            raw.push(next);
        }
        let mut powers = Vec::with_capacity(raw.len());
        let mut fact = BigInt::one();
        for (k, m) in raw.into_iter().enumerate() {
            if k > 1 {
                fact *= k;
            }
            let mut data = Vec::with_capacity(n * n);
            for v in m.data() {
                let (q, r) = v.div_rem(&fact);
                if !r.is_zero() {
                    return Err(Error::ConstructionBroken(format!(
                        "divided power of order {k} is not integral"
                    )));
                }
                data.push(q);
            }
            powers.push(IntMatrix::from_vec(n, n, data)?);
        }
        Ok(DividedPowers { powers })
    }

    pub fn powers(&self) -> &[IntMatrix] {
        &self.powers
    }

    /// Smallest `ν` with `X^ν = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.powers.len()
    }

    /// `Σ_k t^k · (X^k/k!)` with the integer entries mapped into `ring`.
    pub fn exp<R: Ring>(&self, t: &R::Elem, ring: &R) -> Matrix<R::Elem> {
        let n = self.powers[0].rows();
        let mut acc = vec![ring.zero(); n * n];
        let mut tk = ring.one();
        for d in &self.powers {
            if ring.is_zero(&tk) {
                break;
            }
            for (slot, v) in acc.iter_mut().zip(d.data()) {
                if !v.is_zero() {
                    *slot = ring.add(slot, &ring.mul(&tk, &ring.from_int(v)));
                }
            }
            tk = ring.mul(&tk, t);
        }
        Matrix::from_vec(n, n, acc).expect("square")
    }
}

/// `exp(tX)` for nilpotent integral `X`, over any ring.
pub fn exp_nilpotent<R: Ring>(x: &IntMatrix, t: &R::Elem, ring: &R) -> Result<Matrix<R::Elem>> {
    Ok(DividedPowers::new(x)?.exp(t, ring))
}

fn x_or_y<R: Ring>(model: &AdjointModel, i: usize, t: &R::Elem, ring: &R, raising: bool) -> Result<Matrix<R::Elem>> {
    let rs = model.root_system();
    if i >= rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rs.rank(),
        });
    }
    let n = model.dim();
    let mut m = Matrix::identity(n, ring);
    let ai = rs.simple_root(i);
    let step = if raising { ai.clone() } else { ai.neg() };
    let top = model.pos_v(&step).expect("simple root");
    let bottom = model.pos_v(&step.neg()).expect("simple root");
    let t2 = ring.mul(t, t);
    for j in 0..rs.rank() {
        let c = rs.cartan().entry(j, i).abs();
        if c != 0 {
            m.set(top, model.pos_u(j), ring.mul(&ring.from_i64(c), t));
        }
    }
    m.set(model.pos_u(i), bottom, t.clone());
    m.set(top, bottom, t2);
    for alpha in rs.roots() {
        if *alpha == step || *alpha == step.neg() {
            continue;
        }
        let col = model.pos_v(alpha).unwrap();
        let mult = if raising {
            rs.m_minus_simple(i, alpha)
        } else {
            rs.m_plus_simple(i, alpha)
        };
        let mut tk = ring.one();
        let mut k = 1i64;
        loop {
            let target = alpha.add_multiple(k, &step);
            let Some(row) = model.pos_v(&target) else { break };
            tk = ring.mul(&tk, t);
            let c = binomial((k + mult - 1) as u64, k as u64);
            m.set(row, col, ring.mul(&ring.from_int(&c), &tk));
            k += 1;
        }
    }
    Ok(m)
}

/// `x_i(t) = exp(t e_i)` from its explicit column formulas.
pub fn x_gen<R: Ring>(model: &AdjointModel, i: usize, t: &R::Elem, ring: &R) -> Result<Matrix<R::Elem>> {
    x_or_y(model, i, t, ring, true)
}

/// `y_i(t) = exp(t f_i)` from its explicit column formulas.
pub fn y_gen<R: Ring>(model: &AdjointModel, i: usize, t: &R::Elem, ring: &R) -> Result<Matrix<R::Elem>> {
    x_or_y(model, i, t, ring, false)
}

/// `x_α(t) = exp(t e_α)` for the Chevalley basis element `e_α`.
pub fn x_alpha_gen<R: Ring>(basis: &ChevalleyBasis, alpha: &Root, t: &R::Elem, ring: &R) -> Result<Matrix<R::Elem>> {
    exp_nilpotent(basis.e_alpha(alpha)?, t, ring)
}

/// `x_i(t)` and `y_i(t)` for all `i` and all nonzero `t ∈ 𝔽_p`.
pub fn field_generators(model: &AdjointModel, field: &PrimeField) -> Vec<Matrix<u32>> {
    let mut gens = Vec::new();
    for i in 0..model.rank() {
        for t in 1..field.modulus() {
            gens.push(x_gen(model, i, &t, field).unwrap());
            gens.push(y_gen(model, i, &t, field).unwrap());
        }
    }
    gens
}

/// Default element cap for [`enumerate_group`].
pub const DEFAULT_BFS_CAP: usize = 5_000_000;

#[derive(Debug, Clone, Copy)]
pub struct BfsOptions {
    pub cap: usize,
    pub parallel: bool,
}

impl Default for BfsOptions {
    fn default() -> Self {
        BfsOptions {
            cap: DEFAULT_BFS_CAP,
            parallel: false,
        }
    }
}

/// Column-sparse form of a generator for fast right multiplication.
struct SparseGen {
    cols: Vec<Vec<(usize, u64)>>,
}

impl SparseGen {
    fn new(m: &Matrix<u32>) -> Self {
        let n = m.rows();
        let cols = (0..n)
            .map(|c| {
                (0..n)
                    .filter(|&r| *m.get(r, c) != 0)
                    .map(|r| (r, *m.get(r, c) as u64))
                    .collect()
            })
            .collect();
        SparseGen { cols }
    }
}

/// Encodes residues row-major: one byte each when `p < 256`, else four
/// little-endian bytes.
#[derive(Debug, Clone, Copy)]
struct Codec {
    n: usize,
    p: u32,
}

impl Codec {
    fn width(&self) -> usize {
        if self.p < 256 {
            1
        } else {
            4
        }
    }

    fn encode(&self, data: &[u32]) -> Box<[u8]> {
        if self.width() == 1 {
            data.iter().map(|&x| x as u8).collect()
        } else {
            data.iter().flat_map(|x| x.to_le_bytes()).collect()
        }
    }

    fn decode(&self, key: &[u8]) -> Vec<u32> {
        if self.width() == 1 {
            key.iter().map(|&b| b as u32).collect()
        } else {
            key.chunks_exact(4)
                .map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]]))
                .collect()
        }
    }

    /// `g · s`.
    fn right_mul(&self, g: &[u32], s: &SparseGen) -> Vec<u32> {
        let n = self.n;
        let p = self.p as u128;
        let mut out = vec![0u32; n * n];
        for (c, col) in s.cols.iter().enumerate() {
            for r in 0..n {
                let row = &g[r * n..(r + 1) * n];
                let mut acc = 0u128;
                for &(k, v) in col {
                    acc += row[k] as u128 * v as u128;
                }
                out[r * n + c] = (acc % p) as u32;
            }
        }
        out
    }
}

/// The finite group generated by a set of matrices over `𝔽_p`.
#[derive(Debug, Clone)]
pub struct GroupEnumeration {
    codec_n: usize,
    p: u32,
    elements: HashSet<Box<[u8]>>,
}

impl GroupEnumeration {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.codec_n
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn codec(&self) -> Codec {
        Codec {
            n: self.codec_n,
            p: self.p,
        }
    }

    pub fn contains(&self, m: &Matrix<u32>) -> bool {
        m.rows() == self.codec_n && self.elements.contains(&self.codec().encode(m.data()))
    }

    /// Elements in ascending key order.
    pub fn elements(&self) -> Vec<Matrix<u32>> {
        let codec = self.codec();
        let mut keys: Vec<&Box<[u8]>> = self.elements.iter().collect();
        keys.sort();
        keys.into_iter()
            .map(|k| Matrix::from_vec(self.codec_n, self.codec_n, codec.decode(k)).unwrap())
            .collect()
    }

    /// Binary dump: `b"CHVG"`, `u32` dimension, `u32` modulus, `u64` element
    /// count (all little-endian), then every element row-major in ascending
    /// key order, one byte per entry when `p < 256` and four otherwise.
    pub fn dump<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        w.write_all(b"CHVG")?;
        w.write_all(&(self.codec_n as u32).to_le_bytes())?;
        w.write_all(&self.p.to_le_bytes())?;
        w.write_all(&(self.elements.len() as u64).to_le_bytes())?;
        let mut keys: Vec<&Box<[u8]>> = self.elements.iter().collect();
        keys.sort();
        for k in keys {
            w.write_all(k)?;
        }
        Ok(())
    }
}

/// Breadth-first closure of `{1}` under right multiplication by `generators`.
pub fn enumerate_generated(
    generators: &[Matrix<u32>],
    field: &PrimeField,
    opts: BfsOptions,
) -> Result<GroupEnumeration> {
    let n = generators
        .first()
        .map(Matrix::rows)
        .ok_or_else(|| Error::DimensionMismatch("no generators".into()))?;
    if generators.iter().any(|g| g.rows() != n || g.cols() != n) {
        return Err(Error::DimensionMismatch("generators of different sizes".into()));
    }
    let codec = Codec { n, p: field.modulus() };
    let gens: Vec<SparseGen> = generators.iter().map(SparseGen::new).collect();
    let id = codec.encode(Matrix::identity(n, field).data());
    let mut seen: HashSet<Box<[u8]>> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    let expand = |key: &[u8]| -> Vec<Box<[u8]>> {
        let g = codec.decode(key);
        gens.iter().map(|s| codec.encode(&codec.right_mul(&g, s))).collect()
    };
    while !frontier.is_empty() {
        let candidates: Vec<Box<[u8]>> = if opts.parallel {
            frontier.par_iter().flat_map_iter(|k| expand(k)).collect()
        } else {
            frontier.iter().flat_map(|k| expand(k)).collect()
        };
        let mut next = Vec::new();
        for c in candidates {
            if !seen.contains(&c) {
                seen.insert(c.clone());
                next.push(c);
                if seen.len() > opts.cap {
                    return Err(Error::CapExceeded { partial: seen.len() });
                }
            }
        }
        frontier = next;
    }
    Ok(GroupEnumeration {
        codec_n: n,
        p: field.modulus(),
        elements: seen,
    })
}

/// The adjoint Chevalley group over `𝔽_p`, generated by all `x_i(t)`, `y_i(t)`.
pub fn enumerate_group(model: &AdjointModel, field: &PrimeField, opts: BfsOptions) -> Result<GroupEnumeration> {
    enumerate_generated(&field_generators(model, field), field, opts)
}

fn prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
    }
    r == 1
}

/// Degrees of the basic invariants of the Weyl group.
pub fn invariant_degrees(kind: CartanType) -> Vec<u32> {
    let l = kind.rank as u32;
    match kind.family {
        Family::A => (2..=l + 1).collect(),
        Family::B | Family::C => (1..=l).map(|k| 2 * k).collect(),
        Family::D => (1..l).map(|k| 2 * k).chain([l]).collect(),
        Family::E => match l {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    }
}

/// Order of the adjoint Chevalley group of `kind` over `𝔽_q` from the
/// classical formula `q^N ∏ (q^{d_i} − 1) / |Z|`, with `|Z|` the order of
/// the centre of the simply connected group.
pub fn classical_order_oracle(kind: CartanType, q: u64) -> Result<BigInt> {
    if !prime_power(q) {
        return Err(Error::UnsupportedType(format!("q = {q} is not a prime power")));
    }
    let qb = BigInt::from(q);
    let pow = |e: u32| num_traits::pow(qb.clone(), e as usize);
    let mut order = pow(kind.num_positive_roots() as u32);
    for d in invariant_degrees(kind) {
        order *= pow(d) - BigInt::one();
    }
    let l = kind.rank as u32;
    let centre = match kind.family {
        Family::A => (qb.clone() - 1u32).gcd(&BigInt::from(l + 1)),
        Family::B | Family::C => (qb.clone() - 1u32).gcd(&BigInt::from(2)),
        Family::D => (pow(l) - 1u32).gcd(&BigInt::from(4)),
        Family::E if l == 6 => (qb.clone() - 1u32).gcd(&BigInt::from(3)),
        Family::E if l == 7 => (qb.clone() - 1u32).gcd(&BigInt::from(2)),
        _ => BigInt::one(),
    };
    Ok(order / centre)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Rationals;
    use num_rational::BigRational;

    fn model(s: &str) -> AdjointModel {
        AdjointModel::from_designation(s).unwrap()
    }

    #[test]
    fn exp_zero_is_identity() {
        let m = model("A2");
        let x = exp_nilpotent(&m.e(0).unwrap(), &BigInt::zero(), &Integers).unwrap();
        assert!(x.is_identity(&Integers));
    }

    #[test]
    fn a1_exp_column() {
        let m = model("A1");
        let x = exp_nilpotent(&m.e(0).unwrap(), &BigRational::one(), &Rationals).unwrap();
        let col: Vec<BigRational> = (0..3).map(|r| x.get(r, 2).clone()).collect();
        assert_eq!(col, vec![BigRational::one(); 3]);
    }

    #[test]
    fn not_nilpotent() {
        let m = model("A1");
        let h = m.h(0).unwrap();
        assert!(matches!(DividedPowers::new(&h), Err(Error::NotNilpotent)));
        let id = IntMatrix::identity(3, &Integers);
        assert!(matches!(DividedPowers::new(&id), Err(Error::NotNilpotent)));
    }

    #[test]
    fn exp_inverse() {
        let m = model("B2");
        let f = PrimeField::new(3).unwrap();
        for i in 0..2 {
            let a = exp_nilpotent(&m.e(i).unwrap(), &2, &f).unwrap();
            let b = exp_nilpotent(&m.e(i).unwrap(), &1, &f).unwrap();
            assert!(a.mul(&b, &f).is_identity(&f));
        }
    }

    #[test]
    fn g2_string_of_length_four() {
        let m = model("G2");
        let t = BigInt::from(5);
        let x = x_gen(&m, 1, &t, &Integers).unwrap();
        let col = m.pos_v(&Root::new(vec![1, 0])).unwrap();
        for k in 0..4 {
            let row = m.pos_v(&Root::new(vec![1, k])).unwrap();
            assert_eq!(*x.get(row, col), num_traits::pow(t.clone(), k as usize));
        }
    }

    #[test]
    fn oracle_values() {
        let ty = |s: &str| s.parse::<CartanType>().unwrap();
        let cases = [
            ("A1", 2, 6u64),
            ("A1", 3, 12),
            ("A1", 5, 60),
            ("A2", 2, 168),
            ("A2", 3, 5616),
            ("B2", 2, 720),
            ("G2", 2, 12096),
        ];
        for (t, q, n) in cases {
            assert_eq!(classical_order_oracle(ty(t), q).unwrap(), BigInt::from(n), "{t} {q}");
        }
        assert!(classical_order_oracle(ty("A1"), 6).is_err());
    }

    #[test]
    fn small_bfs() {
        let f = PrimeField::new(2).unwrap();
        let g = enumerate_group(&model("A1"), &f, BfsOptions::default()).unwrap();
        assert_eq!(g.order(), 6);
        let capped = enumerate_group(
            &model("A1"),
            &f,
            BfsOptions {
                cap: 3,
                parallel: false,
            },
        );
        assert!(matches!(capped, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn dump_layout() {
        let f = PrimeField::new(2).unwrap();
        let g = enumerate_group(&model("A1"), &f, BfsOptions::default()).unwrap();
        let mut buf = Vec::new();
        g.dump(&mut buf).unwrap();
        assert_eq!(&buf[..4], b"CHVG");
        assert_eq!(buf.len(), 4 + 4 + 4 + 8 + 6 * 9);
        assert_eq!(u64::from_le_bytes(buf[12..20].try_into().unwrap()), 6);
    }
}
