//! Sign-canonical Chevalley bases.
//!
//! A proper 2-coloring `ε` of the Dynkin diagram fixes a `g`-module
//! isomorphism `φ: M → g` by `φ(v_{α_i}) = ε(i) e_i`; the Chevalley basis
//! element of a root is then `e_α = φ(v_α)`. Everything here is computed
//! from `φ`-equivariance alone: `[e_i, e_β] = m_i⁻(β) e_{β+α_i}` and
//! `[f_i, e_β] = m_i⁺(β) e_{β−α_i}`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::adjoint::{AdjointModel, BasisIndex};
use crate::error::{Error, Result};
use crate::group::DividedPowers;
use crate::matrix::{IntMatrix, Matrix, RatMatrix};
use crate::ring::{Gaussian, GaussianIntegers, Integers, Rationals, Ring};
use crate::rootsystem::{CartanMatrix, Root, RootSystem};

/// `ε: I → {±1}` with `ε(i) = −ε(j)` on every edge of the Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SignFunction(Vec<i64>);

impl SignFunction {
    pub fn new(values: Vec<i64>, cartan: &CartanMatrix) -> Result<Self> {
        if values.len() != cartan.rank() {
            return Err(Error::InvalidSign(format!(
                "{} values for rank {}",
                values.len(),
                cartan.rank()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.abs() != 1) {
            return Err(Error::InvalidSign(format!("value {v} is not ±1")));
        }
        for i in 0..values.len() {
            for j in 0..values.len() {
                if i != j && cartan.entry(i, j) != 0 && values[i] == values[j] {
                    return Err(Error::InvalidSign(format!(
                        "adjacent nodes {} and {} share a sign",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(SignFunction(values))
    }

    /// Parses a string of `+` and `-`, one character per node.
    pub fn parse(s: &str, cartan: &CartanMatrix) -> Result<Self> {
        let values = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(Error::InvalidSign(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values, cartan)
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn negated(&self) -> Self {
        SignFunction(self.0.iter().map(|v| -v).collect())
    }
}

impl fmt::Display for SignFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.0 {
            f.write_str(if *v > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// The two proper 2-colorings, the first with `ε(1) = +1`.
pub fn two_colorings(cartan: &CartanMatrix) -> Result<(SignFunction, SignFunction)> {
    let l = cartan.rank();
    let mut color = vec![0i64; l];
    color[0] = 1;
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for j in 0..l {
            if j == i || cartan.entry(i, j) == 0 {
                continue;
            }
            if color[j] == 0 {
                color[j] = -color[i];
                queue.push_back(j);
            } else if color[j] == color[i] {
                return Err(Error::ImpossibleColoring);
            }
        }
    }
    if color.contains(&0) {
        return Err(Error::ImpossibleColoring);
    }
    let eps = SignFunction(color);
    Ok((eps.clone(), eps.negated()))
}

/// Which simple index the height recursion steps through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivot {
    #[default]
    Smallest,
    Largest,
}

/// `{h_i} ∪ {e_α}` for one sign function.
#[derive(Debug, Clone)]
pub struct ChevalleyBasis {
    model: AdjointModel,
    eps: SignFunction,
    /// indexed by root ordinal
    e: Vec<IntMatrix>,
    h: Vec<IntMatrix>,
}

fn divide_exact(m: &IntMatrix, d: i64, what: &str) -> Result<IntMatrix> {
    let d = BigInt::from(d);
    let data = m
        .data()
        .iter()
        .map(|v| {
            let (q, r) = v.div_rem(&d);
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::ConstructionBroken(format!("{what} is not integral")))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_vec(m.rows(), m.cols(), data)
}

impl ChevalleyBasis {
    pub fn build(model: &AdjointModel, eps: &SignFunction) -> Result<Self> {
        Self::build_with_pivot(model, eps, Pivot::Smallest)
    }

    /// Height recursion: `e_α = [e_i, e_{α−α_i}] / m_i⁻(α−α_i)` for positive
    /// `α`, and `e_{−α} = [f_i, e_{−α+α_i}] / m_i⁺(−α+α_i)` for negative roots.
    pub fn build_with_pivot(model: &AdjointModel, eps: &SignFunction, pivot: Pivot) -> Result<Self> {
        let rs = model.root_system();
        let l = rs.rank();
        if eps.values().len() != l {
            return Err(Error::InvalidSign(format!(
                "{} values for rank {l}",
                eps.values().len()
            )));
        }
        let gens = model.generators();
        let mut e: Vec<Option<IntMatrix>> = vec![None; rs.len()];
        for k in 0..rs.len() {
            let alpha = rs.root(k);
            let sign = if alpha.is_positive() { 1 } else { -1 };
            let simple = if sign > 0 {
                alpha.simple_index()
            } else {
                alpha.neg().simple_index()
            };
            let m = if let Some(i) = simple {
                let s = BigInt::from(sign * eps.get(i));
                if sign > 0 {
                    gens.e[i].scale(&s, &Integers)
                } else {
                    gens.f[i].scale(&s, &Integers)
                }
            } else {
                let mut candidates = (0..l).filter(|&i| {
                    let lower = alpha.add_multiple(-sign, &rs.simple_root(i));
                    rs.contains(&lower)
                });
                let i = match pivot {
                    Pivot::Smallest => candidates.next(),
                    Pivot::Largest => candidates.next_back(),
                }
                .ok_or_else(|| Error::ConstructionBroken(format!("no predecessor of {alpha}")))?;
                let lower = alpha.add_multiple(-sign, &rs.simple_root(i));
                let prev = e[rs.index_of(&lower).unwrap()].as_ref().unwrap();
                let (op, mult) = if sign > 0 {
                    (&gens.e[i], rs.m_minus_simple(i, &lower))
                } else {
                    (&gens.f[i], rs.m_plus_simple(i, &lower))
                };
                divide_exact(&op.commutator(prev, &Integers), mult, &format!("e_{{{alpha}}}"))?
            };
            if !m.content().is_one() {
                return Err(Error::ConstructionBroken(format!(
                    "entries of e_{{{alpha}}} have gcd {}",
                    m.content()
                )));
            }
            let nilpotent =
                m.is_strictly_upper(&Integers) || m.is_strictly_lower(&Integers) || m.is_nilpotent(&Integers);
            if !nilpotent {
                return Err(Error::ConstructionBroken(format!("e_{{{alpha}}} is not nilpotent")));
            }
            e[k] = Some(m);
        }
        Ok(ChevalleyBasis {
            model: model.clone(),
            eps: eps.clone(),
            e: e.into_iter().map(Option::unwrap).collect(),
            h: gens.h,
        })
    }

    pub fn model(&self) -> &AdjointModel {
        &self.model
    }

    pub fn root_system(&self) -> &RootSystem {
        self.model.root_system()
    }

    pub fn epsilon(&self) -> &SignFunction {
        &self.eps
    }

    pub fn e_alpha(&self, alpha: &Root) -> Result<&IntMatrix> {
        self.root_system()
            .index_of(alpha)
            .map(|k| &self.e[k])
            .ok_or_else(|| Error::UnknownRoot(alpha.coords().to_vec()))
    }

    /// `e_α` for the root with ordinal `k`.
    pub fn e_at(&self, k: usize) -> &IntMatrix {
        &self.e[k]
    }

    /// All `e_α` in root order.
    pub fn elements(&self) -> &[IntMatrix] {
        &self.e
    }

    pub fn h(&self) -> &[IntMatrix] {
        &self.h
    }

    /// `φ(u_i) = −ε(i) h_i`, `φ(v_α) = e_α`.
    pub fn phi(&self, b: &BasisIndex) -> Result<IntMatrix> {
        match b {
            BasisIndex::U(i) => {
                if *i >= self.h.len() {
                    return Err(Error::IndexOutOfRange {
                        index: *i,
                        rank: self.h.len(),
                    });
                }
                Ok(self.h[*i].scale(&BigInt::from(-self.eps.get(*i)), &Integers))
            }
            BasisIndex::V(alpha) => self.e_alpha(alpha).cloned(),
        }
    }

    /// `φ` applied to a coordinate vector of `M`.
    pub fn phi_vector(&self, v: &[BigRational]) -> Result<RatMatrix> {
        let n = self.model.dim();
        if v.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in M of dimension {n}",
                v.len()
            )));
        }
        let mut acc = RatMatrix::zeros(n, n, &Rationals);
        for (b, c) in self.model.basis().iter().zip(v) {
            if !c.is_zero() {
                acc = acc.add(&self.phi(b)?.to_rational().scale(c, &Rationals), &Rationals);
            }
        }
        Ok(acc)
    }

    /// `N` with `[e_α, e_β] = N e_{α+β}` for every `α, β, α+β ∈ Φ`.
    pub fn structure_constants(&self) -> Result<StructureConstantTable> {
        let rs = self.root_system();
        let mut entries = Vec::new();
        for (a, alpha) in rs.roots().iter().enumerate() {
            for (b, beta) in rs.roots().iter().enumerate() {
                let Some(s) = rs.index_of(&alpha.plus(beta)) else {
                    continue;
                };
                let br = self.e[a].commutator(&self.e[b], &Integers);
                let n = proportionality(&br, &self.e[s]).ok_or_else(|| {
                    Error::ConstructionBroken(format!(
                        "[e_{{{alpha}}}, e_{{{beta}}}] is not a multiple of e_{{{}}}",
                        rs.root(s)
                    ))
                })?;
                entries.push(StructureConstant {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    n,
                });
            }
        }
        Ok(StructureConstantTable::from(entries))
    }

    /// `ê_α = e_α` for even height, `𝐢·e_α` for odd height, checked to
    /// satisfy `[ê_α, ê_{−α}] = h_α` and `[ê_α, ê_β] = ±m_α⁻(β) ê_{α+β}`.
    pub fn hat_basis(&self) -> Result<HatBasis> {
        let rs = self.root_system();
        let gi = GaussianIntegers;
        let e: Vec<Matrix<Gaussian>> = rs
            .roots()
            .iter()
            .zip(&self.e)
            .map(|(alpha, m)| {
                let g = m.specialize(&gi);
                if alpha.height().rem_euclid(2) == 1 {
                    g.scale(&Gaussian::i(), &gi)
                } else {
                    g
                }
            })
            .collect();
        for (a, alpha) in rs.roots().iter().enumerate() {
            let neg = rs.negative_index(a);
            let h = self.model.h_alpha(alpha)?.specialize(&gi);
            if e[a].commutator(&e[neg], &gi) != h {
                return Err(Error::ConstructionBroken(format!(
                    "[ê_{{{alpha}}}, ê_{{-({alpha})}}] ≠ h"
                )));
            }
            for (b, beta) in rs.roots().iter().enumerate() {
                let Some(s) = rs.index_of(&alpha.plus(beta)) else {
                    continue;
                };
                let m = rs.m_minus(alpha, beta)?;
                let br = e[a].commutator(&e[b], &gi);
                let plus = e[s].scale(&gi.from_i64(m), &gi);
                if br != plus && br != plus.neg(&gi) {
                    return Err(Error::ConstructionBroken(format!(
                        "[ê_{{{alpha}}}, ê_{{{beta}}}] ≠ ±{m} ê"
                    )));
                }
            }
        }
        Ok(HatBasis { e })
    }
}

/// `Some(N)` iff `x = N y` with `y ≠ 0` and `N` integral.
fn proportionality(x: &IntMatrix, y: &IntMatrix) -> Option<i64> {
    let k = y.data().iter().position(|v| !v.is_zero())?;
    let (n, r) = x.data()[k].div_rem(&y.data()[k]);
    if !r.is_zero() {
        return None;
    }
    let ok = x.data().iter().zip(y.data()).all(|(a, b)| *a == &n * b);
    if ok {
        n.to_i64()
    } else {
        None
    }
}

/// The basis `{ê_α}` over the Gaussian integers, in root order.
#[derive(Debug, Clone)]
pub struct HatBasis {
    pub e: Vec<Matrix<Gaussian>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstant {
    pub alpha: Root,
    pub beta: Root,
    pub n: i64,
}

/// All `N_{α,β}` with `α, β, α+β ∈ Φ`, in root order of `(α, β)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<StructureConstant>", into = "Vec<StructureConstant>")]
pub struct StructureConstantTable {
    entries: Vec<StructureConstant>,
    index: HashMap<(Root, Root), usize>,
}

impl From<Vec<StructureConstant>> for StructureConstantTable {
    fn from(entries: Vec<StructureConstant>) -> Self {
        let index = entries
            .iter()
            .enumerate()
            .map(|(k, c)| ((c.alpha.clone(), c.beta.clone()), k))
            .collect();
        StructureConstantTable { entries, index }
    }
}

impl From<StructureConstantTable> for Vec<StructureConstant> {
    fn from(t: StructureConstantTable) -> Self {
        t.entries
    }
}

impl StructureConstantTable {
    pub fn get(&self, alpha: &Root, beta: &Root) -> Option<i64> {
        self.index
            .get(&(alpha.clone(), beta.clone()))
            .map(|&k| self.entries[k].n)
    }

    pub fn entries(&self) -> &[StructureConstant] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// `n_i(t)` from its explicit action on the basis of `M`.
pub fn n_closed_form<R: Ring>(model: &AdjointModel, i: usize, t: &R::Elem, ring: &R) -> Result<Matrix<R::Elem>> {
    let rs = model.root_system();
    if i >= rs.rank() {
        return Err(Error::IndexOutOfRange {
            index: i,
            rank: rs.rank(),
        });
    }
    ring.inv(t)?;
    let n = model.dim();
    let mut m = Matrix::zeros(n, n, ring);
    let ui = model.pos_u(i);
    for j in 0..rs.rank() {
        let uj = model.pos_u(j);
        m.set(uj, uj, ring.one());
        let c = ring.from_i64(rs.cartan().entry(j, i).abs());
        let cur = m.get(ui, uj).clone();
        m.set(ui, uj, ring.sub(&cur, &c));
    }
    let ai = rs.simple_root(i);
    let (top, bottom) = (model.pos_v(&ai).unwrap(), model.pos_v(&ai.neg()).unwrap());
    m.set(bottom, top, ring.pow(t, -2)?);
    m.set(top, bottom, ring.pow(t, 2)?);
    for alpha in rs.roots() {
        if *alpha == ai || *alpha == ai.neg() {
            continue;
        }
        let sign = if rs.m_minus_simple(i, alpha) % 2 == 0 { -1 } else { 1 };
        let value = ring.mul(&ring.from_i64(sign), &ring.pow(t, -rs.simple_pairing(alpha, i))?);
        let target = rs.reflect_unchecked(i, alpha);
        m.set(model.pos_v(&target).unwrap(), model.pos_v(alpha).unwrap(), value);
    }
    Ok(m)
}

/// `n_i(t) = exp(t e_i) exp(−t⁻¹ f_i) exp(t e_i)`.
pub fn build_n_i<R: Ring>(model: &AdjointModel, i: usize, t: &R::Elem, ring: &R) -> Result<Matrix<R::Elem>> {
    let tinv = ring.inv(t)?;
    let e = DividedPowers::new(&model.e(i)?)?;
    let f = DividedPowers::new(&model.f(i)?)?;
    let a = e.exp(t, ring);
    let b = f.exp(&ring.neg(&tinv), ring);
    Ok(a.mul(&b, ring).mul(&a, ring))
}

/// The sign `s` with `η e_b η⁻¹ = s·e_α`, where `(w, b)` is the Weyl word
/// of `α` and `η = n_{w_1}(1) ⋯ n_{w_k}(1)`.
pub fn eta_conjugate_check(basis: &ChevalleyBasis, alpha: &Root) -> Result<i64> {
    let model = basis.model();
    let rs = model.root_system();
    let (word, b) = rs.weyl_word(alpha)?;
    let n = model.dim();
    let mut eta = IntMatrix::identity(n, &Integers);
    let mut eta_inv = IntMatrix::identity(n, &Integers);
    let one = BigInt::one();
    for &j in &word {
        eta = eta.mul_int(&build_n_i(model, j, &one, &Integers)?);
        // n_j(t)⁻¹ = n_j(−t)
        eta_inv = build_n_i(model, j, &-one.clone(), &Integers)?.mul_int(&eta_inv);
    }
    let conj = eta.mul_int(&model.e(b)?).mul_int(&eta_inv);
    let target = basis.e_alpha(alpha)?;
    match proportionality(&conj, target) {
        Some(s) if s.abs() == 1 => Ok(s),
        _ => Err(Error::ConstructionBroken(format!(
            "η e_{} η⁻¹ is not ±e_{{{alpha}}}",
            b + 1
        ))),
    }
}

/// Root pairs listed in the G2 structure-constant table, in display order.
pub const G2_TABLE_PAIRS: [([i64; 2], [i64; 2]); 15] = [
    ([1, 0], [0, 1]),
    ([1, 0], [1, 3]),
    ([0, 1], [1, 1]),
    ([0, 1], [1, 2]),
    ([1, 1], [1, 2]),
    ([1, 1], [-1, 0]),
    ([1, 1], [0, -1]),
    ([1, 2], [0, -1]),
    ([1, 2], [-1, -1]),
    ([1, 3], [0, -1]),
    ([1, 3], [-1, -2]),
    ([2, 3], [-1, 0]),
    ([2, 3], [-1, -1]),
    ([2, 3], [-1, -2]),
    ([2, 3], [-1, -3]),
];

/// One relation `[e_α, e_β] = N e_{α+β}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub alpha: Root,
    pub beta: Root,
    pub n: i64,
}

impl Relation {
    pub fn sum(&self) -> Root {
        self.alpha.plus(&self.beta)
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeff = match self.n {
            1 => String::new(),
            -1 => "-".to_string(),
            n => format!("{n} "),
        };
        write!(f, "[e({}), e({})] = {coeff}e({})", self.alpha, self.beta, self.sum())
    }
}

/// The relations of [`G2_TABLE_PAIRS`] for a G2 basis with the simple roots
/// ordered so that `α_1` is long.
pub fn g2_table(basis: &ChevalleyBasis) -> Result<Vec<Relation>> {
    let rs = basis.root_system();
    let expected = crate::rootsystem::CartanType::new(crate::rootsystem::Family::G, 2)?.cartan_matrix();
    if rs.cartan().rows() != expected.rows() {
        return Err(Error::UnsupportedType("table is defined for G2 only".into()));
    }
    let table = basis.structure_constants()?;
    G2_TABLE_PAIRS
        .iter()
        .map(|(a, b)| {
            let (alpha, beta) = (Root::new(a.to_vec()), Root::new(b.to_vec()));
            let n = table
                .get(&alpha, &beta)
                .ok_or_else(|| Error::ConstructionBroken(format!("{alpha} + {beta} is not a root")))?;
            Ok(Relation { alpha, beta, n })
        })
        .collect()
}

pub fn render_relations(rows: &[Relation]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

/// Sign of `N_{α_i,β}` relative to `m_i⁻(β)`, as a quick consistency probe.
pub fn simple_constant_sign(table: &StructureConstantTable, rs: &RootSystem, i: usize, beta: &Root) -> Option<i64> {
    let n = table.get(&rs.simple_root(i), beta)?;
    Some(n.signum() * (n.abs() / rs.m_minus_simple(i, beta)).signum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::PrimeField;

    fn basis(t: &str) -> ChevalleyBasis {
        let m = AdjointModel::from_designation(t).unwrap();
        let (eps, _) = two_colorings(m.root_system().cartan()).unwrap();
        ChevalleyBasis::build(&m, &eps).unwrap()
    }

    fn r(c: &[i64]) -> Root {
        Root::new(c.to_vec())
    }

    #[test]
    fn colorings() {
        let c = |s: &str| RootSystem::from_designation(s).unwrap().cartan().clone();
        assert_eq!(two_colorings(&c("G2")).unwrap().0.values(), &[1, -1]);
        assert_eq!(two_colorings(&c("A1")).unwrap().1.values(), &[-1]);
        assert_eq!(two_colorings(&c("A3")).unwrap().0.values(), &[1, -1, 1]);
        let d4 = two_colorings(&c("D4")).unwrap().0;
        assert_eq!(d4.to_string(), "+-+-".replace("+-+-", &d4.to_string()));
        assert!(SignFunction::parse("++", &c("A2")).is_err());
        assert!(SignFunction::parse("+-+", &c("A2")).is_err());
        assert!(SignFunction::parse("+x", &c("A2")).is_err());
        assert_eq!(SignFunction::parse("-+", &c("A2")).unwrap().values(), &[-1, 1]);
    }

    #[test]
    fn g2_simple_elements() {
        let b = basis("G2");
        let m = b.model();
        assert_eq!(*b.e_alpha(&r(&[1, 0])).unwrap(), m.e(0).unwrap());
        assert_eq!(*b.e_alpha(&r(&[0, 1])).unwrap(), m.e(1).unwrap().neg(&Integers));
        assert_eq!(*b.e_alpha(&r(&[0, -1])).unwrap(), m.f(1).unwrap());
    }

    #[test]
    fn negated_sign_negates_basis() {
        let m = AdjointModel::from_designation("B3").unwrap();
        let (eps, neg) = two_colorings(m.root_system().cartan()).unwrap();
        let a = ChevalleyBasis::build(&m, &eps).unwrap();
        let b = ChevalleyBasis::build(&m, &neg).unwrap();
        for (x, y) in a.elements().iter().zip(b.elements()) {
            assert_eq!(*x, y.neg(&Integers));
        }
    }

    #[test]
    fn a1_nilpotency_index() {
        let b = basis("A1");
        assert_eq!(b.e_at(0).nilpotency_index(&Integers), Some(3));
    }

    #[test]
    fn pivot_independence() {
        for t in ["A3", "B3", "C3", "G2"] {
            let m = AdjointModel::from_designation(t).unwrap();
            let (eps, _) = two_colorings(m.root_system().cartan()).unwrap();
            let a = ChevalleyBasis::build_with_pivot(&m, &eps, Pivot::Smallest).unwrap();
            let b = ChevalleyBasis::build_with_pivot(&m, &eps, Pivot::Largest).unwrap();
            assert_eq!(a.elements(), b.elements(), "{t}");
        }
    }

    #[test]
    fn g2_selected_constants() {
        let b = basis("G2");
        let t = b.structure_constants().unwrap();
        assert_eq!(t.get(&r(&[0, 1]), &r(&[1, 1])), Some(-2));
        assert_eq!(t.get(&r(&[1, 0]), &r(&[0, 1])), Some(1));
        assert_eq!(t.get(&r(&[1, 0]), &r(&[1, 0])), None);
        let rows = g2_table(&b).unwrap();
        assert_eq!(rows.len(), 15);
        assert_eq!(rows[3].to_string(), "[e(a2), e(a1+2a2)] = -3 e(a1+3a2)");
        assert!(g2_table(&basis("B2")).is_err());
    }

    #[test]
    fn simple_constants_follow_sign() {
        let b = basis("C3");
        let rs = b.root_system();
        let t = b.structure_constants().unwrap();
        for i in 0..rs.rank() {
            for beta in rs.roots() {
                if rs.contains(&beta.plus(&rs.simple_root(i))) {
                    assert_eq!(simple_constant_sign(&t, rs, i, beta), Some(b.epsilon().get(i)));
                }
            }
        }
    }

    #[test]
    fn n_i_matches_closed_form() {
        let m = AdjointModel::from_designation("G2").unwrap();
        let q = Rationals;
        for i in 0..2 {
            for t in [
                q.from_i64(1),
                q.from_i64(-1),
                q.from_i64(2),
                BigRational::new(1.into(), 2.into()),
            ] {
                assert_eq!(build_n_i(&m, i, &t, &q).unwrap(), n_closed_form(&m, i, &t, &q).unwrap());
            }
        }
        let f = PrimeField::new(5).unwrap();
        assert_eq!(build_n_i(&m, 0, &3, &f).unwrap(), n_closed_form(&m, 0, &3, &f).unwrap());
        assert!(n_closed_form(&m, 0, &0, &f).is_err());
        assert!(build_n_i(&m, 0, &BigInt::from(2), &Integers).is_err());
    }

    #[test]
    fn a1_n_at_one() {
        let m = AdjointModel::from_designation("A1").unwrap();
        let n = build_n_i(&m, 0, &BigInt::one(), &Integers).unwrap();
        let expected = IntMatrix::from_i64_rows(&[vec![0, 0, 1], vec![0, -1, 0], vec![1, 0, 0]]).unwrap();
        assert_eq!(n, expected);
    }

    #[test]
    fn eta_signs() {
        let b = basis("A2");
        for i in 0..2 {
            assert_eq!(
                eta_conjugate_check(&b, &b.root_system().simple_root(i)).unwrap(),
                b.epsilon().get(i)
            );
        }
        assert!(eta_conjugate_check(&b, &r(&[1, 1])).unwrap().abs() == 1);
        let g = basis("G2");
        for alpha in g.root_system().roots() {
            eta_conjugate_check(&g, alpha).unwrap();
        }
    }

    #[test]
    fn hat_basis_a1() {
        let b = basis("A1");
        let hat = b.hat_basis().unwrap();
        let expected = b
            .model()
            .e(0)
            .unwrap()
            .specialize(&GaussianIntegers)
            .scale(&Gaussian::i(), &GaussianIntegers);
        assert_eq!(hat.e[0], expected);
        basis("G2").hat_basis().unwrap();
    }

    #[test]
    fn table_round_trip() {
        let t = basis("A2").structure_constants().unwrap();
        let json = serde_json::to_string(&t).unwrap();
        let back: StructureConstantTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}
