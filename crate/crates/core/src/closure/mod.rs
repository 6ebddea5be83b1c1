//! The Lie algebra generated by the `e_i`, `f_i` inside `gl(M)`.

mod span;

use std::collections::{BTreeMap, VecDeque};

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use span::{sparse_bracket, sparse_matmul, MatrixSpan, Span, SparseVec};

use crate::adjoint::AdjointModel;
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Matrix, RatMatrix};
use crate::ring::{Rationals, Ring};

/// Values `(λ(h_1), …, λ(h_l))` of a weight on the chosen diagonal elements.
pub type WeightLabel = Vec<i64>;

/// `[X, Y] = XY − YX`.
pub fn bracket<R: Ring>(x: &Matrix<R::Elem>, y: &Matrix<R::Elem>, ring: &R) -> Result<Matrix<R::Elem>> {
    if !x.is_square() || !x.same_shape(y) {
        return Err(Error::DimensionMismatch(format!(
            "bracket of {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    Ok(x.commutator(y, ring))
}

/// Smallest bracket-closed subspace containing `generators`.
///
/// The algebra generated by a set `X` is spanned by the left-normed brackets
/// `[x_1, [x_2, … [x_{k-1}, x_k]]]` with all `x_j ∈ X`, so it suffices to
/// close the span under `ad(x)` for the generators `x`. Each element that
/// enlarges the span is queued once and bracketed with every generator.
pub fn lie_closure(generators: &[RatMatrix]) -> Result<MatrixSpan> {
    let first = generators
        .first()
        .ok_or_else(|| Error::DimensionMismatch("no generators".into()))?;
    let n = first.rows();
    if generators.iter().any(|g| !g.is_square() || g.rows() != n) {
        return Err(Error::DimensionMismatch("generators of different sizes".into()));
    }
    let gens: Vec<SparseVec> = generators.iter().map(SparseVec::from_matrix).collect();
    let mut span = MatrixSpan::new(n);
    let mut queue = VecDeque::new();
    for g in &gens {
        if span.insert_sparse(g) {
            queue.push_back(g.clone());
        }
    }
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = sparse_bracket(g, &x, n);
            if !y.is_zero() && span.insert_sparse(&y) {
                queue.push_back(y);
            }
        }
    }
    Ok(span)
}

pub fn lie_closure_int(generators: &[IntMatrix]) -> Result<MatrixSpan> {
    let gens: Vec<RatMatrix> = generators.iter().map(IntMatrix::to_rational).collect();
    lie_closure(&gens)
}

fn diagonal_weights(h_list: &[RatMatrix], n: usize) -> Result<Vec<WeightLabel>> {
    for h in h_list {
        if h.rows() != n || !h.is_square() || !h.is_diagonal(&Rationals) {
            return Err(Error::DimensionMismatch("weights need diagonal n x n matrices".into()));
        }
    }
    (0..n)
        .map(|k| {
            h_list
                .iter()
                .map(|h| {
                    let d = h.get(k, k);
                    if d.is_integer() {
                        d.to_integer()
                            .to_i64()
                            .ok_or_else(|| Error::ConstructionBroken("eigenvalue out of range".into()))
                    } else {
                        Err(Error::ConstructionBroken("non-integral eigenvalue".into()))
                    }
                })
                .collect()
        })
        .collect()
}

/// Simultaneous `ad(h)`-eigenspaces of `g` for diagonal `h_list`.
///
/// Since the `h` are diagonal, `ad(h)` acts on the matrix unit `E_rc` by
/// `h_rr − h_cc`, so each basis element of `g` splits into weight components
/// by grouping its entries. Every component is then checked to lie in `g`
/// and the dimensions must add up to `dim g`.
pub fn root_space_decomposition(g: &MatrixSpan, h_list: &[RatMatrix]) -> Result<BTreeMap<WeightLabel, MatrixSpan>> {
    let n = g.side();
    let weights = diagonal_weights(h_list, n)?;
    let mut spaces: BTreeMap<WeightLabel, MatrixSpan> = BTreeMap::new();
    for x in g.basis_sparse() {
        let mut parts: BTreeMap<WeightLabel, Vec<(usize, BigRational)>> = BTreeMap::new();
        for (k, v) in x.entries() {
            let (r, c) = (k / n, k % n);
            let w: WeightLabel = weights[r].iter().zip(&weights[c]).map(|(a, b)| a - b).collect();
            parts.entry(w).or_default().push((*k, v.clone()));
        }
        for (w, entries) in parts {
            let part = SparseVec::from_sorted(entries);
            if !g.contains_sparse(&part) {
                return Err(Error::ConstructionBroken(format!(
                    "weight-{w:?} component of a closure element lies outside the closure"
                )));
            }
            spaces
                .entry(w)
                .or_insert_with(|| MatrixSpan::new(n))
                .insert_sparse(&part);
        }
    }
    let found: usize = spaces.values().map(MatrixSpan::dim).sum();
    if found != g.dim() {
        return Err(Error::IncompleteDecomposition {
            expected: g.dim(),
            found,
        });
    }
    Ok(spaces)
}

/// Smallest subspace containing `start` and stable under every operator.
pub fn spin(operators: &[RatMatrix], start: &[BigRational]) -> Result<Span> {
    let v = SparseVec::from_dense(start);
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let n = start.len();
    if operators.iter().any(|op| op.cols() != n || op.rows() != n) {
        return Err(Error::DimensionMismatch(
            "operator size differs from vector length".into(),
        ));
    }
    let mut span = Span::new(n);
    span.insert(&v);
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        let dense = x.to_dense(n);
        for op in operators {
            let y = SparseVec::from_dense(&op.apply(&dense, &Rationals));
            if !y.is_zero() && span.insert(&y) {
                queue.push_back(y);
            }
        }
    }
    Ok(span)
}

/// The `g`-submodule of `M` generated by `start`, spun under `e_i`, `f_i`,
/// `h_i`.
pub fn spin_submodule(model: &AdjointModel, start: &[BigRational]) -> Result<Span> {
    if start.len() != model.dim() {
        return Err(Error::DimensionMismatch(format!(
            "start vector of length {} in a module of dimension {}",
            start.len(),
            model.dim()
        )));
    }
    let gens = model.generators();
    let ops: Vec<RatMatrix> = gens
        .e
        .iter()
        .chain(&gens.f)
        .chain(&gens.h)
        .map(IntMatrix::to_rational)
        .collect();
    spin(&ops, start)
}

/// One checked claim of a structural report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub claim: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(claim: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Verdict {
            claim: claim.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Dimensions and shape checks for `g = n⁻ ⊕ h ⊕ n⁺`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangularReport {
    pub dim_n_plus: usize,
    pub dim_h: usize,
    pub dim_n_minus: usize,
    pub dim_g: usize,
    pub expected_positive: usize,
    pub n_plus_strictly_upper: bool,
    pub n_minus_strictly_lower: bool,
    pub g_traceless: bool,
    pub parts_in_g: bool,
}

impl TriangularReport {
    pub fn verdicts(&self) -> Vec<Verdict> {
        vec![
            Verdict::new(
                "dim n+ = dim n- = number of positive roots",
                self.dim_n_plus == self.expected_positive && self.dim_n_minus == self.expected_positive,
                format!(
                    "n+ {}, n- {}, positive roots {}",
                    self.dim_n_plus, self.dim_n_minus, self.expected_positive
                ),
            ),
            Verdict::new(
                "g = n- + h + n+ (dimensions add up, parts lie in g)",
                self.dim_n_plus + self.dim_h + self.dim_n_minus == self.dim_g && self.parts_in_g,
                format!(
                    "{} + {} + {} vs dim g {}",
                    self.dim_n_minus, self.dim_h, self.dim_n_plus, self.dim_g
                ),
            ),
            Verdict::new(
                "n+ strictly upper, n- strictly lower triangular",
                self.n_plus_strictly_upper && self.n_minus_strictly_lower,
                String::new(),
            ),
            Verdict::new("every element of g is traceless", self.g_traceless, String::new()),
        ]
    }

    pub fn passed(&self) -> bool {
        self.verdicts().iter().all(|v| v.passed)
    }

    /// `Err` naming the first failed claim.
    pub fn check(&self) -> Result<()> {
        match self.verdicts().into_iter().find(|v| !v.passed) {
            None => Ok(()),
            Some(v) => Err(Error::ConstructionBroken(format!("{}: {}", v.claim, v.detail))),
        }
    }
}

pub fn triangular_report(
    g: &MatrixSpan,
    n_plus: &MatrixSpan,
    n_minus: &MatrixSpan,
    h_list: &[RatMatrix],
    expected_positive: usize,
) -> TriangularReport {
    let mut h_span = MatrixSpan::new(g.side());
    for h in h_list {
        h_span.insert(h);
    }
    let parts_in_g = n_plus
        .basis_sparse()
        .into_iter()
        .chain(n_minus.basis_sparse())
        .chain(h_span.basis_sparse())
        .all(|x| g.contains_sparse(x));
    TriangularReport {
        dim_n_plus: n_plus.dim(),
        dim_h: h_span.dim(),
        dim_n_minus: n_minus.dim(),
        dim_g: g.dim(),
        expected_positive,
        n_plus_strictly_upper: n_plus.basis().iter().all(|x| x.is_strictly_upper(&Rationals)),
        n_minus_strictly_lower: n_minus.basis().iter().all(|x| x.is_strictly_lower(&Rationals)),
        g_traceless: g.basis().iter().all(|x| x.trace(&Rationals).is_zero()),
        parts_in_g,
    }
}

/// The closures `g`, `n⁺`, `n⁻` of one adjoint model.
#[derive(Debug, Clone)]
pub struct AdjointAlgebra {
    pub g: MatrixSpan,
    pub n_plus: MatrixSpan,
    pub n_minus: MatrixSpan,
    pub h: Vec<RatMatrix>,
}

impl AdjointAlgebra {
    pub fn build(model: &AdjointModel) -> Result<Self> {
        let gens = model.generators();
        let e: Vec<RatMatrix> = gens.e.iter().map(IntMatrix::to_rational).collect();
        let f: Vec<RatMatrix> = gens.f.iter().map(IntMatrix::to_rational).collect();
        let h: Vec<RatMatrix> = gens.h.iter().map(IntMatrix::to_rational).collect();
        let all: Vec<RatMatrix> = e.iter().chain(&f).cloned().collect();
        Ok(AdjointAlgebra {
            g: lie_closure(&all)?,
            n_plus: lie_closure(&e)?,
            n_minus: lie_closure(&f)?,
            h,
        })
    }

    pub fn decomposition(&self) -> Result<BTreeMap<WeightLabel, MatrixSpan>> {
        root_space_decomposition(&self.g, &self.h)
    }

    pub fn triangular_report(&self, expected_positive: usize) -> TriangularReport {
        triangular_report(&self.g, &self.n_plus, &self.n_minus, &self.h, expected_positive)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use crate::rootsystem::RootSystem;

    #[test]
    fn bracket_basics() {
        let m = AdjointModel::from_designation("A1").unwrap();
        let (e, f, h) = (m.e(0).unwrap(), m.f(0).unwrap(), m.h(0).unwrap());
        assert_eq!(bracket(&e, &f, &Integers).unwrap(), h);
        assert!(bracket(&e, &e, &Integers).unwrap().is_zero(&Integers));
        assert_eq!(
            bracket(&e, &h, &Integers).unwrap(),
            bracket(&h, &e, &Integers).unwrap().neg(&Integers)
        );
        let small = IntMatrix::identity(2, &Integers);
        assert!(matches!(
            bracket(&e, &small, &Integers),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn closure_dimensions() {
        for (t, dim) in [("A1", 3), ("A2", 8), ("B2", 10), ("G2", 14)] {
            let m = AdjointModel::from_designation(t).unwrap();
            let alg = AdjointAlgebra::build(&m).unwrap();
            assert_eq!(alg.g.dim(), dim, "{t}");
        }
    }

    #[test]
    fn single_diagonal_generator() {
        let m = AdjointModel::from_designation("A2").unwrap();
        let g = lie_closure_int(&[m.h(0).unwrap()]).unwrap();
        assert_eq!(g.dim(), 1);
        assert!(lie_closure(&[]).is_err());
    }

    #[test]
    fn a1_weights() {
        let m = AdjointModel::from_designation("A1").unwrap();
        let alg = AdjointAlgebra::build(&m).unwrap();
        let dec = alg.decomposition().unwrap();
        let dims: Vec<(WeightLabel, usize)> = dec.iter().map(|(w, s)| (w.clone(), s.dim())).collect();
        assert_eq!(dims, vec![(vec![-2], 1), (vec![0], 1), (vec![2], 1)]);
    }

    #[test]
    fn triangular_shapes() {
        for (t, np) in [("A2", 3), ("B2", 4), ("G2", 6)] {
            let rs = RootSystem::from_designation(t).unwrap();
            let m = AdjointModel::new(&rs);
            let rep = AdjointAlgebra::build(&m).unwrap().triangular_report(rs.num_positive());
            assert_eq!((rep.dim_n_plus, rep.dim_h, rep.dim_n_minus), (np, 2, np), "{t}");
            rep.check().unwrap();
        }
    }

    #[test]
    fn spin_errors_and_full_module() {
        let m = AdjointModel::from_designation("B2").unwrap();
        let zero = vec![BigRational::zero(); m.dim()];
        assert!(matches!(spin_submodule(&m, &zero), Err(Error::ZeroVector)));
        assert!(spin_submodule(&m, &zero[1..]).is_err());
        let u1 = m.unit_vector(m.pos_u(0));
        assert_eq!(spin_submodule(&m, &u1).unwrap().dim(), m.dim());
    }

    #[test]
    fn broken_closure_detected() {
        // the span of e alone has weight 2 but omitting h from a "closure"
        // of {e, f} must fail the dimension bookkeeping
        let m = AdjointModel::from_designation("A1").unwrap();
        let mut fake = MatrixSpan::new(3);
        fake.insert(&m.e(0).unwrap().to_rational());
        fake.insert(&m.e(0).unwrap().add(&m.h(0).unwrap(), &Integers).to_rational());
        let h = vec![m.h(0).unwrap().to_rational()];
        assert!(root_space_decomposition(&fake, &h).is_ok());
        let mut skew = MatrixSpan::new(3);
        skew.insert(&m.e(0).unwrap().add(&m.h(0).unwrap(), &Integers).to_rational());
        assert!(matches!(
            root_space_decomposition(&skew, &h),
            Err(Error::ConstructionBroken(_))
        ));
    }
}
