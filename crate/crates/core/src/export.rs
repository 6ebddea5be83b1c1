//! JSON document types. Integers inside matrices are decimal strings so that
//! no consumer has to worry about precision; ring elements use their
//! [`Ring::format`] spelling.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyBasis, StructureConstant};
use crate::closure::{AdjointAlgebra, Verdict};
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Matrix};
use crate::ring::{Integers, Ring};
use crate::rootsystem::{CartanMatrix, Root, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDoc {
    pub fn from_matrix<R: Ring>(m: &Matrix<R::Elem>, ring: &R) -> Self {
        MatrixDoc {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|r| m.row(r).iter().map(|x| ring.format(x)).collect())
                .collect(),
        }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        Self::from_matrix(m, &Integers)
    }

    pub fn to_matrix<R: Ring>(&self, ring: &R) -> Result<Matrix<R::Elem>> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::DimensionMismatch(format!(
                "declared {}x{} does not match the entries",
                self.rows, self.cols
            )));
        }
        let data = self
            .entries
            .iter()
            .flatten()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_vec(self.rows, self.cols, data)
    }

    pub fn to_int(&self) -> Result<IntMatrix> {
        self.to_matrix(&Integers)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootDoc {
    pub coords: Vec<i64>,
    pub height: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDoc {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub type_name: Option<String>,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
    pub roots: Vec<RootDoc>,
    /// `pairings[a][b] = (roots[a], roots[b]^∨)`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairings: Option<Vec<Vec<i64>>>,
}

impl RootSystemDoc {
    pub fn new(rs: &RootSystem, with_pairings: bool) -> Self {
        let roots = rs.roots();
        RootSystemDoc {
            type_name: rs.cartan().kind().map(|k| k.to_string()),
            cartan: rs.cartan().rows().to_vec(),
            symmetrizer: rs.cartan().symmetrizer().to_vec(),
            roots: roots
                .iter()
                .map(|r| RootDoc {
                    coords: r.coords().to_vec(),
                    height: r.height(),
                })
                .collect(),
            pairings: with_pairings.then(|| {
                roots
                    .iter()
                    .map(|b| roots.iter().map(|a| rs.pairing(b, a).unwrap()).collect())
                    .collect()
            }),
        }
    }

    /// Regenerates the root system from `cartan` and checks that it agrees
    /// with every other field.
    pub fn to_root_system(&self) -> Result<RootSystem> {
        let mut cartan = CartanMatrix::from_rows(self.cartan.clone())?;
        if let Some(name) = &self.type_name {
            cartan = cartan.with_kind(name.parse()?);
        }
        let rs = RootSystem::generate(&cartan)?;
        let expected = RootSystemDoc::new(&rs, self.pairings.is_some());
        if expected != *self {
            return Err(Error::ConstructionBroken(
                "document disagrees with the root system generated from its Cartan matrix".into(),
            ));
        }
        Ok(rs)
    }
}

/// One generator matrix with the basis legend of `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointDoc {
    #[serde(rename = "type")]
    pub type_name: String,
    pub generator: String,
    pub basis: Vec<String>,
    pub matrix: MatrixDoc,
}

/// Key of a root in JSON maps: `[1,2]`.
pub fn root_key(r: &Root) -> String {
    let c: Vec<String> = r.coords().iter().map(ToString::to_string).collect();
    format!("[{}]", c.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChevbasisDoc {
    pub epsilon: Vec<i64>,
    pub constants: Vec<StructureConstant>,
    pub basis: BTreeMap<String, MatrixDoc>,
}

impl ChevbasisDoc {
    pub fn new(b: &ChevalleyBasis) -> Result<Self> {
        let table = b.structure_constants()?;
        let rs = b.root_system();
        Ok(ChevbasisDoc {
            epsilon: b.epsilon().values().to_vec(),
            constants: table.entries().to_vec(),
            basis: rs
                .roots()
                .iter()
                .zip(b.elements())
                .map(|(r, m)| (root_key(r), MatrixDoc::from_int(m)))
                .collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDoc {
    pub weight: Vec<i64>,
    /// The root with this weight; absent for the zero weight.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<Vec<i64>>,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureDoc {
    #[serde(rename = "type")]
    pub type_name: String,
    pub dim: usize,
    pub expected_dim: usize,
    pub dim_n_minus: usize,
    pub dim_h: usize,
    pub dim_n_plus: usize,
    pub weights: Vec<WeightDoc>,
    pub verdicts: Vec<Verdict>,
}

impl ClosureDoc {
    pub fn new(rs: &RootSystem, algebra: &AdjointAlgebra) -> Result<Self> {
        let dec = algebra.decomposition()?;
        let by_weight: BTreeMap<Vec<i64>, &Root> = rs
            .roots()
            .iter()
            .map(|r| ((0..rs.rank()).map(|j| rs.simple_pairing(r, j)).collect(), r))
            .collect();
        let rep = algebra.triangular_report(rs.num_positive());
        let expected_dim = rs.len() + rs.rank();
        let mut verdicts = rep.verdicts();
        verdicts.insert(
            0,
            Verdict::new(
                "dim g = |Φ| + rank",
                algebra.g.dim() == expected_dim,
                format!("{} vs {expected_dim}", algebra.g.dim()),
            ),
        );
        let zero_ok = dec.get(&vec![0; rs.rank()]).map(|s| s.dim()) == Some(rs.rank());
        let roots_ok = dec.len() == rs.len() + 1
            && dec
                .iter()
                .all(|(w, s)| w.iter().all(|x| *x == 0) || (by_weight.contains_key(w) && s.dim() == 1));
        verdicts.insert(
            1,
            Verdict::new(
                "zero weight space has dimension rank, other weights are roots with 1-dimensional spaces",
                zero_ok && roots_ok,
                format!("{} weights", dec.len()),
            ),
        );
        Ok(ClosureDoc {
            type_name: rs
                .cartan()
                .kind()
                .map(|k| k.to_string())
                .unwrap_or_else(|| "custom".into()),
            dim: algebra.g.dim(),
            expected_dim,
            dim_n_minus: rep.dim_n_minus,
            dim_h: rep.dim_h,
            dim_n_plus: rep.dim_n_plus,
            weights: dec
                .iter()
                .map(|(w, s)| WeightDoc {
                    weight: w.clone(),
                    root: by_weight.get(w).map(|r| r.coords().to_vec()),
                    dim: s.dim(),
                })
                .collect(),
            verdicts,
        })
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjoint::AdjointModel;
    use crate::chevalley::two_colorings;
    use crate::ring::Rationals;

    #[test]
    fn matrix_round_trip() {
        let m = AdjointModel::from_designation("G2").unwrap().e(1).unwrap();
        let doc = MatrixDoc::from_int(&m);
        let json = serde_json::to_string(&doc).unwrap();
        let back: MatrixDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_int().unwrap(), m);
        let q = m.to_rational();
        assert_eq!(MatrixDoc::from_matrix(&q, &Rationals).to_matrix(&Rationals).unwrap(), q);
        let bad = MatrixDoc {
            rows: 2,
            cols: 2,
            entries: vec![vec!["1".into()]],
        };
        assert!(bad.to_int().is_err());
    }

    #[test]
    fn root_system_round_trip() {
        for t in ["A2", "G2", "F4"] {
            let rs = RootSystem::from_designation(t).unwrap();
            for pairings in [false, true] {
                let doc = RootSystemDoc::new(&rs, pairings);
                let json = serde_json::to_string(&doc).unwrap();
                let back: RootSystemDoc = serde_json::from_str(&json).unwrap();
                assert_eq!(back, doc);
                let rs2 = back.to_root_system().unwrap();
                assert_eq!(rs2.roots(), rs.roots());
            }
        }
        let mut doc = RootSystemDoc::new(&RootSystem::from_designation("A2").unwrap(), false);
        doc.roots.pop();
        assert!(doc.to_root_system().is_err());
    }

    #[test]
    fn chevbasis_round_trip() {
        let m = AdjointModel::from_designation("B2").unwrap();
        let (eps, _) = two_colorings(m.root_system().cartan()).unwrap();
        let doc = ChevbasisDoc::new(&ChevalleyBasis::build(&m, &eps).unwrap()).unwrap();
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<ChevbasisDoc>(&json).unwrap(), doc);
        assert_eq!(doc.basis.len(), 8);
    }

    #[test]
    fn closure_doc() {
        let rs = RootSystem::from_designation("G2").unwrap();
        let alg = AdjointAlgebra::build(&AdjointModel::new(&rs)).unwrap();
        let doc = ClosureDoc::new(&rs, &alg).unwrap();
        assert!(doc.passed());
        assert_eq!((doc.dim_n_minus, doc.dim_h, doc.dim_n_plus, doc.dim), (6, 2, 6, 14));
        let json = serde_json::to_string(&doc).unwrap();
        assert_eq!(serde_json::from_str::<ClosureDoc>(&json).unwrap(), doc);
    }
}
