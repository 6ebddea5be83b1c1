use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Family letter of an irreducible finite-type Cartan matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A Dynkin type such as `G2` or `B3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidCartan(format!(
                "no type {:?}{} (rank out of range)",
                family, rank
            )))
        }
    }

    /// Edges of the Dynkin diagram with the Cartan entries `(a_ij, a_ji)`,
    /// using 0-based indices and Bourbaki's labelling. In `G2` the first simple
    /// root is the long one.
    fn edges(&self) -> Vec<(usize, usize, i64, i64)> {
        let l = self.rank;
        let path = |n: usize| (1..n).map(|k| (k - 1, k, -1, -1)).collect::<Vec<_>>();
        match self.family {
            Family::A => path(l),
            Family::B => {
                let mut e = path(l - 1);
                // α_l short: a_{l-1,l} = −1, a_{l,l-1} = −2
                e.push((l - 2, l - 1, -1, -2));
                e
            }
            Family::C => {
                let mut e = path(l - 1);
                e.push((l - 2, l - 1, -2, -1));
                e
            }
            Family::D => {
                let mut e = path(l - 1);
                e.push((l - 3, l - 1, -1, -1));
                e
            }
            Family::E => {
                let mut e = vec![(0, 2, -1, -1), (1, 3, -1, -1)];
                e.extend((2..l - 1).map(|k| (k, k + 1, -1, -1)));
                e
            }
            Family::F => vec![(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)],
            Family::G => vec![(0, 1, -1, -3)],
        }
    }

    pub fn cartan_matrix(&self) -> CartanMatrix {
        let l = self.rank;
        let mut rows = vec![vec![0i64; l]; l];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (i, j, aij, aji) in self.edges() {
            rows[i][j] = aij;
            rows[j][i] = aji;
        }
        let mut c = CartanMatrix::from_rows(rows).expect("tabulated Cartan matrix is valid");
        c.kind = Some(*self);
        c
    }

    /// Number of positive roots.
    pub fn num_positive_roots(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A => l * (l + 1) / 2,
            Family::B | Family::C => l * l,
            Family::D => l * (l - 1),
            Family::E => match l {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidCartan(format!("unrecognised type designation {s:?}"));
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        CartanType::new(family, rank)
    }
}

/// A validated Cartan matrix of finite type, `a_ij = (α_j, α_i^∨)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    rows: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    kind: Option<CartanType>,
}

impl CartanMatrix {
    /// Validates a raw integer matrix. The error message names the first
    /// condition that fails.
    #[allow(clippy::needless_range_loop)] // compares a[i][j] with a[j][i]
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidCartan(msg));
        let l = rows.len();
        if l == 0 {
            return invalid("empty matrix".into());
        }
        if rows.iter().any(|r| r.len() != l) {
            return invalid("matrix is not square".into());
        }
        for i in 0..l {
            if rows[i][i] != 2 {
                return invalid(format!("diagonal entry a[{i}][{i}] = {} is not 2", rows[i][i]));
            }
            for j in 0..l {
                if i == j {
                    continue;
                }
                if rows[i][j] > 0 {
                    return invalid(format!("off-diagonal entry a[{i}][{j}] = {} is positive", rows[i][j]));
                }
                if (rows[i][j] == 0) != (rows[j][i] == 0) {
                    return invalid(format!("a[{i}][{j}] = 0 but a[{j}][{i}] != 0 (or vice versa)"));
                }
            }
        }
        if !is_connected(&rows) {
            return invalid("Dynkin diagram is not connected".into());
        }
        let symmetrizer = symmetrizer(&rows)?;
        let sym = IntMatrix::from_fn(l, l, |i, j| BigInt::from(symmetrizer[i] * rows[i][j]));
        for k in 1..=l {
            let minor = IntMatrix::from_fn(k, k, |i, j| sym.get(i, j).clone());
            if !minor.det().is_positive() {
                return invalid(format!(
                    "symmetrized matrix is not positive definite (leading minor {k} is not positive)"
                ));
            }
        }
        let shifted = IntMatrix::from_fn(l, l, |i, j| BigInt::from(if i == j { 4 } else { 0 } - rows[i][j]));
        if shifted.det().is_zero() {
            return invalid("det(4I - A) = 0".into());
        }
        Ok(CartanMatrix {
            rows,
            symmetrizer,
            kind: None,
        })
    }

    pub fn of_type(kind: CartanType) -> Self {
        kind.cartan_matrix()
    }

    /// Accepts designations like `"G2"` or `"a3"`.
    pub fn from_designation(s: &str) -> Result<Self> {
        Ok(s.parse::<CartanType>()?.cartan_matrix())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Minimal positive integers `d` with `d_i a_ij = d_j a_ji`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// The symmetric form on simple roots, `(α_i, α_j) = d_i a_ij`.
    pub fn form(&self, i: usize, j: usize) -> i64 {
        self.symmetrizer[i] * self.rows[i][j]
    }

    /// The Dynkin type, when the matrix came from a designation.
    pub fn kind(&self) -> Option<CartanType> {
        self.kind
    }

    pub fn with_kind(mut self, kind: CartanType) -> Self {
        self.kind = Some(kind);
        self
    }

    pub fn to_int_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64_rows(&self.rows).expect("square")
    }

    /// `det(4I − A)`, exact.
    pub fn shifted_det(&self) -> BigInt {
        let l = self.rank();
        IntMatrix::from_fn(l, l, |i, j| BigInt::from(if i == j { 4 } else { 0 } - self.rows[i][j])).det()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.rows[i][j] != 0
    }
}

fn is_connected(rows: &[Vec<i64>]) -> bool {
    let l = rows.len();
    let mut seen = vec![false; l];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..l {
            if i != j && rows[i][j] != 0 && !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn symmetrizer(rows: &[Vec<i64>]) -> Result<Vec<i64>> {
    let l = rows.len();
    let mut d: Vec<Option<BigRational>> = vec![None; l];
    d[0] = Some(BigRational::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].clone().unwrap();
        for j in 0..l {
            if i == j || rows[i][j] == 0 {
                continue;
            }
            // d_i a_ij = d_j a_ji
            let dj = &di * BigRational::new(rows[i][j].into(), rows[j][i].into());
            match &d[j] {
                Some(existing) if *existing != dj => {
                    return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                }
                Some(_) => {}
                None => {
                    d[j] = Some(dj);
                    stack.push(j);
                }
            }
        }
    }
    let d: Vec<BigRational> = d.into_iter().map(Option::unwrap).collect();
    let lcm = d.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = d.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    Ok(ints.iter().map(|x| (x / &g).to_i64().unwrap()).collect())
}
