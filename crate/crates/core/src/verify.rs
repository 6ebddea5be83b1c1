//! The full invariant suite for one root system, as a deterministic table of
//! named checks.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::adjoint::AdjointModel;
use crate::chevalley::{build_n_i, eta_conjugate_check, g2_table, n_closed_form, two_colorings, ChevalleyBasis, Pivot};
use crate::closure::{sparse_matmul, spin_submodule, AdjointAlgebra, SparseVec, WeightLabel};
use crate::group::{x_alpha_gen, x_gen, y_gen, DividedPowers};
use crate::matrix::{IntMatrix, Matrix};
use crate::ring::{Integers, PrimeField, Rationals};
use crate::rootsystem::{CartanType, Family, Root, RootSystem};

pub const DEFAULT_SEED: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub area: String,
    pub check: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub type_name: String,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("verify {} (seed {})\n", self.type_name, self.seed);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            let _ = write!(out, "{tag}  {:<10} {}", c.area, c.check);
            if !c.detail.is_empty() {
                let _ = write!(out, "  [{}]", c.detail);
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.checks.len(), failed);
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    pub jacobi_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: DEFAULT_SEED,
            jacobi_samples: 64,
        }
    }
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Samples for identities polynomial in `t`.
pub fn sample_parameters() -> Vec<BigRational> {
    vec![
        BigRational::one(),
        -BigRational::one(),
        BigRational::from_integer(BigInt::from(2)),
        BigRational::new(BigInt::one(), BigInt::from(2)),
    ]
}

struct Suite {
    checks: Vec<CheckResult>,
}

impl Suite {
    fn run(&mut self, area: &str, check: &str, f: impl FnOnce() -> Outcome) {
        let (status, detail) = match f() {
            Ok(d) => (Status::Pass, d),
            Err(d) => (Status::Fail, d),
        };
        self.checks.push(CheckResult {
            area: area.to_string(),
            check: check.to_string(),
            status,
            detail,
        });
    }
}

/// Runs every check for `rs`; the output depends only on `rs` and `opts`.
pub fn verify(rs: &RootSystem, opts: VerifyOptions) -> VerifyReport {
    let name = rs
        .cartan()
        .kind()
        .map(|k| k.to_string())
        .unwrap_or_else(|| "custom".to_string());
    let model = AdjointModel::new(rs);
    let mut s = Suite { checks: Vec::new() };

    root_checks(&mut s, rs);
    adjoint_checks(&mut s, &model);

    let algebra = AdjointAlgebra::build(&model);
    closure_checks(&mut s, &model, algebra.as_ref().map_err(err), opts);

    let (eps, neg) = match two_colorings(rs.cartan()) {
        Ok(p) => p,
        Err(e) => {
            s.run("chevalley", "proper 2-coloring of the Dynkin diagram", || Err(err(e)));
            return VerifyReport {
                type_name: name,
                seed: opts.seed,
                checks: s.checks,
            };
        }
    };
    let bases: Vec<std::result::Result<ChevalleyBasis, String>> = [&eps, &neg]
        .iter()
        .map(|e| ChevalleyBasis::build(&model, e).map_err(err))
        .collect();
    chevalley_checks(&mut s, &model, &bases, algebra.as_ref().ok());
    reflection_checks(&mut s, &model, bases[0].as_ref().ok());
    group_checks(&mut s, &model, &bases);

    if rs.cartan().kind().map(|k| k.family == Family::G).unwrap_or(false) {
        s.run("table", "G2 structure constants for ε = (+1, −1)", || {
            let b = bases[0].as_ref().map_err(Clone::clone)?;
            let rows = g2_table(b).map_err(err)?;
            for (row, expected) in rows.iter().zip(G2_EXPECTED) {
                ensure(row.n == expected, || format!("{row}: expected coefficient {expected}"))?;
            }
            Ok(format!("{} relations", rows.len()))
        });
    }

    VerifyReport {
        type_name: name,
        seed: opts.seed,
        checks: s.checks,
    }
}

/// Coefficients of the G2 relations in `G2_TABLE_PAIRS` order.
const G2_EXPECTED: [i64; 15] = [1, 1, -2, -3, -3, 1, -3, -2, -2, -1, 1, 1, 1, 1, 1];

pub fn verify_type(kind: CartanType, opts: VerifyOptions) -> VerifyReport {
    verify(&RootSystem::of_type(kind), opts)
}

fn root_checks(s: &mut Suite, rs: &RootSystem) {
    let roots = rs.roots();
    let l = rs.rank();
    s.run(
        "roots",
        "root strings: q − p = (β,α^∨), p + q ≤ 3, = 3 only in rank 2",
        || {
            let mut count = 0;
            for alpha in roots {
                for beta in roots {
                    if beta == alpha || *beta == alpha.neg() {
                        continue;
                    }
                    let st = rs.root_string(alpha, beta).map_err(err)?;
                    let pr = rs.pairing(beta, alpha).map_err(err)?;
                    ensure(st.q - st.p == pr, || format!("{alpha}-string through {beta}"))?;
                    ensure(st.p + st.q <= 3, || format!("{alpha}-string through {beta} too long"))?;
                    ensure(st.p + st.q < 3 || l == 2, || format!("length-4 string in rank {l}"))?;
                    let (mm, mp) = (
                        rs.m_minus(alpha, beta).map_err(err)?,
                        rs.m_plus(alpha, beta).map_err(err)?,
                    );
                    ensure(mm - mp == pr && (2..=5).contains(&(mm + mp)), || {
                        format!("m± for ({alpha}, {beta})")
                    })?;
                    ensure(mm == rs.m_plus(alpha, &beta.neg()).map_err(err)?, || {
                        format!("m⁻ vs m⁺ of the negative at ({alpha}, {beta})")
                    })?;
                    count += 1;
                }
            }
            Ok(format!("{count} pairs"))
        },
    );
    s.run("roots", "(α,β) > 0 implies β − α ∈ Φ or β = α", || {
        for alpha in roots {
            for beta in roots {
                if rs.form(alpha, beta) > 0 && alpha != beta {
                    ensure(rs.contains(&beta.minus(alpha)), || format!("{beta} − {alpha}"))?;
                }
            }
        }
        Ok(String::new())
    });
    s.run(
        "roots",
        "shift property: α+α_i−α_j ∈ Φ with α+α_i ∈ Φ (resp. α−α_j) forces the other",
        || {
            let mut count = 0;
            for alpha in roots {
                for i in 0..l {
                    for j in 0..l {
                        if i == j {
                            continue;
                        }
                        let (ai, aj) = (rs.simple_root(i), rs.simple_root(j));
                        if !rs.contains(&alpha.plus(&ai).minus(&aj)) {
                            continue;
                        }
                        count += 1;
                        if rs.contains(&alpha.plus(&ai)) && *alpha != aj {
                            ensure(rs.contains(&alpha.minus(&aj)), || {
                                format!("(a) at {alpha}, i={}, j={}", i + 1, j + 1)
                            })?;
                        }
                        if rs.contains(&alpha.minus(&aj)) && *alpha != ai.neg() {
                            ensure(rs.contains(&alpha.plus(&ai)), || {
                                format!("(b) at {alpha}, i={}, j={}", i + 1, j + 1)
                            })?;
                        }
                    }
                }
            }
            Ok(format!("{count} triples"))
        },
    );
    s.run(
        "roots",
        "m_i⁻(α−α_j) m_j⁺(α) = m_j⁺(α+α_i) m_i⁻(α), no such triple in rank 2",
        || {
            let mut count = 0;
            for alpha in roots {
                for i in 0..l {
                    for j in 0..l {
                        let (ai, aj) = (rs.simple_root(i), rs.simple_root(j));
                        let (up, down, both) = (alpha.plus(&ai), alpha.minus(&aj), alpha.plus(&ai).minus(&aj));
                        if i == j || !rs.contains(&up) || !rs.contains(&down) || !rs.contains(&both) {
                            continue;
                        }
                        let m = |x: &Root, y: &Root, minus: bool| -> std::result::Result<i64, String> {
                            if minus { rs.m_minus(x, y) } else { rs.m_plus(x, y) }.map_err(err)
                        };
                        let lhs = m(&ai, &down, true)? * m(&aj, alpha, false)?;
                        let rhs = m(&aj, &up, false)? * m(&ai, alpha, true)?;
                        ensure(lhs == rhs, || format!("α = {alpha}, i = {}, j = {}", i + 1, j + 1))?;
                        count += 1;
                    }
                }
            }
            ensure(l > 2 || count == 0, || {
                format!("{count} triples in rank {l}, none expected")
            })?;
            Ok(format!("{count} triples"))
        },
    );
    s.run(
        "roots",
        "(β,α^∨)(α,β^∨) ∈ {0,1,2,3}, value 3 only in rank 2",
        || {
            for alpha in roots {
                for beta in roots {
                    if beta == alpha || *beta == alpha.neg() {
                        continue;
                    }
                    let p = rs.pairing(beta, alpha).map_err(err)? * rs.pairing(alpha, beta).map_err(err)?;
                    ensure((0..=3).contains(&p), || format!("product {p} at ({alpha}, {beta})"))?;
                    ensure(p < 3 || l == 2, || format!("product 3 in rank {l}"))?;
                }
            }
            Ok(String::new())
        },
    );
    s.run("roots", "at most two root lengths", || {
        let lengths = rs.root_lengths();
        ensure(lengths.len() <= 2, || format!("{lengths:?}"))?;
        Ok(format!("{lengths:?}"))
    });
    s.run("roots", "det(4I − A) ≠ 0", || {
        let d = rs.cartan().shifted_det();
        ensure(!d.is_zero(), || "zero".into())?;
        Ok(format!("{d}"))
    });
}

fn adjoint_checks(s: &mut Suite, model: &AdjointModel) {
    let rs = model.root_system();
    let l = rs.rank();
    let g = model.generators();
    let z = &Integers;
    let br = |x: &IntMatrix, y: &IntMatrix| x.commutator(y, z);
    let big = |v: i64| BigInt::from(v);
    s.run(
        "adjoint",
        "[h_j, e_i] = (α_i,α_j^∨) e_i and [h_j, f_i] = −(α_i,α_j^∨) f_i",
        || {
            for i in 0..l {
                for j in 0..l {
                    let a = big(rs.cartan().entry(j, i));
                    ensure(br(&g.h[j], &g.e[i]) == g.e[i].scale(&a, z), || {
                        format!("e, i={}, j={}", i + 1, j + 1)
                    })?;
                    ensure(br(&g.h[j], &g.f[i]) == g.f[i].scale(&-a, z), || {
                        format!("f, i={}, j={}", i + 1, j + 1)
                    })?;
                }
            }
            Ok(String::new())
        },
    );
    s.run("adjoint", "[e_i, f_i] = h_i", || {
        for i in 0..l {
            ensure(br(&g.e[i], &g.f[i]) == g.h[i], || format!("i = {}", i + 1))?;
        }
        Ok(String::new())
    });
    s.run("adjoint", "[e_i, f_j] = 0 for i ≠ j", || {
        for i in 0..l {
            for j in 0..l {
                if i != j {
                    ensure(br(&g.e[i], &g.f[j]).is_zero(z), || format!("i={}, j={}", i + 1, j + 1))?;
                }
            }
        }
        Ok(String::new())
    });
    s.run("adjoint", "h_i commute pairwise and are linearly independent", || {
        for i in 0..l {
            for j in 0..l {
                ensure(br(&g.h[i], &g.h[j]).is_zero(z), || format!("i={}, j={}", i + 1, j + 1))?;
            }
        }
        let n = model.dim();
        let diag = IntMatrix::from_fn(l, n, |i, k| g.h[i].get(k, k).clone()).to_rational();
        let mut span = crate::closure::Span::new(n);
        for i in 0..l {
            span.insert(&SparseVec::from_dense(diag.row(i)));
        }
        ensure(span.dim() == l, || format!("rank {} of {l}", span.dim()))?;
        Ok(String::new())
    });
    s.run("adjoint", "ω e_i = f_i ω, ω h_i = −h_i ω, ω² = 1", || {
        let w = model.omega();
        ensure(w.mul_int(&w).is_identity(z), || "ω²".into())?;
        for i in 0..l {
            ensure(w.mul_int(&g.e[i]) == g.f[i].mul_int(&w), || format!("e_{}", i + 1))?;
            ensure(w.mul_int(&g.h[i]) == g.h[i].mul_int(&w).neg(z), || {
                format!("h_{}", i + 1)
            })?;
        }
        Ok(String::new())
    });
    s.run(
        "adjoint",
        "ad(e_i)^{1−a_ij} e_j = 0 and ad(f_i)^{1−a_ij} f_j = 0",
        || {
            for i in 0..l {
                for j in 0..l {
                    if i == j {
                        continue;
                    }
                    let k = 1 - rs.cartan().entry(i, j);
                    let (mut x, mut y) = (g.e[j].clone(), g.f[j].clone());
                    for _ in 0..k {
                        x = br(&g.e[i], &x);
                        y = br(&g.f[i], &y);
                    }
                    ensure(x.is_zero(z) && y.is_zero(z), || format!("i={}, j={}", i + 1, j + 1))?;
                }
            }
            Ok(String::new())
        },
    );
    s.run(
        "adjoint",
        "e_i, f_i non-negative; e_i strictly upper, f_i strictly lower",
        || {
            for i in 0..l {
                ensure(
                    crate::matrix::is_nonnegative(&g.e[i]) && crate::matrix::is_nonnegative(&g.f[i]),
                    || format!("negative entry at i = {}", i + 1),
                )?;
                ensure(g.e[i].is_strictly_upper(z) && g.f[i].is_strictly_lower(z), || {
                    format!("shape at i = {}", i + 1)
                })?;
            }
            Ok(String::new())
        },
    );
    s.run(
        "adjoint",
        "h_α = Σ x_i h_i for α^∨ = Σ x_i α_i^∨, h_{−α} = −h_α",
        || {
            for alpha in rs.positive_roots() {
                let h = model.h_alpha(alpha).map_err(err)?;
                ensure(model.h_alpha_from_coroot(alpha).map_err(err)? == h, || {
                    format!("{alpha}")
                })?;
                ensure(model.h_alpha(&alpha.neg()).map_err(err)? == h.neg(z), || {
                    format!("−{alpha}")
                })?;
            }
            Ok(String::new())
        },
    );
}

fn weight_of(rs: &RootSystem, alpha: &Root) -> WeightLabel {
    (0..rs.rank()).map(|j| rs.simple_pairing(alpha, j)).collect()
}

fn closure_checks(
    s: &mut Suite,
    model: &AdjointModel,
    algebra: std::result::Result<&AdjointAlgebra, String>,
    opts: VerifyOptions,
) {
    let rs = model.root_system();
    let l = rs.rank();
    let expected = rs.len() + l;
    s.run("closure", "dim g = |Φ| + rank", || {
        let a = algebra.clone()?;
        ensure(a.g.dim() == expected, || format!("{} vs {expected}", a.g.dim()))?;
        Ok(format!("{expected}"))
    });
    s.run(
        "closure",
        "root spaces: g_0 = span(h_i), each root weight 1-dimensional",
        || {
            let a = algebra.clone()?;
            let dec = a.decomposition().map_err(err)?;
            let zero = vec![0; l];
            let g0 = dec.get(&zero).ok_or("no zero weight")?;
            ensure(g0.dim() == l, || format!("dim g_0 = {}", g0.dim()))?;
            for h in &a.h {
                ensure(g0.contains(h), || "h_i outside g_0".into())?;
            }
            ensure(dec.len() == rs.len() + 1, || format!("{} weights", dec.len()))?;
            for alpha in rs.roots() {
                let w = weight_of(rs, alpha);
                let sp = dec.get(&w).ok_or_else(|| format!("no weight for {alpha}"))?;
                ensure(sp.dim() == 1, || format!("dim g_{alpha} = {}", sp.dim()))?;
            }
            Ok(format!("{} weights", dec.len()))
        },
    );
    s.run("closure", "g = n⁻ ⊕ h ⊕ n⁺ with dim n± = |Φ⁺|", || {
        let a = algebra.clone()?;
        let rep = a.triangular_report(rs.num_positive());
        let v = &rep.verdicts()[..2];
        for x in v {
            ensure(x.passed, || format!("{}: {}", x.claim, x.detail))?;
        }
        Ok(format!("({}, {}, {})", rep.dim_n_minus, rep.dim_h, rep.dim_n_plus))
    });
    s.run(
        "closure",
        "n⁺ strictly upper, n⁻ strictly lower, g traceless",
        || {
            let a = algebra.clone()?;
            let rep = a.triangular_report(rs.num_positive());
            for x in &rep.verdicts()[2..] {
                ensure(x.passed, || x.claim.clone())?;
            }
            Ok(String::new())
        },
    );
    s.run("closure", "every basis vector of M generates M", || {
        for k in 0..model.dim() {
            let sp = spin_submodule(model, &model.unit_vector(k)).map_err(err)?;
            ensure(sp.dim() == model.dim(), || {
                format!("{} spans {}", model.basis()[k], sp.dim())
            })?;
        }
        Ok(format!("{} vectors", model.dim()))
    });
    s.run(
        "closure",
        "ω-conjugation preserves g and swaps g_α with g_{−α}",
        || {
            let a = algebra.clone()?;
            let dec = a.decomposition().map_err(err)?;
            let w = SparseVec::from_matrix(&model.omega().to_rational());
            let n = model.dim();
            for (weight, sp) in &dec {
                let neg: WeightLabel = weight.iter().map(|x| -x).collect();
                let target = dec.get(&neg).ok_or("missing opposite weight")?;
                for x in sp.basis_sparse() {
                    let y = sparse_matmul(&sparse_matmul(&w, x, n), &w, n);
                    ensure(target.contains_sparse(&y), || format!("weight {weight:?}"))?;
                }
            }
            Ok(String::new())
        },
    );
    s.run("closure", "Jacobi identity on sampled triples", || {
        let a = algebra.clone()?;
        let basis = a.g.basis_sparse();
        let n = model.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.jacobi_samples {
            let pick = |r: &mut ChaCha8Rng| basis[r.gen_range(0..basis.len())];
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let br = |p: &SparseVec, q: &SparseVec| crate::closure::sparse_bracket(p, q, n);
            let one = BigRational::one();
            let sum = br(x, &br(y, z))
                .add_scaled(&one, &br(y, &br(z, x)))
                .add_scaled(&one, &br(z, &br(x, y)));
            ensure(sum.is_zero(), || "nonzero Jacobiator".into())?;
        }
        Ok(format!("{} samples", opts.jacobi_samples))
    });
}

fn chevalley_checks(
    s: &mut Suite,
    model: &AdjointModel,
    bases: &[std::result::Result<ChevalleyBasis, String>],
    algebra: Option<&AdjointAlgebra>,
) {
    let rs = model.root_system();
    let z = &Integers;
    let each = |f: &dyn Fn(&ChevalleyBasis) -> Outcome| -> Outcome {
        let mut last = String::new();
        for b in bases {
            let b = b.as_ref().map_err(Clone::clone)?;
            last = f(b).map_err(|e| format!("ε = {}: {e}", b.epsilon()))?;
        }
        Ok(last)
    };
    s.run(
        "chevalley",
        "e_α integral, primitive, nilpotent; divided powers integral",
        || {
            each(&|b| {
                for (k, e) in b.elements().iter().enumerate() {
                    ensure(e.content().is_one(), || format!("content at {}", rs.root(k)))?;
                    DividedPowers::new(e).map_err(|x| format!("{}: {x}", rs.root(k)))?;
                }
                Ok(String::new())
            })
        },
    );
    s.run("chevalley", "e_α spans the α root space of g", || {
        let a = algebra.ok_or("closure unavailable")?;
        let dec = a.decomposition().map_err(err)?;
        each(&|b| {
            for (k, alpha) in rs.roots().iter().enumerate() {
                let sp = dec.get(&weight_of(rs, alpha)).ok_or("missing weight")?;
                ensure(sp.dim() == 1 && sp.contains(&b.e_at(k).to_rational()), || {
                    format!("{alpha}")
                })?;
            }
            Ok(String::new())
        })
    });
    s.run("chevalley", "ω e_α ω = −e_{−α}", || {
        let w = model.omega();
        each(&|b| {
            for (k, alpha) in rs.roots().iter().enumerate() {
                let lhs = w.mul_int(b.e_at(k)).mul_int(&w);
                ensure(lhs == b.e_at(rs.negative_index(k)).neg(z), || format!("{alpha}"))?;
            }
            Ok(String::new())
        })
    });
    s.run("chevalley", "[e_α, e_{−α}] = (−1)^{ht α} h_α", || {
        each(&|b| {
            for (k, alpha) in rs.roots().iter().enumerate() {
                let lhs = b.e_at(k).commutator(b.e_at(rs.negative_index(k)), z);
                let h = model.h_alpha(alpha).map_err(err)?;
                let rhs = if alpha.height() % 2 == 0 { h } else { h.neg(z) };
                ensure(lhs == rhs, || format!("{alpha}"))?;
            }
            Ok(String::new())
        })
    });
    s.run(
        "chevalley",
        "|N_{α,β}| = m_α⁻(β) and N_{β,α} = −N_{α,β}",
        || {
            each(&|b| {
                let t = b.structure_constants().map_err(err)?;
                for c in t.entries() {
                    let m = rs.m_minus(&c.alpha, &c.beta).map_err(err)?;
                    ensure(c.n.abs() == m, || {
                        format!("N({}, {}) = {}, m⁻ = {m}", c.alpha, c.beta, c.n)
                    })?;
                    ensure(t.get(&c.beta, &c.alpha) == Some(-c.n), || {
                        format!("antisymmetry at ({}, {})", c.alpha, c.beta)
                    })?;
                }
                Ok(format!("{} constants", t.len()))
            })
        },
    );
    s.run("chevalley", "N_{α_i,β} = ε(i) m_i⁻(β)", || {
        each(&|b| {
            let t = b.structure_constants().map_err(err)?;
            for i in 0..rs.rank() {
                let ai = rs.simple_root(i);
                for beta in rs.roots() {
                    if let Some(n) = t.get(&ai, beta) {
                        let m = rs.m_minus(&ai, beta).map_err(err)?;
                        ensure(n == b.epsilon().get(i) * m, || format!("i = {}, β = {beta}", i + 1))?;
                    }
                }
            }
            Ok(String::new())
        })
    });
    s.run("chevalley", "the opposite coloring negates every e_α", || {
        let (a, c) = (
            bases[0].as_ref().map_err(Clone::clone)?,
            bases[1].as_ref().map_err(Clone::clone)?,
        );
        for (k, (x, y)) in a.elements().iter().zip(c.elements()).enumerate() {
            ensure(*x == y.neg(z), || format!("{}", rs.root(k)))?;
        }
        Ok(String::new())
    });
    s.run("chevalley", "recursion independent of the pivot index", || {
        each(&|b| {
            let other = ChevalleyBasis::build_with_pivot(model, b.epsilon(), Pivot::Largest).map_err(err)?;
            ensure(other.elements() == b.elements(), || "bases differ".into())?;
            Ok(String::new())
        })
    });
    s.run("chevalley", "η e_b η⁻¹ = ±e_α along the Weyl word of α", || {
        each(&|b| {
            let mut minus = 0;
            for alpha in rs.roots() {
                if eta_conjugate_check(b, alpha).map_err(err)? < 0 {
                    minus += 1;
                }
            }
            Ok(format!("{minus} negative signs"))
        })
    });
    s.run(
        "chevalley",
        "Gaussian basis: [ê_α, ê_{−α}] = h_α, [ê_α, ê_β] = ±m_α⁻(β) ê_{α+β}",
        || {
            each(&|b| {
                b.hat_basis().map_err(err)?;
                Ok(String::new())
            })
        },
    );
}

fn reflection_checks(s: &mut Suite, model: &AdjointModel, basis: Option<&ChevalleyBasis>) {
    let rs = model.root_system();
    let q = &Rationals;
    let l = rs.rank();
    let ts = sample_parameters();
    s.run(
        "weyl",
        "n_i(t) triple product equals the explicit action, t ∈ {1, −1, 2, 1/2}",
        || {
            for i in 0..l {
                for t in &ts {
                    let built = build_n_i(model, i, t, q).map_err(err)?;
                    ensure(built == n_closed_form(model, i, t, q).map_err(err)?, || {
                        format!("i = {}, t = {t}", i + 1)
                    })?;
                }
            }
            Ok(String::new())
        },
    );
    s.run(
        "weyl",
        "n_i(t)⁴ = 1 and n_i(t)² v_α = (−1)^{(α,α_i^∨)} v_α",
        || {
            for i in 0..l {
                for t in &ts {
                    let n = n_closed_form(model, i, t, q).map_err(err)?;
                    let n2 = n.mul(&n, q);
                    ensure(n2.mul(&n2, q).is_identity(q), || {
                        format!("fourth power, i = {}, t = {t}", i + 1)
                    })?;
                    for alpha in rs.roots() {
                        let k = model.pos_v(alpha).unwrap();
                        let sign = if rs.simple_pairing(alpha, i) % 2 == 0 { 1 } else { -1 };
                        let col: Vec<BigRational> = (0..model.dim()).map(|r| n2.get(r, k).clone()).collect();
                        let mut expected = model.unit_vector(k);
                        expected[k] = BigRational::from_integer(BigInt::from(sign));
                        ensure(col == expected, || format!("square on v_{alpha}, i = {}", i + 1))?;
                    }
                }
            }
            Ok(String::new())
        },
    );
    s.run("weyl", "n_i(t) h_α n_i(t)⁻¹ = h_{s_i α}", || {
        for i in 0..l {
            for t in &ts {
                let n = n_closed_form(model, i, t, q).map_err(err)?;
                let ninv = n_closed_form(model, i, &-t.clone(), q).map_err(err)?;
                ensure(n.mul(&ninv, q).is_identity(q), || "n_i(−t) is not the inverse".into())?;
                for alpha in rs.positive_roots() {
                    let h = model.h_alpha(alpha).map_err(err)?.to_rational();
                    let target = model
                        .h_alpha(&rs.reflect(i, alpha).map_err(err)?)
                        .map_err(err)?
                        .to_rational();
                    ensure(n.mul(&h, q).mul(&ninv, q) == target, || {
                        format!("α = {alpha}, i = {}", i + 1)
                    })?;
                }
            }
        }
        Ok(String::new())
    });
    s.run(
        "weyl",
        "n_i(t) φ(m) n_i(t)⁻¹ = φ(n_i(t) m) on every basis vector m",
        || {
            let b = basis.ok_or("Chevalley basis unavailable")?;
            let dim = model.dim();
            let phis: Vec<SparseVec> = model
                .basis()
                .iter()
                .map(|x| b.phi(x).map(|m| SparseVec::from_matrix(&m.to_rational())))
                .collect::<crate::error::Result<_>>()
                .map_err(err)?;
            for i in 0..l {
                for t in &ts {
                    let n = n_closed_form(model, i, t, q).map_err(err)?;
                    let ninv = SparseVec::from_matrix(&n_closed_form(model, i, &-t.clone(), q).map_err(err)?);
                    let ns = SparseVec::from_matrix(&n);
                    for (k, phi_k) in phis.iter().enumerate() {
                        let lhs = sparse_matmul(&sparse_matmul(&ns, phi_k, dim), &ninv, dim);
                        let mut rhs = SparseVec::new();
                        for (r, phi_r) in phis.iter().enumerate() {
                            let c = n.get(r, k);
                            if !c.is_zero() {
                                rhs = rhs.add_scaled(c, phi_r);
                            }
                        }
                        ensure(lhs == rhs, || {
                            format!("m = {}, i = {}, t = {t}", model.basis()[k], i + 1)
                        })?;
                    }
                }
            }
            Ok(String::new())
        },
    );
}

fn group_checks(s: &mut Suite, model: &AdjointModel, bases: &[std::result::Result<ChevalleyBasis, String>]) {
    let rs = model.root_system();
    let l = rs.rank();
    s.run(
        "group",
        "explicit x_i(t), y_i(t) equal exp(t e_i), exp(t f_i) over ℚ, 𝔽₂, 𝔽₃",
        || {
            let g = model.generators();
            let dp: Vec<(DividedPowers, DividedPowers)> = (0..l)
                .map(|i| Ok((DividedPowers::new(&g.e[i])?, DividedPowers::new(&g.f[i])?)))
                .collect::<crate::error::Result<_>>()
                .map_err(err)?;
            for (i, (de, df)) in dp.iter().enumerate() {
                for t in sample_parameters() {
                    let q = &Rationals;
                    ensure(x_gen(model, i, &t, q).map_err(err)? == de.exp(&t, q), || {
                        format!("x_{}({t})", i + 1)
                    })?;
                    ensure(y_gen(model, i, &t, q).map_err(err)? == df.exp(&t, q), || {
                        format!("y_{}({t})", i + 1)
                    })?;
                }
                for p in [2u32, 3] {
                    let f = PrimeField::new(p).map_err(err)?;
                    for t in f.elements() {
                        ensure(x_gen(model, i, &t, &f).map_err(err)? == de.exp(&t, &f), || {
                            format!("x_{}({t}) mod {p}", i + 1)
                        })?;
                        ensure(y_gen(model, i, &t, &f).map_err(err)? == df.exp(&t, &f), || {
                            format!("y_{}({t}) mod {p}", i + 1)
                        })?;
                    }
                }
            }
            Ok(String::new())
        },
    );
    s.run(
        "group",
        "x_α^{−ε}(t) = x_α^ε(−t) and x_α(t) x_α(−t) = 1 over ℤ",
        || {
            let (a, b) = (
                bases[0].as_ref().map_err(Clone::clone)?,
                bases[1].as_ref().map_err(Clone::clone)?,
            );
            let t = BigInt::from(2);
            for alpha in rs.roots() {
                let x = x_alpha_gen(a, alpha, &t, &Integers).map_err(err)?;
                let xm = x_alpha_gen(a, alpha, &-t.clone(), &Integers).map_err(err)?;
                ensure(x_alpha_gen(b, alpha, &t, &Integers).map_err(err)? == xm, || {
                    format!("{alpha}")
                })?;
                ensure(x.mul_int(&xm).is_identity(&Integers), || format!("inverse at {alpha}"))?;
            }
            Ok(String::new())
        },
    );
    s.run("group", "x_{α_i}^ε(t) = x_i(ε(i) t)", || {
        let b = bases[0].as_ref().map_err(Clone::clone)?;
        let t = BigInt::from(3);
        for i in 0..l {
            let lhs = x_alpha_gen(b, &rs.simple_root(i), &t, &Integers).map_err(err)?;
            let rhs: Matrix<BigInt> = x_gen(model, i, &(&t * b.epsilon().get(i)), &Integers).map_err(err)?;
            ensure(lhs == rhs, || format!("i = {}", i + 1))?;
        }
        Ok(String::new())
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_types_pass() {
        for t in ["A1", "A2", "B2", "G2"] {
            let rs = RootSystem::from_designation(t).unwrap();
            let rep = verify(&rs, VerifyOptions::default());
            assert!(rep.passed(), "{}", rep.render_text());
        }
    }

    #[test]
    fn deterministic_output() {
        let rs = RootSystem::from_designation("B2").unwrap();
        let a = verify(&rs, VerifyOptions::default()).render_text();
        let b = verify(&rs, VerifyOptions::default()).render_text();
        assert_eq!(a, b);
    }

    #[test]
    fn g2_has_table_check() {
        let rs = RootSystem::from_designation("G2").unwrap();
        let rep = verify(&rs, VerifyOptions::default());
        assert!(rep.checks.iter().any(|c| c.area == "table"));
        let json = serde_json::to_string(&rep).unwrap();
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rep);
    }
}
