//! Exact construction of simple Lie algebras and their adjoint Chevalley
//! groups from a Cartan matrix.
//!
//! The pipeline runs bottom-up:
//!
//! * [`rootsystem`]: validate a Cartan matrix and generate its roots, root
//!   strings and Weyl words.
//! * [`adjoint`]: the integer matrices of `e_i`, `f_i`, `h_i` and `ω` on the
//!   canonical model `M` of the adjoint representation.
//! * [`closure`]: the Lie algebra they generate, its root-space and
//!   triangular decompositions, and irreducibility witnesses for `M`.
//! * [`chevalley`]: sign-canonical Chevalley bases and structure constants.
//! * [`group`]: exponentials of nilpotent integral matrices and adjoint
//!   Chevalley groups over commutative rings.
//! * [`verify`]: every invariant above as a named, deterministic check table.
//! * [`export`]: JSON document types.
//!
//! All arithmetic is exact; see [`ring`].

pub mod adjoint;
pub mod chevalley;
pub mod closure;
pub mod error;
pub mod export;
pub mod group;
pub mod matrix;
pub mod ring;
pub mod rootsystem;
pub mod verify;

pub use adjoint::{AdjointModel, BasisIndex};
pub use chevalley::{ChevalleyBasis, SignFunction, StructureConstant, StructureConstantTable};
pub use closure::{AdjointAlgebra, MatrixSpan, WeightLabel};
pub use error::{Error, Result};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use ring::{GaussianIntegers, Integers, PrimeField, Rationals, Ring, RingElem, RingSpec};
pub use rootsystem::{CartanMatrix, CartanType, Family, Root, RootStringData, RootSystem};
