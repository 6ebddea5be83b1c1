//! Benchmarks live in `benches/`; run them with `cargo bench -p chevalley-bench`.
//! Shared fixtures sit here so that each bench target stays short.

use chevalley_core::chevalley::two_colorings;
use chevalley_core::{AdjointModel, SignFunction};

/// Types small enough to bench every stage on.
pub const TYPES: [&str; 5] = ["A3", "B3", "G2", "D4", "F4"];

pub fn model_and_sign(designation: &str) -> (AdjointModel, SignFunction) {
    let model = AdjointModel::from_designation(designation).expect("known type");
    let (eps, _) = two_colorings(model.root_system().cartan()).expect("Dynkin diagrams are trees");
    (model, eps)
}
