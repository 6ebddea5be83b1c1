use std::fs;

use anyhow::Result;
use serde::Deserialize;

use chevalley_core::{CartanMatrix, CartanType, Family, RootSystem};

use crate::{usage, Source};

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCartan {
    Bare(Vec<Vec<i64>>),
    Wrapped { cartan: Vec<Vec<i64>> },
}

pub fn parse_type(s: &str) -> Result<CartanType> {
    s.parse().map_err(|e| usage(format!("{e}")))
}

/// The standard type whose tabulated matrix equals `rows`, if any.
fn identify(rows: &[Vec<i64>]) -> Option<CartanType> {
    let l = rows.len();
    [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ]
    .into_iter()
    .filter_map(|f| CartanType::new(f, l).ok())
    .find(|k| k.cartan_matrix().rows() == rows)
}

pub fn load(source: &Source) -> Result<RootSystem> {
    if let Some(kind) = &source.kind {
        return Ok(RootSystem::of_type(parse_type(kind)?));
    }
    let path = source.raw.as_ref().expect("clap requires --type or --raw");
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let rows = match serde_json::from_str::<RawCartan>(&text) {
        Ok(RawCartan::Bare(rows)) | Ok(RawCartan::Wrapped { cartan: rows }) => rows,
        Err(_) => return Err(usage(format!("{} does not hold a JSON integer matrix", path.display()))),
    };
    let mut cartan = CartanMatrix::from_rows(rows).map_err(|e| usage(e.to_string()))?;
    if let Some(kind) = identify(cartan.rows()) {
        cartan = cartan.with_kind(kind);
    }
    RootSystem::generate(&cartan).map_err(|e| usage(e.to_string()))
}
