use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;

use chevalley_core::chevalley::{g2_table, render_relations, two_colorings};
use chevalley_core::export::{root_key, AdjointDoc, ChevbasisDoc, ClosureDoc, MatrixDoc, RootSystemDoc};
use chevalley_core::group::{classical_order_oracle, enumerate_group, field_generators, BfsOptions};
use chevalley_core::verify::{verify as run_suite, VerifyOptions};
use chevalley_core::{
    AdjointAlgebra, AdjointModel, ChevalleyBasis, Family, IntMatrix, PrimeField, RootSystem, SignFunction,
};

use crate::source::{load, parse_type};
use crate::{usage, Source};

/// Groups larger than this need `--allow-heavy`.
const HEAVY_GROUP_ORDER: u64 = 100_000;
/// Root systems with more positive roots than E6 need `--allow-heavy` for `verify`.
const HEAVY_POSITIVE_ROOTS: usize = 36;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Report {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisFormat {
    Text,
    Table,
    Json,
    Csv,
}

fn type_name(rs: &RootSystem) -> String {
    rs.cartan()
        .kind()
        .map(|k| k.to_string())
        .unwrap_or_else(|| "custom".into())
}

fn write_json<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn write_int_matrix(out: &mut impl Write, m: &IntMatrix, indent: &str) -> Result<()> {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|r| m.row(r).iter().map(ToString::to_string).collect())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(out, "{indent}{}", line.join(" "))?;
    }
    Ok(())
}

pub fn roots(out: &mut impl Write, source: &Source, json: bool, pairings: bool) -> Result<bool> {
    let rs = load(source)?;
    let doc = RootSystemDoc::new(&rs, pairings);
    if json {
        write_json(out, &doc)?;
        return Ok(true);
    }
    writeln!(
        out,
        "{}: rank {}, {} roots, {} positive",
        type_name(&rs),
        rs.rank(),
        rs.len(),
        rs.num_positive()
    )?;
    writeln!(out, "cartan:")?;
    for row in rs.cartan().rows() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
        writeln!(out, "  {}", cells.join(" "))?;
    }
    writeln!(out, "symmetrizer: {:?}", rs.cartan().symmetrizer())?;
    writeln!(out, "roots:")?;
    let width = rs.roots().iter().map(|r| root_key(r).len()).max().unwrap_or(0);
    for r in rs.roots() {
        writeln!(out, "  {:<width$}  ht {:>3}  {r}", root_key(r), r.height())?;
    }
    if let Some(p) = &doc.pairings {
        writeln!(out, "pairings (row b, column a: (b, a^v)):")?;
        for row in p {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(out, "  {}", cells.join(" "))?;
        }
    }
    Ok(true)
}

fn generator_matrix(model: &AdjointModel, name: &str) -> Result<IntMatrix> {
    let name = name.trim().to_ascii_lowercase();
    if name == "omega" {
        return Ok(model.omega());
    }
    let bad = || usage(format!("generator {name:?} is not e<i>, f<i>, h<i> or omega"));
    let (kind, index) = name.split_at(name.len().min(1));
    let i: usize = index.parse().map_err(|_| bad())?;
    if i == 0 || i > model.rank() {
        return Err(usage(format!("index {i} out of range 1..={}", model.rank())));
    }
    let m = match kind {
        "e" => model.e(i - 1),
        "f" => model.f(i - 1),
        "h" => model.h(i - 1),
        _ => return Err(bad()),
    };
    Ok(m?)
}

pub fn adjoint(out: &mut impl Write, source: &Source, generator: &str, json: bool) -> Result<bool> {
    let rs = load(source)?;
    let model = AdjointModel::new(&rs);
    let m = generator_matrix(&model, generator)?;
    let doc = AdjointDoc {
        type_name: type_name(&rs),
        generator: generator.trim().to_ascii_lowercase(),
        basis: model.labels(),
        matrix: MatrixDoc::from_int(&m),
    };
    if json {
        write_json(out, &doc)?;
        return Ok(true);
    }
    writeln!(
        out,
        "{} on M for {} (dimension {})",
        doc.generator,
        doc.type_name,
        model.dim()
    )?;
    writeln!(out, "basis: {}", doc.basis.join(" "))?;
    write_int_matrix(out, &m, "  ")?;
    Ok(true)
}

fn compact(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn closure(out: &mut impl Write, source: &Source, report: Report) -> Result<bool> {
    let rs = load(source)?;
    let algebra = AdjointAlgebra::build(&AdjointModel::new(&rs)).context("Lie closure")?;
    let doc = ClosureDoc::new(&rs, &algebra)?;
    if report == Report::Json {
        write_json(out, &doc)?;
        return Ok(doc.passed());
    }
    writeln!(
        out,
        "closure {}: dim {} (expected {})",
        doc.type_name, doc.dim, doc.expected_dim
    )?;
    writeln!(out, "n- {}, h {}, n+ {}", doc.dim_n_minus, doc.dim_h, doc.dim_n_plus)?;
    writeln!(out, "weights:")?;
    for w in &doc.weights {
        let weight = compact(&w.weight);
        let root = w.root.as_deref().map(compact).unwrap_or_else(|| "zero".into());
        writeln!(out, "  weight {weight:<12} root {root:<12} dim {}", w.dim)?;
    }
    writeln!(out, "checks:")?;
    for v in &doc.verdicts {
        let tag = if v.passed { "PASS" } else { "FAIL" };
        writeln!(out, "  {tag}  {}  [{}]", v.claim, v.detail)?;
    }
    Ok(doc.passed())
}

fn sign_function(rs: &RootSystem, eps: Option<&str>) -> Result<SignFunction> {
    match eps {
        Some(s) => SignFunction::parse(s, rs.cartan()).map_err(|e| usage(e.to_string())),
        None => Ok(two_colorings(rs.cartan())?.0),
    }
}

pub fn chevbasis(out: &mut impl Write, source: &Source, eps: Option<&str>, format: BasisFormat) -> Result<bool> {
    let rs = load(source)?;
    let eps = sign_function(&rs, eps)?;
    if format == BasisFormat::Table && rs.cartan().kind().map(|k| k.family) != Some(Family::G) {
        return Err(usage("the reference relation table exists for G2 only"));
    }
    let model = AdjointModel::new(&rs);
    let basis = ChevalleyBasis::build(&model, &eps)?;
    match format {
        BasisFormat::Table => {
            writeln!(out, "G2, epsilon = {eps}")?;
            write!(out, "{}", render_relations(&g2_table(&basis)?))?;
        }
        BasisFormat::Json => write_json(out, &ChevbasisDoc::new(&basis)?)?,
        BasisFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["alpha", "beta", "n"])?;
            for c in basis.structure_constants()?.entries() {
                w.write_record([root_key(&c.alpha), root_key(&c.beta), c.n.to_string()])?;
            }
            w.flush()?;
        }
        BasisFormat::Text => {
            let table = basis.structure_constants()?;
            writeln!(
                out,
                "{}, epsilon = {eps}: {} structure constants",
                type_name(&rs),
                table.len()
            )?;
            for c in table.entries() {
                let (a, b) = (rs.index_of(&c.alpha), rs.index_of(&c.beta));
                if a < b {
                    writeln!(out, "  N({}, {}) = {}", c.alpha, c.beta, c.n)?;
                }
            }
        }
    }
    Ok(true)
}

pub struct GroupRequest {
    pub kind: String,
    pub q: u32,
    pub compare: bool,
    pub cap: usize,
    pub dump: Option<PathBuf>,
    pub parallel: bool,
    pub allow_heavy: bool,
    pub json: bool,
}

#[derive(Serialize)]
struct GroupDoc {
    #[serde(rename = "type")]
    type_name: String,
    q: u32,
    dim: usize,
    generators: usize,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<String>,
}

pub fn group(out: &mut impl Write, req: &GroupRequest) -> Result<bool> {
    let kind = parse_type(&req.kind)?;
    let field = PrimeField::new(req.q).map_err(|e| usage(format!("{e}; only prime fields are supported")))?;
    let oracle = classical_order_oracle(kind, req.q as u64)?;
    if !req.allow_heavy && oracle > HEAVY_GROUP_ORDER.into() {
        return Err(usage(format!(
            "{kind}(F_{}) has {oracle} elements; pass --allow-heavy to enumerate it",
            req.q
        )));
    }
    let model = AdjointModel::new(&RootSystem::of_type(kind));
    let opts = BfsOptions {
        cap: req.cap,
        parallel: req.parallel,
    };
    let group = enumerate_group(&model, &field, opts)?;
    if let Some(path) = &req.dump {
        let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
        let mut w = BufWriter::new(file);
        group.dump(&mut w)?;
        w.flush()?;
    }
    let matches = oracle == group.order().into();
    let doc = GroupDoc {
        type_name: kind.to_string(),
        q: req.q,
        dim: group.dim(),
        generators: field_generators(&model, &field).len(),
        order: group.order(),
        oracle: req.compare.then(|| oracle.to_string()),
    };
    if req.json {
        write_json(out, &doc)?;
    } else {
        writeln!(
            out,
            "{}(F_{}): {}x{} matrices, {} generators",
            doc.type_name, doc.q, doc.dim, doc.dim, doc.generators
        )?;
        writeln!(out, "order (enumerated): {}", doc.order)?;
        if let Some(o) = &doc.oracle {
            writeln!(out, "order (formula):    {o}")?;
            writeln!(out, "{}", if matches { "match" } else { "MISMATCH" })?;
        }
    }
    if req.compare && !matches {
        eprintln!(
            "error: enumerated order {} differs from the formula {oracle}",
            group.order()
        );
        return Ok(false);
    }
    Ok(true)
}

pub fn verify(out: &mut impl Write, source: &Source, seed: u64, json: bool, allow_heavy: bool) -> Result<bool> {
    let rs = load(source)?;
    if !allow_heavy && rs.num_positive() > HEAVY_POSITIVE_ROOTS {
        return Err(usage(format!(
            "{} has {} positive roots; pass --allow-heavy to verify it",
            type_name(&rs),
            rs.num_positive()
        )));
    }
    let report = run_suite(
        &rs,
        VerifyOptions {
            seed,
            ..VerifyOptions::default()
        },
    );
    if json {
        write_json(out, &report)?;
    } else {
        write!(out, "{}", report.render_text())?;
    }
    for f in report.failures() {
        eprintln!("failed: {} / {}: {}", f.area, f.check, f.detail);
    }
    Ok(report.passed())
}
