use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use chevalley_core::export::{AdjointDoc, ChevbasisDoc, ClosureDoc, RootSystemDoc};
use chevalley_core::{AdjointModel, ChevalleyBasis, RootSystem, SignFunction};

fn chevalley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chevalley"))
        .args(args)
        .env_remove("CHEVALLEY_BFS_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = chevalley(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn code(args: &[&str]) -> Option<i32> {
    chevalley(args).status.code()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).unwrap();
    path
}

#[test]
fn golden_roots() {
    assert_eq!(
        stdout(&["roots", "--type", "G2", "--json", "--pairings"]),
        golden("roots_g2.json")
    );
}

#[test]
fn golden_adjoint() {
    assert_eq!(
        stdout(&["adjoint", "--type", "G2", "--gen", "e1", "--json"]),
        golden("adjoint_g2_e1.json")
    );
}

#[test]
fn golden_closure() {
    assert_eq!(
        stdout(&["closure", "--type", "G2", "--report", "json"]),
        golden("closure_g2.json")
    );
}

#[test]
fn golden_chevbasis() {
    assert_eq!(
        stdout(&["chevbasis", "--type", "G2", "--eps", "+-", "--table"]),
        golden("chevbasis_g2_table.txt")
    );
    assert_eq!(
        stdout(&["chevbasis", "--type", "G2", "--eps", "+-", "--json"]),
        golden("chevbasis_g2.json")
    );
}

#[test]
fn golden_group() {
    assert_eq!(
        stdout(&["group", "--type", "G2", "--q", "2", "--order"]),
        golden("group_g2_q2.txt")
    );
}

#[test]
fn golden_verify() {
    assert_eq!(stdout(&["verify", "--type", "G2"]), golden("verify_g2.txt"));
}

#[test]
fn table_rendering_has_expected_lines() {
    let text = stdout(&["chevbasis", "--type", "G2", "--eps", "+-", "--table"]);
    assert!(text.contains("[e(a2), e(a1+2a2)] = -3 e(a1+3a2)\n"));
    assert!(text.contains("[e(2a1+3a2), e(-a1-3a2)] = e(a1)\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with('[')).count(), 15);
}

#[test]
fn verify_is_deterministic() {
    for t in ["A3", "B2"] {
        let a = chevalley(&["verify", "--type", t, "--json"]);
        let b = chevalley(&["verify", "--type", t, "--json"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    let seeded = stdout(&["verify", "--type", "A2", "--seed", "7"]);
    assert!(seeded.starts_with("verify A2 (seed 7)\n"));
    assert!(seeded.ends_with("0 failed\n"));
}

#[test]
fn roots_json_round_trips() {
    let doc: RootSystemDoc = serde_json::from_str(&stdout(&["roots", "--type", "F4", "--json"])).unwrap();
    let rs = doc.to_root_system().unwrap();
    assert_eq!(rs.roots(), RootSystem::from_designation("F4").unwrap().roots());
    assert_eq!(doc.roots.len(), 48);
    assert!(doc.pairings.is_none());
}

#[test]
fn adjoint_json_matches_library() {
    let model = AdjointModel::from_designation("B3").unwrap();
    for (g, expected) in [
        ("e2", model.e(1).unwrap()),
        ("f3", model.f(2).unwrap()),
        ("omega", model.omega()),
    ] {
        let doc: AdjointDoc =
            serde_json::from_str(&stdout(&["adjoint", "--type", "B3", "--gen", g, "--json"])).unwrap();
        assert_eq!(doc.matrix.to_int().unwrap(), expected);
        assert_eq!(doc.basis, model.labels());
    }
}

#[test]
fn chevbasis_json_matches_library_for_both_signs() {
    let model = AdjointModel::from_designation("C3").unwrap();
    for eps in ["+-+", "-+-"] {
        let text = stdout(&["chevbasis", "--type", "C3", "--eps", eps, "--json"]);
        let doc: ChevbasisDoc = serde_json::from_str(&text).unwrap();
        let sign = SignFunction::parse(eps, model.root_system().cartan()).unwrap();
        let expected = ChevbasisDoc::new(&ChevalleyBasis::build(&model, &sign).unwrap()).unwrap();
        assert_eq!(doc, expected);
    }
}

#[test]
fn chevbasis_csv_lists_every_constant() {
    let text = stdout(&["chevbasis", "--type", "G2", "--csv"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("alpha,beta,n"));
    assert_eq!(lines.count(), 60);
    assert!(text.contains("\"[0,1]\",\"[1,2]\",-3\n"));
}

#[test]
fn closure_report_passes_for_small_types() {
    for t in ["A1", "B3", "D4"] {
        let doc: ClosureDoc = serde_json::from_str(&stdout(&["closure", "--type", t, "--report", "json"])).unwrap();
        assert!(doc.passed(), "{t}");
        assert_eq!(doc.dim, doc.expected_dim);
    }
}

#[test]
fn raw_cartan_file_agrees_with_type() {
    let dir = tempfile::tempdir().unwrap();
    let bare = write_temp(&dir, "a2.json", "[[2,-1],[-1,2]]");
    let wrapped = write_temp(&dir, "c2.json", r#"{"cartan": [[2,-2],[-1,2]]}"#);
    let bare = bare.to_str().unwrap();
    assert_eq!(
        stdout(&["roots", "--raw", bare, "--json"]),
        stdout(&["roots", "--type", "A2", "--json"])
    );
    let out = stdout(&["roots", "--raw", wrapped.to_str().unwrap()]);
    assert!(out.starts_with("C2: rank 2, 8 roots"), "{out}");
    assert!(stdout(&["verify", "--raw", bare]).ends_with("0 failed\n"));
}

#[test]
fn unknown_matrix_is_reported_as_custom() {
    let dir = tempfile::tempdir().unwrap();
    // A3 with its nodes relabelled so that the tabulated matrix does not match.
    let path = write_temp(&dir, "a3.json", "[[2,0,-1],[0,2,-1],[-1,-1,2]]");
    let out = stdout(&["roots", "--raw", path.to_str().unwrap()]);
    assert!(out.starts_with("custom: rank 3, 12 roots"), "{out}");
}

#[test]
fn group_dump_has_header_and_all_elements() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a1.bin");
    stdout(&["group", "--type", "A1", "--q", "3", "--dump", path.to_str().unwrap()]);
    let bytes = fs::read(&path).unwrap();
    assert_eq!(&bytes[..4], b"CHVG");
    assert_eq!(u32::from_le_bytes(bytes[4..8].try_into().unwrap()), 3);
    assert_eq!(u32::from_le_bytes(bytes[8..12].try_into().unwrap()), 3);
    assert_eq!(u64::from_le_bytes(bytes[12..20].try_into().unwrap()), 12);
    assert_eq!(bytes.len(), 20 + 12 * 9);
}

#[test]
fn group_orders_and_json() {
    let text = stdout(&["group", "--type", "B2", "--q", "2", "--order", "--parallel"]);
    assert!(text.contains("order (enumerated): 720\n"));
    assert!(text.contains("order (formula):    720\n"));
    let doc: serde_json::Value =
        serde_json::from_str(&stdout(&["group", "--type", "A2", "--q", "3", "--order", "--json"])).unwrap();
    assert_eq!(doc["order"], 5616);
    assert_eq!(doc["oracle"], "5616");
}

#[test]
fn group_cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_chevalley"))
        .args(["group", "--type", "A2", "--q", "2"])
        .env("CHEVALLEY_BFS_CAP", "50")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeded cap"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let not_matrix = write_temp(&dir, "not-a-matrix.json", r#"{"rows": "two"}"#);
    let not_cartan = write_temp(&dir, "bad.json", "[[2,1],[1,2]]");
    let affine = write_temp(&dir, "affine.json", "[[2,-2],[-2,2]]");
    let missing = dir.path().join("missing.json");
    for p in [&not_matrix, &not_cartan, &affine, &missing] {
        assert_eq!(
            code(&["roots", "--raw", p.to_str().unwrap()]),
            Some(2),
            "{}",
            p.display()
        );
    }
    assert_eq!(code(&["roots"]), Some(2));
    assert_eq!(
        code(&["roots", "--type", "G2", "--raw", not_matrix.to_str().unwrap()]),
        Some(2)
    );
    assert_eq!(code(&["roots", "--type", "H3"]), Some(2));
    assert_eq!(code(&["adjoint", "--type", "A2", "--gen", "e3"]), Some(2));
    assert_eq!(code(&["adjoint", "--type", "A2", "--gen", "x1"]), Some(2));
    assert_eq!(code(&["chevbasis", "--type", "G2", "--eps", "++"]), Some(2));
    assert_eq!(code(&["chevbasis", "--type", "A2", "--table"]), Some(2));
    assert_eq!(code(&["chevbasis", "--type", "G2", "--table", "--json"]), Some(2));
    assert_eq!(code(&["group", "--type", "A1", "--q", "4"]), Some(2));
    assert_eq!(code(&["group", "--type", "G2", "--q", "3"]), Some(2));
    assert_eq!(code(&["verify", "--type", "E8"]), Some(2));
    assert_eq!(code(&["frobnicate"]), Some(2));
}
