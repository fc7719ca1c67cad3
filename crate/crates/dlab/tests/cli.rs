use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dlab::formats::{format_dimacs, parse_coloring, parse_dimacs, read_pointset, write_pointset};
use dlab_core::constructions::{make_convex, make_double_chain};
use dlab_core::exact::is_proper_assignment;
use dlab_core::geometry::PointSet;
use dlab_core::graph::build_disjointness;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn scratch(name: &str) -> PathBuf {
    let d = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli").join(name);
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn dlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dlab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn random_point_sets_round_trip_through_files() {
    let dir = scratch("roundtrip");
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..50 {
        let n = rng.gen_range(1..=20);
        let coords: Vec<(i64, i64)> = (0..n).map(|i| (rng.gen_range(-1 << 30..=1 << 30), i)).collect();
        let ps = PointSet::from_coords(&coords).unwrap();
        let file = dir.join(format!("p{k}.pts"));
        write_pointset(&ps, &file).unwrap();
        assert_eq!(read_pointset(&file).unwrap(), ps);
    }
}

#[test]
fn gen_then_chi_writes_a_verifiable_certificate() {
    let dir = scratch("chi");
    let pts = dir.join("c7.pts");
    let cert = dir.join("c7.cert");
    let cnf = dir.join("c7.cnf");
    assert!(dlab(&["gen", "convex", "--n", "7", "-o", path(&pts)]).status.success());
    assert_eq!(read_pointset(&pts).unwrap(), make_convex(7).unwrap());
    let out = dlab(&["chi", path(&pts), "--cert-out", path(&cert), "--cnf-out", path(&cnf)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("chi = 4"), "{}", stdout(&out));
    let g = build_disjointness(&make_convex(7).unwrap()).unwrap();
    let (colors, evidence) = parse_coloring(&g, &std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert!(is_proper_assignment(g.graph(), &colors));
    assert_eq!(colors.iter().max(), Some(&3));
    assert!(evidence.unwrap().starts_with("evidence "));
    let header = std::fs::read_to_string(&cnf).unwrap();
    // 21 segments, 3 colors
    assert!(header.lines().any(|l| l.starts_with("p cnf 63 ")));
}

#[test]
fn gen_double_chain_matches_constructor() {
    let dir = scratch("dchain");
    let pts = dir.join("d.pts");
    assert!(dlab(&["gen", "dchain", "--k", "3", "--l", "4", "-o", path(&pts)]).status.success());
    assert_eq!(read_pointset(&pts).unwrap(), make_double_chain(3, 4).unwrap());
}

#[test]
fn dimacs_round_trip_of_a_disjointness_graph() {
    let g = build_disjointness(&make_double_chain(3, 3).unwrap()).unwrap();
    let back = parse_dimacs(&format_dimacs(g.graph())).unwrap();
    assert_eq!(&back, g.graph());
}

#[test]
fn verify_prop_6_exits_zero() {
    let out = dlab(&["verify", "prop", "--id", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS"));
}

#[test]
fn verify_lemma_with_sample_uses_canonical_x() {
    let out = dlab(&["verify", "lemma", "--id", "18", "--sample", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("5 of"));
}

#[test]
fn missing_data_file_is_an_error_exit() {
    let out = Command::new(env!("CARGO_BIN_EXE_dlab"))
        .args(["verify", "prop", "--id", "10"])
        .env(dlab::data::DATA_ENV, "/nonexistent/x16.pts")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_lemma_is_an_error_exit() {
    assert_eq!(dlab(&["verify", "lemma", "--id", "12"]).status.code(), Some(2));
}

#[test]
fn bounds_table_is_consistent() {
    let out = dlab(&["bounds", "--n", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 38);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert!(text.contains("base 2"));
}

#[test]
fn search_x_writes_file_and_trace() {
    let dir = scratch("search");
    let (out_file, trace) = (dir.join("x.pts"), dir.join("trace.txt"));
    let out = dlab(&["search-x", "--seed", "1", "--budget", "5000", "-o", path(&out_file), "--trace", path(&trace)]);
    assert!(out.status.success());
    let canonical = std::fs::read_to_string(dlab::data::canonical_x_path()).unwrap();
    let written = std::fs::read_to_string(&out_file).unwrap();
    // The header records the budget actually needed, so the files match exactly.
    assert_eq!(written, canonical);
    let lines = std::fs::read_to_string(&trace).unwrap();
    assert!(lines.lines().last().unwrap().ends_with("accept -"));
}

#[test]
fn search_x_failure_exits_one() {
    let dir = scratch("search-fail");
    let out = dlab(&["search-x", "--seed", "1", "--budget", "2", "-o", path(&dir.join("x.pts"))]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!dir.join("x.pts").exists());
}

#[test]
fn report_writes_one_json_object_per_line() {
    let dir = scratch("report");
    let file = dir.join("r.jsonl");
    let out = dlab(&["--budget", "200000", "report", "-o", path(&file)]);
    assert!(matches!(out.status.code(), Some(0 | 1)));
    let text = std::fs::read_to_string(&file).unwrap();
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("verdict").is_some() && v.get("wall").is_none());
    }
    assert!(text.lines().count() > 40);
}
