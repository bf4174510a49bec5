mod common;

use std::fs;
use std::path::{Path, PathBuf};

use steinerforge::cli::{run, EXIT_BUDGET, EXIT_NO, EXIT_USAGE, EXIT_YES};
use steinerforge::Digraph;

/// Fresh scratch directory per test.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("steinerforge-cli-{}-{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn sf(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run(std::iter::once("steinerforge").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn k4sym() -> Digraph {
    Digraph::symmetric_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

const UNSAT_CNF: &str = "p cnf 3 4\n1 2 3 0\n1 2 -3 0\n1 -2 3 0\n-1 2 3 0\n";

#[test]
fn classify_triangle() {
    let dir = scratch("classify");
    let tri = write(&dir, "triangle.dg", "n 3\na 0 1\na 1 2\na 2 0\n");
    let (code, out) = sf(&["classify", &tri]);
    assert_eq!(code, EXIT_YES);
    assert!(out.contains("tournament=true"));
    assert!(out.contains("strong=true"));
    assert!(out.contains("symmetric=false"));
}

#[test]
fn cyclepack_k4_lambda_matches_oracle() {
    let dir = scratch("k4");
    let d = k4sym();
    let f = write(&dir, "k4sym.dg", &d.serialize());
    let (code, out) = sf(&["cyclepack", &f, "--set", "0,1", "--measure", "lambda"]);
    assert_eq!(code, EXIT_YES);
    let want = common::brute_pack(&d, &[0, 1], false);
    assert_eq!(want, 3);
    assert!(out.contains(&format!("value {want}\n")), "{out}");
    assert_eq!(out.matches("cycle ").count(), want);
}

#[test]
fn cyclepack_target_miss_reports_exact_value() {
    let dir = scratch("miss");
    let f = write(&dir, "k4sym.dg", &k4sym().serialize());
    for mode in ["auto", "exact", "symmetric"] {
        let (code, out) =
            sf(&["cyclepack", &f, "--set", "0,1", "--measure", "kappa", "--at-least", "3", "--mode", mode]);
        assert_eq!(code, EXIT_NO, "{mode}");
        assert!(out.contains("value 2\n") && out.contains("target 3\n"), "{mode}: {out}");
    }
    let (code, _) = sf(&["cyclepack", &f, "--set", "0,1", "--measure", "kappa", "--at-least", "2"]);
    assert_eq!(code, EXIT_YES);
}

#[test]
fn json_mirrors_text() {
    let dir = scratch("json");
    let f =
        write(&dir, "c5.dg", &Digraph::symmetric_from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap().serialize());
    let (code, out) = sf(&["--json", "cyclepack", &f, "--set", "0,2", "--measure", "lambda"]);
    assert_eq!(code, EXIT_YES);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["mode"], "arc");
    assert_eq!(v["value"], 2);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(v["cycles"].as_array().unwrap().len(), 2);
    let (_, text) = sf(&["cyclepack", &f, "--set", "0,2", "--measure", "lambda"]);
    assert!(text.starts_with("mode arc\nvalue 2\nexhaustive true\n"));
}

#[test]
fn verify_symmetric_suite() {
    let (code, out) = sf(&["verify", "thm1c", "--samples", "100", "--seed", "7", "--max-n", "8"]);
    assert_eq!(code, EXIT_YES);
    assert!(out.contains("thm1c: 100/100 agreements, 0 disagreements, 0 timeouts"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("sample ")).count(), 100);
}

#[test]
fn reruns_are_byte_identical() {
    for suite in ["thmA-b", "thmB", "thmC", "thm1a", "thm1d", "thm1c"] {
        let args = ["verify", suite, "--samples", "20", "--seed", "5"];
        let (c1, a) = sf(&args);
        let (c2, b) = sf(&args);
        assert_eq!((c1, &a), (c2, &b), "{suite}");
        assert_eq!(c1, EXIT_YES, "{suite}: {a}");
    }
    let dir = scratch("rerun");
    let cnf = write(&dir, "one.cnf", "p cnf 3 1\n1 -2 3 0\n");
    assert_eq!(sf(&["gadget", "nae3sat", &cnf]), sf(&["gadget", "nae3sat", &cnf]));
}

#[test]
fn outforest_exit_codes_and_certificate_roundtrip() {
    let dir = scratch("outforest");
    let tri = write(&dir, "triangle.dg", "n 3\na 0 1\na 1 2\na 2 0\n");
    let (code, found) = sf(&["outforest", &tri, "--i", "1"]);
    assert_eq!(code, EXIT_YES);
    assert_eq!(sf(&["outforest", &tri, "--i", "0"]), (EXIT_NO, "none\n".into()));
    let cert = write(&dir, "forest.txt", &found);
    let (code, report) = sf(&["outforest", &tri, "--i", "1", "--certificate", &cert]);
    assert_eq!(code, EXIT_YES);
    let from_search: Vec<&str> = found.lines().filter_map(|l| l.strip_prefix("# ")).collect();
    assert_eq!(from_search, report.lines().collect::<Vec<_>>());
    // A certificate that fails the i requirement is a "no".
    let (code, _) = sf(&["outforest", &tri, "--i", "0", "--certificate", &cert]);
    assert_eq!(code, EXIT_NO);
}

#[test]
fn gadget_pipeline_agrees_with_oracle() {
    let dir = scratch("pipeline");
    for (name, body, sat) in [("sat.cnf", "p cnf 3 1\n1 -2 3 0\n", true), ("unsat.cnf", UNSAT_CNF, false)] {
        let cnf = write(&dir, name, body);
        let expect = if sat { EXIT_YES } else { EXIT_NO };
        assert_eq!(sf(&["oracle", "nae3sat", &cnf]).0, expect);
        let g = dir.join(format!("{name}.dg"));
        let g = g.to_str().unwrap();
        assert_eq!(sf(&["gadget", "nae3sat", &cnf, "-o", g]).0, EXIT_YES);
        let text = fs::read_to_string(g).unwrap();
        let threshold: String = text.lines().find_map(|l| l.strip_prefix("# threshold ")).unwrap().into();
        let (code, _) = sf(&["outforest", g, "--i", "0", "--min-arcs", &threshold]);
        assert_eq!(code, expect, "{name}");
    }
}

#[test]
fn linkage_commands() {
    let dir = scratch("linkage");
    // Bidirected 4-cycle 0-1-2-3: 0 -> 2 and 1 -> 3 cannot both be routed.
    let h = Digraph::symmetric_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let f = write(&dir, "c4.dg", &h.serialize());
    assert_eq!(sf(&["oracle", "linkage", &f, "--terminals", "0,2,1,3"]).0, EXIT_NO);
    assert_eq!(sf(&["oracle", "linkage", &f, "--terminals", "0,1,2,3"]).0, EXIT_YES);
    let (code, out) = sf(&["gadget", "linkage-kappa", &f, "--terminals", "0,2,1,3", "--k", "2", "--l", "1"]);
    assert_eq!(code, EXIT_YES);
    assert!(out.contains("# terminals "));
    let (code, out) = sf(&["gadget", "linkage-lambda", &f, "--terminals", "0,2,1,3", "--k", "2", "--l", "2"]);
    assert_eq!(code, EXIT_YES);
    assert!(out.contains("h_0^-") && out.contains("h_0^+"));
    let (code, _) = sf(&["gadget", "linkage-kappa", &f, "--terminals", "0,2,1,3", "--k", "1", "--l", "1"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn usage_and_input_errors() {
    let dir = scratch("errors");
    let tri = write(&dir, "triangle.dg", "n 3\na 0 1\na 1 2\na 2 0\n");
    let bad = write(&dir, "bad.dg", "n 2\na 0 5\n");
    let tour = write(&dir, "t.dg", "n 2\na 0 1\n");
    let missing = dir.join("missing.dg");
    let cases: Vec<Vec<&str>> = vec![
        vec!["bogus"],
        vec!["classify"],
        vec!["classify", missing.to_str().unwrap()],
        vec!["classify", &bad],
        vec!["cyclepack", &tri, "--set", "0,9", "--measure", "kappa"],
        vec!["cyclepack", &tri, "--set", "0,1", "--measure", "nope"],
        vec!["outforest", &tri, "--i", "2"],
        vec!["outforest", &tour, "--i", "0", "--min-arcs", "1", "--mode", "semicomplete"],
        vec!["kcyclic", &tri, "--k", "1"],
    ];
    for args in cases {
        assert_eq!(sf(&args).0, EXIT_USAGE, "{args:?}");
    }
    assert_eq!(sf(&["--help"]).0, EXIT_YES);
}

#[test]
fn budget_exhaustion_exits_3() {
    let dir = scratch("budget");
    let cnf = write(&dir, "unsat.cnf", UNSAT_CNF);
    let g = dir.join("u.dg");
    let g = g.to_str().unwrap();
    assert_eq!(sf(&["gadget", "nae3sat", &cnf, "-o", g]).0, EXIT_YES);
    // Unrestricted maximisation over the 40-vertex gadget takes far longer.
    assert_eq!(sf(&["--budget", "0.05", "outforest", g, "--i", "0"]).0, EXIT_BUDGET);
}
