use std::io::Write as _;
use std::path::Path;
use std::process::Command;

use cluster_unfold::cli::{run_from_args, EXIT_OK, EXIT_USAGE, EXIT_VIOLATED};
use cluster_unfold::FramedSeed;
use tempfile::NamedTempFile;

const RANK4: &str = "4\n0 -1 0 -1\n3 0 -1 0\n0 5 0 -2\n1 0 3 0\n";

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let code = run_from_args(std::iter::once("cluster-unfold").chain(args.iter().copied()), &mut out);
    (code, String::from_utf8(out).unwrap())
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn mgs_reports_the_source_sequence() {
    let f = file(RANK4);
    let (code, out) = run(&["mgs", path(&f)]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("sequence: 1,2,3,4"), "{out}");
    assert!(out.contains("maximal: true"), "{out}");
    let (code, out) = run(&["mgs", path(&f), "--brute-force"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("source sequence found: true"), "{out}");
}

#[test]
fn classify_flags_non_sign_skew_input() {
    let f = file("2\n0 1\n0 0\n");
    let (code, out) = run(&["classify", path(&f)]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sign-skew-symmetric: false"), "{out}");
    let (code, out) = run(&["--json", "classify", path(&f)]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["sign_skew_symmetric"], false);
}

#[test]
fn zero_depth_is_a_usage_error() {
    let f = file(RANK4);
    assert_eq!(run(&["coherence", path(&f), "--depth", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["unfold", path(&f), "--m", "0"]).0, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(run(&["classify", "/nonexistent/matrix.txt"]).0, EXIT_USAGE);
    assert_eq!(run(&["--help"]).0, EXIT_OK);
}

#[test]
fn malformed_matrices_are_rejected() {
    for text in ["2\n0 1\n-1\n", "2\n0 x\n-1 0\n", "3\n0 1\n-1 0\n", ""] {
        let f = file(text);
        let (code, out) = run(&["classify", path(&f)]);
        assert_eq!(code, EXIT_USAGE, "{text:?}: {out}");
        assert!(out.starts_with("error:"), "{out}");
    }
}

#[test]
fn mutate_json_round_trips() {
    let f = file(RANK4);
    let (code, out) = run(&["--json", "mutate", path(&f), "--seq", "1,2,3"]);
    assert_eq!(code, EXIT_OK);
    let seed = FramedSeed::from_document(&out).unwrap();
    let expected = FramedSeed::extend(&cluster_unfold::samples::rank4_acyclic())
        .unwrap()
        .apply_sequence(&[1, 2, 3].into())
        .unwrap();
    assert_eq!(seed, expected);

    // the document is itself valid input, and mutating back restores (B, I)
    let g = file(&out);
    let (code, back) = run(&["--json", "mutate", path(&g), "--seq", "3,2,1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        FramedSeed::from_document(&back).unwrap(),
        FramedSeed::extend(&cluster_unfold::samples::rank4_acyclic()).unwrap()
    );
    assert_eq!(run(&["mutate", path(&f), "--seq", "5"]).0, EXIT_USAGE);
}

#[test]
fn searches_report_verdicts() {
    let f = file(RANK4);
    let (code, out) = run(&["coherence", path(&f), "--depth", "4"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, out) = run(&["total-mutability", path(&f), "--depth", "4"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("up to depth 4: true"), "{out}");

    // the first mutation already breaks sign-skew-symmetry here
    let g = file("3\n0 1 1\n-1 0 1\n-1 -1 0\n");
    let (code, _) = run(&["total-mutability", path(&g), "--depth", "2"]);
    assert_eq!(code, EXIT_OK);
    let g = file("3\n0 2 -1\n-1 0 1\n1 -1 0\n");
    let (code, out) = run(&["total-mutability", path(&g), "--depth", "2"]);
    assert_eq!(code, EXIT_VIOLATED, "{out}");
    assert!(out.contains("counterexample:"), "{out}");
}

#[test]
fn unfold_and_verify() {
    let f = file(RANK4);
    let (code, out) = run(&["unfold", path(&f), "--m", "4", "--framed"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("folds back to B: true"), "{out}");
    let (code, out) = run(&["unfold", path(&f), "--m", "2", "--dot", "-"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("digraph unfolding {"), "{out}");

    let (code, out) = run(&["verify-unfolding", path(&f), "--seq", "1,2,3", "--m", "8"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("commutes: true"), "{out}");
    let (code, out) = run(&["verify-unfolding", path(&f), "--seq", "1,2,3", "--m", "5"]);
    assert_eq!(code, EXIT_USAGE, "{out}");
}

#[test]
fn output_is_deterministic() {
    let f = file(RANK4);
    for args in [
        &["mgs", path(&f), "--brute-force"][..],
        &["--json", "mutate", path(&f), "-s", "2,4,1"],
        &["unfold", path(&f), "--m", "3", "--dot", "-"],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn binary_exit_codes() {
    let bin = Path::new(env!("CARGO_BIN_EXE_cluster-unfold"));
    let f = file(RANK4);
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["mgs", path(&f)]);
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("maximal: true"));
    assert_eq!(status(&["coherence", path(&f), "--depth", "0"]).status.code(), Some(EXIT_USAGE));
    let cyclic = file("3\n0 1 -1\n-1 0 1\n1 -1 0\n");
    // no source ordering exists, so the precondition of `mgs` fails
    assert_eq!(status(&["mgs", path(&cyclic)]).status.code(), Some(EXIT_USAGE));
}
