//! End-to-end tests of the command-line interface: output shapes, exit
//! codes, and byte-determinism of the JSON reports.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quiverchar"))
}

fn run(args: &[&str], dir: &std::path::Path) -> Output {
    bin().args(args).current_dir(dir).output().expect("binary runs")
}

fn tmpdir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("quiverchar-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn char_prints_character() {
    let dir = tmpdir("char");
    let out = run(&["char", "--quiver", "a2", "--module", "S 2", "--prime", "3"], &dir);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "X^(0,-1) + X^(1,-1)");

    let out = run(
        &["char", "--quiver", "a2", "--module", "I 1", "--shift", "-1", "--prime", "3"],
        &dir,
    );
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "X^(1,0)");
}

#[test]
fn gr_count_and_quiver_files() {
    let dir = tmpdir("grcount");
    std::fs::write(dir.join("a2.q"), "# linear A2\nvertices 2\narrow 1 2\n").unwrap();
    let out = run(
        &["gr-count", "--quiver", "a2.q", "--module", "P 1", "--e", "0,1", "--prime", "5"],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");

    let out = run(
        &["gr-count", "--quiver", "a2.q", "--module", "P 1", "--e", "0,0", "--prime", "5"],
        &dir,
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");
}

#[test]
fn verify_cdz_passes_and_reports_deterministically() {
    let dir = tmpdir("verify");
    let args = [
        "verify", "cdz", "--quiver", "a2", "--m", "S 1", "--n", "S 2", "--primes", "2,3,5",
        "--out", "report.json",
    ];
    let out1 = run(&args, &dir);
    assert!(out1.status.success(), "{}", String::from_utf8_lossy(&out1.stderr));
    let json1 = std::fs::read(dir.join("report.json")).unwrap();
    let out2 = run(&args, &dir);
    assert!(out2.status.success());
    let json2 = std::fs::read(dir.join("report.json")).unwrap();
    assert_eq!(json1, json2, "identical inputs must produce byte-identical JSON");
    assert_eq!(out1.stdout, out2.stdout);
    let parsed: serde_json::Value = serde_json::from_slice(&json1).unwrap();
    assert!(parsed.as_array().unwrap().iter().all(|r| r["equal"].as_bool().unwrap()));
}

#[test]
fn exit_codes_contract() {
    let dir = tmpdir("exitcodes");
    // precondition violation (Ext^1 = 0): usage error, exit 2
    let out = run(
        &["verify", "cdz", "--quiver", "a2", "--m", "S 2", "--n", "S 1", "--primes", "2"],
        &dir,
    );
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));

    // identity failure (wrong sign forced by the expert override): exit 1
    // with first-failure diagnostics
    let out = run(
        &[
            "verify", "cdz", "--quiver", "a2", "--m", "S 1", "--n", "S 2", "--primes", "3",
            "--sigma", "-1",
        ],
        &dir,
    );
    assert_eq!(out.status.code(), Some(1), "{}", String::from_utf8_lossy(&out.stderr));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("first failure"), "{err}");
    assert!(err.contains("first differing exponent vector"), "{err}");

    // malformed module file: exit 2 with a line diagnostic
    std::fs::write(dir.join("bad.mod"), "dim 1 1\nmap 1 1 1\nnotanumber\n").unwrap();
    let out = run(
        &["char", "--quiver", "a2", "--module", "bad.mod", "--prime", "3"],
        &dir,
    );
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "diagnostic must carry the line: {err}");
}

#[test]
fn calibrate_prints_and_caches() {
    let dir = tmpdir("calibrate");
    let out = run(&["calibrate", "--primes", "2,3,5"], &dir);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("sigma = 1"));
    assert!(stdout.contains("q^[M,I] - 1"));
    assert!(dir.join(".default.convention.json").exists());
}

#[test]
fn verify_all_presets() {
    let dir = tmpdir("all");
    for preset in ["a2", "kronecker"] {
        let out = run(&["verify", "all", "--quiver", preset, "--primes", "2", "--samples", "200"], &dir);
        assert!(
            out.status.success(),
            "verify all {preset}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn interp_gaussian_and_cdz() {
    let dir = tmpdir("interp");
    let out = run(
        &["interp", "--quiver", "a2", "--m", "S 1", "--n", "S 2", "--primes", "2,3,5,7,11"],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("consistent = true"));

    // Gaussian-binomial sanity via a single-vertex quiver file
    std::fs::write(dir.join("pt.q"), "vertices 1\n").unwrap();
    std::fs::write(dir.join("k2.mod"), "dim 2\n").unwrap();
    let out = run(
        &[
            "interp", "--quiver", "pt.q", "--module", "k2.mod", "--e", "1", "--primes",
            "2,3,5,7,11",
        ],
        &dir,
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("1 + q"), "expected q + 1: {stdout}");
}
