//! Golden-file cases shared by the golden and acceptance tests.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub const CASES: &[(&str, &str, &[&str])] = &[
    (
        "abelian1_cohomology",
        "abelian1.json",
        &["cohomology", "--degrees", "0..2"],
    ),
    (
        "abelian1_ccohomology",
        "abelian1.json",
        &["ccohomology", "--degrees", "0..2"],
    ),
    ("g2_check", "g2.json", &["check"]),
    (
        "g2_check_rep",
        "g2.json",
        &["check", "--bracket", "mu", "--rep", "chi", "--action", "e1"],
    ),
    (
        "g2_compat",
        "g2.json",
        &["compat", "--rep", "chi", "--action", "zero", "--action2", "zero"],
    ),
    ("g2_cohomology", "g2.json", &["cohomology", "--degrees", "0..3"]),
    ("g2_ccohomology", "g2.json", &["ccohomology", "--degrees", "0..2"]),
    ("g2_chainmap", "g2.json", &["chainmap", "--degrees", "0..2"]),
    ("g2_nijenhuis", "g2.json", &["nijenhuis", "--operator", "M"]),
    ("g2_twist", "g2.json", &["twist", "--operator", "a", "--operator2", "b"]),
    (
        "g2_rota_baxter",
        "g2.json",
        &["rota-baxter", "--operator", "R0", "--operator2", "S"],
    ),
    (
        "g2_mc_pair",
        "g2.json",
        &["mc", "--bracket", "mu", "--bracket2", "muM", "--seed", "11"],
    ),
    ("g2_twisted_check", "g2_twisted.json", &["check"]),
    (
        "g2_twisted_cohomology",
        "g2_twisted.json",
        &["cohomology", "--degrees", "0..2"],
    ),
    ("g2_twisted_mc", "g2_twisted.json", &["mc"]),
    (
        "heisenberg_nijenhuis",
        "heisenberg.json",
        &["nijenhuis", "--operator", "N"],
    ),
    (
        "heisenberg_ccohomology",
        "heisenberg.json",
        &["ccohomology", "--degrees", "0..1"],
    ),
    ("non_jacobi_mc", "non_jacobi.json", &["mc"]),
    ("non_jacobi_check", "non_jacobi.json", &["check"]),
];

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn run(input: &str, args: &[&str]) -> (String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_bihom"))
        .arg(args[0])
        .arg(tests_dir().join("data").join(input))
        .args(&args[1..])
        .args(["--format", "machine"])
        .output()
        .expect("binary runs");
    let code = output.status.code().expect("exited normally");
    (String::from_utf8(output.stdout).expect("utf-8 output"), code)
}

/// Runs every case and returns the names whose output differs from the
/// golden file. With `bless` the golden files are rewritten instead.
pub fn golden_mismatches(bless: bool) -> Vec<&'static str> {
    let mut mismatched = Vec::new();
    for (name, input, args) in CASES {
        let (stdout, code) = run(input, args);
        assert!(code == 0 || code == 1, "{name}: exit {code}");
        assert!(
            stdout.ends_with(&format!("exit={code}\n")),
            "{name}: exit line disagrees with status"
        );
        let path = tests_dir().join("golden").join(format!("{name}.txt"));
        if bless {
            std::fs::write(&path, &stdout).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_default();
        if expected != stdout {
            eprintln!("--- {name} expected\n{expected}--- {name} actual\n{stdout}");
            mismatched.push(*name);
        }
    }
    mismatched
}
