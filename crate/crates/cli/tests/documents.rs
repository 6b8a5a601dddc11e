use std::path::Path;
use std::process::Command;

use bihom_cli::{parse_input, parse_str, CliError};

fn data(name: &str) -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

#[test]
fn canonical_documents_round_trip() {
    for name in [
        "abelian1.json",
        "g2.json",
        "g2_twisted.json",
        "heisenberg.json",
        "non_jacobi.json",
    ] {
        let doc = parse_input(&data(name)).unwrap();
        let again = parse_str(&doc.to_json()).unwrap();
        assert_eq!(again, doc, "{name}");
        assert_eq!(again.to_json(), doc.to_json(), "{name}");
    }
}

#[test]
fn field_errors_name_the_path() {
    let text = std::fs::read_to_string(data("g2.json")).unwrap();
    let bad = text.replacen(r#""-1""#, r#""1/x""#, 1);
    match parse_str(&bad) {
        Err(CliError::MalformedRational { path, text }) => {
            assert_eq!(text, "1/x");
            assert!(path.starts_with("brackets[0].c"), "{path}");
        }
        other => panic!("unexpected {other:?}"),
    }
    let bad = text.replacen(r#""dimV": 1"#, r#""dimV": 2"#, 1);
    match parse_str(&bad) {
        Err(CliError::Field { path, .. }) => assert_eq!(path, "representations[0].alphaV"),
        other => panic!("unexpected {other:?}"),
    }
}

fn status(args: &[&str]) -> i32 {
    Command::new(env!("CARGO_BIN_EXE_bihom"))
        .args(args)
        .output()
        .expect("binary runs")
        .status
        .code()
        .unwrap()
}

#[test]
fn exit_codes() {
    let g2 = data("g2.json");
    let g2 = g2.to_str().unwrap();
    assert_eq!(status(&["check", g2]), 0);
    assert_eq!(status(&["mc", data("non_jacobi.json").to_str().unwrap()]), 1);
    assert_eq!(status(&["frobnicate", g2]), 2);
    assert_eq!(status(&["check", g2, "--bracket", "nope"]), 2);
    assert_eq!(status(&["cohomology", g2, "--degrees", "3..1"]), 2);
    assert_eq!(status(&["check", "/nonexistent/doc.json"]), 2);
}
