//! Machine-format reports compared byte for byte against `tests/golden`.
//! Run with `BLESS=1` to rewrite the golden files.

mod common;

use common::{golden_mismatches, run, CASES};

#[test]
fn machine_reports_match_golden_files() {
    let mismatched = golden_mismatches(std::env::var_os("BLESS").is_some());
    assert!(mismatched.is_empty(), "golden mismatches: {mismatched:?}");
}

#[test]
fn every_machine_line_is_key_value() {
    for (name, input, args) in CASES {
        let (stdout, _) = run(input, args);
        for line in stdout.lines() {
            let fields: Vec<&str> = line.split(' ').collect();
            let records = if matches!(fields[0], "verdict" | "witness" | "table" | "value") {
                &fields[1..]
            } else {
                &fields[..]
            };
            assert!(records.iter().all(|f| f.contains('=')), "{name}: {line}");
            if fields[0] == "verdict" || fields[0] == "table" {
                assert!(line.contains(" ref="), "{name}: {line}");
            }
        }
    }
}
