use qwalg::commands::{self, OutputFormat};
use qwalg::{catalog, Gates};

const NOT_BE: &str = include_str!("../fixtures/not_be.qw");

fn cases() -> Vec<(&'static str, String)> {
    let g = Gates::default();
    let (om6, wl5, b4) = (catalog::ORTHOMODULAR6_SRC, catalog::WEAKLY_LINEAR5_SRC, catalog::BOOLEAN4_SRC);
    vec![
        ("om6.check.txt", commands::check(om6, OutputFormat::Text).stdout),
        ("not_be.check.txt", commands::check(NOT_BE, OutputFormat::Text).stdout),
        ("om6.analyze.txt", commands::analyze(om6, OutputFormat::Text, &g).stdout),
        ("om6.analyze.json", commands::analyze(om6, OutputFormat::Json, &g).stdout),
        ("wl5.analyze.txt", commands::analyze(wl5, OutputFormat::Text, &g).stdout),
        ("wl5.analyze.json", commands::analyze(wl5, OutputFormat::Json, &g).stdout),
        ("boolean4.quotient.txt", commands::quotient(b4, "a,1", OutputFormat::Text).stdout),
        ("search4.txt", commands::search(4, None, None, OutputFormat::Text, &g).stdout),
    ]
}

fn golden(name: &str) -> String {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn reports_match_golden_files() {
    for (name, out) in cases() {
        assert_eq!(out, golden(name), "{name}");
    }
}

#[test]
fn reports_are_reproducible() {
    assert_eq!(cases(), cases());
}

#[test]
fn json_reports_parse() {
    for (name, out) in cases() {
        if name.ends_with(".json") {
            let v: serde_json::Value = serde_json::from_str(&out).unwrap();
            assert_eq!(v["report_version"], 1);
        }
    }
}
