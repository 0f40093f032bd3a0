//! The `check`, `analyze`, `quotient` and `search` entry points.
//!
//! Each command returns an [`Outcome`] holding the exit code and the text to
//! print, so it can be driven from tests without spawning a process.
//!
//! Exit codes: `0` success, `1` the checked property fails, `2` input error,
//! `3` falsification (two characterizations that must agree did not).

use std::fs;
use std::path::Path;

use crate::error::Error;
use crate::format::parse_algebra;
use crate::report::{model_name, AnalyzeReport, CheckReport, QuotientReport, Render, SearchSummary};
use crate::search::enumerate_qw;
use crate::Gates;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PROPERTY_FAILS: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_FALSIFIED: u8 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: u8, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(e: &Error) -> Self {
        Outcome { code: exit_code(e), stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Falsified(_) => EXIT_FALSIFIED,
        _ => EXIT_INPUT,
    }
}

fn render(r: &impl Render, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => r.to_text(),
        OutputFormat::Json => r.to_json(),
    }
}

fn run(f: impl FnOnce() -> crate::Result<Outcome>) -> Outcome {
    f().unwrap_or_else(|e| Outcome::error(&e))
}

/// Axiom verdicts; exit `1` when the input is not a QW algebra.
pub fn check(source: &str, format: OutputFormat) -> Outcome {
    run(|| {
        let (name, a) = parse_algebra(source)?;
        let r = CheckReport::new(&name, &a)?;
        let code = if r.is_qw { EXIT_OK } else { EXIT_PROPERTY_FAILS };
        Ok(Outcome::ok(code, render(&r, format)))
    })
}

/// Full structural analysis; exit `1` when the input is not a QW algebra.
pub fn analyze(source: &str, format: OutputFormat, gates: &Gates) -> Outcome {
    run(|| {
        let (name, a) = parse_algebra(source)?;
        let r = AnalyzeReport::new(&name, &a, gates)?;
        let code = if r.is_qw { EXIT_OK } else { EXIT_PROPERTY_FAILS };
        Ok(Outcome::ok(code, render(&r, format)))
    })
}

/// Quotient by the deductive system listed as comma-separated names.
pub fn quotient(source: &str, ds: &str, format: OutputFormat) -> Outcome {
    run(|| {
        let (name, a) = parse_algebra(source)?;
        let f = a.subset_from_names(ds)?;
        let r = QuotientReport::new(&name, &a, &f)?;
        Ok(Outcome::ok(EXIT_OK, render(&r, format)))
    })
}

/// Enumerates models of order `n`; with `out`, writes one file per model.
pub fn search(n: usize, limit: Option<usize>, out: Option<&Path>, format: OutputFormat, gates: &Gates) -> Outcome {
    let report = match enumerate_qw(n, limit, gates) {
        Ok(r) => r,
        Err(e) => return Outcome::error(&e),
    };
    let summary = SearchSummary::new(&report);
    if let Some(dir) = out {
        let written = fs::create_dir_all(dir).and_then(|_| {
            summary
                .models
                .iter()
                .enumerate()
                .try_for_each(|(i, m)| fs::write(dir.join(format!("{}.qw", model_name(n, i))), m))
        });
        if let Err(e) = written {
            return Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {}: {e}\n", dir.display()) };
        }
    }
    Outcome::ok(EXIT_OK, render(&summary, format))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn exit_codes() {
        assert_eq!(check(catalog::ORTHOMODULAR6_SRC, OutputFormat::Text).code, EXIT_OK);
        assert_eq!(check(include_str!("../fixtures/not_be.qw"), OutputFormat::Text).code, EXIT_PROPERTY_FAILS);
        let short = check(include_str!("../fixtures/short_row.qw"), OutputFormat::Text);
        assert_eq!(short.code, EXIT_INPUT);
        assert!(short.stderr.contains("line"));
        assert_eq!(exit_code(&Error::Falsified(String::new())), EXIT_FALSIFIED);
    }

    #[test]
    fn quotient_rejects_non_ds() {
        let o = quotient(catalog::ORTHOMODULAR6_SRC, "a,1", OutputFormat::Text);
        assert_eq!(o.code, EXIT_INPUT);
        assert!(o.stderr.contains("not a deductive system"), "{}", o.stderr);
        let o = quotient(catalog::ORTHOMODULAR6_SRC, "1", OutputFormat::Text);
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("# [a] = {a}"));
    }

    #[test]
    fn search_writes_models() {
        let dir = tempfile::tempdir().unwrap();
        let o = search(4, None, Some(dir.path()), OutputFormat::Text, &Gates::default());
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.starts_with("order 4: 4 models\n"));
        let mut files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
        files.sort();
        assert_eq!(files.len(), 4);
        assert_eq!(files[0], "qw4_000.qw");
        let o = search(9, None, None, OutputFormat::Text, &Gates::default());
        assert_eq!(o.code, EXIT_INPUT);
    }
}
