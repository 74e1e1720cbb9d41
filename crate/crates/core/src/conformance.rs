//! Line-delimited conformance manifests.
//!
//! Each non-blank line is one JSON object:
//!
//! ```text
//! {"logic":"ltlf","input":"a U b U c","expect":"ok","canonical":"a U b U c"}
//! {"logic":"ltlf","input":"F","expect":"error","error_contains":"keyword"}
//! ```

use serde::Deserialize;
use thiserror::Error;

use crate::lexer::Logic;
use crate::printer::PrintStyle;
use crate::AnyFormula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expectation {
    Canonical(String),
    /// An error whose diagnostic contains the substring, when given.
    Error(Option<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusCase {
    pub logic: Logic,
    pub input: String,
    pub expect: Expectation,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    logic: Logic,
    input: String,
    expect: Expect,
    canonical: Option<String>,
    error_contains: Option<String>,
}

#[derive(Debug, Error)]
pub enum ManifestError {
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },
    #[error("line {line}: {message}")]
    Invalid { line: usize, message: &'static str },
}

impl CorpusCase {
    fn from_raw(raw: RawCase, line: usize) -> Result<Self, ManifestError> {
        let invalid = |message| Err(ManifestError::Invalid { line, message });
        let expect = match (raw.expect, raw.canonical, raw.error_contains) {
            (Expect::Ok, Some(c), None) => Expectation::Canonical(c),
            (Expect::Ok, None, _) => return invalid("expect=ok requires `canonical`"),
            (Expect::Ok, Some(_), Some(_)) => {
                return invalid("`error_contains` is only allowed with expect=error")
            }
            (Expect::Error, None, e) => Expectation::Error(e),
            (Expect::Error, Some(_), _) => {
                return invalid("`canonical` is only allowed with expect=ok")
            }
        };
        Ok(CorpusCase {
            logic: raw.logic,
            input: raw.input,
            expect,
        })
    }

    /// Runs the case, returning a description of the mismatch on failure.
    pub fn run(&self) -> Result<(), String> {
        let parsed = AnyFormula::parse(self.logic, &self.input);
        match (&self.expect, parsed) {
            (Expectation::Canonical(want), Ok(f)) => {
                let got = f.print(PrintStyle::Canonical).map_err(|e| e.to_string())?;
                if &got == want {
                    Ok(())
                } else {
                    Err(format!("printed {got:?}, expected {want:?}"))
                }
            }
            (Expectation::Canonical(_), Err(e)) => {
                Err(format!("expected success, got {}", e.diagnostic()))
            }
            (Expectation::Error(_), Ok(f)) => Err(format!(
                "expected an error, parsed as {:?}",
                f.print(PrintStyle::Canonical).unwrap_or_default()
            )),
            (Expectation::Error(Some(needle)), Err(e)) if !e.diagnostic().contains(needle) => {
                Err(format!("diagnostic {:?} lacks {needle:?}", e.diagnostic()))
            }
            (Expectation::Error(_), Err(_)) => Ok(()),
        }
    }
}

/// Parses a manifest. Blank lines are skipped; returned line numbers are
/// 1-based.
pub fn parse_manifest(text: &str) -> Result<Vec<(usize, CorpusCase)>, ManifestError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let line = i + 1;
            let raw: RawCase =
                serde_json::from_str(l).map_err(|source| ManifestError::Json { line, source })?;
            Ok((line, CorpusCase::from_raw(raw, line)?))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub line: usize,
    pub case: CorpusCase,
    pub outcome: Result<(), String>,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub cases: Vec<CaseReport>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.outcome.is_ok()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.cases.len()
    }

    /// `PASS k/n`.
    pub fn summary(&self) -> String {
        format!("PASS {}/{}", self.passed(), self.cases.len())
    }
}

pub fn run_manifest(text: &str) -> Result<Report, ManifestError> {
    let cases = parse_manifest(text)?
        .into_iter()
        .map(|(line, case)| CaseReport {
            outcome: case.run(),
            line,
            case,
        })
        .collect();
    Ok(Report { cases })
}
