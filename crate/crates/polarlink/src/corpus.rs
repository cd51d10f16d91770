//! JSON-lines corpus: one `{name, poly, vars, betti?, components?, expect_gamma?}` object per line.

use std::fmt::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use polarlink_core::oracle::DEFAULT_DEGREE_CAP;
use polarlink_core::parse::parse_polynomial;
use polarlink_core::polar::DEFAULT_FRAME_BOUND;

use crate::report::ReportDocument;
use crate::{run_compute, ExitStatus, RunConfig, RunError, ENGINE_VERSION, SCHEMA_VERSION};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub poly: String,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<u64>,
    /// Golden value for the full vector `(gamma^0, ..., gamma^{n+1})`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expect_gamma: Option<Vec<u64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusOptions {
    pub trials: u32,
    pub seed: u64,
    pub bound: i64,
    pub degree_cap: u32,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            trials: 5,
            seed: 0,
            bound: DEFAULT_FRAME_BOUND,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }
}

impl CorpusEntry {
    pub fn config(&self, opts: &CorpusOptions) -> RunConfig {
        RunConfig {
            poly: self.poly.clone(),
            vars: self.vars.clone(),
            trials: opts.trials,
            seed: opts.seed,
            bound: opts.bound,
            betti: self.betti.clone(),
            components: self.components,
            degree_cap: opts.degree_cap,
        }
    }
}

/// Outcome for one corpus entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryResult {
    pub name: String,
    /// `"stable"`, `"unstable"`, `"excluded"` or `"failure"`.
    pub status: String,
    pub exit_code: i32,
    pub reason: Option<String>,
    pub gamma: Option<Vec<u64>>,
    pub expect_gamma: Option<Vec<u64>>,
    pub golden_pass: Option<bool>,
    pub identity_checks: Tally,
    pub oracle_checks: Tally,
    pub report: Option<ReportDocument>,
}

impl EntryResult {
    /// True when something that should hold did not.
    pub fn audit_failed(&self) -> bool {
        self.status == "failure"
            || self.golden_pass == Some(false)
            || self.identity_checks.failed > 0
            || self.oracle_checks.failed > 0
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

impl Tally {
    fn add(&mut self, other: Tally) {
        self.passed += other.passed;
        self.failed += other.failed;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub entries: usize,
    pub stable: usize,
    pub unstable: usize,
    pub excluded: usize,
    pub failures: usize,
    pub identity_checks: Tally,
    pub oracle_checks: Tally,
    pub golden: Tally,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDocument {
    pub schema_version: u32,
    pub engine_version: String,
    pub seed: u64,
    pub entries: Vec<EntryResult>,
    pub summary: CorpusSummary,
}

#[derive(Clone, Debug)]
pub struct CorpusOutcome {
    pub document: CorpusDocument,
    pub exit: ExitStatus,
}

/// Parse a corpus. Blank lines are skipped; any malformed line is an error naming it.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, RunError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let entry: CorpusEntry = serde_json::from_str(line).map_err(|e| RunError::CorpusLine {
            line: line_no,
            message: e.to_string(),
        })?;
        let fail = |message: String| RunError::CorpusLine { line: line_no, message };
        parse_polynomial(&entry.poly, &entry.vars).map_err(|e| fail(format!("{}: {e}", entry.name)))?;
        entry
            .config(&CorpusOptions::default())
            .validate()
            .map_err(|e| fail(format!("{}: {e}", entry.name)))?;
        out.push(entry);
    }
    Ok(out)
}

pub fn read_corpus(path: &Path) -> Result<Vec<CorpusEntry>, RunError> {
    let text = std::fs::read_to_string(path).map_err(|source| RunError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_corpus(&text)
}

pub fn run_entry(entry: &CorpusEntry, opts: &CorpusOptions) -> EntryResult {
    let mut result = EntryResult {
        name: entry.name.clone(),
        status: String::new(),
        exit_code: 0,
        reason: None,
        gamma: None,
        expect_gamma: entry.expect_gamma.clone(),
        golden_pass: None,
        identity_checks: Tally::default(),
        oracle_checks: Tally::default(),
        report: None,
    };
    match run_compute(&entry.config(opts)) {
        Ok(outcome) => {
            let r = outcome.report;
            for o in &r.diagnostics.oracles {
                let tally = if o.name.starts_with("gamma_") {
                    &mut result.identity_checks
                } else {
                    &mut result.oracle_checks
                };
                if o.pass {
                    tally.passed += 1;
                } else {
                    tally.failed += 1;
                }
            }
            result.status = if outcome.exit == ExitStatus::Failure {
                "failure".into()
            } else {
                r.status.clone()
            };
            result.exit_code = outcome.exit.code();
            result.golden_pass = entry.expect_gamma.as_ref().map(|g| *g == r.gamma);
            result.gamma = Some(r.gamma.clone());
            result.report = Some(r);
        }
        Err(e) => {
            let exit = e.exit_status();
            result.status = if exit == ExitStatus::Excluded {
                "excluded"
            } else {
                "failure"
            }
            .into();
            result.exit_code = exit.code();
            result.reason = Some(e.reason());
            // an expected gamma on an input with no profile is a failed golden check
            result.golden_pass = entry.expect_gamma.as_ref().map(|_| false);
        }
    }
    result
}

/// Run every entry (in parallel) and summarize. Output order is input order.
///
/// Exits 4 when any audit fails (identity, oracle, golden value, or an engine
/// failure), 0 otherwise. Unstable and excluded entries are reported but are
/// not audit failures.
pub fn run_corpus(entries: &[CorpusEntry], opts: &CorpusOptions) -> CorpusOutcome {
    let results: Vec<EntryResult> = entries.par_iter().map(|e| run_entry(e, opts)).collect();
    let mut summary = CorpusSummary {
        entries: results.len(),
        ..CorpusSummary::default()
    };
    for r in &results {
        match r.status.as_str() {
            "stable" => summary.stable += 1,
            "unstable" => summary.unstable += 1,
            "excluded" => summary.excluded += 1,
            _ => summary.failures += 1,
        }
        summary.identity_checks.add(r.identity_checks);
        summary.oracle_checks.add(r.oracle_checks);
        match r.golden_pass {
            Some(true) => summary.golden.passed += 1,
            Some(false) => summary.golden.failed += 1,
            None => {}
        }
    }
    let exit = if results.iter().any(EntryResult::audit_failed) {
        ExitStatus::Failure
    } else {
        ExitStatus::Ok
    };
    CorpusOutcome {
        document: CorpusDocument {
            schema_version: SCHEMA_VERSION,
            engine_version: ENGINE_VERSION.into(),
            seed: opts.seed,
            entries: results,
            summary,
        },
        exit,
    }
}

impl CorpusDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("corpus document serializes");
        s.push('\n');
        s
    }

    /// One row per entry, then the totals.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(4).max(4);
        let _ = writeln!(
            out,
            "{:<width$}  {:<9} {:<16} {:<7} {:<9} oracles",
            "name", "status", "gamma", "golden", "identity"
        );
        for e in &self.entries {
            let gamma = e.gamma.as_ref().map_or("-".to_string(), |g| format!("{g:?}"));
            let golden = match e.golden_pass {
                Some(true) => "pass",
                Some(false) => "FAIL",
                None => "-",
            };
            let identity = format!(
                "{}/{}",
                e.identity_checks.passed,
                e.identity_checks.passed + e.identity_checks.failed
            );
            let oracles = format!(
                "{}/{}",
                e.oracle_checks.passed,
                e.oracle_checks.passed + e.oracle_checks.failed
            );
            let _ = write!(
                out,
                "{:<width$}  {:<9} {:<16} {:<7} {:<9} {}",
                e.name, e.status, gamma, golden, identity, oracles
            );
            if let Some(r) = &e.reason {
                let _ = write!(out, "  ({r})");
            }
            let _ = writeln!(out);
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\n{} entries: {} stable, {} unstable, {} excluded, {} failures",
            s.entries, s.stable, s.unstable, s.excluded, s.failures
        );
        let _ = writeln!(
            out,
            "identity checks {} passed / {} failed; oracle checks {} passed / {} failed; golden {} passed / {} failed",
            s.identity_checks.passed,
            s.identity_checks.failed,
            s.oracle_checks.passed,
            s.oracle_checks.failed,
            s.golden.passed,
            s.golden.failed
        );
        out
    }
}
