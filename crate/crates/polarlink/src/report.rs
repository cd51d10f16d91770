//! The JSON report. Field names are frozen by `docs/report-schema.md`;
//! bump [`SCHEMA_VERSION`] on any change.

use serde::{Deserialize, Serialize};

use polarlink_core::link::{BoundRow, FeasibilityCheck, MorseReport, TelescopeCheck};
use polarlink_core::oracle::OracleVerdict;
use polarlink_core::polar::{FrameEvaluation, FrameOrigin, GammaProfile};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub engine_version: String,
    pub seed: u64,
    pub input: InputEcho,
    /// `"stable"` or `"unstable"`.
    pub status: String,
    pub n: usize,
    pub mult: u32,
    pub s: u32,
    pub gamma: Vec<u64>,
    pub lambda: Vec<u64>,
    pub chain_complex: Vec<ChainTerm>,
    pub morse_bounds: Vec<BoundEntry>,
    pub telescope: Vec<TelescopeEntry>,
    pub vanishing_window: Vec<usize>,
    pub euler: EulerStatement,
    pub curve_sequence: Option<CurveEntry>,
    pub feasibility: Option<FeasibilityEntry>,
    pub diagnostics: Diagnostics,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub poly: String,
    pub vars: Vec<String>,
    /// The parsed polynomial printed in canonical form.
    pub canonical: String,
    pub trials: u32,
    pub bound: i64,
    pub degree_cap: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainTerm {
    pub k: usize,
    pub rank: u64,
    /// Reduced cohomology degree of the link computed by this term.
    pub cohomology_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundTerm {
    pub index: usize,
    pub coefficient: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub family: u8,
    pub p: usize,
    pub terms: Vec<BoundTerm>,
    pub rhs: i64,
    pub text: String,
    /// Present only when Betti data was supplied.
    pub lhs_value: Option<i64>,
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TelescopeEntry {
    pub p: usize,
    pub forward: i64,
    pub forward_expected: i64,
    pub backward: i64,
    pub backward_expected: i64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerStatement {
    pub statement: String,
    pub reduced_value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveEntry {
    pub middle_ranks: [u64; 2],
    pub relation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityEntry {
    /// Always `"user-supplied"`: Betti data is a hypothesis under audit.
    pub source: String,
    pub betti: Vec<u64>,
    pub components: Option<u64>,
    pub note: String,
    pub all_pass: bool,
    pub checks: Vec<CheckEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub stable: bool,
    /// `agreement[k-1]`: trials attaining the minimum for `gamma^k`.
    pub agreement: Vec<u32>,
    pub majority: u32,
    pub frames: Vec<FrameEntry>,
    pub oracles: Vec<OracleEntry>,
    pub oracle_failures: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameEntry {
    pub trial: u32,
    pub matrix: Vec<Vec<i64>>,
    pub rejected_draws: u32,
    /// `gamma^k` for `k = 1..=n`; `null` where the frame was not generic.
    pub gamma: Vec<Option<u64>>,
    pub defects: Vec<Option<String>>,
    pub saturation_exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub name: String,
    pub expected: i64,
    pub actual: i64,
    pub pass: bool,
    pub context: String,
}

impl From<&OracleVerdict> for OracleEntry {
    fn from(v: &OracleVerdict) -> Self {
        OracleEntry {
            name: v.name.clone(),
            expected: v.expected,
            actual: v.actual,
            pass: v.pass,
            context: v.context.clone(),
        }
    }
}

impl From<&TelescopeCheck> for TelescopeEntry {
    fn from(c: &TelescopeCheck) -> Self {
        TelescopeEntry {
            p: c.p,
            forward: c.forward,
            forward_expected: c.forward_expected,
            backward: c.backward,
            backward_expected: c.backward_expected,
            pass: c.pass(),
        }
    }
}

impl From<&FeasibilityCheck> for CheckEntry {
    fn from(c: &FeasibilityCheck) -> Self {
        CheckEntry {
            name: c.name.clone(),
            pass: c.pass,
            detail: c.detail.clone(),
        }
    }
}

fn bound_entry(row: &BoundRow, betti: Option<&[u64]>) -> BoundEntry {
    let lhs_value = betti.map(|b| row.evaluate(b));
    BoundEntry {
        family: row.family.number(),
        p: row.p,
        terms: row
            .terms
            .iter()
            .map(|&(index, coefficient)| BoundTerm { index, coefficient })
            .collect(),
        rhs: row.rhs,
        text: row.to_string(),
        lhs_value,
        holds: lhs_value.map(|v| v <= row.rhs),
    }
}

fn frame_entry(trial: u32, eval: &FrameEvaluation) -> FrameEntry {
    let rejected_draws = match eval.frame.origin() {
        FrameOrigin::Sampled { rejected, .. } => rejected,
        _ => 0,
    };
    FrameEntry {
        trial,
        matrix: eval.frame.entries().to_vec(),
        rejected_draws,
        gamma: eval.trials.iter().map(|t| t.outcome.ok()).collect(),
        defects: eval
            .trials
            .iter()
            .map(|t| t.outcome.err().map(|d| d.to_string()))
            .collect(),
        saturation_exponents: eval.trials.iter().map(|t| t.saturation_exponent).collect(),
    }
}

pub(crate) fn build(
    input: InputEcho,
    seed: u64,
    profile: &GammaProfile,
    morse: &MorseReport,
    betti: Option<(&[u64], Option<u64>)>,
    oracles: &[OracleVerdict],
) -> ReportDocument {
    let n = morse.n;
    let feasibility = morse.feasibility.as_ref().map(|checks| {
        let (values, components) = betti.expect("feasibility implies Betti data");
        FeasibilityEntry {
            source: "user-supplied".into(),
            betti: values.to_vec(),
            components,
            note: "ranks only; torsion in the cohomology of the link is not checked".into(),
            all_pass: checks.iter().all(|c| c.pass),
            checks: checks.iter().map(CheckEntry::from).collect(),
        }
    });
    let betti_values = betti.map(|(v, _)| v);
    ReportDocument {
        schema_version: SCHEMA_VERSION,
        engine_version: crate::ENGINE_VERSION.into(),
        seed,
        input,
        status: if profile.stable { "stable" } else { "unstable" }.into(),
        n,
        mult: profile.mult,
        s: profile.s,
        gamma: profile.gamma.clone(),
        lambda: morse.lambda.lambda.clone(),
        chain_complex: morse
            .chain
            .ranks
            .iter()
            .zip(&morse.chain.degrees)
            .enumerate()
            .map(|(k, (&rank, &cohomology_degree))| ChainTerm {
                k,
                rank,
                cohomology_degree,
            })
            .collect(),
        morse_bounds: morse.bounds.iter().map(|r| bound_entry(r, betti_values)).collect(),
        telescope: morse.telescope.iter().map(TelescopeEntry::from).collect(),
        vanishing_window: morse.window.clone(),
        euler: EulerStatement {
            statement: "sum_k (-1)^k b~^k = -1 (the link has Euler characteristic 0)".into(),
            reduced_value: -1,
        },
        curve_sequence: morse.curve.map(|c| CurveEntry {
            middle_ranks: [c.middle.0, c.middle.1],
            relation: "b~^1 - b~^0 = 1".into(),
        }),
        feasibility,
        diagnostics: Diagnostics {
            stable: profile.stable,
            agreement: profile.agreement.clone(),
            majority: profile.trials.div_ceil(2),
            frames: profile
                .per_trial
                .iter()
                .enumerate()
                .map(|(t, e)| frame_entry(t as u32, e))
                .collect(),
            oracles: oracles.iter().map(OracleEntry::from).collect(),
            oracle_failures: oracles.iter().filter(|v| !v.pass).count(),
        },
    }
}

impl ReportDocument {
    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Every identity and oracle audit in the report passed.
    pub fn audits_pass(&self) -> bool {
        self.diagnostics.oracle_failures == 0 && self.telescope.iter().all(|t| t.pass)
    }
}

/// What gets written for inputs that produce no profile: a status and a reason, no numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDocument {
    /// `"excluded"`, `"input_error"` or `"failure"`.
    pub status: String,
    pub code: String,
    pub reason: String,
}

impl ErrorDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("error document serializes");
        s.push('\n');
        s
    }
}
