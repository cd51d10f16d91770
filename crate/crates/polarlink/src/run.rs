use rayon::prelude::*;

use polarlink_core::link::morse_report;
use polarlink_core::oracle::{audit_header, audit_trial, AuditConfig};
use polarlink_core::parse::parse_polynomial;
use polarlink_core::polar::{self, evaluate_frame, CoordinateFrame, GammaProfile};
use polarlink_core::Polynomial;

use crate::report::{self, InputEcho, ReportDocument};
use crate::{ExitStatus, RunConfig, RunError};

/// A finished report and the exit status it implies.
#[derive(Clone, Debug)]
pub struct ComputeOutcome {
    pub report: ReportDocument,
    pub exit: ExitStatus,
}

/// Parse, sample frames, compute the profile, derive bounds, audit, and assemble the report.
///
/// Exit status 0 for a stable profile whose audits pass, 2 for an unstable
/// one, 4 when an audit fails. Errors carry their own status via
/// [`RunError::exit_status`].
pub fn run_compute(cfg: &RunConfig) -> Result<ComputeOutcome, RunError> {
    cfg.validate()?;
    let f = parse_polynomial(&cfg.poly, &cfg.vars)?;
    let profile = compute_profile(&f, cfg)?;
    let betti = cfg.betti_vector();
    let morse = morse_report(&profile.gamma, profile.mult, profile.s, betti.as_ref())?;
    let audit = AuditConfig {
        degree_cap: cfg.degree_cap,
        ..AuditConfig::default()
    };
    let mut oracles = audit_header(&f, &profile, &audit);
    let per_trial: Vec<_> = (0..profile.per_trial.len())
        .into_par_iter()
        .map(|t| audit_trial(&f, &profile, t, &audit))
        .collect();
    oracles.extend(per_trial.into_iter().flatten());
    let input = InputEcho {
        poly: cfg.poly.clone(),
        vars: cfg.vars.clone(),
        canonical: f.display(&cfg.vars).to_string(),
        trials: cfg.trials,
        bound: cfg.bound,
        degree_cap: cfg.degree_cap,
    };
    let report = report::build(
        input,
        cfg.seed,
        &profile,
        &morse,
        betti.as_ref().map(|b| (b.values.as_slice(), b.components)),
        &oracles,
    );
    let exit = if !report.audits_pass() {
        ExitStatus::Failure
    } else if !profile.stable {
        ExitStatus::Unstable
    } else {
        ExitStatus::Ok
    };
    Ok(ComputeOutcome { report, exit })
}

/// The gamma profile with frames evaluated in parallel, in trial order.
pub fn compute_profile(f: &Polynomial, cfg: &RunConfig) -> Result<GammaProfile, RunError> {
    polar::check_standing_assumptions(f)?;
    let s = polar::critical_dimension(f)?;
    let frames: Vec<CoordinateFrame> = cfg.sampling().frames(f.nvars()).collect();
    let per_trial = frames
        .par_iter()
        .map(|frame| evaluate_frame(f, frame))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GammaProfile::from_evaluations(f, s, per_trial)?)
}
