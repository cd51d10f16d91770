use polarlink_core::link::BettiVector;
use polarlink_core::oracle::DEFAULT_DEGREE_CAP;
use polarlink_core::parse::validate_variables;
use polarlink_core::polar::{SamplingConfig, DEFAULT_FRAME_BOUND};

use crate::RunError;

/// Environment variable overriding the truncated oracle's degree cap.
pub const DEGREE_CAP_ENV: &str = "POLARLINK_MAX_DEGREE";

/// Everything `compute` needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub poly: String,
    pub vars: Vec<String>,
    pub trials: u32,
    pub seed: u64,
    pub bound: i64,
    pub betti: Option<Vec<u64>>,
    pub components: Option<u64>,
    pub degree_cap: u32,
}

impl RunConfig {
    pub fn new(poly: impl Into<String>, vars: &[&str]) -> Self {
        RunConfig {
            poly: poly.into(),
            vars: vars.iter().map(|v| v.to_string()).collect(),
            trials: 5,
            seed: 0,
            bound: DEFAULT_FRAME_BOUND,
            betti: None,
            components: None,
            degree_cap: DEFAULT_DEGREE_CAP,
        }
    }

    pub fn validate(&self) -> Result<(), RunError> {
        if self.trials < 1 {
            return Err(RunError::Config("trials must be at least 1".into()));
        }
        if self.bound < 1 {
            return Err(RunError::Config("frame bound must be at least 1".into()));
        }
        if self.degree_cap < 1 {
            return Err(RunError::Config("degree cap must be at least 1".into()));
        }
        validate_variables(&self.vars)?;
        if self.vars.len() < 2 {
            return Err(RunError::Config(format!(
                "need at least 2 variables, got {}",
                self.vars.len()
            )));
        }
        if let Some(b) = &self.betti {
            let expected = 2 * (self.vars.len() - 1);
            if b.len() != expected {
                return Err(RunError::Config(format!(
                    "Betti vector must have {expected} entries b~^0..b~^{}, got {}",
                    expected - 1,
                    b.len()
                )));
            }
        }
        if self.components.is_some() && self.betti.is_none() {
            return Err(RunError::Config("--components needs --betti".into()));
        }
        Ok(())
    }

    pub fn sampling(&self) -> SamplingConfig {
        SamplingConfig {
            trials: self.trials,
            seed: self.seed,
            bound: self.bound,
        }
    }

    pub fn betti_vector(&self) -> Option<BettiVector> {
        self.betti.as_ref().map(|values| BettiVector {
            values: values.clone(),
            components: self.components,
        })
    }
}

/// Degree cap from [`DEGREE_CAP_ENV`], or the default when unset.
pub fn degree_cap_from_env() -> Result<u32, RunError> {
    match std::env::var(DEGREE_CAP_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_DEGREE_CAP),
        Err(e) => Err(RunError::Config(format!("{DEGREE_CAP_ENV}: {e}"))),
        Ok(v) => match v.trim().parse::<u32>() {
            Ok(d) if d >= 1 => Ok(d),
            _ => Err(RunError::Config(format!(
                "{DEGREE_CAP_ENV} must be a positive integer, got {v:?}"
            ))),
        },
    }
}
