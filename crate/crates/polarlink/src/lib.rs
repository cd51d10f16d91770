//! Command-line driver for `polarlink-core`: run configuration, the JSON and
//! text reports, and the corpus runner.

pub mod config;
pub mod corpus;
pub mod report;
pub mod run;
pub mod text;

use thiserror::Error;

use polarlink_core::{LinkError, ParseError, PolarError};

pub use config::{degree_cap_from_env, RunConfig, DEGREE_CAP_ENV};
pub use corpus::{run_corpus, CorpusEntry, CorpusOptions, CorpusOutcome};
pub use report::{ReportDocument, SCHEMA_VERSION};
pub use run::{run_compute, ComputeOutcome};

/// Version string written into every report.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExitStatus {
    Ok = 0,
    InputError = 1,
    Unstable = 2,
    Excluded = 3,
    /// The engine could not produce a profile, or an audit failed.
    Failure = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("cannot parse polynomial: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("{0}")]
    Polar(#[from] PolarError),
    #[error("{0}")]
    Link(#[from] LinkError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    CorpusLine { line: usize, message: String },
}

impl RunError {
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            RunError::Parse(_) | RunError::Config(_) | RunError::Io { .. } | RunError::CorpusLine { .. } => {
                ExitStatus::InputError
            }
            RunError::Link(LinkError::MalformedBetti { .. }) => ExitStatus::InputError,
            RunError::Link(_) => ExitStatus::Failure,
            RunError::Polar(e) if is_excluded(e) => ExitStatus::Excluded,
            RunError::Polar(_) => ExitStatus::Failure,
        }
    }

    /// Short machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            RunError::Parse(_) => "parse_error",
            RunError::Config(_) => "invalid_config",
            RunError::Io { .. } => "io_error",
            RunError::CorpusLine { .. } => "corpus_line",
            RunError::Polar(e) => polar_code(e),
            RunError::Link(LinkError::MalformedBetti { .. }) => "malformed_betti",
            RunError::Link(_) => "link_inconsistency",
        }
    }

    /// One line: `<code>: <message>`.
    pub fn reason(&self) -> String {
        format!("{}: {}", self.code(), self)
    }
}

/// Inputs outside the standing assumptions: `f = 0`, `f(0) != 0`, or a smooth origin.
pub fn is_excluded(e: &PolarError) -> bool {
    matches!(
        e,
        PolarError::ZeroPolynomial | PolarError::NonzeroAtOrigin | PolarError::SmoothOrigin
    )
}

fn polar_code(e: &PolarError) -> &'static str {
    match e {
        PolarError::ZeroPolynomial => "zero_polynomial",
        PolarError::NonzeroAtOrigin => "nonzero_at_origin",
        PolarError::SmoothOrigin => "smooth_origin",
        PolarError::TooFewVariables(_) => "too_few_variables",
        PolarError::IndexOutOfRange { .. } => "index_out_of_range",
        PolarError::FrameDimension { .. } => "frame_dimension",
        PolarError::NoValidFrame { .. } => "no_valid_frame",
        PolarError::GammaIdentityViolation { .. } => "gamma_identity_violation",
        PolarError::NotGeneric { .. } => "not_generic",
        PolarError::NoTrials => "no_trials",
    }
}
