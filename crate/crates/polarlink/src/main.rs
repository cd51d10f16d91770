use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use polarlink::corpus::{read_corpus, CorpusOptions};
use polarlink::report::ErrorDocument;
use polarlink::{degree_cap_from_env, run_compute, run_corpus, text, ExitStatus, RunConfig, RunError};
use polarlink_core::ideal::{local_colength, Ideal};
use polarlink_core::oracle::{teissier_check, truncated_colength, truncated_colength_auto};
use polarlink_core::parse::{parse_polynomial, parse_polynomial_list};
use polarlink_core::polar::{CoordinateFrame, DEFAULT_FRAME_BOUND};
use polarlink_core::{Colength, OracleError};

#[derive(Parser)]
#[command(
    name = "polarlink",
    version,
    about = "Polar multiplicities and link bounds for hypersurface singularities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute gamma, lambda, Morse bounds and audits for one polynomial.
    Compute(ComputeArgs),
    /// Run every entry of a JSON-lines corpus and summarize the audits.
    Corpus(CorpusArgs),
    /// Run an oracle directly.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args)]
struct Sampling {
    /// Number of sampled coordinate frames.
    #[arg(long, default_value_t = 5)]
    trials: u32,
    /// Seed for frame sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Frame entries are drawn from [-bound, bound].
    #[arg(long, default_value_t = DEFAULT_FRAME_BOUND)]
    bound: i64,
}

#[derive(Args)]
struct ComputeArgs {
    /// Polynomial, e.g. "x^3 + y^3 + z^3".
    #[arg(long)]
    poly: String,
    /// Comma-separated variable names, e.g. x,y,z.
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
    #[command(flatten)]
    sampling: Sampling,
    /// Reduced Betti ranks b~^0,...,b~^{2n-1} to audit (a hypothesis, not computed).
    #[arg(long, value_delimiter = ',')]
    betti: Option<Vec<u64>>,
    /// Number of irreducible components at the origin.
    #[arg(long)]
    components: Option<u64>,
    /// Write the JSON report to this path instead of stdout.
    #[arg(long, conflicts_with = "text")]
    json: Option<PathBuf>,
    /// Print the text report instead of JSON.
    #[arg(long)]
    text: bool,
}

#[derive(Args)]
struct CorpusArgs {
    /// JSON-lines file.
    path: PathBuf,
    #[command(flatten)]
    sampling: Sampling,
    /// Also write every report and the summary as JSON to this path.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Truncated linear-algebra colength of an ideal at the origin.
    Colength {
        /// Comma-separated generators, e.g. "y^2, x^2 + y^3".
        #[arg(long)]
        ideal: String,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Truncation degree; without it the degree is doubled until stable.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Teissier's identity for an isolated singularity in one frame.
    Teissier {
        #[arg(long)]
        poly: String,
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Use the identity frame instead of a sampled one.
        #[arg(long)]
        identity: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Which sampled frame (stream) to use.
        #[arg(long, default_value_t = 0)]
        trial: u32,
        #[arg(long, default_value_t = DEFAULT_FRAME_BOUND)]
        bound: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Corpus(args) => corpus(args),
        Command::Oracle(cmd) => oracle(cmd),
    };
    ExitCode::from(status.code() as u8)
}

fn fail(e: &RunError) -> ExitStatus {
    eprintln!("polarlink: {}", e.reason());
    e.exit_status()
}

fn write_file(path: &Path, contents: &str) -> Result<(), RunError> {
    std::fs::write(path, contents).map_err(|source| RunError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn compute(args: ComputeArgs) -> ExitStatus {
    let degree_cap = match degree_cap_from_env() {
        Ok(d) => d,
        Err(e) => return fail(&e),
    };
    let cfg = RunConfig {
        poly: args.poly,
        vars: args.vars,
        trials: args.sampling.trials,
        seed: args.sampling.seed,
        bound: args.sampling.bound,
        betti: args.betti,
        components: args.components,
        degree_cap,
    };
    match run_compute(&cfg) {
        Ok(outcome) => {
            let result = match (&args.json, args.text) {
                (Some(path), _) => write_file(path, &outcome.report.to_json()),
                (None, true) => {
                    print!("{}", text::render(&outcome.report));
                    Ok(())
                }
                (None, false) => {
                    print!("{}", outcome.report.to_json());
                    Ok(())
                }
            };
            if let Err(e) = result {
                return fail(&e);
            }
            if outcome.exit != ExitStatus::Ok {
                eprintln!("polarlink: exit {}: {}", outcome.exit.code(), exit_note(&outcome));
            }
            outcome.exit
        }
        Err(e) => {
            let status = fail(&e);
            if let Some(path) = &args.json {
                let doc = ErrorDocument {
                    status: match status {
                        ExitStatus::Excluded => "excluded",
                        ExitStatus::InputError => "input_error",
                        _ => "failure",
                    }
                    .into(),
                    code: e.code().into(),
                    reason: e.to_string(),
                };
                if let Err(e) = write_file(path, &doc.to_json()) {
                    return fail(&e);
                }
            }
            status
        }
    }
}

fn exit_note(outcome: &polarlink::ComputeOutcome) -> &'static str {
    match outcome.exit {
        ExitStatus::Unstable => "unstable: sampled frames disagree on the minimum",
        ExitStatus::Failure => "audit failure: see diagnostics.oracles",
        _ => "",
    }
}

fn corpus(args: CorpusArgs) -> ExitStatus {
    let run = || -> Result<ExitStatus, RunError> {
        let opts = CorpusOptions {
            trials: args.sampling.trials,
            seed: args.sampling.seed,
            bound: args.sampling.bound,
            degree_cap: degree_cap_from_env()?,
        };
        let entries = read_corpus(&args.path)?;
        let outcome = run_corpus(&entries, &opts);
        print!("{}", outcome.document.summary_table());
        if let Some(path) = &args.json {
            write_file(path, &outcome.document.to_json())?;
        }
        Ok(outcome.exit)
    };
    run().unwrap_or_else(|e| fail(&e))
}

#[derive(Serialize)]
struct ColengthOutput {
    value: u64,
    stable: bool,
    degree: u32,
    engine: String,
}

fn oracle(cmd: OracleCommand) -> ExitStatus {
    let run = || -> Result<ExitStatus, RunError> {
        match cmd {
            OracleCommand::Colength { ideal, vars, degree } => {
                let gens = parse_polynomial_list(&ideal, &vars)?;
                let max_deg = gens.iter().filter_map(|g| g.total_degree()).max().unwrap_or(0);
                let ideal = Ideal::new(vars.len(), gens);
                let t = match degree {
                    Some(0) => return Err(RunError::Config("degree must be at least 1".into())),
                    Some(d) => truncated_colength(&ideal, d),
                    None => {
                        // same starting rule as for polynomials: twice the degree plus 4
                        truncated_colength_auto(&ideal, 2 * max_deg + 4, degree_cap_from_env()?)
                    }
                };
                let out = ColengthOutput {
                    value: t.value,
                    stable: t.stable,
                    degree: t.degree,
                    engine: local_colength(&ideal).to_string(),
                };
                println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
                let agrees = match local_colength(&ideal) {
                    Colength::Finite(v) => !t.stable || v == t.value,
                    Colength::Infinite => !t.stable,
                };
                Ok(if !agrees {
                    ExitStatus::Failure
                } else if t.stable {
                    ExitStatus::Ok
                } else {
                    ExitStatus::Unstable
                })
            }
            OracleCommand::Teissier {
                poly,
                vars,
                identity,
                seed,
                trial,
                bound,
            } => {
                let f = parse_polynomial(&poly, &vars)?;
                let frame = if identity {
                    CoordinateFrame::identity(vars.len())
                } else {
                    if bound < 1 {
                        return Err(RunError::Config("frame bound must be at least 1".into()));
                    }
                    CoordinateFrame::sample(vars.len(), seed, trial, bound)
                };
                match teissier_check(&f, &frame) {
                    Ok(v) => {
                        let out = polarlink::report::OracleEntry::from(&v);
                        println!("{}", serde_json::to_string_pretty(&out).expect("serializes"));
                        Ok(if v.pass { ExitStatus::Ok } else { ExitStatus::Failure })
                    }
                    Err(OracleError::Polar(e)) => Err(RunError::Polar(e)),
                    Err(e @ OracleError::NonIsolated) => {
                        eprintln!("polarlink: non_isolated: {e}");
                        Ok(ExitStatus::Excluded)
                    }
                    Err(e) => {
                        eprintln!("polarlink: degenerate_frame: {e}");
                        Ok(ExitStatus::Failure)
                    }
                }
            }
        }
    };
    run().unwrap_or_else(|e| fail(&e))
}
