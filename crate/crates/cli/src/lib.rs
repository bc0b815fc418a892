//! Front end for the `superkit` command-line tool.

pub mod commands;
pub mod input;
pub mod selftest;

use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use commands::{Outcome, RunReport};
use input::RingOptions;
use superkit::FieldSpec;

#[derive(Debug, Parser)]
#[command(name = "superkit", version, about = "Exact computations with supermatrices and projective superspace")]
pub struct Cli {
    /// Seed for every sampled object.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Sample count for property runs; 100 gives the standard counts.
    #[arg(long, global = true, default_value_t = 100)]
    pub samples: u64,
    /// Number of odd generators `t1..tq` of the base ring.
    #[arg(long, global = true, default_value_t = 3)]
    pub grassmann: usize,
    /// `rational` or an odd prime.
    #[arg(long, global = true, default_value = "rational", value_parser = input::parse_field)]
    pub field: FieldSpec,
    /// Print the full JSON report instead of the result alone.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file; stdin when omitted or `-`.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Berezinian of a supermatrix.
    Ber(InputArgs),
    /// Invertibility of an even supermatrix.
    GlCheck(InputArgs),
    /// Membership in SpO(2|1), with its component.
    SpoCheck(InputArgs),
    /// Membership in C(2|1): the form H preserved up to Ber².
    CCheck(InputArgs),
    /// Splits a member of C(2|1) into a scalar and an SC factor.
    ScFactor(InputArgs),
    /// Whether a 2|1 matrix preserves the SUSY structure of P^{1|1}.
    SusyCheck(InputArgs),
    /// Coordinates of conjugation by a supermatrix.
    AutRep(InputArgs),
    /// Recovers a supermatrix, up to a scalar, from its conjugation coordinates.
    AutReconstruct(InputArgs),
    /// Chart-change map of P^{m|n}: coordinates of chart `to` in chart `from`.
    ChartChange {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
    /// Cocycle condition for all chart triples of P^{m|n}.
    ChartCocycle {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Action of a supermatrix on a point of projective superspace.
    PointAct(InputArgs),
    /// Normalizes a transition function on P^{1|1} to x^n.
    CocycleNormalize(InputArgs),
    /// The non-projective automorphism of P^{1|2}.
    P12Witness,
    /// Runs the acceptance suite.
    Selftest,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ber(_) => "ber",
            Command::GlCheck(_) => "gl-check",
            Command::SpoCheck(_) => "spo-check",
            Command::CCheck(_) => "c-check",
            Command::ScFactor(_) => "sc-factor",
            Command::SusyCheck(_) => "susy-check",
            Command::AutRep(_) => "aut-rep",
            Command::AutReconstruct(_) => "aut-reconstruct",
            Command::ChartChange { .. } => "chart-change",
            Command::ChartCocycle { .. } => "chart-cocycle",
            Command::PointAct(_) => "point-act",
            Command::CocycleNormalize(_) => "cocycle-normalize",
            Command::P12Witness => "p12-witness",
            Command::Selftest => "selftest",
        }
    }
}

fn read_input(args: &InputArgs) -> Result<String, String> {
    match &args.input {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        }
    }
}

/// Runs a command. `Err` carries a diagnostic for exit code 2.
pub fn run(cli: &Cli) -> Result<RunReport, String> {
    let start = Instant::now();
    let opts = RingOptions {
        field: cli.field,
        q: cli.grassmann,
        max_terms: input::max_terms_from_env().map_err(|e| e.to_string())?,
    };
    let with_input = |args: &InputArgs, f: fn(&str, &RingOptions) -> superkit::Result<Outcome>| {
        let text = read_input(args)?;
        f(&text, &opts).map_err(|e| e.to_string())
    };
    let outcome = match &cli.command {
        Command::Ber(a) => with_input(a, commands::ber)?,
        Command::GlCheck(a) => with_input(a, commands::gl_check)?,
        Command::SpoCheck(a) => with_input(a, commands::spo_check)?,
        Command::CCheck(a) => with_input(a, commands::c_check)?,
        Command::ScFactor(a) => with_input(a, commands::sc_factor)?,
        Command::SusyCheck(a) => with_input(a, commands::susy_check)?,
        Command::AutRep(a) => with_input(a, commands::aut_rep)?,
        Command::AutReconstruct(a) => with_input(a, commands::aut_reconstruct)?,
        Command::PointAct(a) => with_input(a, commands::point_act)?,
        Command::CocycleNormalize(a) => with_input(a, commands::cocycle_normalize)?,
        Command::ChartChange { m, n, from, to } => {
            commands::chart_change(*m, *n, *from, *to, &opts).map_err(|e| e.to_string())?
        }
        Command::ChartCocycle { m, n } => {
            commands::chart_cocycle(*m, *n, &opts).map_err(|e| e.to_string())?
        }
        Command::P12Witness => commands::p12().map_err(|e| e.to_string())?,
        Command::Selftest => {
            let reports = selftest::run_all(cli.seed, cli.samples);
            let failed: Vec<_> = reports.iter().filter(|r| !r.passed).cloned().collect();
            Outcome {
                passed: failed.is_empty(),
                result: json!({ "seed": cli.seed, "samples": cli.samples, "criteria": reports }),
                counterexample: (!failed.is_empty()).then(|| json!(failed)),
            }
        }
    };
    Ok(RunReport {
        command: cli.command.name().to_string(),
        passed: outcome.passed,
        result: outcome.result,
        counterexample: outcome.counterexample,
        timing_ms: start.elapsed().as_millis() as u64,
    })
}

/// Human-readable rendering used without `--json`.
pub fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    if report.command == "selftest" {
        if let Some(items) = report.result["criteria"].as_array() {
            for r in items {
                let status = if r["passed"].as_bool() == Some(true) { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{status}  {:<22} {:>6} checked {:>8} ms  {}\n",
                    r["criterion"].as_str().unwrap_or(""),
                    r["checked"],
                    r["timing_ms"],
                    r["detail"].as_str().unwrap_or("")
                ));
            }
        }
        out.push_str(if report.passed { "all criteria passed\n" } else { "some criteria failed\n" });
        return out;
    }
    out.push_str(&serde_json::to_string_pretty(&report.result).expect("JSON"));
    out.push('\n');
    if let Some(c) = &report.counterexample {
        out.push_str("counterexample: ");
        out.push_str(&serde_json::to_string_pretty(c).expect("JSON"));
        out.push('\n');
    }
    out
}
