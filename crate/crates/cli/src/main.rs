use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use hodge_core::algebra::{parse_polynomial_list, MonomialOrder};
use hodge_core::ideal::IdealModel;
use hodge_core::pairing::{ExcessReport, GramReport, TspOutcome};
use hodge_core::scenario::{
    emit_report, parse_nu_list, run_scenario_timed, CustomInput, Family, OrderChoice, ReportFormat, ScenarioConfig,
};
use hodge_core::{Error, Result};

const EXIT_ASSERTION: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser)]
#[command(name = "hodgelab", version, about = "Associated ideals and socle pairings of Hodge classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a built-in scenario and emit its report.
    Run(RunArgs),
    /// Hilbert function of S/I for an ideal read from a file.
    Hilbert {
        /// File with generators separated by commas or newlines.
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        max_degree: u32,
        /// Number of variables; inferred from the generators when omitted.
        #[arg(long)]
        nvars: Option<usize>,
    },
    /// Gram matrix of psi_1 + nu psi_2 for a hypersurface and two planes.
    Gram {
        /// File holding the polynomial f.
        #[arg(long)]
        f: PathBuf,
        /// Comma-separated linear forms cutting out the first plane.
        #[arg(long)]
        plane1: String,
        #[arg(long)]
        plane2: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    d: Option<u32>,
    /// Comma-separated rationals, e.g. `-1,0,1/3`.
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Recompute every dual-path quantity and compare.
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value = "json")]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value = "grevlex")]
    order: OrderChoice,
    /// With `--family custom`: file holding f; the planes are given inline as comma-separated linear forms.
    #[arg(long)]
    custom_f: Option<PathBuf>,
    #[arg(long)]
    plane1: Option<String>,
    #[arg(long)]
    plane2: Option<String>,
}

fn read(path: &PathBuf) -> Result<String> {
    Ok(std::fs::read_to_string(path)?.trim().to_string())
}

fn run(args: RunArgs) -> Result<u8> {
    let mut cfg = match args.family {
        Family::Custom => {
            let missing = || Error::Precondition("custom runs need --custom-f, --plane1 and --plane2".into());
            ScenarioConfig::custom(CustomInput {
                f: read(args.custom_f.as_ref().ok_or_else(missing)?)?,
                plane1: args.plane1.ok_or_else(missing)?,
                plane2: args.plane2.ok_or_else(missing)?,
            })
        }
        family => match (family.fixed_parameters(), args.k, args.d) {
            (Some(_), None, None) => ScenarioConfig::fixed(family),
            (_, Some(k), Some(d)) => ScenarioConfig::new(family, k, d),
            (None, _, _) => return Err(Error::Precondition(format!("family {family} needs --k and --d"))),
            (Some((k, d)), _, _) => ScenarioConfig::new(family, args.k.unwrap_or(k), args.d.unwrap_or(d)),
        },
    };
    if let Some(nu) = &args.nu {
        cfg = cfg.with_nus(parse_nu_list(nu)?);
    }
    cfg = cfg.with_seed(args.seed).with_oracle(args.oracle).with_order(args.order);

    let start = Instant::now();
    let (doc, timings) = run_scenario_timed(&cfg)?;
    for note in &doc.scenario.notes {
        eprintln!("note: {note}");
    }
    for (stage, t) in &timings.0 {
        eprintln!("time {stage}: {:.3}s", t.as_secs_f64());
    }
    eprintln!("time total: {:.3}s", start.elapsed().as_secs_f64());

    let text = emit_report(&doc, args.format, args.out.as_deref())?;
    if args.out.is_none() {
        print!("{text}");
    }
    let failed = doc.failed_checks();
    for c in &failed {
        eprintln!("FAILED {}: {}", c.name, c.detail);
    }
    Ok(if failed.is_empty() { 0 } else { EXIT_ASSERTION })
}

fn hilbert(ideal: PathBuf, max_degree: u32, nvars: Option<usize>) -> Result<u8> {
    let text = read(&ideal)?.replace('\n', ",");
    let gens = parse_polynomial_list(&text, nvars)?;
    let n = gens.first().map_or(nvars.unwrap_or(1), |g| g.nvars());
    let model = IdealModel::new(n, gens, &MonomialOrder::grevlex())?;
    println!("t,h");
    for t in 0..=max_degree {
        println!("{t},{}", model.hilbert_function(t));
    }
    Ok(0)
}

#[derive(Serialize)]
struct GramOutput {
    f: String,
    k: usize,
    d: u32,
    joint_codim: u64,
    gram: Option<GramReport>,
    excess: Option<ExcessReport>,
    tsp: TspOutcome,
}

fn gram(f: PathBuf, plane1: String, plane2: String, nu: Option<String>) -> Result<u8> {
    let mut cfg = ScenarioConfig::custom(CustomInput { f: read(&f)?, plane1, plane2 });
    if let Some(nu) = &nu {
        cfg = cfg.with_nus(parse_nu_list(nu)?);
    }
    let (doc, _) = run_scenario_timed(&cfg)?;
    let out = GramOutput {
        f: doc.scenario.f.to_string(),
        k: doc.scenario.k,
        d: doc.scenario.d,
        joint_codim: doc.joint_codim,
        gram: doc.gram,
        excess: doc.excess,
        tsp: doc.tsp,
    };
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Hilbert { ideal, max_degree, nvars } => hilbert(ideal, max_degree, nvars),
        Command::Gram { f, plane1, plane2, nu } => gram(f, plane1, plane2, nu),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_precondition() { EXIT_PRECONDITION } else { 1 })
        }
    }
}
