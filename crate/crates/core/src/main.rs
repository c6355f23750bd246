//! Command-line front end: parse flags, apply config overrides, run the
//! campaign, print one summary line per scenario.

use clap::Parser;
use hapsim::campaign::{run_campaign, CampaignOptions, ScenarioId};
use hapsim::{Error, ScenarioConfig};
use std::path::PathBuf;

/// Monte-Carlo simulator and max-min-fair optimizer for multi-beam HAPS
/// downlinks with rate-splitting multiple access.
#[derive(Parser, Debug)]
#[command(name = "hapsim", version)]
struct Cli {
    /// Key-value configuration file overriding built-in defaults
    /// (lines of `key = value`; keys match the config field names).
    #[arg(long)]
    config: Option<PathBuf>,

    /// Scenario to run: 1 (worst-user steering + rate splitting),
    /// 2 (centroid steering + rate splitting), 3 (worst-user steering,
    /// private only), or "all".
    #[arg(long, default_value = "all")]
    scenario: String,

    /// Number of independent network realizations.
    #[arg(long, default_value_t = 1000)]
    realizations: usize,

    /// RNG seed (overrides the config file).
    #[arg(long)]
    seed: Option<u64>,

    /// Number of users (overrides the config file).
    #[arg(long)]
    users: Option<usize>,

    /// Number of resource blocks (overrides the config file).
    #[arg(long)]
    rbs: Option<usize>,

    /// Array elements along x (overrides the config file).
    #[arg(long)]
    nx: Option<usize>,

    /// Array elements along y (overrides the config file).
    #[arg(long)]
    ny: Option<usize>,

    /// Comma-separated array sizes to sweep, e.g. "4x4,8x8,16x16".
    /// When present, runs the antenna sweep instead of the scenario CDFs.
    #[arg(long)]
    sweep: Option<String>,

    /// Output directory for CSV/JSON files.
    #[arg(long, default_value = "out")]
    out: PathBuf,

    /// Also write per-iteration SCA traces to convergence.csv.
    #[arg(long)]
    trace: bool,
}

fn parse_scenarios(spec: &str) -> Result<Vec<ScenarioId>, Error> {
    if spec.trim().eq_ignore_ascii_case("all") {
        Ok(ScenarioId::all().to_vec())
    } else {
        Ok(vec![spec.parse()?])
    }
}

fn parse_sweep(spec: &str) -> Result<Vec<(usize, usize)>, Error> {
    spec.split(',')
        .map(|part| {
            let (nx, ny) = part
                .trim()
                .split_once(['x', 'X'])
                .ok_or_else(|| bad_size(part))?;
            let nx: usize = nx.trim().parse().map_err(|_| bad_size(part))?;
            let ny: usize = ny.trim().parse().map_err(|_| bad_size(part))?;
            if nx == 0 || ny == 0 {
                return Err(bad_size(part));
            }
            Ok((nx, ny))
        })
        .collect()
}

fn bad_size(part: &str) -> Error {
    Error::InvalidInput(format!("bad sweep size '{part}' (expected e.g. 8x8)"))
}

fn run(cli: Cli) -> Result<(), Error> {
    let mut config = match &cli.config {
        Some(path) => ScenarioConfig::from_file(path)?,
        None => ScenarioConfig::default(),
    };
    if let Some(seed) = cli.seed {
        config.rng_seed = seed;
    }
    if let Some(users) = cli.users {
        config.num_ues = users;
    }
    if let Some(rbs) = cli.rbs {
        config.num_rbs = rbs;
    }
    if let Some(nx) = cli.nx {
        config.array_nx = nx;
    }
    if let Some(ny) = cli.ny {
        config.array_ny = ny;
    }
    config.validate()?;

    let sweep = match &cli.sweep {
        Some(spec) => parse_sweep(spec)?,
        None => Vec::new(),
    };
    let scenarios = if sweep.is_empty() { parse_scenarios(&cli.scenario)? } else { Vec::new() };

    let options = CampaignOptions {
        scenarios,
        realizations: cli.realizations,
        sweep,
        out_dir: cli.out.clone(),
        dump_traces: cli.trace,
    };
    let summary = run_campaign(&config, &options)?;
    for scenario in &summary.scenarios {
        println!("{}", scenario.one_line());
    }
    for point in &summary.sweep {
        println!(
            "sweep {}x{}: avg min-SE {:.4} b/s/Hz ({} failed)",
            point.nx, point.ny, point.avg_min_se, point.failed
        );
    }
    println!("outputs written to {}", cli.out.display());
    Ok(())
}

fn main() {
    if let Err(error) = run(Cli::parse()) {
        eprintln!("error: {error}");
        std::process::exit(1);
    }
}
