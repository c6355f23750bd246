//! Monte-Carlo campaign orchestration: scenarios, CDFs, sweeps, and the
//! plot-ready output files.
//!
//! A campaign runs one or more scenarios over many independent network
//! realizations. Each realization draws its own user geometry and
//! clustering RNG streams keyed by `(seed, realization)`, so results are
//! identical no matter how many worker threads execute them, and any
//! emitted value can be reproduced by replaying its realization alone.
//!
//! Scenarios:
//! 1. worst-user steering with rate splitting,
//! 2. centroid steering with rate splitting,
//! 3. worst-user steering with private streams only.

use crate::antenna::{build_gain_matrix, BeamConfig};
use crate::clustering::{build_plan, cluster_ues, features, ClusterPlan, SteeringPolicy};
use crate::config::ScenarioConfig;
use crate::error::Error;
use crate::geometry::{generate_ues, UeGeometry};
use crate::rb::allocate_rbs;
use crate::rng::{realization_stream, StreamLane};
use crate::solver::{solve_mmf, ScaTrace, SolveMode};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

/// Fraction of realizations allowed to fail before the campaign aborts.
const FAILURE_LIMIT: f64 = 0.02;

/// The three evaluated system variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScenarioId {
    /// Scenario 1: worst-user steering, rate splitting on.
    WuRsma,
    /// Scenario 2: centroid steering, rate splitting on.
    CentroidRsma,
    /// Scenario 3: worst-user steering, private streams only.
    WuNoRsma,
}

impl ScenarioId {
    pub fn all() -> [ScenarioId; 3] {
        [ScenarioId::WuRsma, ScenarioId::CentroidRsma, ScenarioId::WuNoRsma]
    }

    pub fn number(self) -> u32 {
        match self {
            ScenarioId::WuRsma => 1,
            ScenarioId::CentroidRsma => 2,
            ScenarioId::WuNoRsma => 3,
        }
    }

    /// Stable identifier used in output file names.
    pub fn tag(self) -> &'static str {
        match self {
            ScenarioId::WuRsma => "wu_rsma",
            ScenarioId::CentroidRsma => "centroid_rsma",
            ScenarioId::WuNoRsma => "wu_no_rsma",
        }
    }

    pub fn policy(self) -> SteeringPolicy {
        match self {
            ScenarioId::CentroidRsma => SteeringPolicy::Centroid,
            _ => SteeringPolicy::WorstUe,
        }
    }

    pub fn mode(self) -> SolveMode {
        match self {
            ScenarioId::WuNoRsma => SolveMode::PrivateOnly,
            _ => SolveMode::Full,
        }
    }
}

impl FromStr for ScenarioId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "1" | "wu_rsma" => Ok(ScenarioId::WuRsma),
            "2" | "centroid_rsma" => Ok(ScenarioId::CentroidRsma),
            "3" | "wu_no_rsma" => Ok(ScenarioId::WuNoRsma),
            other => Err(Error::invalid(format!(
                "unknown scenario '{other}' (expected 1, 2, 3, or a scenario tag)"
            ))),
        }
    }
}

/// Result of one scenario run on one network realization.
#[derive(Debug, Clone)]
pub struct RealizationOutcome {
    pub realization: usize,
    /// Certified spectral efficiency per user, b/s/Hz.
    pub se_per_ue: Vec<f64>,
    /// Certified worst-user spectral efficiency, b/s/Hz.
    pub min_se: f64,
    pub trace: ScaTrace,
}

/// Draws the realization's geometry and clustering (shared across
/// scenarios) and steers beams by the given policy.
pub(crate) fn network_plan(
    config: &ScenarioConfig,
    realization: usize,
    policy: SteeringPolicy,
) -> Result<(Vec<UeGeometry>, ClusterPlan), Error> {
    let ues = generate_ues(config, realization);
    let feats: Vec<[f64; 3]> = ues.iter().map(|u| features(u.elevation, u.azimuth)).collect();
    let mut rng = realization_stream(config.rng_seed, realization, StreamLane::Clustering);
    let membership = cluster_ues(&feats, config.num_clusters(), config.num_rbs, &mut rng)?;
    let template = BeamConfig::from_scenario(config, (0.0, 0.0));
    let plan = build_plan(membership, &ues, &template, policy);
    Ok((ues, plan))
}

/// Runs the full pipeline for one scenario on one realization:
/// geometry, clustering, steering, gains, block allocation, power
/// optimization, certification.
pub fn run_scenario(
    config: &ScenarioConfig,
    scenario: ScenarioId,
    realization: usize,
) -> Result<RealizationOutcome, Error> {
    config.validate()?;
    let (ues, plan) = network_plan(config, realization, scenario.policy())?;
    let template = BeamConfig::from_scenario(config, (0.0, 0.0));
    let gains = build_gain_matrix(&plan.beams(&template), &ues);
    let rb = allocate_rbs(&plan, &gains, config.num_rbs)?;
    let solution = solve_mmf(&gains, &plan, &rb, config, scenario.mode())?;
    let se_per_ue: Vec<f64> =
        solution.report.total_rate.iter().map(|r| r / config.bandwidth).collect();
    Ok(RealizationOutcome {
        realization,
        se_per_ue,
        min_se: solution.certified_min_rate / config.bandwidth,
        trace: solution.trace,
    })
}

/// Runs `realizations` independent realizations of one scenario in
/// parallel. Individual failures are collected, not fatal; the batch
/// errors only when more than the allowed fraction fail.
pub fn run_scenario_batch(
    config: &ScenarioConfig,
    scenario: ScenarioId,
    realizations: usize,
) -> Result<(Vec<RealizationOutcome>, usize), Error> {
    if realizations == 0 {
        return Err(Error::invalid("need at least one realization"));
    }
    let results: Vec<Result<RealizationOutcome, Error>> = (0..realizations)
        .into_par_iter()
        .map(|idx| run_scenario(config, scenario, idx))
        .collect();
    let mut outcomes = Vec::with_capacity(realizations);
    let mut failed = 0usize;
    for result in results {
        match result {
            Ok(outcome) => outcomes.push(outcome),
            Err(_) => failed += 1,
        }
    }
    if (failed as f64) > FAILURE_LIMIT * realizations as f64 {
        return Err(Error::CampaignFailure {
            failed,
            total: realizations,
            limit_percent: FAILURE_LIMIT * 100.0,
        });
    }
    Ok((outcomes, failed))
}

/// Empirical distribution function: sorted `(value, rank / N)` pairs.
pub fn cdf(samples: &[f64]) -> Result<Vec<(f64, f64)>, Error> {
    if samples.is_empty() {
        return Err(Error::invalid("cannot build a CDF from zero samples"));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    Ok(sorted
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, (i + 1) as f64 / n))
        .collect())
}

/// Linear-interpolation percentile (`q` in `[0, 1]`); the median of
/// `{1, 2, 3, 4}` is 2.5.
pub fn percentile(samples: &[f64], q: f64) -> f64 {
    assert!(!samples.is_empty(), "percentile of an empty sample set");
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let pos = q.clamp(0.0, 1.0) * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    sorted[lo] + (sorted[hi] - sorted[lo]) * frac
}

/// One row of the antenna-size sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepPoint {
    pub nx: usize,
    pub ny: usize,
    /// Mean certified worst-user SE over the realizations, b/s/Hz.
    pub avg_min_se: f64,
    pub failed: usize,
}

/// Evaluates scenario 1 over several array sizes, averaging the
/// certified worst-user spectral efficiency per size.
pub fn antenna_sweep(
    config: &ScenarioConfig,
    sizes: &[(usize, usize)],
    realizations: usize,
) -> Result<Vec<SweepPoint>, Error> {
    if sizes.is_empty() {
        return Err(Error::invalid("sweep needs at least one array size"));
    }
    let mut points = Vec::with_capacity(sizes.len());
    for &(nx, ny) in sizes {
        let mut swept = config.clone();
        swept.array_nx = nx;
        swept.array_ny = ny;
        let (outcomes, failed) = run_scenario_batch(&swept, ScenarioId::WuRsma, realizations)?;
        let avg_min_se =
            outcomes.iter().map(|o| o.min_se).sum::<f64>() / outcomes.len() as f64;
        points.push(SweepPoint { nx, ny, avg_min_se, failed });
    }
    Ok(points)
}

/// What to run and where to put the files.
#[derive(Debug, Clone)]
pub struct CampaignOptions {
    pub scenarios: Vec<ScenarioId>,
    pub realizations: usize,
    /// Array sizes for the antenna sweep; empty skips the sweep.
    pub sweep: Vec<(usize, usize)>,
    pub out_dir: PathBuf,
    /// Also write per-iteration SCA traces to `convergence.csv`.
    pub dump_traces: bool,
}

/// Per-scenario statistics recorded in `summary.json`.
#[derive(Debug, Clone, Serialize)]
pub struct ScenarioSummary {
    pub scenario: u32,
    pub tag: String,
    pub realizations: usize,
    pub failed: usize,
    /// Number of per-user SE samples behind the percentiles.
    pub samples: usize,
    pub p10_se: f64,
    pub median_se: f64,
    pub p90_se: f64,
    pub mean_min_se: f64,
    pub converged_fraction: f64,
    pub seconds: f64,
}

impl ScenarioSummary {
    /// One-line human-readable digest for terminal output.
    pub fn one_line(&self) -> String {
        format!(
            "scenario {} ({}): median SE {} b/s/Hz, mean min-SE {} b/s/Hz, \
             {}/{} realizations ok ({:.0}% converged) in {:.1}s",
            self.scenario,
            self.tag,
            fmt_e(self.median_se),
            fmt_e(self.mean_min_se),
            self.realizations - self.failed,
            self.realizations,
            self.converged_fraction * 100.0,
            self.seconds
        )
    }
}

/// Everything `summary.json` contains.
#[derive(Debug, Clone, Serialize)]
pub struct CampaignSummary {
    pub config: ScenarioConfig,
    pub realizations: usize,
    pub scenarios: Vec<ScenarioSummary>,
    pub sweep: Vec<SweepPoint>,
    pub total_seconds: f64,
}

/// C-style `%.6e` with a signed two-digit exponent, so CSV bodies are
/// stable across platforms.
fn fmt_e(v: f64) -> String {
    let s = format!("{v:.6e}");
    let (mantissa, exponent) = s.split_once('e').expect("exponential format");
    let (sign, digits) = match exponent.strip_prefix('-') {
        Some(d) => ("-", d),
        None => ("+", exponent),
    };
    format!("{mantissa}e{sign}{digits:0>2}")
}

fn write_file(dir: &Path, name: &str, body: &str) -> Result<PathBuf, Error> {
    let path = dir.join(name);
    std::fs::write(&path, body)?;
    Ok(path)
}

/// Runs the requested scenarios and sweep, writing `cdf_<tag>.csv` per
/// scenario, optionally `convergence.csv` (first requested scenario),
/// `sweep.csv`, and `summary.json` into the output directory.
pub fn run_campaign(
    config: &ScenarioConfig,
    options: &CampaignOptions,
) -> Result<CampaignSummary, Error> {
    config.validate()?;
    std::fs::create_dir_all(&options.out_dir)?;
    let campaign_start = Instant::now();
    let mut scenario_summaries = Vec::new();
    let mut first_traces: Option<Vec<RealizationOutcome>> = None;

    for &scenario in &options.scenarios {
        let started = Instant::now();
        let (outcomes, failed) = run_scenario_batch(config, scenario, options.realizations)?;
        let seconds = started.elapsed().as_secs_f64();

        let samples: Vec<f64> =
            outcomes.iter().flat_map(|o| o.se_per_ue.iter().copied()).collect();
        let curve = cdf(&samples)?;
        let mut body = String::from("se_bps_hz,cum_fraction\n");
        for (value, fraction) in &curve {
            let _ = writeln!(body, "{},{}", fmt_e(*value), fmt_e(*fraction));
        }
        write_file(&options.out_dir, &format!("cdf_{}.csv", scenario.tag()), &body)?;

        let converged = outcomes.iter().filter(|o| o.trace.converged).count();
        scenario_summaries.push(ScenarioSummary {
            scenario: scenario.number(),
            tag: scenario.tag().to_string(),
            realizations: options.realizations,
            failed,
            samples: samples.len(),
            p10_se: percentile(&samples, 0.10),
            median_se: percentile(&samples, 0.50),
            p90_se: percentile(&samples, 0.90),
            mean_min_se: outcomes.iter().map(|o| o.min_se).sum::<f64>()
                / outcomes.len() as f64,
            converged_fraction: converged as f64 / outcomes.len() as f64,
            seconds,
        });
        if first_traces.is_none() {
            first_traces = Some(outcomes);
        }
    }

    if options.dump_traces {
        if let Some(outcomes) = &first_traces {
            let mut body = String::from("realization,iteration,t\n");
            for outcome in outcomes {
                for it in &outcome.trace.iterations {
                    let _ = writeln!(
                        body,
                        "{},{},{}",
                        outcome.realization,
                        it.iteration,
                        fmt_e(it.objective)
                    );
                }
            }
            write_file(&options.out_dir, "convergence.csv", &body)?;
        }
    }

    let sweep = if options.sweep.is_empty() {
        Vec::new()
    } else {
        let points = antenna_sweep(config, &options.sweep, options.realizations)?;
        let mut body = String::from("nx,ny,avg_min_se\n");
        for point in &points {
            let _ = writeln!(body, "{},{},{}", point.nx, point.ny, fmt_e(point.avg_min_se));
        }
        write_file(&options.out_dir, "sweep.csv", &body)?;
        points
    };

    let summary = CampaignSummary {
        config: config.clone(),
        realizations: options.realizations,
        scenarios: scenario_summaries,
        sweep,
        total_seconds: campaign_start.elapsed().as_secs_f64(),
    };
    let json = serde_json::to_string_pretty(&summary)?;
    write_file(&options.out_dir, "summary.json", &format!("{json}\n"))?;
    Ok(summary)
}
