//! Runs the complete reporting pipeline at reduced scale: all scenarios,
//! empirical CDF files, per-iteration convergence traces, an antenna-size
//! sweep, and the machine-readable summary, written to `target/campaign_demo`.
//!
//! Run with: `cargo run --release --example full_campaign`

use hapsim::campaign::{run_campaign, CampaignOptions, ScenarioId};
use hapsim::ScenarioConfig;
use std::path::PathBuf;

fn main() -> Result<(), hapsim::Error> {
    let config = ScenarioConfig { num_ues: 12, num_rbs: 4, ..ScenarioConfig::default() };
    config.validate()?;
    let out_dir = PathBuf::from("target/campaign_demo");
    let options = CampaignOptions {
        scenarios: ScenarioId::all().to_vec(),
        realizations: 30,
        sweep: vec![(4, 4), (8, 8)],
        out_dir: out_dir.clone(),
        dump_traces: true,
    };

    let summary = run_campaign(&config, &options)?;
    for scenario in &summary.scenarios {
        println!("{}", scenario.one_line());
    }
    for point in &summary.sweep {
        println!(
            "sweep {:>2}x{:<2}: avg min-SE {:.4} bit/s/Hz",
            point.nx, point.ny, point.avg_min_se
        );
    }

    println!("\nwrote:");
    let mut names: Vec<String> = std::fs::read_dir(&out_dir)?
        .filter_map(|e| e.ok())
        .map(|e| e.file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    for name in names {
        let size = std::fs::metadata(out_dir.join(&name))?.len();
        println!("  {out}/{name} ({size} bytes)", out = out_dir.display());
    }
    println!("\nrerunning with the same seed reproduces every file byte for byte");
    Ok(())
}
