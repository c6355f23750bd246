//! Runs a small Monte Carlo batch of all three scenarios — rate splitting
//! with worst-user steering, rate splitting with centroid steering, and
//! private-only transmission — and compares the distributions of the
//! worst user's spectral efficiency.
//!
//! Run with: `cargo run --release --example scenario_cdf`

use hapsim::campaign::{percentile, run_scenario_batch, ScenarioId};
use hapsim::ScenarioConfig;

fn main() -> Result<(), hapsim::Error> {
    let config = ScenarioConfig { num_ues: 20, num_rbs: 5, ..ScenarioConfig::default() };
    config.validate()?;
    let realizations = 60;

    println!(
        "{} users, {} blocks, {} beams, {} realizations per scenario\n",
        config.num_ues,
        config.num_rbs,
        config.num_clusters(),
        realizations
    );
    println!(
        "{:<18}  {:>8}  {:>8}  {:>8}  {:>6}",
        "scenario", "p10", "median", "p90", "failed"
    );

    let mut medians = Vec::new();
    for scenario in ScenarioId::all() {
        let (outcomes, failed) = run_scenario_batch(&config, scenario, realizations)?;
        let mins: Vec<f64> = outcomes.iter().map(|o| o.min_se).collect();
        let median = percentile(&mins, 0.5);
        medians.push(median);
        println!(
            "{:<18}  {:>8.4}  {:>8.4}  {:>8.4}  {:>6}",
            scenario.tag(),
            percentile(&mins, 0.1),
            median,
            percentile(&mins, 0.9),
            failed,
        );
    }

    println!(
        "\nrate splitting over private-only at the median: {:.2}x",
        medians[0] / medians[2]
    );
    println!("worst-user steering over centroid steering: {:.2}x", medians[0] / medians[1]);
    Ok(())
}
