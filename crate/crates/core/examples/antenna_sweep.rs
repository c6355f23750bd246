//! Sweeps the planar-array size and reports how the achievable worst-user
//! spectral efficiency responds: larger apertures sharpen beams, raising
//! serving gain and cutting inter-beam interference at once.
//!
//! Run with: `cargo run --release --example antenna_sweep`

use hapsim::campaign::antenna_sweep;
use hapsim::ScenarioConfig;

fn main() -> Result<(), hapsim::Error> {
    let config = ScenarioConfig { num_ues: 20, num_rbs: 5, ..ScenarioConfig::default() };
    config.validate()?;
    let sizes = [(2usize, 2usize), (4, 4), (8, 8), (16, 16)];
    let realizations = 40;

    println!(
        "{} users, {} blocks, {} realizations per size\n",
        config.num_ues, config.num_rbs, realizations
    );

    let points = antenna_sweep(&config, &sizes, realizations)?;
    println!("{:>7}  {:>10}  {:>16}  {:>6}", "array", "elements", "avg min-SE", "failed");
    let mut best: Option<(usize, usize, f64)> = None;
    for point in &points {
        println!(
            "{:>3}x{:<3}  {:>10}  {:>13.4}  {:>9}",
            point.nx,
            point.ny,
            point.nx * point.ny,
            point.avg_min_se,
            point.failed,
        );
        if best.is_none_or(|(_, _, se)| point.avg_min_se > se) {
            best = Some((point.nx, point.ny, point.avg_min_se));
        }
    }

    let (nx, ny, se) = best.expect("sweep produced no points");
    println!("\nbest size: {nx}x{ny} at {se:.4} bit/s/Hz average worst-user SE");
    println!(
        "gain saturates once beams are much narrower than the cluster spread;\n\
         the sweep makes that trade-off visible"
    );
    Ok(())
}
