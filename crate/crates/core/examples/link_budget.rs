//! Drops one realization of users on the coverage disk and walks through
//! the link geometry: elevation and azimuth seen from the platform, slant
//! distance, and free-space path loss.
//!
//! Run with: `cargo run --example link_budget`

use hapsim::geometry::{fspl, generate_ues};
use hapsim::units::linear_to_db;
use hapsim::ScenarioConfig;

fn main() -> Result<(), hapsim::Error> {
    let config = ScenarioConfig { num_ues: 8, ..ScenarioConfig::default() };
    config.validate()?;

    println!(
        "platform at {:.0} km over a {:.1} km disk, carrier {:.3} GHz",
        config.haps_altitude / 1e3,
        config.coverage_radius / 1e3,
        config.carrier_freq / 1e9
    );

    // The nadir link is the best case any user can approach.
    let nadir_loss_db = linear_to_db(fspl(config.haps_altitude, config.carrier_freq)?);
    println!("nadir free-space path loss: {nadir_loss_db:.2} dB\n");

    let ues = generate_ues(&config, 0);
    println!(
        "{:>3}  {:>9}  {:>9}  {:>8}  {:>8}  {:>9}  {:>9}",
        "ue", "x [m]", "y [m]", "elev [deg]", "az [deg]", "dist [m]", "loss [dB]"
    );
    for ue in &ues {
        println!(
            "{:>3}  {:>9.1}  {:>9.1}  {:>10.3}  {:>8.1}  {:>9.1}  {:>9.2}",
            ue.ue_id,
            ue.position.0,
            ue.position.1,
            ue.elevation.to_degrees(),
            ue.azimuth.to_degrees(),
            ue.distance,
            linear_to_db(ue.path_loss),
        );
    }

    let worst = ues
        .iter()
        .max_by(|a, b| a.path_loss.total_cmp(&b.path_loss))
        .expect("at least one user");
    println!(
        "\nworst link: ue {} at {:.3} deg off nadir, {:.2} dB ({:.2} dB over nadir)",
        worst.ue_id,
        worst.elevation.to_degrees(),
        linear_to_db(worst.path_loss),
        linear_to_db(worst.path_loss) - nadir_loss_db,
    );
    Ok(())
}
