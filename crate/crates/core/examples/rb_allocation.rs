//! Builds the full plan for one realization — clustering, steering, beam
//! gains — then assigns resource blocks so that clusters stay internally
//! orthogonal while cross-cluster interference is balanced.
//!
//! Run with: `cargo run --example rb_allocation`

use hapsim::antenna::{build_gain_matrix, BeamConfig};
use hapsim::clustering::{build_plan, cluster_ues, features};
use hapsim::geometry::generate_ues;
use hapsim::rb::allocate_rbs;
use hapsim::rng::{realization_stream, StreamLane};
use hapsim::units::linear_to_db;
use hapsim::{ScenarioConfig, SteeringPolicy};

fn main() -> Result<(), hapsim::Error> {
    let config = ScenarioConfig { num_ues: 12, num_rbs: 4, ..ScenarioConfig::default() };
    config.validate()?;
    let realization = 0;

    let ues = generate_ues(&config, realization);
    let feats: Vec<[f64; 3]> = ues.iter().map(|u| features(u.elevation, u.azimuth)).collect();
    let mut rng = realization_stream(config.rng_seed, realization, StreamLane::Clustering);
    let membership = cluster_ues(&feats, config.num_clusters(), config.num_rbs, &mut rng)?;
    let template = BeamConfig::from_scenario(&config, (0.0, 0.0));
    let plan = build_plan(membership, &ues, &template, SteeringPolicy::WorstUe);
    let gains = build_gain_matrix(&plan.beams(&template), &ues);
    let rb = allocate_rbs(&plan, &gains, config.num_rbs)?;

    println!("serving-gain table (gain over path loss, dB):");
    println!("{:>3}  {:>7}  {:>12}  {:>2}", "ue", "cluster", "serving [dB]", "rb");
    for u in 0..config.num_ues {
        let cluster = plan.cluster_of(u);
        println!(
            "{:>3}  {:>7}  {:>12.2}  {:>2}",
            u,
            cluster,
            linear_to_db(gains.get(cluster, u)),
            rb.rb_of[u],
        );
    }

    println!("\nco-scheduled sets (one user per cluster per block):");
    for (block, users) in rb.co_scheduled.iter().enumerate() {
        let clusters: Vec<usize> = users.iter().map(|&u| plan.cluster_of(u)).collect();
        println!("  rb {block}: users {users:?} from clusters {clusters:?}");
    }

    // The invariant the allocator maintains: users sharing a block never
    // share a cluster (their beams are distinct).
    for users in &rb.co_scheduled {
        for (i, &a) in users.iter().enumerate() {
            for &b in &users[i + 1..] {
                assert_ne!(plan.cluster_of(a), plan.cluster_of(b));
            }
        }
    }
    println!("\ninvariant holds: no block carries two users of the same cluster");
    Ok(())
}
