//! Angular user clustering and beam steering.
//!
//! Users are grouped into `L = ceil(U / R)` clusters of at most `R` members
//! by capacity-constrained k-means on the feature vector
//! `[theta, cos(phi), sin(phi)]` (the cos/sin pair keeps azimuth distances
//! continuous across +-pi). The assignment step is solved exactly as a
//! minimum-cost assignment into per-cluster capacity slots, so every
//! iteration is a true descent step and no cluster is ever left empty.
//!
//! Each cluster then gets a beam boresight:
//! * worst-user steering maximizes the minimum member channel gain over a
//!   candidate grid spanning the cluster's padded angular bounding box;
//! * centroid steering points at the mean elevation and circular-mean
//!   azimuth.

use crate::antenna::{array_factor_linear_from_deltas, direction_cosines, element_gain_db, BeamConfig};
use crate::assignment::min_cost_assignment;
use crate::error::Error;
use crate::geometry::{normalize_azimuth, UeGeometry};
use crate::units::{db_to_linear, linear_to_db};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Padding added around a cluster's angular bounding box, radians.
const STEER_PAD: f64 = 0.5 * std::f64::consts::PI / 180.0;
/// Steering-grid resolution, radians (0.05 degrees).
const STEER_RES: f64 = 0.05 * std::f64::consts::PI / 180.0;
/// Iteration cap for the k-means loop.
const KMEANS_MAX_ITERS: usize = 100;

/// How a cluster's beam boresight is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SteeringPolicy {
    /// Grid search maximizing the worst member's channel gain.
    WorstUe,
    /// Mean elevation and circular-mean azimuth of the members.
    Centroid,
}

/// A capacity-respecting partition of users into clusters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterMembership {
    /// Cluster index per user.
    pub assignments: Vec<usize>,
    /// Member lists per cluster, each sorted ascending.
    pub members: Vec<Vec<usize>>,
}

impl ClusterMembership {
    /// Builds the member lists from a per-user assignment vector.
    pub fn from_assignments(assignments: Vec<usize>, num_clusters: usize) -> Self {
        let mut members = vec![Vec::new(); num_clusters];
        for (ue, &l) in assignments.iter().enumerate() {
            members[l].push(ue);
        }
        ClusterMembership { assignments, members }
    }

    pub fn num_clusters(&self) -> usize {
        self.members.len()
    }
}

/// A clustering together with per-cluster boresights.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusterPlan {
    pub membership: ClusterMembership,
    /// Boresight `(theta, phi)` per cluster, radians.
    pub boresights: Vec<(f64, f64)>,
    pub policy: SteeringPolicy,
}

impl ClusterPlan {
    pub fn num_clusters(&self) -> usize {
        self.membership.num_clusters()
    }

    /// Serving cluster of a user.
    pub fn cluster_of(&self, ue: usize) -> usize {
        self.membership.assignments[ue]
    }

    /// Members of one cluster.
    pub fn members(&self, cluster: usize) -> &[usize] {
        &self.membership.members[cluster]
    }

    /// Instantiates one beam per cluster from a pattern template.
    pub fn beams(&self, template: &BeamConfig) -> Vec<BeamConfig> {
        self.boresights
            .iter()
            .map(|&b| BeamConfig { boresight: b, ..*template })
            .collect()
    }
}

/// Clustering feature vector `[theta, cos(phi), sin(phi)]`.
pub fn features(theta: f64, phi: f64) -> [f64; 3] {
    [theta, phi.cos(), phi.sin()]
}

fn dist2(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)
}

/// Farthest-point seeding: the RNG picks the first seed, each further seed
/// maximizes its distance to the chosen set (ties to the lowest index).
fn seed_centroids(feats: &[[f64; 3]], num_clusters: usize, rng: &mut ChaCha8Rng) -> Vec<[f64; 3]> {
    let first = rng.gen_range(0..feats.len());
    let mut centroids = vec![feats[first]];
    let mut min_d2: Vec<f64> = feats.iter().map(|f| dist2(f, &feats[first])).collect();
    while centroids.len() < num_clusters {
        let mut best = 0usize;
        for (i, &d) in min_d2.iter().enumerate() {
            if d > min_d2[best] {
                best = i;
            }
        }
        centroids.push(feats[best]);
        for (i, f) in feats.iter().enumerate() {
            min_d2[i] = min_d2[i].min(dist2(f, &feats[best]));
        }
    }
    centroids
}

/// Exact assignment of users to clusters with at most `capacity` members
/// each and no cluster empty.
///
/// Clusters expand into `capacity` slots; the first slot of each cluster
/// carries a constant bonus large enough that every optimal solution fills
/// it, which forbids empty clusters without distorting the choice among
/// nonempty partitions.
fn capacitated_assignment(
    feats: &[[f64; 3]],
    centroids: &[[f64; 3]],
    capacity: usize,
) -> Vec<usize> {
    let num_ues = feats.len();
    let num_clusters = centroids.len();
    let mut d2 = vec![0.0f64; num_ues * num_clusters];
    let mut max_cost = 0.0f64;
    for (u, f) in feats.iter().enumerate() {
        for (l, c) in centroids.iter().enumerate() {
            let d = dist2(f, c);
            d2[u * num_clusters + l] = d;
            max_cost = max_cost.max(d);
        }
    }
    let bonus = max_cost * (num_ues as f64 + 1.0) + 1.0;
    let cols = min_cost_assignment(num_ues, num_clusters * capacity, |u, col| {
        let cluster = col / capacity;
        let slot = col % capacity;
        d2[u * num_clusters + cluster] - if slot == 0 { bonus } else { 0.0 }
    });
    cols.into_iter().map(|col| col / capacity).collect()
}

fn update_centroids(feats: &[[f64; 3]], assignments: &[usize], num_clusters: usize) -> Vec<[f64; 3]> {
    let mut sums = vec![[0.0f64; 3]; num_clusters];
    let mut counts = vec![0usize; num_clusters];
    for (f, &l) in feats.iter().zip(assignments) {
        for k in 0..3 {
            sums[l][k] += f[k];
        }
        counts[l] += 1;
    }
    for (s, &n) in sums.iter_mut().zip(&counts) {
        debug_assert!(n > 0, "assignment step must not leave a cluster empty");
        for v in s.iter_mut() {
            *v /= n as f64;
        }
    }
    sums
}

/// K-means loop returning the assignment and the per-iteration total cost
/// (measured after each assignment step).
fn kmeans(
    feats: &[[f64; 3]],
    num_clusters: usize,
    capacity: usize,
    rng: &mut ChaCha8Rng,
) -> (Vec<usize>, Vec<f64>) {
    let mut centroids = seed_centroids(feats, num_clusters, rng);
    let mut assignments: Vec<usize> = Vec::new();
    let mut cost_trace = Vec::new();
    for _ in 0..KMEANS_MAX_ITERS {
        let next = capacitated_assignment(feats, &centroids, capacity);
        let cost: f64 = feats
            .iter()
            .zip(&next)
            .map(|(f, &l)| dist2(f, &centroids[l]))
            .sum();
        cost_trace.push(cost);
        if next == assignments {
            break;
        }
        assignments = next;
        centroids = update_centroids(feats, &assignments, num_clusters);
    }
    (assignments, cost_trace)
}

/// Partitions users into `num_clusters` clusters of at most `capacity`
/// members by capacity-constrained k-means.
///
/// Requires `num_clusters * capacity >= U` (room for everyone) and
/// `num_clusters <= U` (no cluster may be empty). Deterministic given the
/// RNG state.
pub fn cluster_ues(
    feats: &[[f64; 3]],
    num_clusters: usize,
    capacity: usize,
    rng: &mut ChaCha8Rng,
) -> Result<ClusterMembership, Error> {
    let num_ues = feats.len();
    if num_ues == 0 || num_clusters == 0 {
        return Err(Error::invalid("clustering needs at least one user and one cluster"));
    }
    if num_clusters * capacity < num_ues {
        return Err(Error::Infeasible(format!(
            "{num_clusters} clusters of capacity {capacity} cannot hold {num_ues} users"
        )));
    }
    if num_clusters > num_ues {
        return Err(Error::Infeasible(format!(
            "{num_clusters} clusters cannot all be nonempty with {num_ues} users"
        )));
    }
    let (assignments, _) = kmeans(feats, num_clusters, capacity, rng);
    Ok(ClusterMembership::from_assignments(assignments, num_clusters))
}

/// Per-member constants for steering-gain evaluation: direction cosines and
/// the candidate-independent gain factor (element gain over path loss).
struct MemberGeometry {
    u: f64,
    v: f64,
    const_lin: f64,
}

fn member_geometry(members: &[usize], ues: &[UeGeometry], template: &BeamConfig) -> Vec<MemberGeometry> {
    members
        .iter()
        .map(|&m| {
            let ue = &ues[m];
            let (u, v) = direction_cosines(ue.elevation, ue.azimuth);
            let const_db =
                element_gain_db(ue.elevation, ue.azimuth, template) - linear_to_db(ue.path_loss);
            MemberGeometry { u, v, const_lin: db_to_linear(const_db) }
        })
        .collect()
}

fn min_gain_linear_at(
    geo: &[MemberGeometry],
    template: &BeamConfig,
    boresight: (f64, f64),
) -> f64 {
    let (u0, v0) = direction_cosines(boresight.0, boresight.1);
    geo.iter()
        .map(|m| {
            m.const_lin
                * array_factor_linear_from_deltas(
                    m.u - u0,
                    m.v - v0,
                    template.nx,
                    template.ny,
                    template.spacing,
                )
        })
        .fold(f64::INFINITY, f64::min)
}

/// Minimum member channel gain of a cluster for a given boresight, dB.
///
/// The template's own boresight is ignored; its pattern parameters are used.
pub fn min_member_gain_db(
    members: &[usize],
    ues: &[UeGeometry],
    template: &BeamConfig,
    boresight: (f64, f64),
) -> f64 {
    assert!(!members.is_empty(), "cluster must be nonempty");
    let geo = member_geometry(members, ues, template);
    linear_to_db(min_gain_linear_at(&geo, template, boresight))
}

/// Smallest circular interval `(start, width)` covering all azimuths.
fn circular_interval(phis: &[f64]) -> (f64, f64) {
    if phis.len() == 1 {
        return (phis[0], 0.0);
    }
    let tau = 2.0 * std::f64::consts::PI;
    let mut sorted = phis.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len();
    let mut best_gap = sorted[0] + tau - sorted[n - 1];
    let mut start = sorted[0];
    let mut width = sorted[n - 1] - sorted[0];
    for i in 0..n - 1 {
        let gap = sorted[i + 1] - sorted[i];
        if gap > best_gap {
            best_gap = gap;
            start = sorted[i + 1];
            width = tau - gap;
        }
    }
    (start, width)
}

fn grid_points(lo: f64, hi: f64) -> Vec<f64> {
    let n = ((hi - lo) / STEER_RES + 1e-9).floor() as usize;
    (0..=n).map(|k| lo + k as f64 * STEER_RES).collect()
}

/// Candidate boresight grid for one cluster: the members' angular bounding
/// box padded by 0.5 degrees, sampled at 0.05 degrees. Azimuth handles
/// wraparound; grid phi values may exceed `[-pi, pi)` and are normalized on
/// return from the search.
pub(crate) fn steering_grid(members: &[usize], ues: &[UeGeometry]) -> (Vec<f64>, Vec<f64>) {
    let tau = 2.0 * std::f64::consts::PI;
    let thetas: Vec<f64> = members.iter().map(|&m| ues[m].elevation).collect();
    let phis: Vec<f64> = members.iter().map(|&m| ues[m].azimuth).collect();

    let t_lo = (thetas.iter().cloned().fold(f64::INFINITY, f64::min) - STEER_PAD).max(0.0);
    let t_hi = (thetas.iter().cloned().fold(f64::NEG_INFINITY, f64::max) + STEER_PAD)
        .min(std::f64::consts::FRAC_PI_2);

    let (start, width) = circular_interval(&phis);
    let padded = width + 2.0 * STEER_PAD;
    let phi_grid = if padded >= tau {
        // Cluster wraps the whole circle; sample it once around.
        let n = (tau / STEER_RES).floor() as usize;
        (0..n).map(|k| -std::f64::consts::PI + k as f64 * STEER_RES).collect()
    } else {
        grid_points(start - STEER_PAD, start + width + STEER_PAD)
    };
    (grid_points(t_lo, t_hi), phi_grid)
}

/// Boresight maximizing the minimum member channel gain over the candidate
/// grid. Ties keep the first candidate in scan order (theta-major).
pub fn steer_worst_ue(
    members: &[usize],
    ues: &[UeGeometry],
    template: &BeamConfig,
) -> (f64, f64) {
    assert!(!members.is_empty(), "cluster must be nonempty");
    let geo = member_geometry(members, ues, template);
    let (thetas, phis) = steering_grid(members, ues);
    let phi_trig: Vec<(f64, f64)> = phis.iter().map(|p| (p.cos(), p.sin())).collect();

    let mut best_gain = f64::NEG_INFINITY;
    let mut best = (thetas[0], phis[0]);
    for &theta in &thetas {
        let st = theta.sin();
        for (&phi, &(cp, sp)) in phis.iter().zip(&phi_trig) {
            let (u0, v0) = (st * cp, st * sp);
            let mut min_gain = f64::INFINITY;
            for m in &geo {
                let g = m.const_lin
                    * array_factor_linear_from_deltas(
                        m.u - u0,
                        m.v - v0,
                        template.nx,
                        template.ny,
                        template.spacing,
                    );
                if g < min_gain {
                    min_gain = g;
                }
            }
            if min_gain > best_gain {
                best_gain = min_gain;
                best = (theta, phi);
            }
        }
    }
    (best.0, normalize_azimuth(best.1))
}

/// Mean elevation and circular-mean azimuth of the members.
pub fn steer_centroid(members: &[usize], ues: &[UeGeometry]) -> (f64, f64) {
    assert!(!members.is_empty(), "cluster must be nonempty");
    let n = members.len() as f64;
    let theta = members.iter().map(|&m| ues[m].elevation).sum::<f64>() / n;
    let (sin_sum, cos_sum) = members.iter().fold((0.0, 0.0), |(s, c), &m| {
        (s + ues[m].azimuth.sin(), c + ues[m].azimuth.cos())
    });
    (theta, normalize_azimuth(sin_sum.atan2(cos_sum)))
}

/// Steers every cluster by the given policy, producing the full plan.
pub fn build_plan(
    membership: ClusterMembership,
    ues: &[UeGeometry],
    template: &BeamConfig,
    policy: SteeringPolicy,
) -> ClusterPlan {
    let boresights = membership
        .members
        .iter()
        .map(|members| match policy {
            SteeringPolicy::WorstUe => steer_worst_ue(members, ues, template),
            SteeringPolicy::Centroid => steer_centroid(members, ues),
        })
        .collect();
    ClusterPlan { membership, boresights, policy }
}
