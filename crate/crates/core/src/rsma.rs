//! Rate-splitting signal model: SINRs, rates, and feasibility audits.
//!
//! On each resource block every beam may carry a common stream on top of
//! its members' private streams. A user first decodes the block-wide
//! common signal — formed by all beams' common powers on its block —
//! treating every private stream (including its own) as noise, removes it,
//! then decodes its private stream with only the other users' private
//! streams left as interference:
//!
//! ```text
//! gamma_c(u) = sum_l Pc[r_u][l] g[l][u] / (sum_{k in U_r} p[k] g[l(k)][u] + noise)
//! gamma_p(u) = p[u] g[l(u)][u]         / (sum_{k != u}   p[k] g[l(k)][u] + noise)
//! ```
//!
//! Rates are `B log2(1 + gamma)`. The common rate a block can carry is
//! capped by its weakest listener, so the per-user common shares `C[u]`
//! scheduled on block `r` must satisfy `sum C <= min_u Rc(u)`. A user's
//! total rate is its common share plus its private rate.

use crate::antenna::GainMatrix;
use crate::error::Error;
use crate::rb::RbPlan;

/// Transmit-side decision variables: common power per (block, beam),
/// private power per user, and the common-rate share granted to each user.
#[derive(Debug, Clone, PartialEq)]
pub struct RsmaAllocation {
    num_rbs: usize,
    num_beams: usize,
    /// Common power in watts, flattened as `rb * num_beams + beam`.
    pub common_power: Vec<f64>,
    /// Private power per user, watts.
    pub private_power: Vec<f64>,
    /// Common-rate share per user, bits/s.
    pub common_share: Vec<f64>,
}

impl RsmaAllocation {
    pub fn zeros(num_rbs: usize, num_beams: usize, num_ues: usize) -> Self {
        RsmaAllocation {
            num_rbs,
            num_beams,
            common_power: vec![0.0; num_rbs * num_beams],
            private_power: vec![0.0; num_ues],
            common_share: vec![0.0; num_ues],
        }
    }

    pub fn num_rbs(&self) -> usize {
        self.num_rbs
    }

    pub fn num_beams(&self) -> usize {
        self.num_beams
    }

    pub fn num_ues(&self) -> usize {
        self.private_power.len()
    }

    pub fn common_power_at(&self, rb: usize, beam: usize) -> f64 {
        self.common_power[rb * self.num_beams + beam]
    }

    pub fn set_common_power(&mut self, rb: usize, beam: usize, watts: f64) {
        self.common_power[rb * self.num_beams + beam] = watts;
    }

    /// Total transmit power across all common and private streams, watts.
    pub fn total_power(&self) -> f64 {
        self.common_power.iter().sum::<f64>() + self.private_power.iter().sum::<f64>()
    }
}

/// Everything `evaluate` derives from an allocation.
#[derive(Debug, Clone)]
pub struct RateReport {
    pub common_sinr: Vec<f64>,
    pub private_sinr: Vec<f64>,
    pub common_rate: Vec<f64>,
    pub private_rate: Vec<f64>,
    /// Per-user total rate: common share plus private rate.
    pub total_rate: Vec<f64>,
    /// Per-block common-rate cap (`+inf` for empty blocks).
    pub rb_common_cap: Vec<f64>,
    pub min_rate: f64,
}

/// Signed feasibility slacks; every entry must be `>= -tol` for the
/// allocation to count as feasible.
#[derive(Debug, Clone)]
pub struct ViolationReport {
    /// Power budget minus total transmit power.
    pub power_slack: f64,
    /// Smallest entry across powers and shares (negative iff some entry is).
    pub min_nonneg_slack: f64,
    /// Per-block: common-rate cap minus the sum of scheduled shares.
    pub rb_cap_slacks: Vec<f64>,
}

impl ViolationReport {
    pub fn is_feasible(&self, tol: f64) -> bool {
        self.power_slack >= -tol
            && self.min_nonneg_slack >= -tol
            && self.rb_cap_slacks.iter().all(|&s| s >= -tol)
    }

    /// Most violated slack (the minimum over all reported slacks).
    pub fn worst_slack(&self) -> f64 {
        self.rb_cap_slacks
            .iter()
            .fold(self.power_slack.min(self.min_nonneg_slack), |m, &s| m.min(s))
    }
}

/// Evaluates the signal model for a fixed geometry, clustering, and
/// block schedule.
pub struct RateModel<'a> {
    gains: &'a GainMatrix,
    cluster_of: &'a [usize],
    rb_plan: &'a RbPlan,
    noise_power: f64,
    bandwidth: f64,
}

impl<'a> RateModel<'a> {
    pub fn new(
        gains: &'a GainMatrix,
        cluster_of: &'a [usize],
        rb_plan: &'a RbPlan,
        noise_power: f64,
        bandwidth: f64,
    ) -> Result<Self, Error> {
        if noise_power <= 0.0 || bandwidth <= 0.0 {
            return Err(Error::invalid("noise power and bandwidth must be positive"));
        }
        if cluster_of.len() != gains.num_ues() || rb_plan.rb_of.len() != gains.num_ues() {
            return Err(Error::invalid("cluster map, block plan, and gain matrix disagree on user count"));
        }
        Ok(RateModel { gains, cluster_of, rb_plan, noise_power, bandwidth })
    }

    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    pub fn noise_power(&self) -> f64 {
        self.noise_power
    }

    /// Total private-stream power received at `u` from everyone on its
    /// block, optionally excluding `u` itself.
    fn private_interference(&self, alloc: &RsmaAllocation, u: usize, exclude_self: bool) -> f64 {
        let rb = self.rb_plan.rb_of[u];
        self.rb_plan.co_scheduled[rb]
            .iter()
            .filter(|&&k| !(exclude_self && k == u))
            .map(|&k| alloc.private_power[k] * self.gains.get(self.cluster_of[k], u))
            .sum()
    }

    /// SINR of the block-wide common stream at user `u`. All private
    /// streams on the block, including `u`'s own, count as noise because
    /// the common stream is decoded first.
    pub fn common_sinr(&self, alloc: &RsmaAllocation, u: usize) -> f64 {
        let rb = self.rb_plan.rb_of[u];
        let signal: f64 = (0..self.gains.num_beams())
            .map(|l| alloc.common_power_at(rb, l) * self.gains.get(l, u))
            .sum();
        signal / (self.private_interference(alloc, u, false) + self.noise_power)
    }

    /// SINR of user `u`'s private stream after the common stream has been
    /// removed.
    pub fn private_sinr(&self, alloc: &RsmaAllocation, u: usize) -> f64 {
        let signal = alloc.private_power[u] * self.gains.get(self.cluster_of[u], u);
        signal / (self.private_interference(alloc, u, true) + self.noise_power)
    }

    /// Shannon rate for an SINR, bits/s.
    pub fn rate(&self, sinr: f64) -> f64 {
        self.bandwidth * (1.0 + sinr).log2()
    }

    pub fn common_rate(&self, alloc: &RsmaAllocation, u: usize) -> f64 {
        self.rate(self.common_sinr(alloc, u))
    }

    pub fn private_rate(&self, alloc: &RsmaAllocation, u: usize) -> f64 {
        self.rate(self.private_sinr(alloc, u))
    }

    /// Common rate block `r` can carry: the weakest listener's common rate,
    /// or `+inf` when the block is empty.
    pub fn rb_common_rate(&self, alloc: &RsmaAllocation, r: usize) -> f64 {
        self.rb_plan.co_scheduled[r]
            .iter()
            .map(|&u| self.common_rate(alloc, u))
            .fold(f64::INFINITY, f64::min)
    }

    /// Common share plus private rate.
    pub fn total_rate(&self, alloc: &RsmaAllocation, u: usize) -> f64 {
        alloc.common_share[u] + self.private_rate(alloc, u)
    }

    /// Evaluates every SINR, rate, and cap in one pass.
    pub fn evaluate(&self, alloc: &RsmaAllocation) -> RateReport {
        let num_ues = self.gains.num_ues();
        let common_sinr: Vec<f64> = (0..num_ues).map(|u| self.common_sinr(alloc, u)).collect();
        let private_sinr: Vec<f64> = (0..num_ues).map(|u| self.private_sinr(alloc, u)).collect();
        let common_rate: Vec<f64> = common_sinr.iter().map(|&s| self.rate(s)).collect();
        let private_rate: Vec<f64> = private_sinr.iter().map(|&s| self.rate(s)).collect();
        let total_rate: Vec<f64> = (0..num_ues)
            .map(|u| alloc.common_share[u] + private_rate[u])
            .collect();
        let rb_common_cap: Vec<f64> = (0..self.rb_plan.num_rbs())
            .map(|r| {
                self.rb_plan.co_scheduled[r]
                    .iter()
                    .map(|&u| common_rate[u])
                    .fold(f64::INFINITY, f64::min)
            })
            .collect();
        let min_rate = total_rate.iter().cloned().fold(f64::INFINITY, f64::min);
        RateReport { common_sinr, private_sinr, common_rate, private_rate, total_rate, rb_common_cap, min_rate }
    }

    /// Audits an allocation against the power budget, non-negativity, and
    /// every per-block common-share cap. Purely reporting; never fails.
    pub fn validate(&self, alloc: &RsmaAllocation, power_budget: f64) -> ViolationReport {
        let power_slack = power_budget - alloc.total_power();
        let min_nonneg_slack = alloc
            .common_power
            .iter()
            .chain(&alloc.private_power)
            .chain(&alloc.common_share)
            .cloned()
            .fold(f64::INFINITY, f64::min);
        let rb_cap_slacks = (0..self.rb_plan.num_rbs())
            .map(|r| {
                let shares: f64 = self.rb_plan.co_scheduled[r]
                    .iter()
                    .map(|&u| alloc.common_share[u])
                    .sum();
                self.rb_common_rate(alloc, r) - shares
            })
            .collect();
        ViolationReport { power_slack, min_nonneg_slack, rb_cap_slacks }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const NOISE: f64 = 1e-13;

    fn rb_plan(rb_of: Vec<usize>, num_rbs: usize) -> RbPlan {
        let mut co_scheduled = vec![Vec::new(); num_rbs];
        for (u, &r) in rb_of.iter().enumerate() {
            co_scheduled[r].push(u);
        }
        RbPlan { rb_of, co_scheduled }
    }

    /// One beam, one user, one block.
    fn solo_model(gain: f64) -> (GainMatrix, Vec<usize>, RbPlan) {
        (GainMatrix::from_values(1, 1, vec![gain]), vec![0], rb_plan(vec![0], 1))
    }

    #[test]
    fn zero_common_power_gives_zero_common_sinr() {
        let (gains, clusters, rb) = solo_model(1e-12);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(1, 1, 1);
        alloc.private_power[0] = 0.7;
        assert_eq!(model.common_sinr(&alloc, 0), 0.0);
    }

    #[test]
    fn common_sinr_half_identity() {
        // Common and private each received at exactly noise power, and the
        // common decoder treats the user's own private stream as noise:
        // noise / (noise + noise) = 1/2.
        let gain = 1e-12;
        let (gains, clusters, rb) = solo_model(gain);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(1, 1, 1);
        alloc.set_common_power(0, 0, NOISE / gain);
        alloc.private_power[0] = NOISE / gain;
        assert!((model.common_sinr(&alloc, 0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn two_cluster_instance_matches_direct_formula() {
        // Two clusters of two users, two blocks; every gain, power, and
        // share distinct. The expected values re-apply the definitions with
        // bare arithmetic.
        let gains = GainMatrix::from_values(
            2,
            4,
            vec![
                3e-12, 2e-12, 5e-13, 4e-13, // beam 0 at users 0..4
                6e-13, 7e-13, 4e-12, 3e-12, // beam 1 at users 0..4
            ],
        );
        let clusters = vec![0, 0, 1, 1];
        let rb = rb_plan(vec![0, 1, 0, 1], 2);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(2, 2, 4);
        alloc.set_common_power(0, 0, 2.0);
        alloc.set_common_power(0, 1, 1.0);
        alloc.set_common_power(1, 0, 0.5);
        alloc.set_common_power(1, 1, 1.5);
        alloc.private_power = vec![1.0, 2.0, 3.0, 4.0];

        // User 0 (cluster 0, block 0; co-scheduled with user 2 of cluster 1).
        let num0 = 2.0 * 3e-12 + 1.0 * 6e-13;
        let den0 = 1.0 * 3e-12 + 3.0 * 6e-13 + NOISE;
        assert!((model.common_sinr(&alloc, 0) - num0 / den0).abs() < 1e-12);
        let p0 = (1.0 * 3e-12) / (3.0 * 6e-13 + NOISE);
        assert!((model.private_sinr(&alloc, 0) - p0).abs() < 1e-12);

        // User 3 (cluster 1, block 1; co-scheduled with user 1 of cluster 0).
        let num3 = 0.5 * 4e-13 + 1.5 * 3e-12;
        let den3 = 2.0 * 4e-13 + 4.0 * 3e-12 + NOISE;
        assert!((model.common_sinr(&alloc, 3) - num3 / den3).abs() < 1e-12);
        let p3 = (4.0 * 3e-12) / (2.0 * 4e-13 + NOISE);
        assert!((model.private_sinr(&alloc, 3) - p3).abs() < 1e-12);
    }

    #[test]
    fn sole_user_private_sinr_is_snr() {
        let (gains, clusters, rb) = solo_model(1e-12);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(1, 1, 1);
        alloc.private_power[0] = 1.0;
        assert!((model.private_sinr(&alloc, 0) - 10.0).abs() < 1e-12);

        alloc.private_power[0] = 0.0;
        assert_eq!(model.private_sinr(&alloc, 0), 0.0);
    }

    #[test]
    fn symmetric_pair_private_sinr() {
        let gains = GainMatrix::from_values(2, 2, vec![2e-12, 1e-12, 1e-12, 2e-12]);
        let clusters = vec![0, 1];
        let rb = rb_plan(vec![0, 0], 1);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(1, 2, 2);
        alloc.private_power = vec![1.0, 1.0];
        let expected = 2e-12 / (1e-12 + 1e-13);
        for u in 0..2 {
            let got = model.private_sinr(&alloc, u);
            assert!(
                (got - expected).abs() < 1e-12,
                "user {u}: {got} vs {expected}"
            );
        }
        assert!((expected - 1.818_181_818_181_818).abs() < 1e-12);
    }

    #[test]
    fn rate_reference_points() {
        let (gains, clusters, rb) = solo_model(1e-12);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        assert_eq!(model.rate(0.0), 0.0);
        assert!((model.rate(1.0) - 1.0).abs() < 1e-15);
        assert!((model.rate(10.0) - 3.459_431_618_637_297_3).abs() < 1e-12);

        let wide = RateModel::new(&gains, &clusters, &rb, NOISE, 5.0).unwrap();
        assert!((wide.rate(1.0) - 5.0).abs() < 1e-14);
    }

    /// Three users on one block whose common SINRs are 3, 7, 31 by
    /// construction, hence common rates 2, 3, 5.
    fn three_rate_model() -> (GainMatrix, Vec<usize>, RbPlan) {
        let gains = GainMatrix::from_values(1, 3, vec![3.0, 7.0, 31.0]);
        (gains, vec![0, 0, 0], rb_plan(vec![0, 0, 0], 1))
    }

    #[test]
    fn block_common_rate_is_the_weakest_listener() {
        let (gains, clusters, rb) = three_rate_model();
        let model = RateModel::new(&gains, &clusters, &rb, 1.0, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(1, 1, 3);
        alloc.set_common_power(0, 0, 1.0);
        let rates: Vec<f64> = (0..3).map(|u| model.common_rate(&alloc, u)).collect();
        for (got, want) in rates.iter().zip([2.0, 3.0, 5.0]) {
            assert!((got - want).abs() < 1e-12);
        }
        assert!((model.rb_common_rate(&alloc, 0) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn singleton_and_empty_blocks() {
        let gains = GainMatrix::from_values(1, 1, vec![7.0]);
        let clusters = vec![0];
        let rb = rb_plan(vec![1], 2);
        let model = RateModel::new(&gains, &clusters, &rb, 1.0, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(2, 1, 1);
        alloc.set_common_power(1, 0, 1.0);
        assert!((model.rb_common_rate(&alloc, 1) - 3.0).abs() < 1e-12);
        assert_eq!(model.rb_common_rate(&alloc, 0), f64::INFINITY, "empty block caps nothing");
    }

    #[test]
    fn randomized_block_cap_matches_brute_force_min() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let num_ues = rng.gen_range(2..=8);
            let values: Vec<f64> = (0..num_ues).map(|_| rng.gen::<f64>() * 1e-11).collect();
            let gains = GainMatrix::from_values(1, num_ues, values);
            let clusters = vec![0; num_ues];
            let rb = rb_plan(vec![0; num_ues], 1);
            let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
            let mut alloc = RsmaAllocation::zeros(1, 1, num_ues);
            alloc.set_common_power(0, 0, rng.gen::<f64>() + 0.1);
            for p in alloc.private_power.iter_mut() {
                *p = rng.gen::<f64>();
            }
            let brute = (0..num_ues)
                .map(|u| model.common_rate(&alloc, u))
                .fold(f64::INFINITY, f64::min);
            assert_eq!(model.rb_common_rate(&alloc, 0), brute);
        }
    }

    #[test]
    fn total_rate_adds_share_and_private() {
        let (gains, clusters, rb) = solo_model(1e-12);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(1, 1, 1);
        alloc.private_power[0] = 3e-13 / 1e-12; // private SINR 3, rate 2
        assert!((model.total_rate(&alloc, 0) - 2.0).abs() < 1e-12, "zero share: private only");
        alloc.common_share[0] = 1.0;
        assert!((model.total_rate(&alloc, 0) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn evaluate_report_is_internally_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let gains = GainMatrix::from_values(
            2,
            4,
            (0..8).map(|_| rng.gen::<f64>() * 1e-11 + 1e-14).collect(),
        );
        let clusters = vec![0, 0, 1, 1];
        let rb = rb_plan(vec![0, 1, 0, 1], 2);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(2, 2, 4);
        for v in alloc.common_power.iter_mut().chain(&mut alloc.private_power) {
            *v = rng.gen::<f64>() * 2.0;
        }
        for c in alloc.common_share.iter_mut() {
            *c = rng.gen::<f64>() * 0.1;
        }
        let report = model.evaluate(&alloc);
        let mut min_rate = f64::INFINITY;
        for u in 0..4 {
            let rel = |a: f64, b: f64| (a - b).abs() / b.abs().max(1e-30);
            assert!(rel(report.common_sinr[u], model.common_sinr(&alloc, u)) < 1e-9);
            assert!(rel(report.private_sinr[u], model.private_sinr(&alloc, u)) < 1e-9);
            assert!(rel(report.common_rate[u], model.common_rate(&alloc, u)) < 1e-9);
            assert!(rel(report.private_rate[u], model.private_rate(&alloc, u)) < 1e-9);
            let total = alloc.common_share[u] + model.private_rate(&alloc, u);
            assert!(rel(report.total_rate[u], total) < 1e-9);
            min_rate = min_rate.min(total);
        }
        for r in 0..2 {
            assert_eq!(report.rb_common_cap[r], model.rb_common_rate(&alloc, r));
        }
        assert!((report.min_rate - min_rate).abs() < 1e-12);
    }

    #[test]
    fn validation_slacks() {
        let (gains, clusters, rb) = solo_model(1e-12);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();
        let budget = 316.227_766_016_837_9;

        let zero = RsmaAllocation::zeros(1, 1, 1);
        let report = model.validate(&zero, budget);
        assert_eq!(report.power_slack, budget, "zero allocation leaves the whole budget");
        assert!(report.is_feasible(0.0));

        let mut over = RsmaAllocation::zeros(1, 1, 1);
        over.private_power[0] = budget + 1.0;
        let report = model.validate(&over, budget);
        assert!((report.power_slack - (-1.0)).abs() < 1e-9, "1 W over budget");
        assert!(!report.is_feasible(1e-6));

        let mut negative = RsmaAllocation::zeros(1, 1, 1);
        negative.private_power[0] = -1.0;
        let report = model.validate(&negative, budget);
        assert_eq!(report.min_nonneg_slack, -1.0);
        assert!(!report.is_feasible(1e-6));
        assert_eq!(report.worst_slack(), -1.0);
    }

    #[test]
    fn share_cap_slack_round_trip() {
        let (gains, clusters, rb) = three_rate_model();
        let model = RateModel::new(&gains, &clusters, &rb, 1.0, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(1, 1, 3);
        alloc.set_common_power(0, 0, 1.0); // block cap 2.0
        alloc.common_share = vec![0.5, 0.5, 0.5];
        let report = model.validate(&alloc, 10.0);
        assert!((report.rb_cap_slacks[0] - 0.5).abs() < 1e-12);
        assert!(report.is_feasible(1e-9));

        alloc.common_share = vec![1.0, 1.0, 0.5];
        let report = model.validate(&alloc, 10.0);
        assert!((report.rb_cap_slacks[0] - (-0.5)).abs() < 1e-12);
        assert!(!report.is_feasible(1e-6));
    }

    #[test]
    fn private_sinr_monotone_in_own_power_and_scale_invariant() {
        let gains = GainMatrix::from_values(2, 2, vec![2e-12, 1e-12, 1e-12, 2e-12]);
        let clusters = vec![0, 1];
        let rb = rb_plan(vec![0, 0], 1);
        let model = RateModel::new(&gains, &clusters, &rb, NOISE, 1.0).unwrap();

        // Strictly increasing in the user's own private power.
        let mut last = -1.0;
        for k in 1..=10 {
            let mut alloc = RsmaAllocation::zeros(1, 2, 2);
            alloc.private_power = vec![0.1 * k as f64, 1.0];
            let s = model.private_sinr(&alloc, 0);
            assert!(s > last, "SINR should rise with own power: {s} after {last}");
            last = s;
        }

        // With no interferer, scaling up power scales the SINR.
        let (g1, c1, r1) = solo_model(1e-12);
        let solo = RateModel::new(&g1, &c1, &r1, NOISE, 1.0).unwrap();
        let mut alloc = RsmaAllocation::zeros(1, 1, 1);
        alloc.private_power[0] = 1.0;
        let base = solo.private_sinr(&alloc, 0);
        alloc.private_power[0] = 2.0;
        assert!(solo.private_sinr(&alloc, 0) > base);

        // In the interference-limited regime uniform scaling cancels.
        let tiny_noise = RateModel::new(&gains, &clusters, &rb, NOISE * 1e-6, 1.0).unwrap();
        let mut a1 = RsmaAllocation::zeros(1, 2, 2);
        a1.private_power = vec![0.3, 0.7];
        let mut a2 = a1.clone();
        for p in a2.private_power.iter_mut() {
            *p *= 5.0;
        }
        let s1 = tiny_noise.private_sinr(&a1, 0);
        let s2 = tiny_noise.private_sinr(&a2, 0);
        assert!(
            ((s1 - s2) / s1).abs() < 1e-5,
            "uniform scaling should cancel when noise is negligible: {s1} vs {s2}"
        );
    }
}
