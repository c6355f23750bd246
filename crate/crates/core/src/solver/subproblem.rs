//! Convex subproblem assembly for one SCA iteration.
//!
//! The max-min-fair problem is nonconvex because each SINR is a ratio of
//! powers. Each iteration introduces auxiliary variables: `xi` bounds a
//! SINR from below, `beta` bounds its interference-plus-noise denominator
//! from above, and the coupling `xi <= signal / beta` is replaced by its
//! first-order Taylor expansion around the previous iterate — an affine
//! under-estimator near the point, which keeps every iterate feasible and
//! the objective non-decreasing.
//!
//! Everything is noise-normalized before entering the solver: gains are
//! divided by the noise power so denominators become `1 + interference`,
//! which conditions the problem (raw gains span ten orders of magnitude).
//!
//! Variable layout (full mode): `t`, then per-user common shares `C`,
//! private powers `p`, per-(block, beam) common powers `Pc`, and the
//! auxiliaries `xi_c, xi_p, beta_c, beta_p`. Private-only mode keeps just
//! `t, p, xi_p, beta_p`.

use crate::antenna::GainMatrix;
use crate::error::Error;
use crate::rb::RbPlan;
use crate::solver::conic::ConeProgram;
use crate::solver::SolveMode;

/// Tolerance below which a beta linearization point counts as invalid
/// (normalized denominators are `1 + interference >= 1` by construction).
const BETA_FLOOR_TOL: f64 = 1e-9;

/// A solver-ready view of one network realization, noise-normalized.
pub(crate) struct Instance<'a> {
    /// Gains divided by noise power, flattened `beam * num_ues + ue`.
    norm_gains: Vec<f64>,
    pub num_beams: usize,
    pub num_ues: usize,
    pub num_rbs: usize,
    pub cluster_of: &'a [usize],
    pub rb_plan: &'a RbPlan,
    pub bandwidth: f64,
    /// Power budget, watts.
    pub budget: f64,
    pub mode: SolveMode,
}

impl<'a> Instance<'a> {
    pub fn new(
        gains: &GainMatrix,
        cluster_of: &'a [usize],
        rb_plan: &'a RbPlan,
        noise_power: f64,
        bandwidth: f64,
        budget: f64,
        mode: SolveMode,
    ) -> Result<Self, Error> {
        if noise_power <= 0.0 || bandwidth <= 0.0 || budget <= 0.0 {
            return Err(Error::invalid("noise power, bandwidth, and budget must be positive"));
        }
        let num_ues = gains.num_ues();
        let num_beams = gains.num_beams();
        if num_ues == 0 || cluster_of.len() != num_ues || rb_plan.rb_of.len() != num_ues {
            return Err(Error::invalid("instance dimensions disagree"));
        }
        if cluster_of.iter().any(|&l| l >= num_beams) {
            return Err(Error::invalid("cluster index out of range"));
        }
        let mut norm_gains = Vec::with_capacity(num_beams * num_ues);
        for l in 0..num_beams {
            for u in 0..num_ues {
                norm_gains.push(gains.get(l, u) / noise_power);
            }
        }
        Ok(Instance {
            norm_gains,
            num_beams,
            num_ues,
            num_rbs: rb_plan.num_rbs(),
            cluster_of,
            rb_plan,
            bandwidth,
            budget,
            mode,
        })
    }

    /// Noise-normalized gain of beam `l` at user `u` (1/W).
    pub fn gain(&self, l: usize, u: usize) -> f64 {
        self.norm_gains[l * self.num_ues + u]
    }

    pub fn layout(&self) -> Layout {
        Layout {
            mode: self.mode,
            num_ues: self.num_ues,
            num_rbs: self.num_rbs,
            num_beams: self.num_beams,
        }
    }
}

/// Index map from model quantities to solver variables.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Layout {
    mode: SolveMode,
    num_ues: usize,
    num_rbs: usize,
    num_beams: usize,
}

impl Layout {
    pub fn t(&self) -> usize {
        0
    }

    pub fn c(&self, u: usize) -> usize {
        debug_assert_eq!(self.mode, SolveMode::Full);
        1 + u
    }

    pub fn p(&self, u: usize) -> usize {
        match self.mode {
            SolveMode::Full => 1 + self.num_ues + u,
            SolveMode::PrivateOnly => 1 + u,
        }
    }

    pub fn pc(&self, rb: usize, beam: usize) -> usize {
        debug_assert_eq!(self.mode, SolveMode::Full);
        1 + 2 * self.num_ues + rb * self.num_beams + beam
    }

    pub fn xi_c(&self, u: usize) -> usize {
        debug_assert_eq!(self.mode, SolveMode::Full);
        1 + 2 * self.num_ues + self.num_rbs * self.num_beams + u
    }

    pub fn xi_p(&self, u: usize) -> usize {
        match self.mode {
            SolveMode::Full => 1 + 3 * self.num_ues + self.num_rbs * self.num_beams + u,
            SolveMode::PrivateOnly => 1 + self.num_ues + u,
        }
    }

    pub fn beta_c(&self, u: usize) -> usize {
        debug_assert_eq!(self.mode, SolveMode::Full);
        1 + 4 * self.num_ues + self.num_rbs * self.num_beams + u
    }

    pub fn beta_p(&self, u: usize) -> usize {
        match self.mode {
            SolveMode::Full => 1 + 5 * self.num_ues + self.num_rbs * self.num_beams + u,
            SolveMode::PrivateOnly => 1 + 2 * self.num_ues + u,
        }
    }

    pub fn num_vars(&self) -> usize {
        match self.mode {
            SolveMode::Full => 1 + 6 * self.num_ues + self.num_rbs * self.num_beams,
            SolveMode::PrivateOnly => 1 + 3 * self.num_ues,
        }
    }
}

/// The linearization point carried between SCA iterations
/// (noise-normalized units; `betas` are `1 + interference`).
#[derive(Debug, Clone)]
pub(crate) struct ScaPoint {
    pub p: Vec<f64>,
    /// Flattened `rb * num_beams + beam`; all zero in private-only mode.
    pub pc: Vec<f64>,
    pub beta_p: Vec<f64>,
    pub beta_c: Vec<f64>,
}

/// Evaluates both beta families at their defining right-hand sides for the
/// given private powers: `beta_p[u] = 1 + sum_{k on u's block, k != u}
/// p[k] g(l(k), u)` and `beta_c[u]` the same sum without the exclusion.
pub(crate) fn defining_betas(instance: &Instance, p: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let mut beta_p = vec![0.0; instance.num_ues];
    let mut beta_c = vec![0.0; instance.num_ues];
    for u in 0..instance.num_ues {
        let rb = instance.rb_plan.rb_of[u];
        let mut total = 0.0;
        let mut own = 0.0;
        for &k in &instance.rb_plan.co_scheduled[rb] {
            let received = p[k] * instance.gain(instance.cluster_of[k], u);
            total += received;
            if k == u {
                own = received;
            }
        }
        beta_c[u] = 1.0 + total;
        beta_p[u] = 1.0 + (total - own);
    }
    (beta_p, beta_c)
}

/// Uniform power start: full mode splits the budget half common (spread
/// over every block-beam pair) and half private (spread over users);
/// private-only mode gives the whole budget to the private streams.
pub(crate) fn initial_point(instance: &Instance) -> ScaPoint {
    let num_pc = instance.num_rbs * instance.num_beams;
    let (p, pc) = match instance.mode {
        SolveMode::Full => (
            vec![instance.budget / 2.0 / instance.num_ues as f64; instance.num_ues],
            vec![instance.budget / 2.0 / num_pc as f64; num_pc],
        ),
        SolveMode::PrivateOnly => {
            (vec![instance.budget / instance.num_ues as f64; instance.num_ues], vec![0.0; num_pc])
        }
    };
    let (beta_p, beta_c) = defining_betas(instance, &p);
    ScaPoint { p, pc, beta_p, beta_c }
}

/// Affine under-estimator of the private SINR bound `p g / beta` around
/// `(p0, b0)`: returns `(a, c, v)` with surrogate
/// `v + a (p - p0) - c (beta - b0)`, i.e. the constraint
/// `xi - a p + c beta <= v`.
pub(crate) fn private_cap_coeffs(g: f64, p0: f64, b0: f64) -> (f64, f64, f64) {
    let v = p0 * g / b0;
    (g / b0, p0 * g / (b0 * b0), v)
}

/// Surrogate value of the private cap at an arbitrary `(p, beta)`.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn taylor_private(g: f64, p0: f64, b0: f64, p: f64, beta: f64) -> f64 {
    let (a, c, v) = private_cap_coeffs(g, p0, b0);
    v + a * (p - p0) - c * (beta - b0)
}

/// Affine under-estimator of the common SINR bound
/// `sum_l pc[l] g[l] / beta` around `(pc0, b0)`: returns per-beam
/// coefficients `a[l]`, the beta coefficient `c`, and the value `v`.
pub(crate) fn common_cap_coeffs(gs: &[f64], pc0: &[f64], b0: f64) -> (Vec<f64>, f64, f64) {
    let signal: f64 = gs.iter().zip(pc0).map(|(g, p)| g * p).sum();
    let v = signal / b0;
    (gs.iter().map(|g| g / b0).collect(), signal / (b0 * b0), v)
}

/// Surrogate value of the common cap at an arbitrary `(pc, beta)`.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn taylor_common(gs: &[f64], pc0: &[f64], b0: f64, pc: &[f64], beta: f64) -> f64 {
    let (a, c, v) = common_cap_coeffs(gs, pc0, b0);
    let delta: f64 = a.iter().zip(pc.iter().zip(pc0)).map(|(ai, (x, x0))| ai * (x - x0)).sum();
    v + delta - c * (beta - b0)
}

/// Row/cone tallies of a built subproblem, by constraint family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct ConstraintCounts {
    pub variables: usize,
    pub budget_rows: usize,
    /// Non-negativity bounds on shares, powers, and xi variables.
    pub bound_rows: usize,
    /// Beta lower bounds from the interference sums.
    pub interference_rows: usize,
    /// Taylor surrogate rows coupling xi, powers, and beta.
    pub taylor_rows: usize,
    /// Exponential cones carrying the log-rate constraints.
    pub rate_cones: usize,
}

pub(crate) fn constraint_counts(instance: &Instance) -> ConstraintCounts {
    let u = instance.num_ues;
    let pc = instance.num_rbs * instance.num_beams;
    match instance.mode {
        SolveMode::Full => ConstraintCounts {
            variables: 1 + 6 * u + pc,
            budget_rows: 1,
            bound_rows: 4 * u + pc,
            interference_rows: 2 * u,
            taylor_rows: 2 * u,
            rate_cones: 2 * u,
        },
        SolveMode::PrivateOnly => ConstraintCounts {
            variables: 1 + 3 * u,
            budget_rows: 1,
            bound_rows: 2 * u,
            interference_rows: u,
            taylor_rows: u,
            rate_cones: u,
        },
    }
}

/// Materializes the convex subproblem at the given linearization point.
pub(crate) fn build_subproblem(
    instance: &Instance,
    point: &ScaPoint,
) -> Result<ConeProgram, Error> {
    let layout = instance.layout();
    let full = instance.mode == SolveMode::Full;
    for u in 0..instance.num_ues {
        let bad_p = point.beta_p[u] < 1.0 - BETA_FLOOR_TOL;
        let bad_c = full && point.beta_c[u] < 1.0 - BETA_FLOOR_TOL;
        if bad_p || bad_c {
            return Err(Error::invalid(format!(
                "linearization point has a denominator below the noise floor at user {u}"
            )));
        }
    }

    let mut program = ConeProgram::new(layout.num_vars());
    program.set_objective(&[(layout.t(), -1.0)]);
    let ln2_over_b = std::f64::consts::LN_2 / instance.bandwidth;

    // Power budget.
    {
        let mut terms: Vec<(usize, f64)> =
            (0..instance.num_ues).map(|u| (layout.p(u), 1.0)).collect();
        if full {
            for rb in 0..instance.num_rbs {
                for l in 0..instance.num_beams {
                    terms.push((layout.pc(rb, l), 1.0));
                }
            }
        }
        program.add_ineq(&terms, instance.budget);
    }

    // Non-negativity bounds.
    for u in 0..instance.num_ues {
        if full {
            program.add_ineq(&[(layout.c(u), -1.0)], 0.0);
        }
        program.add_ineq(&[(layout.p(u), -1.0)], 0.0);
        if full {
            program.add_ineq(&[(layout.xi_c(u), -1.0)], 0.0);
        }
        program.add_ineq(&[(layout.xi_p(u), -1.0)], 0.0);
    }
    if full {
        for rb in 0..instance.num_rbs {
            for l in 0..instance.num_beams {
                program.add_ineq(&[(layout.pc(rb, l), -1.0)], 0.0);
            }
        }
    }

    // Interference bounds: beta must dominate 1 + received private power.
    for u in 0..instance.num_ues {
        let rb = instance.rb_plan.rb_of[u];
        let mut private: Vec<(usize, f64)> = vec![(layout.beta_p(u), -1.0)];
        for &k in &instance.rb_plan.co_scheduled[rb] {
            if k != u {
                private.push((layout.p(k), instance.gain(instance.cluster_of[k], u)));
            }
        }
        program.add_ineq(&private, -1.0);

        if full {
            let mut common: Vec<(usize, f64)> = vec![(layout.beta_c(u), -1.0)];
            for &k in &instance.rb_plan.co_scheduled[rb] {
                common.push((layout.p(k), instance.gain(instance.cluster_of[k], u)));
            }
            program.add_ineq(&common, -1.0);
        }
    }

    // Taylor surrogate rows: xi - grad_power . power + c beta <= v.
    for u in 0..instance.num_ues {
        let g_serving = instance.gain(instance.cluster_of[u], u);
        let (a, c, v) = private_cap_coeffs(g_serving, point.p[u], point.beta_p[u]);
        program.add_ineq(
            &[(layout.xi_p(u), 1.0), (layout.p(u), -a), (layout.beta_p(u), c)],
            v,
        );

        if full {
            let rb = instance.rb_plan.rb_of[u];
            let gs: Vec<f64> = (0..instance.num_beams).map(|l| instance.gain(l, u)).collect();
            let pc0: Vec<f64> = (0..instance.num_beams)
                .map(|l| point.pc[rb * instance.num_beams + l])
                .collect();
            let (a, c, v) = common_cap_coeffs(&gs, &pc0, point.beta_c[u]);
            let mut terms: Vec<(usize, f64)> =
                vec![(layout.xi_c(u), 1.0), (layout.beta_c(u), c)];
            for (l, &al) in a.iter().enumerate() {
                terms.push((layout.pc(rb, l), -al));
            }
            program.add_ineq(&terms, v);
        }
    }

    // Rate cones. Private: t - C_u <= B log2(1 + xi_p[u]).
    for u in 0..instance.num_ues {
        let mut s1: Vec<(usize, f64)> = vec![(layout.t(), ln2_over_b)];
        if full {
            s1.push((layout.c(u), -ln2_over_b));
        }
        program.add_exp_cone([
            (s1, 0.0),
            (vec![], 1.0),
            (vec![(layout.xi_p(u), 1.0)], 1.0),
        ]);
    }

    // Common-share caps: for every block and every listener j on it,
    // sum of shares on the block <= B log2(1 + xi_c[j]).
    if full {
        for rb in 0..instance.num_rbs {
            let members = &instance.rb_plan.co_scheduled[rb];
            if members.is_empty() {
                continue;
            }
            let share_sum: Vec<(usize, f64)> =
                members.iter().map(|&k| (layout.c(k), ln2_over_b)).collect();
            for &j in members {
                program.add_exp_cone([
                    (share_sum.clone(), 0.0),
                    (vec![], 1.0),
                    (vec![(layout.xi_c(j), 1.0)], 1.0),
                ]);
            }
        }
    }

    debug_assert_eq!(
        {
            let counts = constraint_counts(instance);
            (
                counts.budget_rows + counts.bound_rows + counts.interference_rows
                    + counts.taylor_rows,
                counts.rate_cones,
            )
        },
        (program.num_nonneg_rows(), program.num_exp_cones()),
        "constraint tally drifted from the builder"
    );
    Ok(program)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rb_plan(rb_of: Vec<usize>, num_rbs: usize) -> RbPlan {
        let mut co_scheduled = vec![Vec::new(); num_rbs];
        for (u, &r) in rb_of.iter().enumerate() {
            co_scheduled[r].push(u);
        }
        RbPlan { rb_of, co_scheduled }
    }

    #[test]
    fn taylor_equals_true_ratio_at_its_own_point() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let g = rng.gen::<f64>() * 100.0 + 0.1;
            let p0 = rng.gen::<f64>() * 10.0 + 0.01;
            let b0 = 1.0 + rng.gen::<f64>() * 50.0;
            let surrogate = taylor_private(g, p0, b0, p0, b0);
            let truth = p0 * g / b0;
            assert!(
                ((surrogate - truth) / truth).abs() < 1e-15,
                "tangency broken: {surrogate} vs {truth}"
            );

            let gs = [g, g * 0.3, g * 2.0];
            let pc0 = [p0, p0 * 0.5, p0 * 0.1];
            let s = taylor_common(&gs, &pc0, b0, &pc0, b0);
            let t: f64 = gs.iter().zip(&pc0).map(|(a, b)| a * b).sum::<f64>() / b0;
            assert!(((s - t) / t).abs() < 1e-14);
        }
    }

    #[test]
    fn taylor_gradients_match_finite_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..30 {
            let g = rng.gen::<f64>() * 100.0 + 0.1;
            let p0 = rng.gen::<f64>() * 10.0 + 0.1;
            let b0 = 1.0 + rng.gen::<f64>() * 50.0;
            let (a, c, _) = private_cap_coeffs(g, p0, b0);

            let f = |p: f64, b: f64| p * g / b;
            let hp = p0 * 1e-6;
            let hb = b0 * 1e-6;
            let dp = (f(p0 + hp, b0) - f(p0 - hp, b0)) / (2.0 * hp);
            let db = (f(p0, b0 + hb) - f(p0, b0 - hb)) / (2.0 * hb);
            assert!(((dp - a) / a).abs() < 1e-6, "d/dp: {dp} vs {a}");
            assert!(((db - (-c)) / c).abs() < 1e-6, "d/dbeta: {db} vs {}", -c);

            let gs = [g, g * 0.4];
            let pc0 = [p0, p0 * 0.7];
            let (av, cc, _) = common_cap_coeffs(&gs, &pc0, b0);
            let fc = |x0: f64, x1: f64, b: f64| (gs[0] * x0 + gs[1] * x1) / b;
            let d0 = (fc(pc0[0] + hp, pc0[1], b0) - fc(pc0[0] - hp, pc0[1], b0)) / (2.0 * hp);
            let d1 = (fc(pc0[0], pc0[1] + hp, b0) - fc(pc0[0], pc0[1] - hp, b0)) / (2.0 * hp);
            let dbc = (fc(pc0[0], pc0[1], b0 + hb) - fc(pc0[0], pc0[1], b0 - hb)) / (2.0 * hb);
            assert!(((d0 - av[0]) / av[0]).abs() < 1e-6);
            assert!(((d1 - av[1]) / av[1]).abs() < 1e-6);
            assert!(((dbc - (-cc)) / cc).abs() < 1e-6);
        }
    }

    #[test]
    fn taylor_under_estimates_within_trust_region() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let g = rng.gen::<f64>() * 100.0 + 0.1;
            let p0 = rng.gen::<f64>() * 10.0 + 0.1;
            let b0 = 1.0 + rng.gen::<f64>() * 50.0;
            for da in [-0.1, 0.0, 0.1] {
                for db in [-0.1, 0.0, 0.1] {
                    let p = p0 * (1.0 + da);
                    let b = b0 * (1.0 + db);
                    let truth = p * g / b;
                    let surrogate = taylor_private(g, p0, b0, p, b);
                    assert!(
                        surrogate <= truth + 1e-12 * truth.abs(),
                        "surrogate {surrogate} overshoots {truth} at da={da}, db={db}"
                    );
                }
            }
        }
    }

    /// Synthetic full-scale instance: 6 clusters of 10 users, 10 blocks,
    /// each cluster spread across all blocks.
    fn full_scale<'a>(cluster_of: &'a [usize], rb: &'a RbPlan, gains: &GainMatrix) -> Instance<'a> {
        Instance::new(gains, cluster_of, rb, 1.0, 1.0, 316.227_766_016_837_9, SolveMode::Full)
            .unwrap()
    }

    #[test]
    fn constraint_counts_at_scale() {
        let cluster_of: Vec<usize> = (0..60).map(|u| u / 10).collect();
        let rb = rb_plan((0..60).map(|u| u % 10).collect(), 10);
        let gains = GainMatrix::from_values(6, 60, vec![1.0; 360]);
        let instance = full_scale(&cluster_of, &rb, &gains);

        let counts = constraint_counts(&instance);
        assert_eq!(counts.variables, 1 + 6 * 60 + 60);
        assert_eq!(counts.budget_rows, 1);
        assert_eq!(counts.bound_rows, 4 * 60 + 60);
        assert_eq!(counts.interference_rows, 120, "one beta bound per user per stream kind");
        assert_eq!(counts.taylor_rows, 120);
        assert_eq!(counts.rate_cones, 120, "60 private rate cones plus one cap per listener");

        let point = initial_point(&instance);
        let program = build_subproblem(&instance, &point).unwrap();
        assert_eq!(program.num_vars(), counts.variables);
        assert_eq!(
            program.num_nonneg_rows(),
            counts.budget_rows + counts.bound_rows + counts.interference_rows + counts.taylor_rows
        );
        assert_eq!(program.num_exp_cones(), counts.rate_cones);
    }

    #[test]
    fn private_only_counts() {
        let cluster_of = vec![0, 0, 1, 1];
        let rb = rb_plan(vec![0, 1, 0, 1], 2);
        let gains = GainMatrix::from_values(2, 4, vec![1.0; 8]);
        let instance =
            Instance::new(&gains, &cluster_of, &rb, 1.0, 1.0, 10.0, SolveMode::PrivateOnly)
                .unwrap();
        let counts = constraint_counts(&instance);
        assert_eq!(counts.variables, 1 + 12);
        assert_eq!(counts.bound_rows, 8);
        assert_eq!(counts.interference_rows, 4);
        assert_eq!(counts.taylor_rows, 4);
        assert_eq!(counts.rate_cones, 4);

        let point = initial_point(&instance);
        let program = build_subproblem(&instance, &point).unwrap();
        assert_eq!(program.num_vars(), 13);
        assert_eq!(program.num_exp_cones(), 4);
    }

    #[test]
    fn defining_betas_hand_example() {
        // Two co-block users, cross gains 3 and 5 (normalized), powers 2, 4.
        let cluster_of = vec![0, 1];
        let rb = rb_plan(vec![0, 0], 1);
        let gains = GainMatrix::from_values(2, 2, vec![10.0, 3.0, 5.0, 20.0]);
        let instance =
            Instance::new(&gains, &cluster_of, &rb, 1.0, 1.0, 10.0, SolveMode::Full).unwrap();
        let (beta_p, beta_c) = defining_betas(&instance, &[2.0, 4.0]);
        // User 0 hears user 1 through beam 1: 4 * 5 = 20; its own signal is
        // 2 * 10 = 20.
        assert_eq!(beta_p[0], 21.0);
        assert_eq!(beta_c[0], 41.0);
        // User 1 hears user 0 through beam 0: 2 * 3 = 6; own 4 * 20 = 80.
        assert_eq!(beta_p[1], 7.0);
        assert_eq!(beta_c[1], 87.0);
    }

    #[test]
    fn initial_point_splits_the_budget() {
        let cluster_of: Vec<usize> = (0..60).map(|u| u / 10).collect();
        let rb = rb_plan((0..60).map(|u| u % 10).collect(), 10);
        let gains = GainMatrix::from_values(6, 60, vec![1.0; 360]);
        let instance = full_scale(&cluster_of, &rb, &gains);
        let point = initial_point(&instance);

        let per_entry = 2.635_231_383_473_649_4;
        for &p in point.p.iter().chain(&point.pc) {
            assert!(((p - per_entry) / per_entry).abs() < 1e-12, "entry {p}");
        }
        let total: f64 = point.p.iter().sum::<f64>() + point.pc.iter().sum::<f64>();
        assert!(
            ((total - instance.budget) / instance.budget).abs() < 1e-12,
            "initial power {total} should exhaust the budget {}",
            instance.budget
        );
        assert!(point.beta_p.iter().all(|&b| b >= 1.0));
        assert!(point.beta_c.iter().all(|&b| b >= 1.0));
    }

    #[test]
    fn invalid_linearization_point_is_rejected() {
        let cluster_of = vec![0];
        let rb = rb_plan(vec![0], 1);
        let gains = GainMatrix::from_values(1, 1, vec![1.0]);
        let instance =
            Instance::new(&gains, &cluster_of, &rb, 1.0, 1.0, 10.0, SolveMode::Full).unwrap();
        let mut point = initial_point(&instance);
        point.beta_p[0] = 0.5;
        assert!(build_subproblem(&instance, &point).is_err());
    }
}
