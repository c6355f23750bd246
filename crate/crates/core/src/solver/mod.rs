//! Max-min-fair power and common-share allocation by successive convex
//! approximation (SCA).
//!
//! Each iteration linearizes the nonconvex SINR couplings around the
//! previous iterate, solves the resulting exponential-cone program, and
//! moves the linearization point toward the new optimizer. The linearized
//! rate caps are tangent at the point but not global under-estimators, so
//! an unguarded full step can overshoot into a region where the claimed
//! objective `t` (the worst user's rate) was optimistic and ground is
//! lost. Every step is therefore scored on the exact signal model before
//! acceptance: the full step is taken when it keeps the certified
//! objective non-decreasing, and otherwise the move is geometrically
//! damped back toward the accepted allocation until the ascent resumes or
//! the objective plateaus. The loop stops when the relative change of the
//! accepted objective falls below the configured tolerance, or on plateau.
//!
//! The returned allocation is certified: powers are clamped and rescaled
//! to satisfy the budget exactly, true (non-approximated) SINRs are
//! re-evaluated, and common shares are scaled down per block wherever the
//! surrogate overstated a block's common-rate cap. The reported
//! `certified_min_rate` always comes from the true signal model.

mod conic;
mod subproblem;

pub use conic::SolveStatus;

use crate::antenna::GainMatrix;
use crate::clustering::ClusterPlan;
use crate::config::ScenarioConfig;
use crate::error::Error;
use crate::rb::RbPlan;
use crate::rsma::{RateModel, RateReport, RsmaAllocation};
use std::time::Instant;
use subproblem::{build_subproblem, defining_betas, initial_point, Instance, ScaPoint};

/// Deepest step damping tried after a rejected step: `2^-6` of the full step.
const MAX_BACKTRACKS: usize = 6;

/// Which streams the optimizer may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    /// Common and private streams (rate splitting).
    Full,
    /// Private streams only; common powers and shares pinned to zero.
    PrivateOnly,
}

/// One SCA iteration's record.
#[derive(Debug, Clone)]
pub struct ScaIteration {
    pub iteration: usize,
    /// Certified max-min objective of the accepted iterate, bits/s:
    /// the worst user's rate under the true signal model. Non-decreasing
    /// across iterations by construction.
    pub objective: f64,
    /// The subproblem's claimed objective `t`, bits/s; tangent surrogates
    /// may let it overstate what the iterate truly achieves.
    pub claim: f64,
    pub status: SolveStatus,
    pub solve_seconds: f64,
}

/// Full iteration history of one SCA run.
#[derive(Debug, Clone)]
pub struct ScaTrace {
    pub iterations: Vec<ScaIteration>,
    /// Whether the relative-change stop fired before the iteration cap.
    pub converged: bool,
}

impl ScaTrace {
    pub fn final_objective(&self) -> f64 {
        self.iterations.last().map_or(0.0, |it| it.objective)
    }
}

/// A certified allocation with its optimization history.
#[derive(Debug, Clone)]
pub struct MmfSolution {
    pub allocation: RsmaAllocation,
    /// Last surrogate objective `t` (may slightly overstate true rates).
    pub surrogate_objective: f64,
    /// Worst user's total rate under the true signal model, bits/s.
    pub certified_min_rate: f64,
    /// True-model evaluation of the returned allocation.
    pub report: RateReport,
    pub trace: ScaTrace,
}

/// Runs the SCA loop with rate splitting enabled.
pub fn run_sca(
    gains: &GainMatrix,
    plan: &ClusterPlan,
    rb_plan: &RbPlan,
    config: &ScenarioConfig,
) -> Result<MmfSolution, Error> {
    solve_mmf(gains, plan, rb_plan, config, SolveMode::Full)
}

/// Runs the SCA loop with only private streams (no rate splitting).
pub fn run_no_rsma(
    gains: &GainMatrix,
    plan: &ClusterPlan,
    rb_plan: &RbPlan,
    config: &ScenarioConfig,
) -> Result<MmfSolution, Error> {
    solve_mmf(gains, plan, rb_plan, config, SolveMode::PrivateOnly)
}

/// Maximizes the minimum user rate over powers and common shares.
pub fn solve_mmf(
    gains: &GainMatrix,
    plan: &ClusterPlan,
    rb_plan: &RbPlan,
    config: &ScenarioConfig,
    mode: SolveMode,
) -> Result<MmfSolution, Error> {
    let num_ues = gains.num_ues();
    let num_beams = gains.num_beams();
    let num_rbs = rb_plan.num_rbs();
    let cluster_of = plan.membership.assignments.as_slice();
    let instance = Instance::new(
        gains,
        cluster_of,
        rb_plan,
        config.noise_power,
        config.bandwidth,
        config.total_power,
        mode,
    )?;
    let layout = instance.layout();
    let full = mode == SolveMode::Full;

    // Certification model: evaluates any candidate allocation against the
    // true signal equations, independent of the surrogate.
    let model = RateModel::new(gains, cluster_of, rb_plan, config.noise_power, config.bandwidth)?;
    // If the surrogate let a block promise more common rate than its weakest
    // listener can decode, shrink that block's shares uniformly until they
    // fit, then re-score. The result is feasible by construction.
    let certify = |mut allocation: RsmaAllocation| -> (RsmaAllocation, RateReport) {
        let mut report = model.evaluate(&allocation);
        let mut adjusted = false;
        for rb in 0..num_rbs {
            let cap = report.rb_common_cap[rb];
            let promised: f64 = rb_plan.co_scheduled[rb]
                .iter()
                .map(|&u| allocation.common_share[u])
                .sum();
            if promised > cap && promised > 0.0 {
                let scale = (cap / promised).clamp(0.0, 1.0);
                for &u in &rb_plan.co_scheduled[rb] {
                    allocation.common_share[u] *= scale;
                }
                adjusted = true;
            }
        }
        if adjusted {
            report = model.evaluate(&allocation);
        }
        (allocation, report)
    };

    // Projects a raw solver iterate onto the exact power constraints (clamp
    // residuals below zero, rescale into the budget) and reads the claimed
    // objective out of the epigraph variable.
    let extract = |solution: &conic::ConicSolution| -> (f64, Vec<f64>, Vec<f64>, Vec<f64>) {
        let objective = solution.x[layout.t()];
        let mut p: Vec<f64> = (0..num_ues).map(|u| solution.x[layout.p(u)].max(0.0)).collect();
        let mut pc = vec![0.0; num_rbs * num_beams];
        let mut c = vec![0.0; num_ues];
        if full {
            for rb in 0..num_rbs {
                for l in 0..num_beams {
                    pc[rb * num_beams + l] = solution.x[layout.pc(rb, l)].max(0.0);
                }
            }
            for (u, share) in c.iter_mut().enumerate() {
                *share = solution.x[layout.c(u)].max(0.0);
            }
        }
        let total: f64 = p.iter().sum::<f64>() + pc.iter().sum::<f64>();
        if total > config.total_power {
            let scale = config.total_power / total;
            for v in p.iter_mut().chain(pc.iter_mut()) {
                *v *= scale;
            }
        }
        (objective, p, pc, c)
    };
    // Builds the linearization point carried by a power vector: the betas
    // are re-evaluated at their defining interference sums rather than read
    // back from the solver. Wherever a user's rate constraint is active the
    // two agree (the bound binds), but for slack users the solver may park
    // beta anywhere above the bound, and linearizing there would tilt the
    // next surrogate away from the true operating point and destabilize the
    // iteration.
    let point_at = |p: Vec<f64>, pc: Vec<f64>| -> ScaPoint {
        let (beta_p, beta_c) = defining_betas(&instance, &p);
        ScaPoint { p, pc, beta_p, beta_c }
    };

    let mut point = initial_point(&instance);
    let mut iterations: Vec<ScaIteration> = Vec::new();
    let mut converged = false;
    let mut accepted_objective: Option<f64> = None;
    let mut best: Option<(RsmaAllocation, RateReport)> = None;

    'outer: for iteration in 0..config.sca_max_iters.max(1) {
        let started = Instant::now();
        let program = build_subproblem(&instance, &point)?;
        let solution = program.solve()?;
        let solve_seconds = started.elapsed().as_secs_f64();
        let (claim, p, pc, c) = extract(&solution);

        // The surrogate rate caps are tangent under-estimators, not global
        // ones, so the subproblem's claim can overstate what its optimizer
        // truly achieves, and a full step can then lose ground. Every step
        // is therefore scored on the exact signal model before acceptance:
        // take the full step when it keeps the certified objective
        // non-decreasing (the common case, identical to the unguarded
        // iteration), otherwise geometrically dampen the move back toward
        // the accepted allocation — whose certified value the interpolants
        // approach continuously — and re-score without another solve. If
        // even the smallest damped step loses ground the run has plateaued.
        let mut accepted = None;
        for attempt in 0..=MAX_BACKTRACKS {
            let alpha = 0.5f64.powi(attempt as i32);
            let mut candidate = RsmaAllocation::zeros(num_rbs, num_beams, num_ues);
            candidate.private_power =
                point.p.iter().zip(&p).map(|(a, b)| a + alpha * (b - a)).collect();
            candidate.common_power =
                point.pc.iter().zip(&pc).map(|(a, b)| a + alpha * (b - a)).collect();
            candidate.common_share = best.as_ref().map_or_else(
                || c.clone(),
                |(alloc, _): &(RsmaAllocation, RateReport)| {
                    alloc.common_share.iter().zip(&c).map(|(a, b)| a + alpha * (b - a)).collect()
                },
            );
            let (candidate, report) = certify(candidate);
            let floor = best
                .as_ref()
                .map_or(f64::NEG_INFINITY, |(_, r)| r.min_rate - 1e-9 * r.min_rate.abs().max(1.0));
            if report.min_rate >= floor {
                accepted = Some((candidate, report));
                break;
            }
        }
        let Some((candidate, report)) = accepted else {
            // Not even a microscopic move toward the optimizer helps: the
            // certified objective has plateaued, which is the convergence
            // event.
            converged = true;
            break 'outer;
        };

        let objective = report.min_rate;
        point = point_at(candidate.private_power.clone(), candidate.common_power.clone());
        best = Some((candidate, report));
        iterations.push(ScaIteration { iteration, objective, claim, status: solution.status, solve_seconds });
        if let Some(prev) = accepted_objective {
            if (objective - prev).abs() / prev.abs().max(1e-12) <= config.sca_tol {
                converged = true;
                break;
            }
        }
        accepted_objective = Some(objective);
    }

    let (allocation, report) =
        best.expect("the iteration loop runs at least once and always records a candidate");
    let surrogate_objective = iterations.last().map_or(0.0, |it| it.claim);
    Ok(MmfSolution {
        certified_min_rate: report.min_rate,
        allocation,
        surrogate_objective,
        report,
        trace: ScaTrace { iterations, converged },
    })
}
