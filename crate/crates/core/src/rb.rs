//! Greedy interference-aware resource-block allocation.
//!
//! Within a cluster every member must occupy a distinct resource block
//! (intra-beam orthogonality), so interference only arrives from other
//! beams sharing the same block. Users are processed in order of
//! descending serving-beam gain; each picks, among the blocks its own
//! cluster has not used yet, the one minimizing the interference it would
//! receive from the users already scheduled there. Ties go to the lowest
//! block index, which makes the procedure fully deterministic.

use crate::antenna::GainMatrix;
use crate::clustering::ClusterPlan;
use crate::error::Error;

/// A complete user-to-resource-block schedule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbPlan {
    /// Resource-block index per user.
    pub rb_of: Vec<usize>,
    /// Users sharing each resource block, sorted ascending.
    pub co_scheduled: Vec<Vec<usize>>,
}

impl RbPlan {
    pub fn num_rbs(&self) -> usize {
        self.co_scheduled.len()
    }
}

/// Assigns every user a resource block.
///
/// Fails if any cluster has more members than there are blocks, since its
/// members could not all be kept orthogonal.
pub fn allocate_rbs(
    plan: &ClusterPlan,
    gains: &GainMatrix,
    num_rbs: usize,
) -> Result<RbPlan, Error> {
    let num_ues = plan.membership.assignments.len();
    if num_rbs == 0 {
        return Err(Error::invalid("need at least one resource block"));
    }
    if gains.num_ues() != num_ues || gains.num_beams() != plan.num_clusters() {
        return Err(Error::invalid(format!(
            "gain matrix is {}x{} but the plan has {} clusters and {} users",
            gains.num_beams(),
            gains.num_ues(),
            plan.num_clusters(),
            num_ues
        )));
    }
    for (l, members) in plan.membership.members.iter().enumerate() {
        if members.len() > num_rbs {
            return Err(Error::Infeasible(format!(
                "cluster {l} has {} members but only {num_rbs} resource blocks exist",
                members.len()
            )));
        }
    }

    let serving = |u: usize| gains.get(plan.cluster_of(u), u);
    let mut order: Vec<usize> = (0..num_ues).collect();
    order.sort_by(|&a, &b| serving(b).total_cmp(&serving(a)).then(a.cmp(&b)));

    let mut rb_of = vec![usize::MAX; num_ues];
    let mut cluster_used = vec![vec![false; num_rbs]; plan.num_clusters()];
    let mut co_scheduled: Vec<Vec<usize>> = vec![Vec::new(); num_rbs];
    for &u in &order {
        let l = plan.cluster_of(u);
        let mut best: Option<(usize, f64)> = None;
        for r in 0..num_rbs {
            if cluster_used[l][r] {
                continue;
            }
            let interference: f64 = co_scheduled[r]
                .iter()
                .map(|&j| gains.get(plan.cluster_of(j), u))
                .sum();
            if best.is_none_or(|(_, b)| interference < b) {
                best = Some((r, interference));
            }
        }
        let (r, _) = best.expect("capacity check guarantees a free block");
        rb_of[u] = r;
        cluster_used[l][r] = true;
        co_scheduled[r].push(u);
    }
    for users in &mut co_scheduled {
        users.sort_unstable();
    }
    Ok(RbPlan { rb_of, co_scheduled })
}
