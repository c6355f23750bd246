//! Deterministic simulator and optimization library for multi-beam
//! high-altitude platform station (HAPS) downlinks.
//!
//! A HAPS at stratospheric altitude serves ground users through a planar
//! antenna array that forms one beam per user cluster. All beams share the
//! same spectrum, so co-scheduled users interfere. The library models the
//! full downlink chain and optimizes it for max-min fairness:
//!
//! * [`geometry`]: user drops on a coverage disk, elevation/azimuth angles,
//!   free-space path loss.
//! * [`antenna`]: element pattern, planar-array factor, and the beam-gain
//!   matrix coupling every beam to every user.
//! * [`clustering`]: capacity-constrained k-means on angular features plus
//!   beam-steering policies (worst-user grid search or cluster centroid).
//! * [`rb`]: interference-aware resource-block assignment, orthogonal within
//!   each cluster.
//! * [`rsma`]: rate-splitting signal model, common/private SINRs and rates,
//!   feasibility checks.
//! * [`solver`]: max-min-fair power allocation via successive convex
//!   approximation over exponential-cone subproblems.
//! * [`campaign`]: Monte Carlo orchestration, empirical CDFs, antenna-size
//!   sweeps, CSV/JSON reporting.
//!
//! Everything is deterministic: a campaign is a pure function of its
//! configuration and seed, and per-realization RNG streams make results
//! independent of parallel scheduling.
//!
//! Runnable walkthroughs live in `examples/`; see the crate README.

pub mod antenna;
pub mod campaign;
pub mod clustering;
pub mod config;
pub mod error;
pub mod geometry;
pub mod rb;
pub mod rng;
pub mod rsma;
pub mod solver;
pub mod units;

mod assignment;

pub use antenna::{BeamConfig, GainMatrix};
pub use clustering::{ClusterMembership, ClusterPlan, SteeringPolicy};
pub use config::ScenarioConfig;
pub use error::Error;
pub use geometry::UeGeometry;
pub use rb::RbPlan;
pub use rsma::RsmaAllocation;
