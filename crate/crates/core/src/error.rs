//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by configuration, modeling, and solver entry points.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration field or function argument is out of its valid domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A configuration file could not be parsed.
    #[error("config parse error at line {line}: {reason}")]
    ConfigParse { line: usize, reason: String },

    /// A requested clustering or scheduling instance has no feasible solution.
    #[error("infeasible instance: {0}")]
    Infeasible(String),

    /// The conic backend failed to return a usable iterate.
    #[error("subproblem solve failed: {0}")]
    SolverFailure(String),

    /// Too many Monte Carlo realizations failed to solve.
    #[error("campaign aborted: {failed} of {total} realizations failed (limit {limit_percent}%)")]
    CampaignFailure {
        failed: usize,
        total: usize,
        limit_percent: f64,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
