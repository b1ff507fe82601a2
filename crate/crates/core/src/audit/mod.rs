//! Grid verification of the identities and inequalities behind the depth
//! computations.
//!
//! [`gamma`] supplies the floating-point special functions, [`checks`] the
//! pointwise exact and numeric predicates, and [`grids`] the named sweeps
//! the command line exposes.  Exact checks use only integer arithmetic and
//! are margin-free; strict floating-point inequalities must clear a
//! configurable margin so rounding noise cannot masquerade as a
//! counterexample.

pub mod checks;
pub mod gamma;
pub mod grids;

use serde::Serialize;

/// Margin a strict floating-point inequality must clear.
pub const DEFAULT_MARGIN: f64 = 1e-9;

/// Seed for the randomized grids, fixed so runs are reproducible.
pub const DEFAULT_SEED: u64 = 0x4869_6c62;

/// One grid point that failed, with both sides rendered as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditFailure {
    pub parameters: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of sweeping one named check over a parameter grid.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub check_name: String,
    pub grid_description: String,
    pub total_points: u64,
    pub failures: Vec<AuditFailure>,
}

impl AuditReport {
    /// A sweep passes when no grid point produced a counterexample.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
