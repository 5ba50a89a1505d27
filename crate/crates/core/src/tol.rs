//! Centralized numerical tolerances.
//!
//! Every validation threshold used by the library lives in one record so the
//! contracts stay consistent across modules.

/// Absolute tolerances for state validation and numerical linear algebra.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    /// Allowed |sum of |amplitude|^2 - 1| for pure states and input qubits.
    pub normalization: f64,
    /// Allowed max |m[i][j] - conj(m[j][i])| in Hermitian checks.
    pub hermiticity: f64,
    /// Allowed |Tr(rho) - 1| for density matrices.
    pub unit_trace: f64,
    /// Eigenvalues in [-psd_floor, 0) clamp to 0; below -psd_floor is an error.
    pub psd_floor: f64,
    /// Target eigenpair residual ||M v - lambda v||.
    pub eigen_residual: f64,
    /// Allowed deviation from column orthonormality in isometry checks.
    pub isometry: f64,
    /// Slack for closed parameter ranges (machine parameter bounds,
    /// X-form positivity).
    pub bound_slack: f64,
    /// Relative spectral floor: eigenvalues at or below rel_zero * lambda_max
    /// collapse to exact 0 before square roots are taken. Rank-deficient
    /// states otherwise leak sqrt(machine-epsilon) noise (~1e-8) into
    /// concurrence, far above the accuracy the measures promise.
    pub rel_zero: f64,
    /// Allowed normalization deviation for machine amplitude sets entered as
    /// rounded decimals (looser than `normalization`, which exact
    /// constructions meet).
    pub machine_normalization: f64,
}

/// Defaults used everywhere in the crate.
pub const TOL: Tolerances = Tolerances {
    normalization: 1e-12,
    hermiticity: 1e-10,
    unit_trace: 1e-10,
    psd_floor: 1e-10,
    eigen_residual: 1e-9,
    isometry: 1e-10,
    bound_slack: 1e-12,
    rel_zero: 1e-13,
    machine_normalization: 1e-5,
};

impl Default for Tolerances {
    fn default() -> Self {
        TOL
    }
}
