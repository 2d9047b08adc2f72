//! Numerical knobs shared across the crate.
//!
//! Every routine that discretizes something takes a [`Config`] so callers can
//! trade accuracy for speed. The defaults are tuned for absolute errors around
//! 1e-8 on single integrals and 1e-6 on double integrals at interval lengths
//! of order one.

#[derive(Debug, Clone, serde::Serialize)]
pub struct Config {
    /// Gauss-Legendre order used by the density quadrature.
    pub gl_order: usize,
    /// Number of equal panels for smooth (far-field) quadrature.
    pub far_panels: usize,
    /// Grid size of the real-axis scan in `min_potential_real`.
    pub scan_points: usize,
    /// Pass threshold for the non-negativity criterion: minima down to
    /// `-criterion_tol` still pass, so boundary measures are not rejected
    /// for rounding reasons.
    pub criterion_tol: f64,
    /// Target for the equilibrium KKT residual.
    pub kkt_tol: f64,
    /// Projected step size below which the solver stops.
    pub step_tol: f64,
    /// Iteration cap for the equilibrium solver.
    pub max_iters: usize,
    /// Panels per unit length when discretizing an interval union.
    pub panels_per_unit: usize,
    /// Lower bound on the panel count of a single component.
    pub min_panels: usize,
    /// Geometric refinement levels applied to the first and last panel of
    /// each component (equilibrium densities blow up like an inverse square
    /// root at endpoints).
    pub edge_levels: usize,
    /// Ratio of the geometric edge refinement.
    pub edge_ratio: f64,
    /// Panels per density piece for the energy double sum.
    pub energy_panels: usize,
    /// Refinement grid size for the Kolmogorov distance.
    pub weak_refine: usize,
    /// Seed points between consecutive atoms when locating negativity sets.
    pub seed_points_per_gap: usize,
    /// Absolute abscissa accuracy of sign-change bisection.
    pub bisect_tol: f64,
    /// Negativity intervals closer than this are merged.
    pub merge_tol: f64,
    /// Grid size per side for `verify_equilibrium`.
    pub verify_points: usize,
    /// Height of the off-axis line used for potential-gap reporting.
    pub offslab_im: f64,
    /// Grid size of the potential-gap scan.
    pub gap_grid: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            gl_order: 32,
            far_panels: 8,
            scan_points: 4096,
            criterion_tol: 1e-9,
            kkt_tol: 1e-6,
            step_tol: 1e-14,
            max_iters: 50_000,
            panels_per_unit: 300,
            min_panels: 4,
            edge_levels: 4,
            edge_ratio: 0.25,
            energy_panels: 3000,
            weak_refine: 2048,
            seed_points_per_gap: 64,
            bisect_tol: 1e-12,
            merge_tol: 1e-9,
            verify_points: 2000,
            offslab_im: 0.25,
            gap_grid: 257,
        }
    }
}
