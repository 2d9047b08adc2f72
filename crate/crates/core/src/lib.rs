//! Logarithmic potential theory on the real line: measures with atoms and
//! density pieces, potentials and energies with singularity-aware quadrature,
//! equilibrium measures and capacities of interval unions, and the
//! non-negativity criterion with its equilibrium-measure approximation
//! pipeline.

pub mod config;
pub mod equilibrium;
pub mod error;
pub mod measure;
pub mod potential;
pub mod quad;
pub mod realize;

pub use config::Config;
pub use equilibrium::{
    capacity, kernel_matrix, segment_equilibrium, solve_equilibrium, verify_equilibrium,
    EquilibriumCheck, EquilibriumResult, Panel, PanelGrid,
};
pub use error::{Error, Result};
pub use measure::{Atom, Density, DensityPiece, IntervalUnion, Measure};
pub use potential::{
    energy, lebesgue_reference_potential, log_potential, potential_profile, ComplexPoint,
    PotentialProfile,
};
pub use realize::{
    atomize, check_serre_criterion, construct_approximation, convergence_report,
    min_potential_real, negativity_intervals, ApproximationStep, ConvergenceReport,
    CriterionVerdict, NegativitySet,
};
