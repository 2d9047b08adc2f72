//! Arithmetic layer: monic integer polynomials with totally real roots
//! confined to [-2 sqrt(q), 2 sqrt(q)], their root measures, and lifts of
//! real traces to complex numbers of absolute value sqrt(q).
//!
//! Root locations are certified with exact rational Sturm sequences,
//! including sign evaluation at the irrational segment endpoints. Floating
//! point enters only when finished root brackets become atom positions for
//! an `equilib_core::Measure`.

mod enumerate;
mod error;
mod lift;
mod multiset;
mod poly;

pub use enumerate::{
    enumerate_totally_real, is_irreducible_small_degree, is_totally_real_in_segment, SEARCH_BUDGET,
};
pub use error::{Error, Result};
pub use lift::{is_prime_power, lift_to_weil, WeilPair};
pub use multiset::{
    mu_of_multiset, mu_of_multiset_weighted, BoundaryWeighting, RealTraceMultiset,
};
pub use poly::{sturm_count, IntegerPolynomial};
