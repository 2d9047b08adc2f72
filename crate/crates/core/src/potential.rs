//! Logarithmic potentials and energies.
//!
//! The potential of a measure `mu` at a point `z` is the integral of
//! `ln|w - z|` in `d mu(w)`; its energy is the double integral of
//! `ln|x - y|`. Both live in the reals extended by negative infinity:
//! evaluating the potential at an atom, or the energy of any measure with an
//! atomic part, gives `f64::NEG_INFINITY`.
//!
//! Uniform and arcsine pieces are integrated in closed form (the arcsine
//! potential is the exterior Green's function of its interval, shifted by the
//! Robin constant `ln((b-a)/4)`). Polynomial pieces go through quadrature:
//! the piece is split at the real part of `z` whenever `z` sits close enough
//! to the axis, the density value at the split point is integrated against
//! the closed-form log integral, and the remainder, which vanishes at the
//! singularity, is handled by geometrically graded Gauss-Legendre panels.
//! Tabulated pieces integrate their linear interpolant cell by cell in
//! closed form.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::measure::{horner, Density, DensityPiece, Measure};
use crate::quad;

/// A point of the complex plane, split into real and imaginary parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint {
    pub x: f64,
    pub y: f64,
}

impl ComplexPoint {
    pub fn new(x: f64, y: f64) -> Self {
        ComplexPoint { x, y }
    }

    pub fn real(x: f64) -> Self {
        ComplexPoint { x, y: 0.0 }
    }
}

impl From<(f64, f64)> for ComplexPoint {
    fn from((x, y): (f64, f64)) -> Self {
        ComplexPoint { x, y }
    }
}

/// Potential values along a grid of evaluation points.
#[derive(Debug, Clone)]
pub struct PotentialProfile {
    pub measure_id: String,
    pub points: Vec<ComplexPoint>,
    pub values: Vec<f64>,
}

/// Logarithmic potential of `mu` at `z`.
///
/// Accepts any measure of positive mass (not only probability measures); the
/// potential scales linearly in the mass and only signs matter downstream.
/// Returns `f64::NEG_INFINITY` exactly when `z` coincides with an atom.
pub fn log_potential(mu: &Measure, z: ComplexPoint, cfg: &Config) -> Result<f64> {
    let m = mu.mass();
    if !(m > 0.0) || !m.is_finite() {
        return Err(Error::ZeroMass);
    }
    let mut acc = 0.0;
    for a in mu.atoms() {
        let d = (a.position - z.x).hypot(z.y);
        if d == 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        acc += a.weight * d.ln();
    }
    for p in mu.pieces() {
        acc += piece_potential(p, z, cfg);
    }
    Ok(acc)
}

/// Potential profile over a list of points, tagged with a caller-chosen id.
pub fn potential_profile(
    mu: &Measure,
    measure_id: &str,
    points: &[ComplexPoint],
    cfg: &Config,
) -> Result<PotentialProfile> {
    let values = points
        .iter()
        .map(|&z| log_potential(mu, z, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(PotentialProfile {
        measure_id: measure_id.to_string(),
        points: points.to_vec(),
        values,
    })
}

/// Closed-form potential of the density-one (Lebesgue) measure of `[-a, a]`
/// at a real point `y` strictly inside the interval:
/// `(y+a)(ln(y+a) - 1) + (a-y)(ln(a-y) - 1)`.
///
/// The minimum over the interval is `2a(ln a - 1)` at `y = 0`, which is
/// non-negative exactly when `a >= e`.
pub fn lebesgue_reference_potential(a: f64, y: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("half-length must be positive, got {a}")));
    }
    if !(y.abs() < a) {
        return Err(Error::Domain(format!(
            "reference potential needs |y| < a, got y = {y}, a = {a}"
        )));
    }
    Ok((y + a) * ((y + a).ln() - 1.0) + (a - y) * ((a - y).ln() - 1.0))
}

/// Logarithmic energy of `mu`: the double integral of `ln|x - y|`.
///
/// Any atom makes the energy `-inf`. For diffuse measures the pieces are cut
/// into panels (with geometric refinement at arcsine endpoints), the panel
/// masses are taken from the exact piece CDFs, and the kernel is averaged in
/// closed form panel against panel; the diagonal uses
/// `h^2 (ln h - 3/2)`, the exact same-panel integral.
pub fn energy(mu: &Measure, cfg: &Config) -> Result<f64> {
    let m = mu.mass();
    if !(m > 0.0) || !m.is_finite() {
        return Err(Error::ZeroMass);
    }
    if mu.has_atoms() {
        return Ok(f64::NEG_INFINITY);
    }
    let mut panels: Vec<(f64, f64, f64)> = Vec::new(); // (lo, hi, mass)
    for p in mu.pieces() {
        let bounds = energy_panel_bounds(p, cfg);
        for w in bounds.windows(2) {
            let mass = p.cdf(w[1]) - p.cdf(w[0]);
            if mass > 0.0 || w[1] > w[0] {
                panels.push((w[0], w[1], mass));
            }
        }
    }
    // Rows are accumulated in parallel but added serially so the result does
    // not depend on how the work was split.
    let rows: Vec<f64> = panels
        .par_iter()
        .enumerate()
        .map(|(i, &(l1, r1, m1))| {
            let mut row = m1 * m1 * quad::mean_log_kernel(l1, r1, l1, r1);
            for &(l2, r2, m2) in &panels[i + 1..] {
                row += 2.0 * m1 * m2 * quad::mean_log_kernel(l1, r1, l2, r2);
            }
            row
        })
        .collect();
    Ok(rows.iter().sum())
}

fn energy_panel_bounds(p: &DensityPiece, cfg: &Config) -> Vec<f64> {
    let n = cfg.energy_panels.max(8);
    let (lo, hi) = (p.lo(), p.hi());
    let mut bounds = Vec::with_capacity(n + 1);
    bounds.push(lo);
    match p.density() {
        // Equal-mass panels from the angular parametrization. Equal widths
        // would leave an O(h^2) bias from the inverse square root endpoints;
        // with uniform panel masses the uniform-spread model stays second
        // order accurate all the way to the edge.
        Density::Arcsine { .. } => {
            let mid = 0.5 * (lo + hi);
            let r = 0.5 * (hi - lo);
            for k in 1..n {
                let theta = std::f64::consts::PI * (k as f64 / n as f64 - 0.5);
                bounds.push(mid + r * theta.sin());
            }
        }
        _ => {
            let h = (hi - lo) / n as f64;
            for i in 1..n {
                bounds.push(lo + i as f64 * h);
            }
        }
    }
    bounds.push(hi);
    bounds.dedup();
    bounds
}

fn piece_potential(p: &DensityPiece, z: ComplexPoint, cfg: &Config) -> f64 {
    match p.density() {
        Density::Uniform { level } => level * segment_log_integral(p.lo(), p.hi(), z),
        Density::Arcsine { mass } => mass * arcsine_potential(p.lo(), p.hi(), z),
        Density::Poly { coeffs } => poly_potential(p.lo(), p.hi(), coeffs, z, cfg),
        Density::Table { values } => table_potential(p.lo(), p.hi(), values, z),
    }
}

// Antiderivative of ln|t - z| in t, written in u = t - Re z:
// A(u) = u/2 ln(u^2 + y^2) - u + y atan(u / y).
fn log_antiderivative(u: f64, y: f64) -> f64 {
    if y == 0.0 {
        if u == 0.0 {
            0.0
        } else {
            u * u.abs().ln() - u
        }
    } else {
        0.5 * u * (u * u + y * y).ln() - u + y * (u / y).atan()
    }
}

/// Exact integral of `ln|t - z|` for `t` over `[l, r]`.
fn segment_log_integral(l: f64, r: f64, z: ComplexPoint) -> f64 {
    log_antiderivative(r - z.x, z.y) - log_antiderivative(l - z.x, z.y)
}

// Potential of the unit arcsine measure of [l, r]: map to the reference
// interval, lift through the Joukowski parametrization and add the Robin
// constant. On [l, r] itself this is exactly ln((r - l) / 4).
fn arcsine_potential(l: f64, r: f64, z: ComplexPoint) -> f64 {
    let half = 0.5 * (r - l);
    let w = Complex64::new((z.x - 0.5 * (l + r)) / half, z.y / half);
    let s = (w * w - Complex64::new(1.0, 0.0)).sqrt();
    // |w + s| |w - s| = 1; pick the factor of modulus >= 1.
    let outer = (w + s).norm().max((w - s).norm());
    outer.ln().max(0.0) + (0.5 * half).ln()
}

fn poly_potential(l: f64, r: f64, coeffs: &[f64], z: ComplexPoint, cfg: &Config) -> f64 {
    let width = r - l;
    let integrand = |t: f64| horner(coeffs, t) * 0.5 * ((t - z.x) * (t - z.x) + z.y * z.y).ln();
    if z.y.abs() >= width || z.x < l - width || z.x > r + width {
        return quad::composite_gl(l, r, cfg.far_panels.max(2), cfg.gl_order, integrand);
    }
    // Near-singular: split at the clamped abscissa, peel off the density
    // value there against the exact log integral, and integrate the
    // remainder (which vanishes at the split) on graded panels. Distances
    // are formed from the positive offset plus the split's own distance so
    // that no subtraction near the singularity occurs.
    let xs = z.x.clamp(l, r);
    let base = horner(coeffs, xs);
    let mut acc = base * segment_log_integral(l, r, z);
    let off = z.x - xs;
    if xs > l {
        // off >= 0 here: z.x is at or right of the split
        acc += quad::graded_from_singularity(xs - l, z.y.abs(), cfg.gl_order, |u| {
            let dx = off + u;
            (horner(coeffs, xs - u) - base) * 0.5 * (dx * dx + z.y * z.y).ln()
        });
    }
    if xs < r {
        // off <= 0 here: z.x is at or left of the split
        acc += quad::graded_from_singularity(r - xs, z.y.abs(), cfg.gl_order, |u| {
            let dx = u - off;
            (horner(coeffs, xs + u) - base) * 0.5 * (dx * dx + z.y * z.y).ln()
        });
    }
    acc
}

// Linear-density log integral over one interpolation cell:
// int (alpha + beta u) ln sqrt(u^2 + y^2) du with u = t - Re z, in closed
// form via B(u) = (u^2 + y^2)(ln(u^2 + y^2) - 1)/4.
fn table_potential(lo: f64, hi: f64, values: &[f64], z: ComplexPoint) -> f64 {
    let n = values.len() - 1;
    let h = (hi - lo) / n as f64;
    let mut acc = 0.0;
    for i in 0..n {
        let t0 = lo + i as f64 * h;
        let t1 = if i + 1 == n { hi } else { t0 + h };
        let beta = (values[i + 1] - values[i]) / h;
        let alpha = values[i] + beta * (z.x - t0);
        let (u0, u1) = (t0 - z.x, t1 - z.x);
        acc += alpha * (log_antiderivative(u1, z.y) - log_antiderivative(u0, z.y))
            + beta * (linear_log_antiderivative(u1, z.y) - linear_log_antiderivative(u0, z.y));
    }
    acc
}

fn linear_log_antiderivative(u: f64, y: f64) -> f64 {
    let s = u * u + y * y;
    if s == 0.0 {
        0.0
    } else {
        0.25 * s * (s.ln() - 1.0)
    }
}
