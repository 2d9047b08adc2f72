//! Equilibrium measures of finite interval unions.
//!
//! The logarithmic energy is strictly concave on probability measures, so the
//! equilibrium measure of a compact union of intervals is the unique
//! maximizer. Discretization: the union is tiled with panels (equal widths
//! per component with geometric refinement at the endpoints, where the
//! density has inverse-square-root growth), the kernel is averaged exactly
//! over panel pairs, and the resulting concave quadratic form is maximized
//! over the probability simplex by projected gradient ascent. Step sizes are
//! Barzilai-Borwein trials shortened to the exact maximizer along the
//! projected direction, which always satisfies the Armijo condition for the
//! quadratic model.
//!
//! At the maximum, the panel-averaged potentials equal the Robin constant
//! `v(K)` on every panel carrying weight; panels without weight can only sit
//! above it up to discretization error, since the true equilibrium potential
//! dominates `v(K)` everywhere on `K`.

use rayon::prelude::*;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::measure::{Density, DensityPiece, IntervalUnion, Measure};
use crate::potential::{log_potential, ComplexPoint};
use crate::quad::mean_log_kernel;

/// One panel of a discretized union.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Panel {
    pub lo: f64,
    pub hi: f64,
    /// Index of the component interval this panel belongs to.
    pub component: usize,
}

impl Panel {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// A panel tiling of an interval union.
#[derive(Debug, Clone)]
pub struct PanelGrid {
    union: IntervalUnion,
    panels: Vec<Panel>,
}

impl PanelGrid {
    /// Tiles `k` with `panels_per_unit` panels per unit length (at least
    /// `cfg.min_panels` per component) and splits the outermost panel of each
    /// component geometrically, `cfg.edge_levels` levels at `cfg.edge_ratio`.
    pub fn build(k: &IntervalUnion, panels_per_unit: usize, cfg: &Config) -> Result<Self> {
        if panels_per_unit == 0 {
            return Err(Error::Domain("panels_per_unit must be positive".into()));
        }
        let mut panels = Vec::new();
        for (ci, &(lo, hi)) in k.intervals().iter().enumerate() {
            let len = hi - lo;
            let n = ((len * panels_per_unit as f64).ceil() as usize).max(cfg.min_panels).max(1);
            let bounds = component_bounds(lo, hi, n, cfg.edge_levels, cfg.edge_ratio);
            for w in bounds.windows(2) {
                if w[1] > w[0] {
                    panels.push(Panel {
                        lo: w[0],
                        hi: w[1],
                        component: ci,
                    });
                }
            }
        }
        if panels.is_empty() {
            return Err(Error::Domain("empty panel grid".into()));
        }
        Ok(PanelGrid {
            union: k.clone(),
            panels,
        })
    }

    pub fn union(&self) -> &IntervalUnion {
        &self.union
    }

    pub fn panels(&self) -> &[Panel] {
        &self.panels
    }

    pub fn len(&self) -> usize {
        self.panels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.panels.is_empty()
    }
}

// Equal-width boundaries with geometric stacks inside the first and last
// panel. Sub-ulp cuts are dropped: components can be only a few ulps wide.
fn component_bounds(lo: f64, hi: f64, n: usize, levels: usize, ratio: f64) -> Vec<f64> {
    let len = hi - lo;
    let h = len / n as f64;
    let mut bounds = Vec::with_capacity(n + 1 + 2 * (levels + 1));
    bounds.push(lo);
    for k in (1..=levels).rev() {
        bounds.push(lo + h * ratio.powi(k as i32));
    }
    for i in 1..n {
        bounds.push(lo + i as f64 * h);
    }
    for k in 1..=levels {
        bounds.push(hi - h * ratio.powi(k as i32));
    }
    bounds.push(hi);
    bounds.retain(|b| b.is_finite());
    bounds.sort_by(|a, b| a.total_cmp(b));
    bounds.dedup();
    // Clamp out any cut that rounded outside the component.
    bounds.retain(|&b| b >= lo && b <= hi);
    bounds
}

/// Symmetric matrix of panel-averaged log kernels, row major.
///
/// Entry `(i, j)` is the mean of `ln|x - y|` for `x` in panel `i` and `y` in
/// panel `j`; diagonal entries are `ln h_i - 3/2`. Panels must not overlap.
pub fn kernel_matrix(grid: &PanelGrid) -> Result<Vec<f64>> {
    let p = grid.panels();
    for i in 1..p.len() {
        if p[i].lo < p[i - 1].hi - 1e-15 * p[i - 1].width().abs().max(1.0) {
            return Err(Error::OverlappingPanels { index: i });
        }
    }
    let n = p.len();
    let mut a = vec![0.0; n * n];
    a.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        for j in 0..n {
            row[j] = mean_log_kernel(p[i].lo, p[i].hi, p[j].lo, p[j].hi);
        }
    });
    Ok(a)
}

/// Output of an equilibrium solve.
#[derive(Debug, Clone)]
pub struct EquilibriumResult {
    pub grid: PanelGrid,
    /// Panel masses; non-negative, summing to one.
    pub weights: Vec<f64>,
    /// Discrete Robin constant `v(K)`, the maximized energy.
    pub log_capacity: f64,
    /// Max deviation of panel potentials from `v` over weighted panels.
    pub kkt_residual: f64,
    /// Min of panel potential minus `v` over zero-weight panels
    /// (zero when every panel carries weight).
    pub offset_margin: f64,
    pub iterations: usize,
}

impl EquilibriumResult {
    /// The piecewise-constant measure carried by the weighted panels.
    pub fn measure(&self) -> Result<Measure> {
        let mut pieces = Vec::new();
        for (p, &w) in self.grid.panels().iter().zip(&self.weights) {
            if w > 0.0 {
                pieces.push(DensityPiece::new(
                    p.lo,
                    p.hi,
                    Density::Uniform { level: w / p.width() },
                )?);
            }
        }
        Measure::new(vec![], pieces)
    }

    /// Total mass per component of the union.
    pub fn component_masses(&self) -> Vec<f64> {
        let mut masses = vec![0.0; self.grid.union().len()];
        for (p, &w) in self.grid.panels().iter().zip(&self.weights) {
            masses[p.component] += w;
        }
        masses
    }
}

/// Solves for the equilibrium weights of `k`.
pub fn solve_equilibrium(
    k: &IntervalUnion,
    panels_per_unit: usize,
    cfg: &Config,
) -> Result<EquilibriumResult> {
    let grid = PanelGrid::build(k, panels_per_unit, cfg)?;
    let a = kernel_matrix(&grid)?;
    let n = grid.len();
    let sol = maximize_on_simplex(&a, n, cfg)?;
    Ok(EquilibriumResult {
        grid,
        weights: sol.weights,
        log_capacity: sol.value,
        kkt_residual: sol.kkt_residual,
        offset_margin: sol.offset_margin,
        iterations: sol.iterations,
    })
}

/// Logarithmic capacity `exp(v(K))`.
pub fn capacity(k: &IntervalUnion, panels_per_unit: usize, cfg: &Config) -> Result<f64> {
    Ok(solve_equilibrium(k, panels_per_unit, cfg)?.log_capacity.exp())
}

/// Closed-form equilibrium data of a single segment: the arcsine measure and
/// `v = ln((b - a)/4)`.
pub fn segment_equilibrium(a: f64, b: f64) -> Result<(Measure, f64)> {
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::DegenerateInterval { lo: a, hi: b });
    }
    Ok((Measure::arcsine(a, b)?, ((b - a) / 4.0).ln()))
}

/// Pointwise check of the equilibrium property of `mu` on `k` against a
/// candidate Robin constant `v`.
#[derive(Debug, Clone, Copy)]
pub struct EquilibriumCheck {
    /// `max |p(x) - v|` over an interior grid of `k`.
    pub on_support_max_dev: f64,
    /// `min (p(x) - v)` over an exterior grid reaching one diameter past the
    /// hull; near zero or positive for a genuine equilibrium measure.
    pub off_support_min_margin: f64,
}

pub fn verify_equilibrium(
    mu: &Measure,
    k: &IntervalUnion,
    v: f64,
    cfg: &Config,
) -> Result<EquilibriumCheck> {
    let (slo, shi) = mu.support().ok_or(Error::ZeroMass)?;
    for atom in mu.atoms() {
        if !k.contains_point(atom.position, 1e-9) {
            return Err(Error::SupportEscapes { lo: slo, hi: shi });
        }
    }
    for piece in mu.pieces() {
        if !k.contains_interval(piece.lo(), piece.hi(), 1e-9) {
            return Err(Error::SupportEscapes { lo: slo, hi: shi });
        }
    }

    let per_comp = (cfg.verify_points / k.len()).max(8);
    let mut max_dev: f64 = 0.0;
    for &(lo, hi) in k.intervals() {
        for i in 0..per_comp {
            // midpoint-offset grid keeps clear of panel edges
            let x = lo + (hi - lo) * (i as f64 + 0.5) / per_comp as f64;
            let p = log_potential(mu, ComplexPoint::real(x), cfg)?;
            max_dev = max_dev.max((p - v).abs());
        }
    }

    let (hlo, hhi) = k.hull();
    let diam = hhi - hlo;
    let (wlo, whi) = (hlo - diam, hhi + diam);
    let mut min_margin = f64::INFINITY;
    let total = cfg.verify_points.max(8);
    for i in 0..total {
        let x = wlo + (whi - wlo) * (i as f64 + 0.5) / total as f64;
        if k.contains_point(x, 1e-12) {
            continue;
        }
        let p = log_potential(mu, ComplexPoint::real(x), cfg)?;
        min_margin = min_margin.min(p - v);
    }
    if !min_margin.is_finite() {
        min_margin = 0.0;
    }
    Ok(EquilibriumCheck {
        on_support_max_dev: max_dev,
        off_support_min_margin: min_margin,
    })
}

pub(crate) struct SimplexSolution {
    pub weights: Vec<f64>,
    pub value: f64,
    pub kkt_residual: f64,
    pub offset_margin: f64,
    pub iterations: usize,
}

/// Maximizes `w' A w` over the probability simplex for a symmetric `A` that
/// is concave on mass-preserving directions.
pub(crate) fn maximize_on_simplex(a: &[f64], n: usize, cfg: &Config) -> Result<SimplexSolution> {
    assert_eq!(a.len(), n * n);
    let matvec = |w: &[f64], out: &mut [f64]| {
        out.par_chunks_mut(512)
            .enumerate()
            .for_each(|(chunk, slab)| {
                for (off, o) in slab.iter_mut().enumerate() {
                    let i = chunk * 512 + off;
                    let row = &a[i * n..(i + 1) * n];
                    let mut acc = 0.0;
                    for (aij, wj) in row.iter().zip(w) {
                        acc += aij * wj;
                    }
                    *o = acc;
                }
            });
    };

    let mut w = vec![1.0 / n as f64; n];
    let mut phi = vec![0.0; n];
    matvec(&w, &mut phi);
    let mut f: f64 = w.iter().zip(&phi).map(|(x, y)| x * y).sum();

    let mut alpha = {
        let scale = a.iter().fold(0.0f64, |m, &x| m.max(x.abs()));
        if scale > 0.0 {
            1.0 / scale
        } else {
            1.0
        }
    };

    let mut trial = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut ad = vec![0.0; n];
    let mut result = None;

    for iter in 0..cfg.max_iters {
        // KKT bookkeeping at the current iterate.
        let v: f64 = w.iter().zip(&phi).map(|(x, y)| x * y).sum();
        let mut res: f64 = 0.0;
        let mut margin = f64::INFINITY;
        for i in 0..n {
            if w[i] > 0.0 {
                res = res.max((phi[i] - v).abs());
            } else {
                margin = margin.min(phi[i] - v);
            }
        }
        if !margin.is_finite() {
            margin = 0.0;
        }
        if res <= cfg.kkt_tol {
            result = Some((v, res, margin, iter));
            break;
        }

        // Projected gradient trial point (gradient is 2 phi; the factor is
        // absorbed into alpha).
        for i in 0..n {
            trial[i] = w[i] + alpha * phi[i];
        }
        project_onto_simplex(&mut trial);
        let mut step: f64 = 0.0;
        for i in 0..n {
            d[i] = trial[i] - w[i];
            step = step.max(d[i].abs());
        }
        if step < cfg.step_tol {
            result = Some((v, res, margin, iter));
            break;
        }

        matvec(&d, &mut ad);
        let gd: f64 = 2.0 * phi.iter().zip(&d).map(|(p, di)| p * di).sum::<f64>();
        let q: f64 = d.iter().zip(&ad).map(|(di, adi)| di * adi).sum();

        // Exact maximizer along the projected direction; lambda = 1 keeps
        // the iterate feasible, and any lambda <= -gd/(2q) satisfies the
        // Armijo bound f(w + lambda d) >= f(w) + lambda gd / 2.
        let lambda = if q < 0.0 { (-gd / (2.0 * q)).min(1.0) } else { 1.0 };
        let lambda = if lambda > 0.0 { lambda } else { 1.0 };
        for i in 0..n {
            w[i] += lambda * d[i];
            phi[i] += lambda * ad[i];
        }
        f += lambda * gd + lambda * lambda * q;

        // Barzilai-Borwein step for the next trial, from s = lambda d and
        // the curvature q along it.
        if q < 0.0 {
            let dd: f64 = d.iter().map(|x| x * x).sum();
            alpha = (lambda * dd / (-2.0 * q)).clamp(1e-12, 1e12);
        }

        // Periodic refresh against floating-point drift in the incremental
        // potential updates.
        if iter % 256 == 255 {
            matvec(&w, &mut phi);
            f = w.iter().zip(&phi).map(|(x, y)| x * y).sum();
        }
    }
    let _ = f;

    match result {
        Some((value, kkt_residual, offset_margin, iterations)) => {
            // The incremental updates let the weight total drift by a few
            // hundred ulps over long runs; rescale so the output is a
            // probability vector to working precision.
            let total: f64 = w.iter().sum();
            for x in w.iter_mut() {
                *x /= total;
            }
            Ok(SimplexSolution {
                weights: w,
                value,
                kkt_residual,
                offset_margin,
                iterations,
            })
        }
        None => {
            // Report the final residual rather than a stale one.
            matvec(&w, &mut phi);
            let v: f64 = w.iter().zip(&phi).map(|(x, y)| x * y).sum();
            let res = w
                .iter()
                .zip(&phi)
                .filter(|(x, _)| **x > 0.0)
                .map(|(_, y)| (y - v).abs())
                .fold(0.0f64, f64::max);
            Err(Error::NonConvergence {
                iterations: cfg.max_iters,
                residual: res,
                target: cfg.kkt_tol,
            })
        }
    }
}

/// Euclidean projection onto the probability simplex (sort and threshold).
pub(crate) fn project_onto_simplex(v: &mut [f64]) {
    let n = v.len();
    let mut u: Vec<f64> = v.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut css = 0.0;
    let mut theta = 0.0;
    for (i, &ui) in u.iter().enumerate() {
        css += ui;
        let t = (css - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            theta = t;
        } else {
            break;
        }
    }
    for x in v.iter_mut().take(n) {
        *x = (*x - theta).max(0.0);
    }
}
