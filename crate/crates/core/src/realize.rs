//! Realizability criterion and the equilibrium-measure approximation pipeline.
//!
//! A positive measure on a segment passes the criterion when its logarithmic
//! potential is non-negative everywhere. Because the potential grows like
//! `mass * ln|z|` at infinity, is even in `Im z`, and increases with `|Im z|`,
//! the sign condition on all of the plane reduces to a scan of the real axis
//! within one unit of the support segment.
//!
//! Measures that pass can be approximated, in the weak sense, by equilibrium
//! measures of capacity-one interval unions: atomize the measure, take the
//! region where the atomic potential is negative (a finite union of closed
//! intervals around the atoms), solve for its equilibrium measure, and dilate
//! so the log-capacity becomes exactly zero under the scaling law
//! `v(s K) = v(K) + ln s`.

use crate::config::Config;
use crate::equilibrium::solve_equilibrium;
use crate::error::{Error, Result};
use crate::measure::{IntervalUnion, Measure};
use crate::potential::{log_potential, ComplexPoint};

/// Outcome of the non-negativity scan.
#[derive(Debug, Clone, Copy)]
pub struct CriterionVerdict {
    /// True when the scanned minimum is at least `-criterion_tol`.
    pub passes: bool,
    /// Abscissa of the scanned minimum.
    pub min_location: f64,
    /// Minimum potential value; negative infinity when atoms are present.
    pub min_value: f64,
    /// The scanned range, one unit beyond the segment on each side.
    pub scan_interval: (f64, f64),
    /// Atoms force a fail; mixed measures are flagged so callers can tell a
    /// genuine negative dip from an atomic singularity.
    pub has_atoms: bool,
}

/// Where an atomic potential is negative, clipped to the ambient segment.
#[derive(Debug, Clone)]
pub struct NegativitySet {
    pub intervals: IntervalUnion,
    /// Number of atoms in the source measure.
    pub source_atoms: usize,
}

/// One row of a convergence report.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ApproximationStep {
    pub n: usize,
    /// Kolmogorov distance between the step's output measure and the input.
    pub weak_dist: f64,
    /// Log-capacity of the negativity set before dilation.
    pub v_in: f64,
    /// Max potential mismatch on a horizontal line above the segment.
    pub potential_gap: f64,
    /// Dilation factor minus one.
    pub delta_n: f64,
}

#[derive(Debug, Clone, Default, serde::Serialize)]
pub struct ConvergenceReport {
    pub steps: Vec<ApproximationStep>,
}

/// Minimum of the potential over the real-axis scan window `[lo-1, hi+1]`.
///
/// Dense grid of `cfg.scan_points`, then golden-section refinement around the
/// five lowest local minima. Atomic measures short-circuit to negative
/// infinity at an atom. Outside the window the potential of a positive
/// measure supported in `[lo, hi]` is at least `mass * ln(dist)` and cannot
/// go negative.
pub fn min_potential_real(mu: &Measure, lo: f64, hi: f64, cfg: &Config) -> Result<(f64, f64)> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::DegenerateInterval { lo, hi });
    }
    if mu.mass() <= 0.0 {
        return Err(Error::ZeroMass);
    }
    if let Some(atom) = mu.atoms().first() {
        return Ok((atom.position, f64::NEG_INFINITY));
    }

    let (a, b) = (lo - 1.0, hi + 1.0);
    let n = cfg.scan_points.max(16);
    let eval = |x: f64| log_potential(mu, ComplexPoint::real(x), cfg);
    let mut vals = Vec::with_capacity(n);
    for i in 0..n {
        let x = a + (b - a) * i as f64 / (n - 1) as f64;
        vals.push((x, eval(x)?));
    }

    let mut best = (vals[0].0, vals[0].1);
    for &(x, p) in &vals {
        if p < best.1 {
            best = (x, p);
        }
    }

    // Local minima of the grid, endpoints included.
    let mut minima: Vec<usize> = Vec::new();
    for i in 0..n {
        let left_ok = i == 0 || vals[i].1 <= vals[i - 1].1;
        let right_ok = i == n - 1 || vals[i].1 <= vals[i + 1].1;
        if left_ok && right_ok {
            minima.push(i);
        }
    }
    minima.sort_by(|&i, &j| vals[i].1.total_cmp(&vals[j].1));
    for &i in minima.iter().take(5) {
        let bl = if i == 0 { a } else { vals[i - 1].0 };
        let br = if i == n - 1 { b } else { vals[i + 1].0 };
        let (x, p) = golden_min(&eval, bl, br, 1e-9 * (1.0 + (b - a).abs()))?;
        if p < best.1 {
            best = (x, p);
        }
    }
    Ok(best)
}

fn golden_min<F>(f: &F, mut a: f64, mut b: f64, tol: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
        if fc < best.1 {
            best = (c, fc);
        }
        if fd < best.1 {
            best = (d, fd);
        }
    }
    Ok(best)
}

/// Decides the non-negativity criterion for a positive measure supported in
/// `[lo, hi]`.
///
/// The measure is evaluated as given; the criterion is invariant under
/// positive scaling, so normalization is not required and the reported
/// minimum refers to the input's own mass.
pub fn check_serre_criterion(mu: &Measure, lo: f64, hi: f64, cfg: &Config) -> Result<CriterionVerdict> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::DegenerateInterval { lo, hi });
    }
    let (slo, shi) = mu.support().ok_or(Error::ZeroMass)?;
    let slack = 1e-9 * (hi - lo).max(1.0);
    if slo < lo - slack || shi > hi + slack {
        return Err(Error::SupportEscapes { lo: slo, hi: shi });
    }
    let (min_location, min_value) = min_potential_real(mu, lo, hi, cfg)?;
    Ok(CriterionVerdict {
        passes: min_value >= -cfg.criterion_tol,
        min_location,
        min_value,
        scan_interval: (lo - 1.0, hi + 1.0),
        has_atoms: mu.has_atoms(),
    })
}

/// Replaces a diffuse probability measure by `n` equal atoms at the quantiles
/// `(k - 1/2)/n`. The Kolmogorov distance to the input is at most `1/n`.
pub fn atomize(mu: &Measure, n: usize) -> Result<Measure> {
    if n == 0 {
        return Err(Error::Domain("atom count must be positive".into()));
    }
    if mu.has_atoms() {
        return Err(Error::AtomicInput);
    }
    if !mu.is_probability() {
        return Err(Error::NotProbability { mass: mu.mass() });
    }
    let w = 1.0 / n as f64;
    let mut atoms = Vec::with_capacity(n);
    for k in 1..=n {
        let u = (k as f64 - 0.5) / n as f64;
        atoms.push((mu.quantile(u)?, w));
    }
    Measure::from_atoms(&atoms)
}

/// Closed intervals inside `[lo, hi]` where the potential of a purely atomic
/// measure is negative.
///
/// The potential is concave between atoms and diverges to negative infinity
/// at each atom, so every returned interval contains an atom. Boundaries are
/// found by bisection between seed points (`cfg.seed_points_per_gap` per atom
/// gap); intervals closer than `cfg.merge_tol` are merged. Intervals narrower
/// than a few ulps (possible around atoms whose neighborhoods shrink below
/// f64 resolution) are widened to a representable width so downstream
/// capacity solves see positive lengths.
pub fn negativity_intervals(mu: &Measure, lo: f64, hi: f64, cfg: &Config) -> Result<NegativitySet> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::DegenerateInterval { lo, hi });
    }
    if !mu.pieces().is_empty() {
        return Err(Error::NonAtomicInput);
    }
    if mu.atoms().is_empty() {
        return Err(Error::ZeroMass);
    }
    let slack = 1e-9 * (hi - lo).max(1.0);
    for atom in mu.atoms() {
        if atom.position < lo - slack || atom.position > hi + slack {
            return Err(Error::SupportEscapes {
                lo: atom.position,
                hi: atom.position,
            });
        }
    }

    // Evaluation nodes: segment ends, atoms, and seeds inside every gap.
    let mut nodes: Vec<f64> = vec![lo, hi];
    let mut atom_xs: Vec<f64> = mu.atoms().iter().map(|a| a.position.clamp(lo, hi)).collect();
    atom_xs.sort_by(f64::total_cmp);
    atom_xs.dedup();
    nodes.extend_from_slice(&atom_xs);
    nodes.sort_by(f64::total_cmp);
    nodes.dedup();
    let m = cfg.seed_points_per_gap.max(2);
    let mut points: Vec<f64> = Vec::new();
    for w in nodes.windows(2) {
        points.push(w[0]);
        for i in 0..m {
            points.push(w[0] + (w[1] - w[0]) * (i + 1) as f64 / (m + 1) as f64);
        }
    }
    points.push(hi);
    points.sort_by(f64::total_cmp);
    points.dedup();

    let value = |x: f64| -> Result<f64> { log_potential(mu, ComplexPoint::real(x), cfg) };
    let negative: Vec<bool> = {
        let mut v = Vec::with_capacity(points.len());
        for &x in &points {
            v.push(value(x)? < 0.0);
        }
        v
    };

    // Bisect the boundary between a negative point and a non-negative one.
    let refine = |mut pos: f64, mut neg: f64| -> Result<f64> {
        for _ in 0..200 {
            if (pos - neg).abs() <= cfg.bisect_tol {
                break;
            }
            let mid = 0.5 * (pos + neg);
            if mid == pos || mid == neg {
                break;
            }
            if value(mid)? < 0.0 {
                neg = mid;
            } else {
                pos = mid;
            }
        }
        Ok(0.5 * (pos + neg))
    };

    let mut raw: Vec<(f64, f64)> = Vec::new();
    let mut i = 0;
    let last = points.len() - 1;
    while i <= last {
        if !negative[i] {
            i += 1;
            continue;
        }
        let start = i;
        while i < last && negative[i + 1] {
            i += 1;
        }
        let left = if start == 0 {
            lo
        } else {
            refine(points[start - 1], points[start])?
        };
        let right = if i == last {
            hi
        } else {
            refine(points[i + 1], points[i])?
        };
        raw.push((left.clamp(lo, hi), right.clamp(lo, hi)));
        i += 1;
    }
    if raw.is_empty() {
        return Err(Error::Structural(
            "atomic potential has no negative region, yet atoms force one".into(),
        ));
    }

    // Widen sub-ulp intervals to a representable width.
    for iv in raw.iter_mut() {
        let c = 0.5 * (iv.0 + iv.1);
        let floor = 2.0 * f64::EPSILON * c.abs().max(1.0);
        if iv.1 - iv.0 < 2.0 * floor {
            iv.0 = (c - floor).max(lo);
            iv.1 = (c + floor).min(hi);
        }
    }

    let intervals = IntervalUnion::from_merged(raw, cfg.merge_tol)?;
    Ok(NegativitySet {
        intervals,
        source_atoms: mu.atoms().len(),
    })
}

/// One step of the approximation pipeline: atomize, take the negativity set,
/// solve its equilibrium problem, and dilate about the set's centroid so the
/// log-capacity lands exactly on zero. Returns the dilated equilibrium
/// measure, the pre-dilation log-capacity, and the dilation offset
/// `delta = e^{-v} - 1`.
pub fn construct_approximation(
    mu: &Measure,
    n: usize,
    lo: f64,
    hi: f64,
    panels_per_unit: usize,
    cfg: &Config,
) -> Result<(Measure, f64, f64)> {
    let verdict = check_serre_criterion(mu, lo, hi, cfg)?;
    if !verdict.passes {
        return Err(Error::NotRealizable {
            min: verdict.min_value,
            at: verdict.min_location,
        });
    }
    approximation_step(mu, n, lo, hi, panels_per_unit, cfg)
}

// The pipeline body, assuming the criterion has already been checked.
fn approximation_step(
    mu: &Measure,
    n: usize,
    lo: f64,
    hi: f64,
    panels_per_unit: usize,
    cfg: &Config,
) -> Result<(Measure, f64, f64)> {
    let mu_n = atomize(mu, n)?;
    let neg = negativity_intervals(&mu_n, lo, hi, cfg)?;
    let sol = solve_equilibrium(&neg.intervals, panels_per_unit, cfg)?;
    let v_in = sol.log_capacity;
    let delta = (-v_in).exp() - 1.0;
    let center = neg.intervals.centroid();
    // x -> (1 + delta)(x - center) + center, the capacity-zero dilation.
    // Endpoint rounding in the map can drift the mass of a fine panel
    // measure by ~1e-10; renormalize to restore the probability invariant.
    let nu = sol
        .measure()?
        .pushforward_affine(1.0 + delta, -center * delta)?
        .normalize()?;
    Ok((nu, v_in, delta))
}

/// Runs the pipeline for each `n` and tabulates convergence diagnostics.
///
/// `weak_dist` is the Kolmogorov distance to the input; `potential_gap` is
/// the max potential mismatch over `cfg.gap_grid` points on the horizontal
/// line `Im z = cfg.offslab_im` above `[lo, hi]`, where both potentials are
/// finite and the atomization error is uniformly small.
pub fn convergence_report(
    mu: &Measure,
    ns: &[usize],
    lo: f64,
    hi: f64,
    panels_per_unit: usize,
    cfg: &Config,
) -> Result<ConvergenceReport> {
    let verdict = check_serre_criterion(mu, lo, hi, cfg)?;
    if !verdict.passes {
        return Err(Error::NotRealizable {
            min: verdict.min_value,
            at: verdict.min_location,
        });
    }
    let mut steps = Vec::with_capacity(ns.len());
    for &n in ns {
        let (nu, v_in, delta_n) = approximation_step(mu, n, lo, hi, panels_per_unit, cfg)?;
        let weak_dist = nu.weak_distance(mu)?;
        let g = cfg.gap_grid.max(2);
        let mut potential_gap: f64 = 0.0;
        for i in 0..g {
            let x = lo + (hi - lo) * i as f64 / (g - 1) as f64;
            let z = ComplexPoint::new(x, cfg.offslab_im);
            let gap = (log_potential(&nu, z, cfg)? - log_potential(mu, z, cfg)?).abs();
            potential_gap = potential_gap.max(gap);
        }
        let step = ApproximationStep {
            n,
            weak_dist,
            v_in,
            potential_gap,
            delta_n,
        };
        if !(step.weak_dist.is_finite()
            && step.v_in.is_finite()
            && step.potential_gap.is_finite()
            && step.delta_n.is_finite())
        {
            return Err(Error::Structural(format!(
                "non-finite convergence row at n = {n}"
            )));
        }
        steps.push(step);
    }
    Ok(ConvergenceReport { steps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn atomize_uniform_quantiles() {
        let mu = Measure::uniform_probability(0.0, 1.0).unwrap();
        let a = atomize(&mu, 2).unwrap();
        let atoms = a.atoms();
        assert_eq!(atoms.len(), 2);
        assert!((atoms[0].position - 0.25).abs() < 1e-12);
        assert!((atoms[1].position - 0.75).abs() < 1e-12);
        assert!((atoms[0].weight - 0.5).abs() < 1e-15);
    }

    #[test]
    fn atomize_arcsine_quantiles() {
        // quantiles 1/4 and 3/4 of the arcsine law on [-2, 2] sit at -+sqrt(2)
        let mu = Measure::arcsine(-2.0, 2.0).unwrap();
        let a = atomize(&mu, 2).unwrap();
        let atoms = a.atoms();
        let s = 2.0f64.sqrt();
        assert!((atoms[0].position + s).abs() < 1e-9, "{}", atoms[0].position);
        assert!((atoms[1].position - s).abs() < 1e-9, "{}", atoms[1].position);
    }

    #[test]
    fn atomize_single_atom_is_median() {
        let mu = Measure::uniform_probability(3.0, 7.0).unwrap();
        let a = atomize(&mu, 1).unwrap();
        assert_eq!(a.atoms().len(), 1);
        assert!((a.atoms()[0].position - 5.0).abs() < 1e-12);
        assert!((a.atoms()[0].weight - 1.0).abs() < 1e-15);
    }

    #[test]
    fn atomize_bounds_weak_distance() {
        let mu = Measure::arcsine(-1.0, 3.0).unwrap();
        for n in [1usize, 4, 16] {
            let a = atomize(&mu, n).unwrap();
            let d = a.weak_distance(&mu).unwrap();
            assert!(d <= 1.0 / n as f64 + 1e-9, "n = {n}, d = {d}");
        }
    }

    #[test]
    fn atomize_rejects_bad_input() {
        let atom = Measure::dirac(0.0).unwrap();
        assert!(matches!(atomize(&atom, 2), Err(Error::AtomicInput)));
        let heavy = Measure::lebesgue(-2.0, 2.0).unwrap();
        assert!(matches!(atomize(&heavy, 2), Err(Error::NotProbability { .. })));
        let mu = Measure::uniform_probability(0.0, 1.0).unwrap();
        assert!(atomize(&mu, 0).is_err());
    }

    #[test]
    fn negativity_of_single_atom() {
        // p(x) = ln|x| is negative exactly on (-1, 1)
        let mu = Measure::dirac(0.0).unwrap();
        let set = negativity_intervals(&mu, -2.0, 2.0, &cfg()).unwrap();
        assert_eq!(set.intervals.len(), 1);
        let (a, b) = set.intervals.intervals()[0];
        assert!((a + 1.0).abs() < 1e-9, "{a}");
        assert!((b - 1.0).abs() < 1e-9, "{b}");
        assert_eq!(set.source_atoms, 1);
    }

    #[test]
    fn negativity_of_two_atoms_merges_at_touch() {
        // (1/2)(ln|x-1| + ln|x+1|) < 0 iff |x^2 - 1| < 1; the two open
        // pieces share the boundary point 0 and merge as closed intervals
        let mu = Measure::from_atoms(&[(-1.0, 0.5), (1.0, 0.5)]).unwrap();
        let set = negativity_intervals(&mu, -3.0, 3.0, &cfg()).unwrap();
        assert_eq!(set.intervals.len(), 1, "{:?}", set.intervals.intervals());
        let (a, b) = set.intervals.intervals()[0];
        let s = 2.0f64.sqrt();
        assert!((a + s).abs() < 1e-9, "{a}");
        assert!((b - s).abs() < 1e-9, "{b}");
    }

    #[test]
    fn negativity_of_chebyshev_atoms() {
        // 16 arcsine quantile atoms are scaled Chebyshev roots; the potential
        // is (1/16) ln|2 T_16(x/2)|, negative on 16 disjoint intervals
        let mu = Measure::arcsine(-2.0, 2.0).unwrap();
        let atoms = atomize(&mu, 16).unwrap();
        let set = negativity_intervals(&atoms, -2.0, 2.0, &cfg()).unwrap();
        assert_eq!(set.intervals.len(), 16, "{:?}", set.intervals.intervals());
        for a in atoms.atoms() {
            let inside = set
                .intervals
                .intervals()
                .iter()
                .any(|&(l, r)| l < a.position && a.position < r);
            assert!(inside, "atom {} not interior", a.position);
        }
        assert!(set.intervals.total_length() < 4.0);
    }

    #[test]
    fn negativity_rejects_diffuse_input() {
        let mu = Measure::uniform_probability(0.0, 1.0).unwrap();
        assert!(matches!(
            negativity_intervals(&mu, -1.0, 2.0, &cfg()),
            Err(Error::NonAtomicInput)
        ));
    }

    #[test]
    fn criterion_threshold_of_flat_density() {
        // density-1 measure on [-a, a]: minimum is 2a(ln a - 1) at the origin
        let fail = Measure::lebesgue(-2.71, 2.71).unwrap();
        let v1 = check_serre_criterion(&fail, -2.71, 2.71, &cfg()).unwrap();
        assert!(!v1.passes, "{v1:?}");
        assert!(!v1.has_atoms);

        let pass = Measure::lebesgue(-2.72, 2.72).unwrap();
        let v2 = check_serre_criterion(&pass, -2.72, 2.72, &cfg()).unwrap();
        assert!(v2.passes, "{v2:?}");

        let a = 2.0 * 2.0f64.sqrt();
        let m = Measure::lebesgue(-a, a).unwrap();
        let v3 = check_serre_criterion(&m, -a, a, &cfg()).unwrap();
        let expect = 2.0 * a * (a.ln() - 1.0);
        assert!((v3.min_value - expect).abs() < 1e-6, "{} vs {expect}", v3.min_value);
        assert!(v3.min_location.abs() < 1e-3, "{}", v3.min_location);
        assert!(v3.passes);
        assert_eq!(v3.scan_interval, (-a - 1.0, a + 1.0));
    }

    #[test]
    fn criterion_boundary_case_passes() {
        // at a = e the minimum is exactly zero; closed feasible set admits it
        let e = std::f64::consts::E;
        let m = Measure::lebesgue(-e, e).unwrap();
        let v = check_serre_criterion(&m, -e, e, &cfg()).unwrap();
        assert!(v.passes, "{v:?}");
        assert!(v.min_value.abs() < 1e-9, "{}", v.min_value);
    }

    #[test]
    fn criterion_accepts_equilibrium_measure() {
        let m = Measure::arcsine(-2.0, 2.0).unwrap();
        let v = check_serre_criterion(&m, -2.0, 2.0, &cfg()).unwrap();
        assert!(v.passes);
        assert!(v.min_value.abs() < 1e-8, "{}", v.min_value);
    }

    #[test]
    fn criterion_flags_atoms() {
        let m = Measure::dirac(0.0).unwrap();
        let v = check_serre_criterion(&m, -1.0, 1.0, &cfg()).unwrap();
        assert!(!v.passes);
        assert!(v.has_atoms);
        assert_eq!(v.min_value, f64::NEG_INFINITY);
        assert_eq!(v.min_location, 0.0);
    }

    #[test]
    fn criterion_rejects_escaping_support() {
        let m = Measure::uniform_probability(0.0, 3.0).unwrap();
        assert!(matches!(
            check_serre_criterion(&m, 0.0, 2.0, &cfg()),
            Err(Error::SupportEscapes { .. })
        ));
    }

    #[test]
    fn single_step_pipeline_recovers_critical_segment() {
        // one atom at the median of the arcsine law on [-2, 2]; its unit
        // negativity neighborhood dilates by e^{ln 2} to a length-4 segment
        let mu = Measure::arcsine(-2.0, 2.0).unwrap();
        let (nu, v_in, delta) = construct_approximation(&mu, 1, -2.0, 2.0, 200, &cfg()).unwrap();
        assert!((v_in - 0.5f64.ln()).abs() < 5e-3, "{v_in}");
        assert!((delta - 1.0).abs() < 1e-2, "{delta}");
        let (lo, hi) = nu.support().unwrap();
        assert!((lo + 2.0).abs() < 2e-2, "{lo}");
        assert!((hi - 2.0).abs() < 2e-2, "{hi}");
        assert!((nu.mass() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn pipeline_rejects_failing_measure() {
        let mu = Measure::uniform_probability(-1.0, 1.0).unwrap();
        assert!(matches!(
            construct_approximation(&mu, 4, -1.0, 1.0, 100, &cfg()),
            Err(Error::NotRealizable { .. })
        ));
        assert!(matches!(
            convergence_report(&mu, &[4], -1.0, 1.0, 100, &cfg()),
            Err(Error::NotRealizable { .. })
        ));
    }

    #[test]
    fn report_empty_when_no_steps() {
        let mu = Measure::arcsine(-2.0, 2.0).unwrap();
        let r = convergence_report(&mu, &[], -2.0, 2.0, 100, &cfg()).unwrap();
        assert!(r.steps.is_empty());
    }

    #[test]
    fn report_rows_are_finite() {
        let mu = Measure::arcsine(-2.0, 2.0).unwrap();
        let r = convergence_report(&mu, &[4], -2.0, 2.0, 120, &cfg()).unwrap();
        assert_eq!(r.steps.len(), 1);
        let s = &r.steps[0];
        assert_eq!(s.n, 4);
        assert!(s.weak_dist.is_finite() && s.weak_dist > 0.0);
        assert!(s.v_in.is_finite());
        assert!(s.potential_gap.is_finite());
        assert!(s.delta_n.is_finite());
    }
}
