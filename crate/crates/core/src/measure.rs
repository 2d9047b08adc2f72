//! Positive measures on the real line with compact support.
//!
//! A [`Measure`] is stored as a finite list of weighted atoms plus a finite
//! list of density pieces. The split into atomic and diffuse parts is explicit
//! because everything downstream treats them differently: atoms drive the
//! potential to negative infinity, densities do not.
//!
//! Four density kinds are supported:
//!
//! * `Uniform` - a constant level;
//! * `Arcsine` - `mass / (pi * sqrt((b - x)(x - a)))`, the equilibrium
//!   density of `[a, b]` when `mass = 1`. Endpoints are kept symbolically;
//!   the inverse-square-root blowup defeats sampled representations;
//! * `Poly` - a polynomial required to be non-negative on the piece;
//! * `Table` - equally spaced samples with linear interpolation.
//!
//! Masses and cumulative distributions of every kind are evaluated in closed
//! form, so measure bookkeeping introduces no quadrature error.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance of the "is a probability measure" test.
pub const PROBABILITY_TOL: f64 = 1e-12;

/// Default refinement grid for [`Measure::weak_distance`].
pub const DEFAULT_WEAK_REFINE: usize = 2048;

const DENSITY_SIGN_GRID: usize = 512;

/// A weighted point mass. Weight is strictly positive after construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Atom {
    pub position: f64,
    pub weight: f64,
}

/// Functional form of a density piece, exclusive of its interval.
#[derive(Debug, Clone, PartialEq)]
pub enum Density {
    /// Constant density `level >= 0`.
    Uniform { level: f64 },
    /// `mass` times the arcsine (equilibrium) density of the interval.
    Arcsine { mass: f64 },
    /// Coefficients in ascending order: `c[0] + c[1] x + ...`.
    Poly { coeffs: Vec<f64> },
    /// Samples at equally spaced abscissae including both endpoints.
    Table { values: Vec<f64> },
}

/// A density on a non-degenerate closed interval.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityPiece {
    lo: f64,
    hi: f64,
    density: Density,
}

impl DensityPiece {
    pub fn new(lo: f64, hi: f64, density: Density) -> Result<Self> {
        if !lo.is_finite() || !hi.is_finite() || !(lo < hi) {
            return Err(Error::DegenerateInterval { lo, hi });
        }
        match &density {
            Density::Uniform { level } => {
                if !level.is_finite() || *level < 0.0 {
                    return Err(Error::Structural(format!(
                        "uniform level must be finite and non-negative, got {level}"
                    )));
                }
            }
            Density::Arcsine { mass } => {
                if !mass.is_finite() || *mass < 0.0 {
                    return Err(Error::Structural(format!(
                        "arcsine mass must be finite and non-negative, got {mass}"
                    )));
                }
            }
            Density::Poly { coeffs } => {
                if coeffs.is_empty() {
                    return Err(Error::Structural("empty polynomial density".into()));
                }
                if coeffs.iter().any(|c| !c.is_finite()) {
                    return Err(Error::Structural("non-finite polynomial coefficient".into()));
                }
                // Sign check on a dense grid; exact global minimization is not
                // worth the trouble for a validation step.
                let mut worst = f64::INFINITY;
                let mut scale: f64 = 0.0;
                for i in 0..=DENSITY_SIGN_GRID {
                    let x = lo + (hi - lo) * i as f64 / DENSITY_SIGN_GRID as f64;
                    let v = horner(coeffs, x);
                    worst = worst.min(v);
                    scale = scale.max(v.abs());
                }
                if worst < -1e-12 * scale.max(1.0) {
                    return Err(Error::Structural(format!(
                        "polynomial density is negative on [{lo}, {hi}] (min {worst:.3e})"
                    )));
                }
            }
            Density::Table { values } => {
                if values.len() < 2 {
                    return Err(Error::Structural(
                        "tabulated density needs at least two samples".into(),
                    ));
                }
                if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
                    return Err(Error::Structural(
                        "tabulated density samples must be finite and non-negative".into(),
                    ));
                }
            }
        }
        Ok(DensityPiece { lo, hi, density })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn density(&self) -> &Density {
        &self.density
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Total mass of the piece, in closed form.
    pub fn mass(&self) -> f64 {
        match &self.density {
            Density::Uniform { level } => level * (self.hi - self.lo),
            Density::Arcsine { mass } => *mass,
            Density::Poly { coeffs } => {
                poly_antiderivative_at(coeffs, self.hi) - poly_antiderivative_at(coeffs, self.lo)
            }
            Density::Table { values } => {
                let h = self.cell_width();
                let mut acc = 0.0;
                for w in values.windows(2) {
                    acc += 0.5 * (w[0] + w[1]) * h;
                }
                acc
            }
        }
    }

    /// Mass of the piece on `(-inf, x]`.
    pub fn cdf(&self, x: f64) -> f64 {
        let x = x.clamp(self.lo, self.hi);
        match &self.density {
            Density::Uniform { level } => level * (x - self.lo),
            Density::Arcsine { mass } => {
                // asin near +-1 loses ~1e-8; pin the endpoints so the piece
                // reports its exact mass at hi
                if x == self.hi {
                    return *mass;
                }
                if x == self.lo {
                    return 0.0;
                }
                let u = ((2.0 * x - self.lo - self.hi) / (self.hi - self.lo)).clamp(-1.0, 1.0);
                mass * (0.5 + u.asin() / std::f64::consts::PI)
            }
            Density::Poly { coeffs } => {
                poly_antiderivative_at(coeffs, x) - poly_antiderivative_at(coeffs, self.lo)
            }
            Density::Table { values } => {
                let h = self.cell_width();
                let t = (x - self.lo) / h;
                let full = (t.floor() as usize).min(values.len() - 2);
                let mut acc = 0.0;
                for w in values.windows(2).take(full) {
                    acc += 0.5 * (w[0] + w[1]) * h;
                }
                let c = x - (self.lo + full as f64 * h);
                if c > 0.0 {
                    let v0 = values[full];
                    let v1 = values[full + 1];
                    acc += v0 * c + (v1 - v0) * c * c / (2.0 * h);
                }
                acc
            }
        }
    }

    /// Pointwise density. Unbounded kinds report `f64::INFINITY` where they
    /// blow up (arcsine endpoints); outside the interval the value is zero.
    pub fn density_at(&self, x: f64) -> f64 {
        if x < self.lo || x > self.hi {
            return 0.0;
        }
        match &self.density {
            Density::Uniform { level } => *level,
            Density::Arcsine { mass } => {
                let r = (self.hi - x) * (x - self.lo);
                if r <= 0.0 {
                    f64::INFINITY
                } else {
                    mass / (std::f64::consts::PI * r.sqrt())
                }
            }
            Density::Poly { coeffs } => horner(coeffs, x),
            Density::Table { values } => {
                let h = self.cell_width();
                let t = ((x - self.lo) / h).clamp(0.0, (values.len() - 1) as f64);
                let i = (t.floor() as usize).min(values.len() - 2);
                let f = t - i as f64;
                values[i] * (1.0 - f) + values[i + 1] * f
            }
        }
    }

    /// Multiplies the piece by a non-negative factor.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        let density = match &self.density {
            Density::Uniform { level } => Density::Uniform {
                level: level * factor,
            },
            Density::Arcsine { mass } => Density::Arcsine {
                mass: mass * factor,
            },
            Density::Poly { coeffs } => Density::Poly {
                coeffs: coeffs.iter().map(|c| c * factor).collect(),
            },
            Density::Table { values } => Density::Table {
                values: values.iter().map(|v| v * factor).collect(),
            },
        };
        DensityPiece::new(self.lo, self.hi, density)
    }

    /// Image of the piece under `x -> s x + t`, `s != 0`.
    pub fn pushforward(&self, s: f64, t: f64) -> Result<Self> {
        let (a, b) = (s * self.lo + t, s * self.hi + t);
        let (lo, hi) = if s > 0.0 { (a, b) } else { (b, a) };
        // A piece a few ulps wide can collapse under endpoint rounding; keep
        // a representable width so the image stays a valid piece.
        let hi = if hi > lo {
            hi
        } else {
            lo + (2.0 * f64::EPSILON * lo.abs()).max(f64::MIN_POSITIVE)
        };
        let inv = 1.0 / s.abs();
        let density = match &self.density {
            // Divide the mass by the mapped width instead of scaling the
            // level by 1/|s|: the latter leaks endpoint rounding into the
            // mass of every narrow panel.
            Density::Uniform { .. } => Density::Uniform {
                level: self.mass() / (hi - lo),
            },
            // The arcsine family is closed under affine maps with the same mass.
            Density::Arcsine { mass } => Density::Arcsine { mass: *mass },
            Density::Poly { coeffs } => {
                // rho'(x) = rho((x - t)/s) / |s|, expanded back into coefficients.
                let n = coeffs.len();
                let mut out = vec![0.0; n];
                for (k, ck) in coeffs.iter().enumerate() {
                    // c_k ((x - t)/s)^k contributes binomially to lower powers.
                    let sk = s.powi(k as i32);
                    let mut binom = 1.0;
                    for j in 0..=k {
                        // binom = C(k, j); (-t)^(k-j)
                        out[j] += ck * binom * (-t).powi((k - j) as i32) / sk;
                        binom = binom * (k - j) as f64 / (j + 1) as f64;
                    }
                }
                for c in out.iter_mut() {
                    *c *= inv;
                }
                Density::Poly { coeffs: out }
            }
            Density::Table { values } => {
                let mut v: Vec<f64> = values.iter().map(|v| v * inv).collect();
                if s < 0.0 {
                    v.reverse();
                }
                Density::Table { values: v }
            }
        };
        DensityPiece::new(lo, hi, density)
    }

    fn cell_width(&self) -> f64 {
        let n = match &self.density {
            Density::Table { values } => values.len() - 1,
            _ => 1,
        };
        (self.hi - self.lo) / n as f64
    }
}

/// A finite positive measure: atoms plus density pieces.
///
/// Construction normalizes the representation: atoms are sorted, atoms at
/// identical positions are merged, and zero-mass parts are dropped.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MeasureJson", into = "MeasureJson")]
pub struct Measure {
    atoms: Vec<Atom>,
    pieces: Vec<DensityPiece>,
}

impl Measure {
    pub fn new(atoms: Vec<Atom>, pieces: Vec<DensityPiece>) -> Result<Self> {
        for a in &atoms {
            if !a.position.is_finite() || !a.weight.is_finite() {
                return Err(Error::Structural(format!(
                    "atom ({}, {}) is not finite",
                    a.position, a.weight
                )));
            }
            if a.weight < 0.0 {
                return Err(Error::Structural(format!(
                    "atom at {} has negative weight {}",
                    a.position, a.weight
                )));
            }
        }
        let mut atoms = atoms;
        atoms.sort_by(|p, q| p.position.total_cmp(&q.position));
        let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
        for a in atoms {
            match merged.last_mut() {
                Some(last) if last.position == a.position => last.weight += a.weight,
                _ => merged.push(a),
            }
        }
        merged.retain(|a| a.weight > 0.0);
        let pieces: Vec<DensityPiece> = pieces.into_iter().filter(|p| p.mass() > 0.0).collect();
        Ok(Measure {
            atoms: merged,
            pieces,
        })
    }

    /// A unit point mass at `x`.
    pub fn dirac(x: f64) -> Result<Self> {
        Measure::new(
            vec![Atom {
                position: x,
                weight: 1.0,
            }],
            vec![],
        )
    }

    pub fn from_atoms(atoms: &[(f64, f64)]) -> Result<Self> {
        Measure::new(
            atoms
                .iter()
                .map(|&(position, weight)| Atom { position, weight })
                .collect(),
            vec![],
        )
    }

    /// Constant density `level` on `[a, b]`.
    pub fn uniform_on(a: f64, b: f64, level: f64) -> Result<Self> {
        Measure::new(vec![], vec![DensityPiece::new(a, b, Density::Uniform { level })?])
    }

    /// The restriction of Lebesgue measure to `[a, b]` (density one).
    pub fn lebesgue(a: f64, b: f64) -> Result<Self> {
        Measure::uniform_on(a, b, 1.0)
    }

    /// The uniform probability measure on `[a, b]`.
    pub fn uniform_probability(a: f64, b: f64) -> Result<Self> {
        Measure::uniform_on(a, b, 1.0 / (b - a))
    }

    /// The arcsine (equilibrium) probability measure of `[a, b]`.
    pub fn arcsine(a: f64, b: f64) -> Result<Self> {
        Measure::new(
            vec![],
            vec![DensityPiece::new(a, b, Density::Arcsine { mass: 1.0 })?],
        )
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn pieces(&self) -> &[DensityPiece] {
        &self.pieces
    }

    pub fn has_atoms(&self) -> bool {
        !self.atoms.is_empty()
    }

    pub fn is_diffuse(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn mass(&self) -> f64 {
        let atom_mass: f64 = self.atoms.iter().map(|a| a.weight).sum();
        let piece_mass: f64 = self.pieces.iter().map(|p| p.mass()).sum();
        atom_mass + piece_mass
    }

    pub fn is_probability(&self) -> bool {
        (self.mass() - 1.0).abs() <= PROBABILITY_TOL
    }

    /// Smallest closed interval carrying all mass, `None` for the zero measure.
    pub fn support(&self) -> Option<(f64, f64)> {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for a in &self.atoms {
            lo = lo.min(a.position);
            hi = hi.max(a.position);
        }
        for p in &self.pieces {
            lo = lo.min(p.lo());
            hi = hi.max(p.hi());
        }
        if lo <= hi {
            Some((lo, hi))
        } else {
            None
        }
    }

    /// `mu((-inf, x])`. Right-continuous and monotone by construction.
    pub fn cdf(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for a in &self.atoms {
            if a.position <= x {
                acc += a.weight;
            } else {
                break;
            }
        }
        for p in &self.pieces {
            acc += p.cdf(x);
        }
        acc
    }

    /// Total atomic mass sitting exactly at `x`.
    pub fn atom_mass_at(&self, x: f64) -> f64 {
        match self
            .atoms
            .binary_search_by(|a| a.position.total_cmp(&x))
        {
            Ok(i) => self.atoms[i].weight,
            Err(_) => 0.0,
        }
    }

    /// Generalized inverse of the distribution function at `p in (0, 1)`.
    ///
    /// Requires a diffuse probability measure so the distribution function is
    /// continuous and the preimage is an interval; bisection returns a point
    /// of it.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !self.is_diffuse() {
            return Err(Error::AtomicInput);
        }
        if !self.is_probability() {
            return Err(Error::NotProbability { mass: self.mass() });
        }
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("quantile level {p} outside (0, 1)")));
        }
        let (mut lo, mut hi) = self.support().ok_or(Error::ZeroMass)?;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.cdf(mid) < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// Rescales to total mass one. A fixed point on anything already within
    /// [`PROBABILITY_TOL`] of mass one, so normalizing twice changes nothing.
    pub fn normalize(&self) -> Result<Self> {
        let m = self.mass();
        if !(m > 0.0) || !m.is_finite() {
            return Err(Error::ZeroMass);
        }
        if (m - 1.0).abs() <= PROBABILITY_TOL {
            return Ok(self.clone());
        }
        let atoms = self
            .atoms
            .iter()
            .map(|a| Atom {
                position: a.position,
                weight: a.weight / m,
            })
            .collect();
        let pieces = self
            .pieces
            .iter()
            .map(|p| p.scaled(1.0 / m))
            .collect::<Result<Vec<_>>>()?;
        Measure::new(atoms, pieces)
    }

    /// Image measure under `x -> s x + t`, `s != 0`. Mass is preserved.
    pub fn pushforward_affine(&self, s: f64, t: f64) -> Result<Self> {
        if s == 0.0 || !s.is_finite() || !t.is_finite() {
            return Err(Error::Domain(format!(
                "pushforward needs a finite map with s != 0, got s = {s}, t = {t}"
            )));
        }
        let atoms = self
            .atoms
            .iter()
            .map(|a| Atom {
                position: s * a.position + t,
                weight: a.weight,
            })
            .collect();
        let pieces = self
            .pieces
            .iter()
            .map(|p| p.pushforward(s, t))
            .collect::<Result<Vec<_>>>()?;
        Measure::new(atoms, pieces)
    }

    /// Kolmogorov (sup-CDF) distance between two probability measures, the
    /// standard metric for weak convergence of compactly supported measures.
    pub fn weak_distance(&self, other: &Measure) -> Result<f64> {
        self.weak_distance_with(other, DEFAULT_WEAK_REFINE)
    }

    /// As [`Measure::weak_distance`] with an explicit refinement grid size.
    ///
    /// The supremum is evaluated at every CDF breakpoint of both measures
    /// (from the left and from the right) plus `refine` equally spaced
    /// points, so it is exact whenever both distribution functions are
    /// piecewise linear between breakpoints.
    pub fn weak_distance_with(&self, other: &Measure, refine: usize) -> Result<f64> {
        for m in [self, other] {
            if !m.is_probability() {
                return Err(Error::NotProbability { mass: m.mass() });
            }
        }
        let (alo, ahi) = self.support().ok_or(Error::ZeroMass)?;
        let (blo, bhi) = other.support().ok_or(Error::ZeroMass)?;
        let lo = alo.min(blo);
        let hi = ahi.max(bhi);

        let mut xs: Vec<f64> = Vec::new();
        for m in [self, other] {
            xs.extend(m.atoms.iter().map(|a| a.position));
            for p in &m.pieces {
                xs.push(p.lo());
                xs.push(p.hi());
            }
        }
        if hi > lo {
            for i in 0..=refine {
                xs.push(lo + (hi - lo) * i as f64 / refine as f64);
            }
        }
        xs.sort_by(|a, b| a.total_cmp(b));
        xs.dedup();

        let mut sup: f64 = 0.0;
        for &x in &xs {
            let f = self.cdf(x);
            let g = other.cdf(x);
            sup = sup.max((f - g).abs());
            // Left limits differ from values only at atoms.
            let fl = f - self.atom_mass_at(x);
            let gl = g - other.atom_mass_at(x);
            sup = sup.max((fl - gl).abs());
        }
        Ok(sup)
    }
}

/// An ordered union of disjoint, non-degenerate closed intervals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "IntervalUnionJson", into = "IntervalUnionJson")]
pub struct IntervalUnion {
    intervals: Vec<(f64, f64)>,
}

impl IntervalUnion {
    /// Validating constructor: intervals must be finite, non-degenerate,
    /// strictly increasing and pairwise disjoint.
    pub fn new(intervals: Vec<(f64, f64)>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::Domain("empty interval union".into()));
        }
        for &(lo, hi) in &intervals {
            if !lo.is_finite() || !hi.is_finite() || !(lo < hi) {
                return Err(Error::DegenerateInterval { lo, hi });
            }
        }
        for i in 1..intervals.len() {
            if !(intervals[i - 1].1 < intervals[i].0) {
                return Err(Error::OverlappingIntervals { index: i });
            }
        }
        Ok(IntervalUnion { intervals })
    }

    /// Builds a union from arbitrary intervals, sorting and merging any that
    /// overlap or sit closer than `gap_tol`.
    pub fn from_merged(mut intervals: Vec<(f64, f64)>, gap_tol: f64) -> Result<Self> {
        intervals.retain(|&(lo, hi)| hi > lo);
        if intervals.is_empty() {
            return Err(Error::Domain("empty interval union".into()));
        }
        intervals.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(intervals.len());
        for (lo, hi) in intervals {
            match merged.last_mut() {
                Some(last) if lo - last.1 <= gap_tol => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }
        IntervalUnion::new(merged)
    }

    pub fn segment(lo: f64, hi: f64) -> Result<Self> {
        IntervalUnion::new(vec![(lo, hi)])
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn total_length(&self) -> f64 {
        self.intervals.iter().map(|&(lo, hi)| hi - lo).sum()
    }

    pub fn hull(&self) -> (f64, f64) {
        (
            self.intervals.first().unwrap().0,
            self.intervals.last().unwrap().1,
        )
    }

    /// Length-weighted centroid of the union.
    pub fn centroid(&self) -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for &(lo, hi) in &self.intervals {
            num += 0.5 * (lo + hi) * (hi - lo);
            den += hi - lo;
        }
        num / den
    }

    pub fn contains_point(&self, x: f64, tol: f64) -> bool {
        self.intervals
            .iter()
            .any(|&(lo, hi)| x >= lo - tol && x <= hi + tol)
    }

    pub fn contains_interval(&self, lo: f64, hi: f64, tol: f64) -> bool {
        self.intervals
            .iter()
            .any(|&(a, b)| lo >= a - tol && hi <= b + tol)
    }

    /// Image of the union under `x -> c + s (x - c)`, `s > 0`.
    pub fn scale_about(&self, c: f64, s: f64) -> Result<Self> {
        if !(s > 0.0) || !s.is_finite() {
            return Err(Error::Domain(format!("scale factor must be positive, got {s}")));
        }
        IntervalUnion::new(
            self.intervals
                .iter()
                .map(|&(lo, hi)| (c + s * (lo - c), c + s * (hi - c)))
                .collect(),
        )
    }
}

pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn poly_antiderivative_at(coeffs: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for (k, &c) in coeffs.iter().enumerate().rev() {
        acc = acc * x + c / (k + 1) as f64;
    }
    acc * x
}

// JSON faces of Measure and IntervalUnion.
//
// {"atoms": [{"x": .., "w": ..}, ...],
//  "pieces": [{"a": .., "b": .., "kind": "uniform"|"arcsine"|"poly"|"table",
//              "data": ..}, ...]}
//
// "data" holds the level for uniform pieces, the mass for arcsine pieces
// (defaulting to one when omitted), and the coefficient or sample array for
// the other kinds.

#[derive(Debug, Clone, Serialize, Deserialize)]
struct AtomJson {
    x: f64,
    w: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PieceJson {
    a: f64,
    b: f64,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    data: Option<serde_json::Value>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct MeasureJson {
    #[serde(default)]
    atoms: Vec<AtomJson>,
    #[serde(default)]
    pieces: Vec<PieceJson>,
}

fn number(v: &serde_json::Value) -> Option<f64> {
    v.as_f64()
}

fn number_array(v: &serde_json::Value) -> Option<Vec<f64>> {
    v.as_array()?.iter().map(|x| x.as_f64()).collect()
}

impl TryFrom<MeasureJson> for Measure {
    type Error = Error;

    fn try_from(j: MeasureJson) -> Result<Self> {
        let atoms = j
            .atoms
            .into_iter()
            .map(|a| Atom {
                position: a.x,
                weight: a.w,
            })
            .collect();
        let mut pieces = Vec::with_capacity(j.pieces.len());
        for p in j.pieces {
            let density = match p.kind.as_str() {
                "uniform" => {
                    let level = p
                        .data
                        .as_ref()
                        .and_then(number)
                        .ok_or_else(|| Error::Structural("uniform piece needs numeric data".into()))?;
                    Density::Uniform { level }
                }
                "arcsine" => {
                    let mass = match &p.data {
                        None | Some(serde_json::Value::Null) => 1.0,
                        Some(v) => number(v).ok_or_else(|| {
                            Error::Structural("arcsine data must be a number (mass)".into())
                        })?,
                    };
                    Density::Arcsine { mass }
                }
                "poly" => {
                    let coeffs = p.data.as_ref().and_then(number_array).ok_or_else(|| {
                        Error::Structural("poly piece needs an array of coefficients".into())
                    })?;
                    Density::Poly { coeffs }
                }
                "table" => {
                    let values = p.data.as_ref().and_then(number_array).ok_or_else(|| {
                        Error::Structural("table piece needs an array of samples".into())
                    })?;
                    Density::Table { values }
                }
                other => {
                    return Err(Error::Structural(format!("unknown density kind '{other}'")));
                }
            };
            pieces.push(DensityPiece::new(p.a, p.b, density)?);
        }
        Measure::new(atoms, pieces)
    }
}

impl From<Measure> for MeasureJson {
    fn from(m: Measure) -> Self {
        let atoms = m
            .atoms
            .iter()
            .map(|a| AtomJson {
                x: a.position,
                w: a.weight,
            })
            .collect();
        let pieces = m
            .pieces
            .iter()
            .map(|p| {
                let (kind, data) = match p.density() {
                    Density::Uniform { level } => ("uniform", serde_json::json!(level)),
                    Density::Arcsine { mass } => ("arcsine", serde_json::json!(mass)),
                    Density::Poly { coeffs } => ("poly", serde_json::json!(coeffs)),
                    Density::Table { values } => ("table", serde_json::json!(values)),
                };
                PieceJson {
                    a: p.lo(),
                    b: p.hi(),
                    kind: kind.to_string(),
                    data: Some(data),
                }
            })
            .collect();
        MeasureJson { atoms, pieces }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub(crate) struct IntervalUnionJson {
    intervals: Vec<[f64; 2]>,
}

impl TryFrom<IntervalUnionJson> for IntervalUnion {
    type Error = Error;

    fn try_from(j: IntervalUnionJson) -> Result<Self> {
        IntervalUnion::new(j.intervals.into_iter().map(|[a, b]| (a, b)).collect())
    }
}

impl From<IntervalUnion> for IntervalUnionJson {
    fn from(u: IntervalUnion) -> Self {
        IntervalUnionJson {
            intervals: u.intervals.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}
