//! Weighted multisets of certified trace polynomials and their root measures.

use equilib_core::Measure;

use crate::enumerate::is_totally_real_in_segment;
use crate::error::{Error, Result};
use crate::lift::is_prime_power;
use crate::poly::{isolate_real_roots, peel_boundary_roots, IntegerPolynomial, RatPoly};

/// How atoms sitting exactly at +-2 sqrt(q) are weighted in the root measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryWeighting {
    /// Boundary roots count like interior roots.
    Stated,
    /// Boundary roots count twice before normalization.
    Doubled,
}

/// Polynomials with multiplicities, every root certified real and confined
/// to [-2 sqrt(q), 2 sqrt(q)]. Multiplicity bookkeeping is preserved as
/// given; only the root measure normalizes.
#[derive(Clone, Debug, PartialEq)]
pub struct RealTraceMultiset {
    entries: Vec<(IntegerPolynomial, usize)>,
    q: u64,
}

impl RealTraceMultiset {
    pub fn new(entries: Vec<(IntegerPolynomial, usize)>, q: u64) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::NotPrimePower(q));
        }
        if entries.is_empty() {
            return Err(Error::Domain(
                "multiset needs at least one polynomial".into(),
            ));
        }
        for (poly, mult) in &entries {
            if *mult == 0 {
                return Err(Error::Domain(format!(
                    "multiplicity of {poly} must be positive"
                )));
            }
            if !is_totally_real_in_segment(poly, q)? {
                return Err(Error::Domain(format!(
                    "{poly} has a complex root or a root outside [-2*sqrt({q}), 2*sqrt({q})]"
                )));
            }
        }
        Ok(RealTraceMultiset { entries, q })
    }

    pub fn entries(&self) -> &[(IntegerPolynomial, usize)] {
        &self.entries
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Total root count: sum of degree times multiplicity.
    pub fn total_degree(&self) -> usize {
        self.entries.iter().map(|(p, m)| p.degree() * m).sum()
    }

    /// The same polynomials with every multiplicity scaled by n.
    pub fn scaled(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("scale factor must be positive".into()));
        }
        Ok(RealTraceMultiset {
            entries: self
                .entries
                .iter()
                .map(|(p, m)| (p.clone(), m * n))
                .collect(),
            q: self.q,
        })
    }
}

/// Root measure of the multiset: one atom per distinct root, weighted by
/// multiplicity over the total root count. Boundary roots at +-2 sqrt(q) use
/// their stated multiplicity.
pub fn mu_of_multiset(x: &RealTraceMultiset) -> Result<Measure> {
    mu_of_multiset_weighted(x, BoundaryWeighting::Stated)
}

/// Root measure with an explicit boundary weighting policy.
///
/// Root positions come from Sturm-bracketed bisection at width 1e-12, except
/// boundary roots, which are placed at +-2 sqrt(q) directly. Scaling every
/// multiplicity by a common factor leaves the result bit-identical, since
/// each weight is a correctly rounded ratio of exact integers.
pub fn mu_of_multiset_weighted(
    x: &RealTraceMultiset,
    weighting: BoundaryWeighting,
) -> Result<Measure> {
    let boundary = 2.0 * (x.q() as f64).sqrt();
    let mut weighted: Vec<(f64, u64)> = Vec::new();
    for (poly, mult) in x.entries() {
        for (factor, rep) in RatPoly::from_int(poly).yun_decomposition() {
            let count = (rep * mult) as u64;
            let (interior, edges) = peel_boundary_roots(factor, x.q());
            for s in edges {
                let n = match weighting {
                    BoundaryWeighting::Stated => count,
                    BoundaryWeighting::Doubled => 2 * count,
                };
                weighted.push((s as f64 * boundary, n));
            }
            for root in isolate_real_roots(&interior, 1e-12)? {
                weighted.push((root, count));
            }
        }
    }
    weighted.sort_by(|a, b| a.0.total_cmp(&b.0));
    // merge exactly equal positions so repeated polynomials and multiplicity
    // towers collapse to single atoms
    let mut merged: Vec<(f64, u64)> = Vec::new();
    for (pos, n) in weighted {
        match merged.last_mut() {
            Some(last) if last.0 == pos => last.1 += n,
            _ => merged.push((pos, n)),
        }
    }
    let total: u64 = merged.iter().map(|&(_, n)| n).sum();
    if total == 0 {
        return Err(Error::Internal("certified multiset produced no roots".into()));
    }
    let atoms: Vec<(f64, f64)> = merged
        .iter()
        .map(|&(pos, n)| (pos, n as f64 / total as f64))
        .collect();
    Measure::from_atoms(&atoms).map_err(|e| Error::Internal(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn quadratic_gives_two_half_atoms() {
        let x = RealTraceMultiset::new(vec![(p(&[-2, 0, 1]), 1)], 2).unwrap();
        let mu = mu_of_multiset(&x).unwrap();
        let atoms = mu.atoms();
        assert_eq!(atoms.len(), 2);
        assert_eq!(atoms[0].weight, 0.5);
        assert_eq!(atoms[1].weight, 0.5);
        assert!((atoms[0].position + 2f64.sqrt()).abs() < 1e-11);
        assert!((atoms[1].position - 2f64.sqrt()).abs() < 1e-11);
        assert!(mu.is_probability());
    }

    #[test]
    fn repeated_linear_polynomial_merges_to_one_atom() {
        let x = RealTraceMultiset::new(vec![(p(&[-1, 1]), 3)], 2).unwrap();
        let mu = mu_of_multiset(&x).unwrap();
        assert_eq!(mu.atoms().len(), 1);
        assert_eq!(mu.atoms()[0].position, 1.0);
        assert_eq!(mu.atoms()[0].weight, 1.0);
    }

    #[test]
    fn mixed_entries_share_total_degree() {
        let x = RealTraceMultiset::new(vec![(p(&[-2, 0, 1]), 1), (p(&[0, 1]), 1)], 2).unwrap();
        assert_eq!(x.total_degree(), 3);
        let mu = mu_of_multiset(&x).unwrap();
        assert_eq!(mu.atoms().len(), 3);
        for a in mu.atoms() {
            assert_eq!(a.weight, 1.0 / 3.0);
        }
        assert_eq!(mu.atoms()[1].position, 0.0);
    }

    #[test]
    fn internal_multiplicity_is_counted() {
        // (x - 1)^2 (x + 2) with multiplicity 1: weights 2/3 and 1/3
        let x = RealTraceMultiset::new(vec![(p(&[2, -3, 0, 1]), 1)], 2).unwrap();
        let mu = mu_of_multiset(&x).unwrap();
        assert_eq!(mu.atoms().len(), 2);
        assert_eq!(mu.atoms()[0].weight, 1.0 / 3.0); // -2 simple
        assert_eq!(mu.atoms()[1].weight, 2.0 / 3.0); // +1 double
    }

    #[test]
    fn tower_scaling_is_bit_exact() {
        let base =
            RealTraceMultiset::new(vec![(p(&[1, -3, 0, 1]), 1), (p(&[-2, 0, 1]), 2)], 2).unwrap();
        let mu = mu_of_multiset(&base).unwrap();
        for n in [2usize, 5] {
            let scaled = mu_of_multiset(&base.scaled(n).unwrap()).unwrap();
            assert_eq!(mu.atoms().len(), scaled.atoms().len());
            for (a, b) in mu.atoms().iter().zip(scaled.atoms().iter()) {
                assert_eq!(a.position, b.position);
                assert_eq!(a.weight, b.weight);
            }
        }
    }

    #[test]
    fn boundary_weighting_changes_normalization() {
        // (x^2 - 8)(x - 1): boundary pair at +-2 sqrt 2 plus interior root 1
        let x = RealTraceMultiset::new(vec![(p(&[8, -8, -1, 1]), 1)], 2).unwrap();
        let b = 2.0 * 2f64.sqrt();
        let stated = mu_of_multiset(&x).unwrap();
        assert_eq!(stated.atoms().len(), 3);
        assert_eq!(stated.atoms()[0].position, -b);
        assert_eq!(stated.atoms()[2].position, b);
        for a in stated.atoms() {
            assert_eq!(a.weight, 1.0 / 3.0);
        }
        let doubled = mu_of_multiset_weighted(&x, BoundaryWeighting::Doubled).unwrap();
        assert_eq!(doubled.atoms()[0].weight, 0.4);
        assert_eq!(doubled.atoms()[1].weight, 0.2);
        assert_eq!(doubled.atoms()[2].weight, 0.4);
        assert!(doubled.is_probability());
    }

    #[test]
    fn rejects_uncertified_or_malformed_input() {
        assert!(matches!(
            RealTraceMultiset::new(vec![(p(&[-9, 0, 1]), 1)], 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            RealTraceMultiset::new(vec![(p(&[-2, 0, 1]), 0)], 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            RealTraceMultiset::new(vec![], 2),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            RealTraceMultiset::new(vec![(p(&[-2, 0, 1]), 1)], 6),
            Err(Error::NotPrimePower(6))
        ));
        let ok = RealTraceMultiset::new(vec![(p(&[-2, 0, 1]), 1)], 2).unwrap();
        assert!(ok.scaled(0).is_err());
    }
}
