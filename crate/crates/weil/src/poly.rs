//! Exact polynomial arithmetic over the rationals: Sturm chains, Yun
//! squarefree decomposition, sign evaluation at points of the form 2s*sqrt(q),
//! and bisection root isolation.
//!
//! Root locations are certified entirely in `BigRational` arithmetic.
//! Floating point enters only when a finished root bracket is collapsed to a
//! number for downstream consumers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Monic integer polynomial, constant term first.
///
/// The derived ordering compares coefficient lists element by element from
/// the constant term up, which is the deterministic order enumeration
/// results are reported in.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerPolynomial {
    coefficients: Vec<i64>,
}

impl IntegerPolynomial {
    /// Validates that the coefficient list is monic of degree >= 1.
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::Domain(
                "polynomial must have degree at least 1".into(),
            ));
        }
        if *coefficients.last().unwrap() != 1 {
            return Err(Error::Domain(format!(
                "leading coefficient must be 1, got {}",
                coefficients.last().unwrap()
            )));
        }
        Ok(IntegerPolynomial { coefficients })
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Horner evaluation in f64, for reporting and spot checks only.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }

    /// Degree after dividing out gcd(P, P'), i.e. the number of distinct
    /// complex roots.
    pub fn squarefree_degree(&self) -> usize {
        RatPoly::from_int(self).squarefree_part().degree()
    }
}

impl fmt::Display for IntegerPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for k in (0..self.coefficients.len()).rev() {
            let c = self.coefficients[k];
            if c == 0 {
                continue;
            }
            let sign = if out.is_empty() {
                if c < 0 {
                    "-"
                } else {
                    ""
                }
            } else if c < 0 {
                " - "
            } else {
                " + "
            };
            let a = c.unsigned_abs();
            let body = match k {
                0 => format!("{a}"),
                1 if a == 1 => "x".to_string(),
                1 => format!("{a}x"),
                _ if a == 1 => format!("x^{k}"),
                _ => format!("{a}x^{k}"),
            };
            out.push_str(sign);
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

pub(crate) fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Polynomial over the rationals, constant term first. The empty vector is
/// the zero polynomial; otherwise the last entry is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct RatPoly {
    c: Vec<BigRational>,
}

impl RatPoly {
    pub(crate) fn zero() -> Self {
        RatPoly { c: Vec::new() }
    }

    pub(crate) fn trim(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|t| t.is_zero()) {
            c.pop();
        }
        RatPoly { c }
    }

    pub(crate) fn from_int(p: &IntegerPolynomial) -> Self {
        RatPoly::from_i64(p.coefficients())
    }

    pub(crate) fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::trim(coeffs.iter().map(|&x| rat(x)).collect())
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, with both constants and the zero polynomial reported as 0.
    pub(crate) fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub(crate) fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub(crate) fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.c.iter().rev() {
            acc = &acc * x + c;
        }
        acc
    }

    pub(crate) fn derivative(&self) -> RatPoly {
        if self.c.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::trim(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    fn neg(&self) -> RatPoly {
        RatPoly {
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.c.len().max(other.c.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.c.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = other.c.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(a - b);
        }
        RatPoly::trim(out)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub(crate) fn divrem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() || self.c.len() < d.c.len() {
            return (RatPoly::zero(), self.clone());
        }
        let dd = d.c.len() - 1;
        let lead = d.c[dd].clone();
        let mut rem = self.c.clone();
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let f = top / &lead;
            for i in 0..=dd {
                let sub = &d.c[i] * &f;
                rem[k + i] -= sub;
            }
            quo[k] = f;
        }
        (RatPoly::trim(quo), RatPoly::trim(rem))
    }

    /// Divides exactly, panicking in debug builds if a remainder survives.
    fn divide_exact(&self, d: &RatPoly) -> RatPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "division left a remainder");
        q
    }

    pub(crate) fn divide_out_root(&self, r: &BigRational) -> RatPoly {
        self.divide_exact(&RatPoly {
            c: vec![-r.clone(), BigRational::one()],
        })
    }

    pub(crate) fn monic_or_zero(self) -> RatPoly {
        if self.is_zero() {
            return self;
        }
        let lead = self.c.last().unwrap().clone();
        if lead.is_one() {
            return self;
        }
        RatPoly {
            c: self.c.into_iter().map(|c| c / &lead).collect(),
        }
    }

    /// Scales by 1/|leading|, preserving signs everywhere.
    fn unit_lead_abs(self) -> RatPoly {
        if self.is_zero() {
            return self;
        }
        let lead = self.c.last().unwrap().abs();
        RatPoly {
            c: self.c.into_iter().map(|c| c / &lead).collect(),
        }
    }

    /// Monic greatest common divisor; gcd with zero is the other argument.
    pub(crate) fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = x.divrem(&y);
            x = y;
            // normalizing each remainder keeps coefficient sizes tame
            y = r.unit_lead_abs();
        }
        x.monic_or_zero()
    }

    /// Monic product of the distinct irreducible factors.
    pub(crate) fn squarefree_part(&self) -> RatPoly {
        let p = self.clone().monic_or_zero();
        if p.degree() == 0 {
            return p;
        }
        let g = RatPoly::gcd(&p, &p.derivative());
        if g.degree() == 0 {
            return p;
        }
        p.divide_exact(&g).monic_or_zero()
    }

    /// Yun decomposition: pairs (monic squarefree factor, multiplicity) whose
    /// product with multiplicities reconstructs the polynomial up to a
    /// constant. Factors appear in increasing multiplicity order.
    pub(crate) fn yun_decomposition(&self) -> Vec<(RatPoly, usize)> {
        let p = self.clone().monic_or_zero();
        if p.degree() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let g = RatPoly::gcd(&p, &dp);
        if g.degree() == 0 {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let mut w = p.divide_exact(&g).monic_or_zero();
        let y = dp.divide_exact(&g);
        let mut z = y.sub(&w.derivative());
        let mut i = 1usize;
        let cap = self.degree() + 1;
        while w.degree() >= 1 && i <= cap {
            let a = RatPoly::gcd(&w, &z);
            if a.degree() >= 1 {
                out.push((a.clone(), i));
                w = w.divide_exact(&a).monic_or_zero();
                let y_next = z.divide_exact(&a);
                z = y_next.sub(&w.derivative());
            } else {
                z = z.sub(&w.derivative());
            }
            i += 1;
        }
        out
    }

    /// Sturm chain: p, p', then negated remainders down to a constant. Signs
    /// are preserved; each entry is scaled by a positive constant only.
    pub(crate) fn sturm_chain(&self) -> Vec<RatPoly> {
        let mut chain = vec![self.clone(), self.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() || chain[n - 1].degree() == 0 {
                break;
            }
            let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.neg().unit_lead_abs());
        }
        chain.retain(|p| !p.is_zero());
        chain
    }
}

pub(crate) fn sign_rat(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub(crate) fn sign_at_rational(p: &RatPoly, x: &BigRational) -> i32 {
    sign_rat(&p.eval(x))
}

/// Value of p at s * 2 sqrt(q), represented exactly as (u, v) = u + v sqrt(q).
pub(crate) fn eval_at_twice_sqrt_q(p: &RatPoly, s: i64, q: u64) -> (BigRational, BigRational) {
    let mut u = BigRational::zero();
    let mut v = BigRational::zero();
    let qs = BigRational::from_integer(BigInt::from(q));
    let two_s = rat(2 * s);
    for c in p.coeffs().iter().rev() {
        // (u + v sqrt q) * 2s sqrt(q) = 2sqv + 2su sqrt(q), then add c
        let nu = &two_s * &qs * &v + c;
        let nv = &two_s * &u;
        u = nu;
        v = nv;
    }
    (u, v)
}

/// Exact sign of u + v sqrt(q). Valid whether or not q is a perfect square.
pub(crate) fn surd_sign(u: &BigRational, v: &BigRational, q: u64) -> i32 {
    let su = sign_rat(u);
    let sv = sign_rat(v);
    if sv == 0 {
        return su;
    }
    if su == 0 {
        return sv;
    }
    if su == sv {
        return su;
    }
    // opposite signs: compare u^2 against q v^2
    let d = u * u - BigRational::from_integer(BigInt::from(q)) * v * v;
    let sd = sign_rat(&d);
    if su > 0 {
        sd
    } else {
        -sd
    }
}

/// Sign variations with zeros dropped.
pub(crate) fn variations<I: IntoIterator<Item = i32>>(signs: I) -> usize {
    let mut last = 0i32;
    let mut count = 0usize;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Number of distinct real roots of `p` in the half-open interval (a, b].
///
/// The polynomial is reduced to its squarefree part internally, so repeated
/// roots count once. Arithmetic is exact; `a` and `b` enter at their exact
/// binary floating point values.
pub fn sturm_count(p: &IntegerPolynomial, a: f64, b: f64) -> Result<usize> {
    if !a.is_finite() || !b.is_finite() || a >= b {
        return Err(Error::Domain(format!("invalid interval ({a}, {b}]")));
    }
    let ra = BigRational::from_float(a).unwrap();
    let rb = BigRational::from_float(b).unwrap();
    let mut s = RatPoly::from_int(p).squarefree_part();
    let mut at_b = 0usize;
    // roots exactly at the endpoints break the variation count, so divide
    // them out; the one at b is in the interval, the one at a is not
    if sign_at_rational(&s, &rb) == 0 {
        s = s.divide_out_root(&rb);
        at_b = 1;
    }
    if sign_at_rational(&s, &ra) == 0 {
        s = s.divide_out_root(&ra);
    }
    if s.degree() == 0 {
        return Ok(at_b);
    }
    let chain = s.sturm_chain();
    let va = variations(chain.iter().map(|c| sign_at_rational(c, &ra)));
    let vb = variations(chain.iter().map(|c| sign_at_rational(c, &rb)));
    let diff = va as isize - vb as isize;
    if diff < 0 {
        return Err(Error::Internal(
            "sign variation count decreased backwards".into(),
        ));
    }
    Ok(diff as usize + at_b)
}

/// Removes roots at +-2 sqrt(q) from squarefree `s`; returns the reduced
/// polynomial and the signs (+1, -1) of the removed boundary roots.
pub(crate) fn peel_boundary_roots(s: RatPoly, q: u64) -> (RatPoly, Vec<i64>) {
    let mut t = s;
    let mut hits = Vec::new();
    let rq = q.sqrt();
    if rq * rq == q {
        // 2 sqrt(q) is an integer: the boundary roots are independent
        let b = BigRational::from_integer(BigInt::from(2 * rq));
        if sign_at_rational(&t, &b) == 0 {
            t = t.divide_out_root(&b);
            hits.push(1);
        }
        let nb = -b;
        if sign_at_rational(&t, &nb) == 0 {
            t = t.divide_out_root(&nb);
            hits.push(-1);
        }
    } else {
        // irrational boundary: a root at either end forces its conjugate,
        // i.e. divisibility by x^2 - 4q
        let (u, v) = eval_at_twice_sqrt_q(&t, 1, q);
        if surd_sign(&u, &v, q) == 0 {
            let minimal = RatPoly::trim(vec![
                BigRational::from_integer(BigInt::from(q) * -4),
                BigRational::zero(),
                BigRational::one(),
            ]);
            t = t.divide_exact(&minimal);
            hits.push(1);
            hits.push(-1);
        }
    }
    (t, hits)
}

/// All real roots of squarefree `p`, each located to within `tol`, ascending.
pub(crate) fn isolate_real_roots(p: &RatPoly, tol: f64) -> Result<Vec<f64>> {
    let p = p.clone().monic_or_zero();
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let tol_r = BigRational::from_float(tol)
        .filter(|t| t.is_positive())
        .ok_or_else(|| Error::Domain(format!("invalid isolation tolerance {tol}")))?;
    let chain = p.sturm_chain();
    let var_at = |x: &BigRational| variations(chain.iter().map(|c| sign_at_rational(c, x)));
    // Cauchy bound: every root satisfies |x| < 1 + max |c_i|
    let mut bound = BigRational::zero();
    for c in p.coeffs() {
        let a = c.abs();
        if a > bound {
            bound = a;
        }
    }
    let m = bound + BigRational::one();
    let neg_m = -m.clone();
    let two = rat(2);
    let mut stack = vec![(neg_m.clone(), m.clone(), var_at(&neg_m), var_at(&m))];
    let mut roots: Vec<f64> = Vec::new();
    let mut work = 0usize;
    while let Some((a, b, va, vb)) = stack.pop() {
        work += 1;
        if work > 100_000 {
            return Err(Error::RootIsolation(
                "subdivision budget exhausted".into(),
            ));
        }
        let count = va as isize - vb as isize;
        if count <= 0 {
            continue;
        }
        if count == 1 {
            // single simple root in (a, b) with non-root endpoints: the signs
            // differ and plain bisection converges
            let mut lo = a;
            let mut hi = b;
            let slo = sign_at_rational(&p, &lo);
            while &hi - &lo > tol_r {
                let mid = (&lo + &hi) / &two;
                let sm = sign_at_rational(&p, &mid);
                if sm == 0 {
                    lo = mid.clone();
                    hi = mid;
                    break;
                }
                if sm == slo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let center = (&lo + &hi) / &two;
            let value = center
                .to_f64()
                .ok_or_else(|| Error::RootIsolation("bracket midpoint overflowed f64".into()))?;
            roots.push(value);
            continue;
        }
        // several roots: split at a midpoint, dodging the midpoint being a
        // root itself (finitely many roots, so the nudge loop terminates)
        let mut mid = (&a + &b) / &two;
        let step = (&b - &a) / rat(64);
        let mut nudges = 0;
        while sign_at_rational(&p, &mid) == 0 {
            mid += &step;
            nudges += 1;
            if nudges > 32 {
                return Err(Error::RootIsolation(
                    "could not find a non-root split point".into(),
                ));
            }
        }
        let vm = var_at(&mid);
        stack.push((a, mid.clone(), va, vm));
        stack.push((mid, b, vm, vb));
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_monic_and_constant_inputs() {
        assert!(IntegerPolynomial::new(vec![1]).is_err());
        assert!(IntegerPolynomial::new(vec![1, 2]).is_err());
        assert!(IntegerPolynomial::new(vec![]).is_err());
        assert!(IntegerPolynomial::new(vec![0, 1]).is_ok());
    }

    #[test]
    fn display_renders_terms() {
        assert_eq!(format!("{}", p(&[1, -3, 0, 1])), "x^3 - 3x + 1");
        assert_eq!(format!("{}", p(&[0, 1])), "x");
        assert_eq!(format!("{}", p(&[-8, 0, 1])), "x^2 - 8");
        assert_eq!(format!("{}", p(&[2, 1])), "x + 2");
    }

    #[test]
    fn sturm_counts_quadratic_roots() {
        assert_eq!(sturm_count(&p(&[-2, 0, 1]), -2.0, 2.0).unwrap(), 2);
    }

    #[test]
    fn sturm_sees_no_complex_roots() {
        assert_eq!(sturm_count(&p(&[1, 0, 1]), -10.0, 10.0).unwrap(), 0);
    }

    #[test]
    fn sturm_counts_cubic_roots() {
        assert_eq!(sturm_count(&p(&[1, -3, 0, 1]), -2.0, 2.0).unwrap(), 3);
    }

    #[test]
    fn sturm_interval_is_half_open() {
        // roots of x^2 - 1 at +-1; (a, b] keeps b and drops a
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), -1.0, 1.0).unwrap(), 1);
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), -2.0, 1.0).unwrap(), 2);
        assert_eq!(sturm_count(&p(&[-1, 0, 1]), -1.0, 0.5).unwrap(), 0);
    }

    #[test]
    fn sturm_collapses_repeated_roots() {
        // (x - 1)^2 (x + 2) has two distinct roots
        assert_eq!(sturm_count(&p(&[2, -3, 0, 1]), -3.0, 3.0).unwrap(), 2);
    }

    #[test]
    fn sturm_rejects_bad_intervals() {
        assert!(sturm_count(&p(&[-2, 0, 1]), 1.0, 1.0).is_err());
        assert!(sturm_count(&p(&[-2, 0, 1]), 2.0, -2.0).is_err());
        assert!(sturm_count(&p(&[-2, 0, 1]), f64::NAN, 1.0).is_err());
    }

    #[test]
    fn squarefree_degree_counts_distinct_roots() {
        assert_eq!(p(&[2, -3, 0, 1]).squarefree_degree(), 2);
        assert_eq!(p(&[-2, 0, 1]).squarefree_degree(), 2);
        assert_eq!(p(&[0, 0, 1]).squarefree_degree(), 1);
    }

    #[test]
    fn yun_splits_multiplicities() {
        // (x - 1)^2 (x + 2)
        let factors = RatPoly::from_i64(&[2, -3, 0, 1]).yun_decomposition();
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0].0, RatPoly::from_i64(&[2, 1]));
        assert_eq!(factors[0].1, 1);
        assert_eq!(factors[1].0, RatPoly::from_i64(&[-1, 1]));
        assert_eq!(factors[1].1, 2);
    }

    #[test]
    fn yun_reports_squarefree_input_whole() {
        let factors = RatPoly::from_i64(&[1, -3, 0, 1]).yun_decomposition();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].1, 1);
        assert_eq!(factors[0].0, RatPoly::from_i64(&[1, -3, 0, 1]));
    }

    #[test]
    fn isolates_cubic_roots_to_tolerance() {
        // roots of x^3 - 3x + 1 are 2 cos(2 pi/9), 2 cos(4 pi/9), 2 cos(8 pi/9)
        let roots = isolate_real_roots(&RatPoly::from_i64(&[1, -3, 0, 1]), 1e-12).unwrap();
        let expect = [
            2.0 * (8.0 * std::f64::consts::PI / 9.0).cos(),
            2.0 * (4.0 * std::f64::consts::PI / 9.0).cos(),
            2.0 * (2.0 * std::f64::consts::PI / 9.0).cos(),
        ];
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip(expect.iter()) {
            assert!((r - e).abs() < 1e-11, "root {r} vs {e}");
        }
    }

    #[test]
    fn isolation_survives_roots_at_split_points() {
        // x (x - 1)(x + 1): zero sits exactly at the first midpoint
        let roots = isolate_real_roots(&RatPoly::from_i64(&[0, -1, 0, 1]), 1e-12).unwrap();
        assert_eq!(roots.len(), 3);
        for (r, e) in roots.iter().zip([-1.0, 0.0, 1.0].iter()) {
            assert!((r - e).abs() < 1e-11, "root {r} vs {e}");
        }
    }

    #[test]
    fn surd_sign_handles_square_q() {
        // x^2 - 16 vanishes at 2 sqrt(4) = 4
        let (u, v) = eval_at_twice_sqrt_q(&RatPoly::from_i64(&[-16, 0, 1]), 1, 4);
        assert_eq!(surd_sign(&u, &v, 4), 0);
    }

    #[test]
    fn surd_sign_resolves_close_competition() {
        // 7 - 5 sqrt(2) < 0 while 8 - 5 sqrt(2) > 0
        assert_eq!(surd_sign(&rat(7), &rat(-5), 2), -1);
        assert_eq!(surd_sign(&rat(8), &rat(-5), 2), 1);
        assert_eq!(surd_sign(&rat(-7), &rat(5), 2), 1);
        assert_eq!(surd_sign(&rat(0), &rat(0), 2), 0);
    }

    #[test]
    fn peels_irrational_boundary_pair() {
        // (x^2 - 8)(x - 1) over q = 2: both boundary roots come off together
        let s = RatPoly::from_i64(&[8, -8, -1, 1]);
        let (t, hits) = peel_boundary_roots(s, 2);
        assert_eq!(hits, vec![1, -1]);
        assert_eq!(t, RatPoly::from_i64(&[-1, 1]));
    }

    #[test]
    fn peels_integer_boundary_roots_independently() {
        // (x - 4)(x + 1) over q = 4: only the +4 end is a root
        let s = RatPoly::from_i64(&[-4, -3, 1]);
        let (t, hits) = peel_boundary_roots(s, 4);
        assert_eq!(hits, vec![1]);
        assert_eq!(t, RatPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn sturm_matches_random_linear_factor_products() {
        use rand::prelude::*;
        let mut rng = StdRng::seed_from_u64(0x5eed_0001);
        for _ in 0..25 {
            let deg = rng.gen_range(2..=5usize);
            let mut roots: Vec<i64> = Vec::new();
            while roots.len() < deg {
                let r = rng.gen_range(-12..=12i64);
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            // expand prod (x - r_i) in i64; coefficients stay tiny here
            let mut coeffs = vec![1i64];
            for &r in &roots {
                let mut next = vec![0i64; coeffs.len() + 1];
                for (i, &c) in coeffs.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= r * c;
                }
                coeffs = next;
            }
            let poly = IntegerPolynomial::new(coeffs).unwrap();
            let counted = sturm_count(&poly, -13.0, 13.0).unwrap();
            assert_eq!(counted, deg, "roots {roots:?}");
            let lo = *roots.iter().min().unwrap() as f64;
            let inner = sturm_count(&poly, lo, 13.0).unwrap();
            assert_eq!(inner, deg - 1, "left root must fall off the half-open end");
        }
    }
}
