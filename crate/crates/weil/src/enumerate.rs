//! Exhaustive enumeration of monic integer polynomials whose roots are all
//! real and confined to [-2 sqrt(q), 2 sqrt(q)], plus the exact segment
//! certificate and an exhaustive irreducibility test for small degrees.

use num_integer::Roots;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lift::is_prime_power;
use crate::poly::{
    eval_at_twice_sqrt_q, peel_boundary_roots, surd_sign, variations, IntegerPolynomial, RatPoly,
};

/// Largest coefficient box the enumerator is willing to scan.
pub const SEARCH_BUDGET: u128 = 100_000_000;

const IRREDUCIBILITY_CEILING: usize = 8;

/// True when every root of the squarefree part of `p` is real and lies in
/// the closed segment [-2 sqrt(q), 2 sqrt(q)]. Exact: boundary roots are
/// detected by sign arithmetic in Z[sqrt(q)] and divided out, and the rest
/// are counted with a Sturm chain evaluated at the surd endpoints.
pub fn is_totally_real_in_segment(p: &IntegerPolynomial, q: u64) -> Result<bool> {
    if !is_prime_power(q) {
        return Err(Error::NotPrimePower(q));
    }
    Ok(certify(&RatPoly::from_int(p), q))
}

pub(crate) fn certify(p: &RatPoly, q: u64) -> bool {
    let s = p.squarefree_part();
    let (t, _boundary) = peel_boundary_roots(s, q);
    if t.degree() == 0 {
        return true;
    }
    let chain = t.sturm_chain();
    let va = variations(chain.iter().map(|c| {
        let (u, v) = eval_at_twice_sqrt_q(c, -1, q);
        surd_sign(&u, &v, q)
    }));
    let vb = variations(chain.iter().map(|c| {
        let (u, v) = eval_at_twice_sqrt_q(c, 1, q);
        surd_sign(&u, &v, q)
    }));
    // t has no roots at the endpoints, so the count over (-B, B] is the
    // open-interval count; totally real means it exhausts the degree
    va.saturating_sub(vb) == t.degree()
}

fn binom(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i as u128 + 1);
    }
    r
}

/// Bound on |coefficient of x^(g-k)|: the elementary symmetric function of g
/// roots, each at most B = 2 sqrt(q) in absolute value, is at most
/// C(g,k) B^k. Computed as floor(sqrt(C^2 (4q)^k)) in exact integers.
fn coefficient_bounds(g: usize, q: u64) -> Result<Vec<i64>> {
    let over = || Error::SearchBudget {
        boxes: u128::MAX,
        budget: SEARCH_BUDGET,
    };
    let mut out = Vec::with_capacity(g);
    for k in 1..=g {
        let c = binom(g, k);
        let c2 = c.checked_mul(c).ok_or_else(over)?;
        let base = (4 * q) as u128;
        let pow = base.checked_pow(k as u32).ok_or_else(over)?;
        let inside = c2.checked_mul(pow).ok_or_else(over)?;
        let b = inside.sqrt();
        out.push(i64::try_from(b).map_err(|_| over())?);
    }
    Ok(out)
}

fn eval_i64_at(coeffs: &[i64], x: i128) -> i128 {
    coeffs
        .iter()
        .rev()
        .fold(0i128, |acc, &c| acc * x + c as i128)
}

/// Cheap necessary conditions before the exact certificate: power sums of
/// real roots in [-B, B] obey 0 <= p2 <= 4gq and g p2 >= p1^2, and the
/// polynomial is strictly positive past the root bound on both sides.
fn passes_prefilter(coeffs: &[i64], g: usize, q: u64, m: i64) -> bool {
    if g >= 2 {
        let e1 = -(coeffs[g - 1] as i128);
        let e2 = coeffs[g - 2] as i128;
        let p2 = e1 * e1 - 2 * e2;
        if p2 < 0 || p2 > 4 * g as i128 * q as i128 || (g as i128) * p2 < e1 * e1 {
            return false;
        }
    }
    if eval_i64_at(coeffs, m as i128) <= 0 {
        return false;
    }
    let at_neg = eval_i64_at(coeffs, -(m as i128));
    let parity = if g % 2 == 0 { 1 } else { -1 };
    parity * at_neg > 0
}

fn scan_tail(
    coeffs: &mut Vec<i64>,
    bounds: &[i64],
    k: usize,
    g: usize,
    q: u64,
    m: i64,
    out: &mut Vec<IntegerPolynomial>,
) {
    if k > g {
        if passes_prefilter(coeffs, g, q, m) && certify(&RatPoly::from_i64(coeffs), q) {
            out.push(IntegerPolynomial::new(coeffs.clone()).unwrap());
        }
        return;
    }
    let b = bounds[k - 1];
    for c in -b..=b {
        coeffs[g - k] = c;
        scan_tail(coeffs, bounds, k + 1, g, q, m, out);
    }
}

/// All monic degree-g integer polynomials whose squarefree part is totally
/// real with every root in [-2 sqrt(q), 2 sqrt(q)], sorted by ascending
/// coefficient list (constant term first).
///
/// The coefficient box is partitioned over the leading non-monic coefficient
/// and scanned in parallel; a box larger than [`SEARCH_BUDGET`] is refused
/// with the offending size.
pub fn enumerate_totally_real(g: usize, q: u64) -> Result<Vec<IntegerPolynomial>> {
    if g < 1 {
        return Err(Error::Domain("degree must be at least 1".into()));
    }
    if !is_prime_power(q) {
        return Err(Error::NotPrimePower(q));
    }
    let bounds = coefficient_bounds(g, q)?;
    let mut boxes: u128 = 1;
    for &b in &bounds {
        boxes = boxes.saturating_mul(2 * b as u128 + 1);
    }
    if boxes > SEARCH_BUDGET {
        return Err(Error::SearchBudget {
            boxes,
            budget: SEARCH_BUDGET,
        });
    }
    let m = i64::try_from((4 * q).sqrt() + 1).map_err(|_| Error::SearchBudget {
        boxes: u128::MAX,
        budget: SEARCH_BUDGET,
    })?;
    let top = bounds[0];
    let mut results: Vec<IntegerPolynomial> = (-top..=top)
        .into_par_iter()
        .map(|c_top| {
            let mut local = Vec::new();
            let mut coeffs = vec![0i64; g + 1];
            coeffs[g] = 1;
            coeffs[g - 1] = c_top;
            scan_tail(&mut coeffs, &bounds, 2, g, q, m, &mut local);
            local
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    results.sort();
    Ok(results)
}

fn divisors(n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    let mut d = 1u128;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn eval_big(coeffs: &[i64], x: &num_bigint::BigInt) -> num_bigint::BigInt {
    use num_traits::Zero;
    coeffs
        .iter()
        .rev()
        .fold(num_bigint::BigInt::zero(), |acc, &c| acc * x + c)
}

fn signed_divisors(n: i128) -> Vec<i128> {
    let mut out = Vec::new();
    for d in divisors(n.unsigned_abs()) {
        out.push(d as i128);
        out.push(-(d as i128));
    }
    out
}

/// Exact division check: does the monic candidate (ascending coefficients)
/// divide p?
fn divides(p: &[i64], cand: &[i128]) -> bool {
    let cand_rat = RatPoly::trim(
        cand.iter()
            .map(|&c| {
                num_rational::BigRational::from_integer(num_bigint::BigInt::from(c))
            })
            .collect(),
    );
    let (_, r) = RatPoly::from_i64(p).divrem(&cand_rat);
    r.is_zero()
}

/// Landau-Mignotte bound on coefficient j of a monic degree-d factor.
fn factor_bound(d: usize, j: usize, norm: f64) -> i128 {
    let lead = binom(d - 1, j) as f64 * norm;
    let carry = if j == 0 { 0.0 } else { binom(d - 1, j - 1) as f64 };
    (lead + carry).ceil() as i128 + 1
}

/// Searches for a monic integer factor of degree exactly d in {2, 3, 4}.
/// Candidates are pinned by their values at 1 and -1 (which must divide
/// P(1), P(-1)) and by the constant term dividing P(0), then checked by
/// exact division.
fn has_factor_of_degree(coeffs: &[i64], d: usize, p1: i128, pm1: i128, norm: f64) -> bool {
    let b0s: Vec<i128> = signed_divisors(coeffs[0] as i128)
        .into_iter()
        .filter(|b0| b0.abs() <= factor_bound(d, 0, norm))
        .collect();
    let s1s = signed_divisors(p1);
    let s2s = signed_divisors(pm1);
    match d {
        2 => {
            for &b0 in &b0s {
                for &s1 in &s1s {
                    // b(1) = 1 + b1 + b0 = s1
                    let b1 = s1 - 1 - b0;
                    if b1.abs() > factor_bound(d, 1, norm) {
                        continue;
                    }
                    let at_m1 = 1 - b1 + b0;
                    if at_m1 == 0 || pm1 % at_m1 != 0 {
                        continue;
                    }
                    if divides(coeffs, &[b0, b1, 1]) {
                        return true;
                    }
                }
            }
            false
        }
        3 => {
            for &b0 in &b0s {
                for &s1 in &s1s {
                    for &s2 in &s2s {
                        // s1 + s2 = 2(b2 + b0), s1 - s2 = 2(1 + b1)
                        if (s1 + s2) % 2 != 0 || (s1 - s2) % 2 != 0 {
                            continue;
                        }
                        let b2 = (s1 + s2) / 2 - b0;
                        let b1 = (s1 - s2) / 2 - 1;
                        if b1.abs() > factor_bound(d, 1, norm)
                            || b2.abs() > factor_bound(d, 2, norm)
                        {
                            continue;
                        }
                        if divides(coeffs, &[b0, b1, b2, 1]) {
                            return true;
                        }
                    }
                }
            }
            false
        }
        4 => {
            let b3_cap = factor_bound(d, 3, norm);
            for &b0 in &b0s {
                for &s1 in &s1s {
                    for &s2 in &s2s {
                        // s1 + s2 = 2(1 + b2 + b0), s1 - s2 = 2(b3 + b1)
                        if (s1 + s2) % 2 != 0 || (s1 - s2) % 2 != 0 {
                            continue;
                        }
                        let b2 = (s1 + s2) / 2 - 1 - b0;
                        if b2.abs() > factor_bound(d, 2, norm) {
                            continue;
                        }
                        let odd_sum = (s1 - s2) / 2;
                        for b3 in -b3_cap..=b3_cap {
                            let b1 = odd_sum - b3;
                            if b1.abs() > factor_bound(d, 1, norm) {
                                continue;
                            }
                            if divides(coeffs, &[b0, b1, b2, b3, 1]) {
                                return true;
                            }
                        }
                    }
                }
            }
            false
        }
        _ => unreachable!("factor degrees are capped at 4 by the degree-8 ceiling"),
    }
}

/// True iff `p` has no monic integer factor of degree 1 through deg(p)/2,
/// i.e. is irreducible over the rationals. Exhaustive integer search; the
/// ceiling is degree 8, and the cost grows with the divisor counts of P(0),
/// P(1), and P(-1).
pub fn is_irreducible_small_degree(p: &IntegerPolynomial) -> Result<bool> {
    let g = p.degree();
    if g > IRREDUCIBILITY_CEILING {
        return Err(Error::DegreeTooHigh {
            degree: g,
            max: IRREDUCIBILITY_CEILING,
        });
    }
    if g == 1 {
        return Ok(true);
    }
    let coeffs = p.coefficients();
    if coeffs[0] == 0 {
        return Ok(false);
    }
    // degree-1 factors: integer roots divide the constant term
    use num_traits::Zero;
    for d in divisors(coeffs[0].unsigned_abs() as u128) {
        let d = num_bigint::BigInt::from(d);
        if eval_big(coeffs, &d).is_zero() || eval_big(coeffs, &(-d)).is_zero() {
            return Ok(false);
        }
    }
    if g <= 3 {
        return Ok(true);
    }
    let p1 = eval_i64_at(coeffs, 1);
    let pm1 = eval_i64_at(coeffs, -1);
    let norm = coeffs
        .iter()
        .map(|&c| (c as f64) * (c as f64))
        .sum::<f64>()
        .sqrt();
    for d in 2..=g / 2 {
        if has_factor_of_degree(coeffs, d, p1, pm1, norm) {
            return Ok(false);
        }
    }
    Ok(true)
}
