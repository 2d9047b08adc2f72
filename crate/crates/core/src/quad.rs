//! Quadrature support: Gauss-Legendre rules, geometrically graded panels for
//! integrands with a logarithmic singularity, and the exact panel-panel mean
//! of the logarithmic kernel.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Nodes and weights of an `n`-point Gauss-Legendre rule on [-1, 1].
#[derive(Debug)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

fn rule_cache() -> &'static Mutex<HashMap<usize, Arc<GaussRule>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GaussRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Gauss-Legendre rule of the given order, computed once and cached.
pub fn gauss_legendre(order: usize) -> Arc<GaussRule> {
    let order = order.max(2);
    let mut cache = rule_cache().lock().unwrap();
    if let Some(r) = cache.get(&order) {
        return Arc::clone(r);
    }
    let rule = Arc::new(compute_gauss_legendre(order));
    cache.insert(order, Arc::clone(&rule));
    rule
}

// Newton iteration on the Legendre polynomial from the Chebyshev initial
// guess; standard and accurate to machine precision for moderate orders.
fn compute_gauss_legendre(n: usize) -> GaussRule {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (_, d2) = legendre_with_derivative(n, x);
                dp = d2;
                break;
            }
        }
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    GaussRule { nodes, weights }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Integrates `f` over `[lo, hi]` with `panels` equal Gauss-Legendre panels.
pub fn composite_gl<F: FnMut(f64) -> f64>(lo: f64, hi: f64, panels: usize, order: usize, mut f: F) -> f64 {
    let rule = gauss_legendre(order);
    let h = (hi - lo) / panels as f64;
    let mut acc = 0.0;
    for p in 0..panels {
        let a = lo + p as f64 * h;
        let c = a + 0.5 * h;
        let r = 0.5 * h;
        let mut s = 0.0;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            s += w * f(c + r * x);
        }
        acc += s * r;
    }
    acc
}

/// Integrates `f` over offsets `(0, len]` measured from a singular endpoint,
/// grading panel widths geometrically towards zero so that integrands
/// behaving like `ln u` or `u ln u` are resolved to near machine precision.
/// `resolve` bounds the innermost panel width from below (pass the distance
/// of the singularity from the integration axis, or zero).
///
/// The integrand receives the strictly positive offset, never an absolute
/// coordinate, so callers can form distances without cancellation.
pub fn graded_from_singularity<F: FnMut(f64) -> f64>(
    len: f64,
    resolve: f64,
    order: usize,
    mut f: F,
) -> f64 {
    if len <= 0.0 {
        return 0.0;
    }
    let floor = resolve.abs().max(len * 1e-15);
    let levels = ((len / floor).log2().ceil() as i64).clamp(1, 60) as u32;
    let rule = gauss_legendre(order);
    let mut acc = 0.0;
    // Panel k spans offsets [len 2^-(k+1), len 2^-k]; the innermost panel
    // closes the gap down to zero.
    for k in 0..levels {
        let outer = len / (1u64 << k) as f64;
        let inner = if k + 1 == levels {
            0.0
        } else {
            len / (1u64 << (k + 1)) as f64
        };
        let c_rel = 0.5 * (outer + inner);
        let r_rel = 0.5 * (outer - inner);
        let mut s = 0.0;
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            s += w * f(c_rel + r_rel * x);
        }
        acc += s * r_rel;
    }
    acc
}

/// Mean of `ln|x - y|` over the rectangle `[l1, r1] x [l2, r2]`, i.e. the
/// double integral divided by the product of the widths.
///
/// Uses the second antiderivative `phi` of `ln|t|` composed over the corner
/// differences; for identical panels this reduces to `ln h - 3/2`, and for
/// panels much smaller than their separation a midpoint expansion avoids the
/// cancellation in the corner sum.
pub fn mean_log_kernel(l1: f64, r1: f64, l2: f64, r2: f64) -> f64 {
    let h1 = r1 - l1;
    let h2 = r2 - l2;
    if l1 == l2 && r1 == r2 {
        return h1.ln() - 1.5;
    }
    let d = (0.5 * (l1 + r1) - 0.5 * (l2 + r2)).abs();
    if d > 500.0 * (h1 + h2) {
        return d.ln() - (h1 * h1 + h2 * h2) / (24.0 * d * d);
    }
    (phi(r1 - l2) - phi(l1 - l2) - phi(r1 - r2) + phi(l1 - r2)) / (h1 * h2)
}

// phi''(t) = ln|t|, phi(0) = phi'(0) = 0.
fn phi(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        t * t * (0.5 * t.abs().ln() - 0.75)
    }
}
