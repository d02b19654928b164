//! Real root isolation for the low-degree polynomials produced by the
//! geometric queries.
//!
//! Every root-finding problem in the engine has degree at most five (tangency
//! conditions are quadratic, curvature numerators and slice crossings cubic).
//! Isolation works by recursing on the derivative: the roots of `p'` cut the
//! query interval into monotone pieces, and each piece carries at most one
//! root of `p`, bracketed by a sign change and refined by bisection. Roots of
//! even multiplicity are exactly the derivative roots at which `p` itself
//! vanishes, so multiplicities fall out of the same recursion.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::math;
use crate::TOL_PARAM;

/// A real polynomial in one variable, coefficients ascending by degree.
///
/// The empty coefficient list denotes the zero polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

/// A root together with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Root {
    pub value: f64,
    pub multiplicity: u32,
}

/// Roots of a polynomial on a query interval, strictly increasing.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RootList {
    pub roots: Vec<Root>,
}

impl RootList {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        self.roots.iter().map(|r| r.value)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// The polynomial vanishes identically on the query interval, so there is
/// nothing meaningful to isolate. Signals a degenerate flat segment upstream.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdenticallyZero;

impl fmt::Display for IdenticallyZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial vanishes identically on the interval")
    }
}

impl core::error::Error for IdenticallyZero {}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros so the leading coefficient is nonzero.
    pub fn new(coeffs: impl Into<Vec<f64>>) -> Polynomial {
        let mut coeffs = coeffs.into();
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Polynomial {
        Polynomial { coeffs: vec![] }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn deriv(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect::<Vec<_>>();
        Polynomial::new(coeffs)
    }

    /// Largest coefficient magnitude, used to scale residual tolerances.
    pub fn coeff_scale(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, &c| m.max(math::abs(c)))
    }
}

/// Returns all real roots of `p` in the closed interval `[a, b]`, each within
/// `tol` of a true root in parameter, with multiplicities. Output is sorted
/// strictly increasing and deterministic for identical inputs.
pub fn real_roots(
    p: &Polynomial,
    interval: (f64, f64),
    tol: f64,
) -> Result<RootList, IdenticallyZero> {
    let (a, b) = interval;
    debug_assert!(a <= b, "interval must be nonempty");
    if p.is_zero() {
        return Err(IdenticallyZero);
    }
    if p.degree() == 0 {
        // Nonzero constant: no roots.
        return Ok(RootList::default());
    }

    // Residual threshold below which a value of p counts as zero. Scaled by
    // the coefficient size and the interval reach so the test is affine
    // invariant at desk scale.
    let reach = math::abs(a).max(math::abs(b)).max(1.0);
    let residual_tol = p.coeff_scale() * math::powi(reach, p.degree() as u32) * 1e-11;

    // Derivative chain p, p', p'', ...; the last entry is a nonzero constant.
    let mut chain = vec![p.clone()];
    while chain.last().unwrap().degree() > 0 {
        let d = chain.last().unwrap().deriv();
        chain.push(d);
    }

    // Walk the chain from the constant end down: at each level, the roots of
    // the previous level split [a, b] into monotone pieces.
    let mut level_roots: Vec<f64> = Vec::new();
    for level in (0..chain.len() - 1).rev() {
        let q = &chain[level];
        let mut cuts = vec![a];
        cuts.extend(level_roots.iter().copied().filter(|&r| r > a && r < b));
        cuts.push(b);
        let mut next = Vec::new();
        for w in cuts.windows(2) {
            if let Some(r) = monotone_root(q, w[0], w[1], tol, residual_tol) {
                // A root on a piece boundary is found by both pieces; keep
                // one copy.
                if next.last().is_none_or(|&last| r > last + tol) {
                    next.push(r);
                }
            }
        }
        level_roots = next;
    }

    // Multiplicity of each root: smallest k with p^(k)(r) clearly nonzero.
    let mut roots = Vec::new();
    for r in level_roots {
        let mut mult = 1u32;
        for q in chain.iter().skip(1) {
            if q.degree() == 0 || math::abs(q.eval(r)) > derivative_scale(q, r) {
                break;
            }
            mult += 1;
        }
        roots.push(Root {
            value: r,
            multiplicity: mult,
        });
    }
    Ok(RootList { roots })
}

/// Tolerance below which a derivative value at `r` is treated as vanishing.
fn derivative_scale(q: &Polynomial, r: f64) -> f64 {
    let reach = math::abs(r).max(1.0);
    q.coeff_scale() * math::powi(reach, q.degree() as u32) * 1e-9
}

/// Root of `q` on a piece `[lo, hi]` where `q` is monotone. Returns `None`
/// when the signs at the ends agree and neither end is a zero.
fn monotone_root(q: &Polynomial, lo: f64, hi: f64, tol: f64, residual_tol: f64) -> Option<f64> {
    let flo = q.eval(lo);
    let fhi = q.eval(hi);
    if math::abs(flo) <= residual_tol {
        return Some(lo);
    }
    if math::abs(fhi) <= residual_tol {
        return Some(hi);
    }
    if (flo > 0.0) == (fhi > 0.0) {
        return None;
    }
    let (mut lo, mut hi, mut flo) = (lo, hi, flo);
    // Bisection: robust, deterministic, and fast enough at degree five.
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fmid = q.eval(mid);
        if fmid == 0.0 {
            return Some(mid);
        }
        if (fmid > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Convenience wrapper with the engine's default parameter tolerance.
pub fn real_roots_default(
    p: &Polynomial,
    interval: (f64, f64),
) -> Result<RootList, IdenticallyZero> {
    real_roots(p, interval, TOL_PARAM)
}
