//! Positive roots of the real polynomials that the localization results
//! reduce to.
//!
//! Two shapes occur. A *Cauchy-type* polynomial
//! `x^N - c_{N-1} x^{N-1} - ... - c_0` with `c_j >= 0` has exactly one
//! positive root. A *Pellet-type*
//! polynomial has nonnegative coefficients except for one negative
//! coefficient at some power `k`; by Descartes' rule it has zero or two
//! positive roots (counting multiplicity).
//!
//! Both solvers return the root on the side of the bracket that keeps the
//! derived bounds conservative: the Cauchy root is returned from above, and
//! Pellet pairs are returned from inside the negative region.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Newton iterations allowed before switching to plain bisection.
const MAX_NEWTON: usize = 200;

/// Real polynomial, leading-first, leading coefficient one.
#[derive(Clone, Debug, PartialEq)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

impl RealPoly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.is_finite()));
        debug_assert!(!coeffs.is_empty() && coeffs[0] == 1.0);
        RealPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `1 + max |c_j|`, an upper bound on every positive root.
    pub fn root_bound(&self) -> f64 {
        1.0 + self.coeffs[1..].iter().fold(0.0f64, |m, c| m.max(c.abs()))
    }

    /// Drops trailing zero coefficients (dividing by a power of `x`).
    fn without_trailing_zeros(&self) -> &[f64] {
        let keep = self.coeffs.iter().rposition(|&c| c != 0.0).map_or(1, |i| i + 1);
        &self.coeffs[..keep]
    }
}

/// The two positive roots of a Pellet-type polynomial, `x1 < x2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootPair {
    pub x1: f64,
    pub x2: f64,
}

/// `f(x) / x^p` for a leading-first coefficient list, evaluated without
/// forming large powers: returns the value and derivative.
///
/// Writing `f(x) = sum_i c_i x^{d-i}`, the scaled function is
/// `sum_i c_i x^{d-i-p}`.
fn scaled_eval(c: &[f64], p: usize, x: f64) -> (f64, f64) {
    let d = c.len() - 1;
    let (mut val, mut der) = (0.0, 0.0);
    // powers >= 0: Horner in x over c[0..=d-p]
    for &ci in &c[..=d - p] {
        der = der * x + val;
        val = val * x + ci;
    }
    // powers < 0: sum_{k=1}^{p} c[d-p+k] x^{-k}
    let y = 1.0 / x;
    let (mut lo, mut dlo) = (0.0, 0.0);
    for k in (1..=p).rev() {
        let ck = c[d - p + k];
        lo += ck * y.powi(k as i32);
        dlo -= k as f64 * ck * y.powi(k as i32 + 1);
    }
    (val + lo, der + dlo)
}

/// Which sign the returned endpoint must have.
#[derive(Clone, Copy, PartialEq)]
enum Side {
    NonNegative,
    NonPositive,
}

/// Safeguarded Newton on a bracket `[lo, hi]` where `g` changes sign.
/// `g(lo)` and `g(hi)` have opposite signs; returns a point within a few
/// ulps of the root whose value has the requested sign.
fn solve_bracketed(g: impl Fn(f64) -> (f64, f64), mut lo: f64, mut hi: f64, want: Side) -> f64 {
    let (glo, _) = g(lo);
    let increasing = glo < 0.0;
    let below = |v: f64| if increasing { v < 0.0 } else { v > 0.0 };
    let mut x = if increasing { hi } else { lo };
    for _ in 0..MAX_NEWTON {
        let (v, dv) = g(x);
        if v == 0.0 {
            lo = x;
            hi = x;
            break;
        }
        if below(v) {
            lo = x;
        } else {
            hi = x;
        }
        let newton = x - v / dv;
        let next = if newton.is_finite() && newton > lo && newton < hi {
            newton
        } else {
            0.5 * (lo + hi)
        };
        if (next - x).abs() <= 2.0 * f64::EPSILON * x.abs() || hi - lo <= 4.0 * f64::EPSILON * hi {
            break;
        }
        x = next;
    }
    // plain bisection guarantees the width even if Newton stalled
    while hi - lo > 4.0 * f64::EPSILON * hi {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if below(g(mid).0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    // lo sits on the "below" side, hi on the other
    let want_below = match want {
        Side::NonPositive => increasing,
        Side::NonNegative => !increasing,
    };
    let mut x = if want_below { lo } else { hi };
    let ok = |v: f64| match want {
        Side::NonNegative => v >= 0.0,
        Side::NonPositive => v <= 0.0,
    };
    // nudge outward by ulps if rounding left us on the wrong side
    let mut step = f64::EPSILON * x.abs().max(f64::MIN_POSITIVE);
    let dir = if want_below == increasing { -1.0 } else { 1.0 };
    for _ in 0..64 {
        if ok(g(x).0) {
            break;
        }
        x += dir * step;
        step *= 2.0;
    }
    x
}

/// The unique positive root of `x^N - c_{N-1} x^{N-1} - ... - c_0`, `c_j >= 0`.
///
/// The returned `r` satisfies `f(r) >= 0`, so it never underestimates the root.
pub fn unique_positive_root(f: &RealPoly) -> Result<f64> {
    let c = f.without_trailing_zeros();
    if c.len() < 2 || c[1..].iter().any(|&x| x > 0.0) {
        return Err(Error::NotCauchyType);
    }
    let d = c.len() - 1;
    // f(x)/x^d = 1 - sum c_j x^{j-d} is increasing and concave on (0, inf)
    let g = |x: f64| scaled_eval(c, d, x);
    let hi = RealPoly::new(c.to_vec()).root_bound();
    let mut lo = hi;
    while g(lo).0 >= 0.0 {
        lo *= 0.5;
    }
    Ok(solve_bracketed(g, lo, hi, Side::NonNegative))
}

/// Index (power of `x`) of the single negative coefficient, if the
/// coefficient pattern is Pellet-type.
fn pellet_power(c: &[f64]) -> Result<usize> {
    let d = c.len() - 1;
    let negatives: Vec<usize> = (1..=d).filter(|&i| c[i] < 0.0).collect();
    match negatives.as_slice() {
        [i] => Ok(d - i),
        _ => Err(Error::NotPelletType),
    }
}

/// The two positive roots of a Pellet-type polynomial, or `None` when the
/// polynomial stays positive on `(0, inf)` or its roots are not distinct
/// (`x2 - x1 <= 1e-9 max(1, x2)`).
pub fn positive_root_pair(f: &RealPoly) -> Result<Option<RootPair>> {
    let k_full = pellet_power(f.coeffs())?;
    let c = f.without_trailing_zeros();
    let d = c.len() - 1;
    let trailing = f.degree() - d;
    let k = k_full - trailing;
    if k == 0 {
        // the negative coefficient is now the constant term: one positive root
        return Ok(None);
    }
    // g(x) = f(x) / x^k is convex on (0, inf) and has the same positive roots
    let g = |x: f64| scaled_eval(c, k, x);
    let x_ub = RealPoly::new(c.to_vec()).root_bound();

    // minimizer: g' is increasing, tends to -inf at 0+ and is positive at x_ub
    let gp = |x: f64| g(x).1;
    let mut lo = x_ub;
    while gp(lo) >= 0.0 {
        lo *= 0.5;
        if lo < 1e-300 {
            return Ok(None);
        }
    }
    let mut hi = x_ub;
    while gp(hi) <= 0.0 {
        hi *= 2.0;
    }
    // golden-section shrink, then bisection on the monotone derivative
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (lo, hi);
    for _ in 0..40 {
        let x1 = b - phi * (b - a);
        let x2 = a + phi * (b - a);
        if g(x1).0 < g(x2).0 {
            b = x2;
        } else {
            a = x1;
        }
    }
    let (mut a, mut b) = (a.min(lo.max(a)), b);
    if gp(a) > 0.0 {
        a = lo;
    }
    if gp(b) < 0.0 {
        b = hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if gp(mid) < 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    let xmin = 0.5 * (a + b);
    if g(xmin).0 >= 0.0 {
        return Ok(None);
    }

    let mut left = xmin;
    while g(left).0 < 0.0 {
        left *= 0.5;
        if left < 1e-300 {
            return Ok(None);
        }
    }
    let mut right = xmin;
    while g(right).0 < 0.0 {
        right *= 2.0;
    }
    let x1 = solve_bracketed(g, left, xmin, Side::NonPositive);
    let x2 = solve_bracketed(g, xmin, right, Side::NonPositive);
    if x2 - x1 <= 1e-9 * x2.max(1.0) {
        return Ok(None);
    }
    Ok(Some(RootPair { x1, x2 }))
}
