//! Independent ground truth for tests and benchmarks.
//!
//! Roots come from Aberth–Ehrlich simultaneous iteration, which shares no
//! code with the localization results it checks. A dense Schur
//! decomposition (nalgebra) provides eigenvalues of explicit matrices for
//! structural checks.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::companion::DenseMatrix;
use crate::poly::Polynomial;
use crate::regions::{contains, AnnulusGap, Region};

/// Default convergence tolerance for the Aberth updates.
pub const DEFAULT_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 500;
/// Relative slack for counting roots on region boundaries.
pub const COUNT_SLACK: f64 = 1e-9;

const GOLDEN_ANGLE: f64 = 2.399_963_229_728_653;

/// Computed zeros with their residuals `|p(z)|`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSet {
    #[serde(with = "crate::serde_complex::vec")]
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
    pub sweeps: usize,
    pub converged: bool,
}

/// Positive root of `x^n - sum |a_j| x^j` by bisection (kept local so the
/// oracle does not depend on the code it verifies).
fn start_radius(p: &Polynomial) -> f64 {
    let n = p.degree();
    let tail: Vec<f64> = (0..n).map(|j| p.coeff(j).norm()).collect();
    if tail.iter().all(|&c| c == 0.0) {
        return 1.0;
    }
    let f = |x: f64| x.powi(n as i32) - tail.iter().enumerate().map(|(j, c)| c * x.powi(j as i32)).sum::<f64>();
    let mut hi = 1.0 + tail.iter().fold(0.0f64, |m, &c| m.max(c));
    let mut lo = 0.0;
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi
}

/// All zeros of `p` with multiplicity.
pub fn all_roots(p: &Polynomial) -> RootSet {
    all_roots_with_tol(p, DEFAULT_TOL)
}

pub fn all_roots_with_tol(p: &Polynomial, tol: f64) -> RootSet {
    let n = p.degree();
    let r0 = 0.9 * start_radius(p);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r0, 0.4 + GOLDEN_ANGLE * k as f64))
        .collect();
    let mut done = vec![false; n];
    let mut sweeps = 0;
    let mut converged = n == 0;
    while sweeps < MAX_SWEEPS && !converged {
        sweeps += 1;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (pv, dp) = p.evaluate_with_derivative(z[k]);
            if pv == Complex64::new(0.0, 0.0) {
                done[k] = true;
                continue;
            }
            let ratio = pv / dp;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| 1.0 / (z[k] - z[j])).sum();
            let step = ratio / (1.0 - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                // perturb off a degenerate configuration
                let kick = Complex64::from_polar(1e-8 * (1.0 + z[k].norm()), k as f64);
                z[k] += kick;
                continue;
            }
            z[k] -= step;
            if step.norm() < tol * (1.0 + z[k].norm()) {
                done[k] = true;
            }
        }
        converged = done.iter().all(|&d| d);
    }
    let residuals = z.iter().map(|&r| p.evaluate(r).norm()).collect();
    RootSet { roots: z, residuals, sweeps, converged }
}

impl RootSet {
    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn min_modulus(&self) -> f64 {
        self.roots.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min)
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Squares of the roots, for squared-plane claims.
    pub fn squared(&self) -> Vec<Complex64> {
        self.roots.iter().map(|z| z * z).collect()
    }
}

/// Number of roots (or of their squares when `squared`) lying in the union
/// of `regions`, each grown by `COUNT_SLACK` relative to its scale.
pub fn count_in_union(rs: &RootSet, regions: &[Region], squared: bool) -> usize {
    let grown: Vec<Region> = regions.iter().map(|r| r.inflated(COUNT_SLACK * r.scale().max(1.0))).collect();
    rs.roots
        .iter()
        .map(|&z| if squared { z * z } else { z })
        .filter(|&z| grown.iter().any(|r| contains(r, z)))
        .count()
}

/// Count for a single region.
pub fn count_in_region(rs: &RootSet, region: &Region, squared: bool) -> usize {
    count_in_union(rs, std::slice::from_ref(region), squared)
}

/// Roots whose modulus lies inside the gap, shrunk by a relative margin of
/// `COUNT_SLACK` at both ends.
pub fn gap_violations(rs: &RootSet, gap: &AnnulusGap) -> Vec<Complex64> {
    let lo = gap.r_inner * (1.0 + COUNT_SLACK);
    let hi = gap.r_outer * (1.0 - COUNT_SLACK);
    rs.roots
        .iter()
        .copied()
        .filter(|z| {
            let r = z.norm();
            lo < r && r < hi
        })
        .collect()
}

/// Eigenvalues of a dense complex matrix via nalgebra's Schur form.
pub fn dense_eigenvalues(m: &DenseMatrix) -> Vec<Complex64> {
    let n = m.size();
    let mat = DMatrix::from_fn(n, n, |i, j| m.get(i, j));
    mat.schur().eigenvalues().expect("complex Schur form is triangular").iter().copied().collect()
}

/// Greedy nearest matching of two multisets of equal size; returns the
/// largest matched distance.
pub fn match_multisets(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len(), "multisets differ in size");
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for &x in a {
        let (j, d) = b
            .iter()
            .enumerate()
            .filter(|(j, _)| !used[*j])
            .map(|(j, &y)| (j, (x - y).norm()))
            .min_by(|p, q| p.1.total_cmp(&q.1))
            .expect("b has an unused element");
        used[j] = true;
        worst = worst.max(d);
    }
    worst
}
