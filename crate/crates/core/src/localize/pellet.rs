use super::{pellet_roots, IntervalData, IsolationCase, IsolationMethod, IsolationReport, Plane, ZeroClaim};
use crate::companion::block_transform;
use crate::error::{Error, Result};
use crate::mat2::smallest_singular_value_2x2;
use crate::poly::{Polynomial, PreparedPolynomial};
use crate::regions::{AnnulusGap, Disc, Region};

/// Classical Pellet test on `p` at index `k`: when
/// `x^n + |a_{n-1}| x^{n-1} + ... - |a_k| x^k + ... + |a_0|` has positive
/// roots `x1 < x2`, exactly `k` zeros satisfy `|z| <= x1` and none has
/// `x1 < |z| < x2`.
pub fn pellet_classic(p: &Polynomial, k: usize) -> Result<Option<IsolationReport>> {
    let n = p.degree();
    if k == 0 || k >= n {
        return Err(Error::InvalidIndex { k, max: n.saturating_sub(1) });
    }
    if p.coeff(k).norm() == 0.0 {
        return Err(Error::CoefficientZero { index: k });
    }
    let coeffs: Vec<f64> = (0..=n)
        .rev()
        .map(|j| if j == k { -p.coeff(k).norm() } else { p.coeff(j).norm() })
        .collect();
    let Some(pair) = pellet_roots(coeffs) else {
        return Ok(None);
    };
    Ok(Some(IsolationReport {
        method: IsolationMethod::Pellet,
        case: IsolationCase::Split,
        plane: Plane::Z,
        claims: vec![
            ZeroClaim { regions: vec![Region::Disc(Disc::origin(pair.x1))], count: k },
            ZeroClaim { regions: vec![Region::Exterior(Disc::origin(pair.x2))], count: n - k },
        ],
        modulus_gap: AnnulusGap::new(pair.x1, pair.x2),
        intervals: IntervalData { i1: Some(pair), ..Default::default() },
        degree: n,
        padded: false,
    }))
}

/// Pellet test for the block matrix polynomial `I z^m - sum T_j z^j` at
/// block index `k`: `2k` squares of zeros lie in `|w| <= x1` and the rest in
/// `|w| >= x2`.
pub fn matrix_pellet(pp: &PreparedPolynomial, k: usize) -> Result<Option<IsolationReport>> {
    let m = pp.m();
    if k == 0 || k >= m {
        return Err(Error::InvalidIndex { k, max: m - 1 });
    }
    let bt = block_transform(pp);
    let smin = smallest_singular_value_2x2(&bt.block(k));
    if smin <= 0.0 {
        return Err(Error::CoefficientZero { index: k });
    }
    let mut coeffs = vec![1.0];
    coeffs.extend((0..m).rev().map(|j| if j == k { -smin } else { bt.block(j).spectral_norm() }));
    let Some(pair) = pellet_roots(coeffs) else {
        return Ok(None);
    };
    Ok(Some(IsolationReport {
        method: IsolationMethod::MatrixPellet,
        case: IsolationCase::Split,
        plane: Plane::Squared,
        claims: vec![
            ZeroClaim { regions: vec![Region::Disc(Disc::origin(pair.x1))], count: 2 * k },
            ZeroClaim { regions: vec![Region::Exterior(Disc::origin(pair.x2))], count: pp.n() - 2 * k },
        ],
        modulus_gap: AnnulusGap::new(pair.x1.sqrt(), pair.x2.sqrt()),
        intervals: IntervalData { k1: Some(pair), ..Default::default() },
        degree: pp.n(),
        padded: pp.was_padded(),
    }))
}
