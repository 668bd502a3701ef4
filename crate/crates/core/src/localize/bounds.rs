use super::{cauchy_root, BoundMethod, BoundResult};
use crate::companion::block_transform;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, PreparedPolynomial};

/// Upper bound (or, with `lower`, lower bound via the reverse polynomial)
/// by any of the four methods.
pub fn bound(p: &Polynomial, method: BoundMethod, lower: bool) -> Result<BoundResult> {
    let target = if lower { p.reverse()? } else { p.clone() };
    let mut r = match method {
        BoundMethod::Cauchy => cauchy_bound(&target)?,
        BoundMethod::MatrixCauchy => matrix_cauchy_bound(&target.prepare_even()?),
        BoundMethod::TgcA => tgc_bound_a(&target.prepare_even()?),
        BoundMethod::TgcB => tgc_bound_b(&target.prepare_even()?),
    };
    if lower {
        r.bound = 1.0 / r.bound;
        r.lower = true;
    }
    Ok(r)
}

fn result(bound: f64, method: BoundMethod, r1: Option<f64>, r2: Option<f64>) -> BoundResult {
    BoundResult { bound, method, roots: [r1, r2], lower: false }
}

/// Classical Cauchy bound: the positive root of
/// `x^n - |a_{n-1}| x^{n-1} - ... - |a_0|`.
pub fn cauchy_bound(p: &Polynomial) -> Result<BoundResult> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let tail: Vec<f64> = (0..n).rev().map(|j| p.coeff(j).norm()).collect();
    let r = cauchy_root(&tail);
    Ok(result(r, BoundMethod::Cauchy, Some(r), None))
}

/// `1 / cauchy_bound(reverse(p))`.
pub fn cauchy_lower_bound(p: &Polynomial) -> Result<f64> {
    Ok(bound(p, BoundMethod::Cauchy, true)?.bound)
}

/// Cauchy bound for the block matrix polynomial `I z^m - sum T_j z^j` with
/// spectral norms, mapped back by a square root.
pub fn matrix_cauchy_bound(pp: &PreparedPolynomial) -> BoundResult {
    let bt = block_transform(pp);
    let tail: Vec<f64> = (0..bt.m()).rev().map(|j| bt.block(j).spectral_norm()).collect();
    let s = cauchy_root(&tail);
    result(s.sqrt(), BoundMethod::MatrixCauchy, Some(s), None)
}

/// `max(r1, r2)` for the roots of `psi_1` and `psi_2` (element-wise column
/// scaling of the transformed squared companion matrix).
pub fn tgc_bound_a(pp: &PreparedPolynomial) -> BoundResult {
    let bt = block_transform(pp);
    // psi_1 = x^n - |alpha| x^{n-2} - |v_{n-3}| x^{n-3} - ... - |v_0|
    let mut tail1 = vec![0.0, bt.alpha.norm()];
    tail1.extend(bt.v.iter().rev().map(|z| z.norm()));
    let r1 = cauchy_root(&tail1);
    // psi_2(r1) >= 0 means r2 <= r1
    if r1 > 0.0 && r1 * r1 - bt.beta.norm() - bt.rho2(r1) >= 0.0 {
        return result(r1, BoundMethod::TgcA, Some(r1), None);
    }
    // psi_2 = x^{n+1} - |beta| x^{n-1} - |gamma| x^{n-2} - |w_{n-3}| x^{n-3} - ... - |w_0|
    let mut tail2 = vec![0.0, bt.beta.norm(), bt.gamma.norm()];
    tail2.extend(bt.w.iter().rev().map(|z| z.norm()));
    let r2 = cauchy_root(&tail2);
    result(r1.max(r2), BoundMethod::TgcA, Some(r1), Some(r2))
}

/// `sqrt(max(s1, s2))` for the roots of `phi_1` and `phi_2` (block column
/// scaling).
pub fn tgc_bound_b(pp: &PreparedPolynomial) -> BoundResult {
    let bt = block_transform(pp);
    let mut tail1 = vec![bt.alpha.norm()];
    tail1.extend(bt.v_pair_sums().iter().rev());
    let s1 = cauchy_root(&tail1);
    if s1 > 0.0 && s1 - bt.beta.norm() - bt.sigma2(s1) >= 0.0 {
        return result(s1.sqrt(), BoundMethod::TgcB, Some(s1), None);
    }
    let mut tail2 = vec![bt.beta.norm() + bt.gamma.norm()];
    tail2.extend(bt.w_pair_sums().iter().rev());
    let s2 = cauchy_root(&tail2);
    result(s1.max(s2).sqrt(), BoundMethod::TgcB, Some(s1), Some(s2))
}
