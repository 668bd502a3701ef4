use super::{pellet_roots, IntervalData, IsolationCase, IsolationMethod, IsolationReport, Plane, ZeroClaim};
use crate::companion::{block_transform, BlockTransform};
use crate::error::{Error, Result};
use crate::poly::PreparedPolynomial;
use crate::realroots::RootPair;
use crate::regions::{AnnulusGap, Disc, Region};

/// `x^m - lead x^{m-1} + ||T_{m-2}|| x^{m-2} + ... + ||T_0||`.
fn omega(bt: &BlockTransform, lead: f64) -> Option<RootPair> {
    let mut c = vec![1.0, -lead];
    c.extend(bt.lower_norms().iter().rev());
    pellet_roots(c)
}

/// Block Gershgorin isolation with spectral norms, for a diagonalizable
/// top block `diag(alpha, beta)`.
///
/// (a) When `Omega_1` has roots `x1 < x2`, `n - 2` squares lie in
/// `|w| <= x1` and two in the discs of radius `tau(x2)` about `alpha`,
/// `beta`. (b) Otherwise, when `Omega_2` has roots `y1 < y2` and the discs
/// of radius `tau(y2)` are disjoint, the `beta` disc holds one square.
pub fn tmgp(pp: &PreparedPolynomial) -> Result<IsolationReport> {
    let bt = block_transform(pp);
    if !bt.diagonalized {
        return Err(Error::NotDiagonalizable);
    }
    let (alpha, beta) = (bt.alpha, bt.beta);
    let k1 = omega(&bt, alpha.norm());
    let k2 = omega(&bt, beta.norm());
    let mut iv = IntervalData { k1, k2, ..Default::default() };
    let n = pp.n();
    let report = |case, claims, gap, iv| IsolationReport {
        method: IsolationMethod::Tmgp,
        case,
        plane: Plane::Squared,
        claims,
        modulus_gap: gap,
        intervals: iv,
        degree: n,
        padded: pp.was_padded(),
    };
    let disc = |c, r| Region::Disc(Disc::new(c, r));

    if let Some(k) = k1 {
        // |alpha| <= |beta| makes Omega_2 <= Omega_1 pointwise
        let k2 = k2.expect("K_1 nonempty implies K_2 nonempty");
        assert!(k2.x1 <= k.x1 && k.x2 <= k2.x2, "K_1 {k:?} not inside K_2 {k2:?}");
        let t = bt.tau(k.x2);
        let mut claims = vec![ZeroClaim { regions: vec![Region::Disc(Disc::origin(k.x1))], count: n - 2 }];
        if (alpha - beta).norm() > 2.0 * t {
            claims.push(ZeroClaim { regions: vec![disc(alpha, t)], count: 1 });
            claims.push(ZeroClaim { regions: vec![disc(beta, t)], count: 1 });
        } else {
            claims.push(ZeroClaim { regions: vec![disc(alpha, t), disc(beta, t)], count: 2 });
        }
        let outer = alpha.norm() - t;
        let gap = if outer > 0.0 { AnnulusGap::new(k.x1.sqrt(), outer.sqrt()) } else { None };
        iv.mu = Some((k.x1, k.x2));
        iv.fired = vec![IsolationCase::TmgpA];
        return Ok(report(IsolationCase::TmgpA, claims, gap, iv));
    }
    if let Some(y) = k2 {
        let t = bt.tau(y.x2);
        if (alpha - beta).norm() > 2.0 * t {
            let claims = vec![
                ZeroClaim { regions: vec![Region::Disc(Disc::origin(y.x2)), disc(alpha, t)], count: n - 1 },
                ZeroClaim { regions: vec![disc(beta, t)], count: 1 },
            ];
            iv.fired = vec![IsolationCase::TmgpB];
            return Ok(report(IsolationCase::TmgpB, claims, None, iv));
        }
    }
    Ok(IsolationReport::none(IsolationMethod::Tmgp, Plane::Squared, n, pp.was_padded(), iv))
}
