//! Pellet-type isolation from the scaled Gershgorin columns of the
//! transformed squared companion matrix.
//!
//! Path (a) scales each column by a power of `x` (radii `rho_1`, `rho_2`,
//! origin disc of radius `x^2`); path (b) scales whole block columns
//! (radii `sigma_1`, `sigma_2`, origin disc of radius `x`). On an interval
//! where a Pellet-type polynomial is nonpositive the corresponding
//! eigenvalue disc is detached from the origin disc.

use num_complex::Complex64;

use super::{
    cauchy_root, pellet_roots, IntervalData, IsolationCase, IsolationMethod, IsolationReport, Plane,
    ZeroClaim,
};
use crate::companion::{block_transform, BlockTransform};
use crate::error::{Error, Result};
use crate::poly::PreparedPolynomial;
use crate::realroots::RootPair;
use crate::regions::{AnnulusGap, Disc, Region};

/// The per-path radii and origin-disc scaling.
trait Path {
    fn radius_alpha(&self, bt: &BlockTransform, x: f64) -> f64;
    fn radius_beta(&self, bt: &BlockTransform, x: f64) -> f64;
    /// Radius of the origin disc in the squared plane at parameter `x`.
    fn origin_radius(&self, x: f64) -> f64;
}

struct Elementwise;
struct Blockwise;

impl Path for Elementwise {
    fn radius_alpha(&self, bt: &BlockTransform, x: f64) -> f64 {
        bt.rho1(x)
    }
    fn radius_beta(&self, bt: &BlockTransform, x: f64) -> f64 {
        bt.rho2(x)
    }
    fn origin_radius(&self, x: f64) -> f64 {
        x * x
    }
}

impl Path for Blockwise {
    fn radius_alpha(&self, bt: &BlockTransform, x: f64) -> f64 {
        bt.sigma1(x)
    }
    fn radius_beta(&self, bt: &BlockTransform, x: f64) -> f64 {
        bt.sigma2(x)
    }
    fn origin_radius(&self, x: f64) -> f64 {
        x
    }
}

/// `chi_1 = x^n - |alpha| x^{n-2} + |v_{n-3}| x^{n-3} + ... + |v_0|`.
fn chi1(bt: &BlockTransform) -> Option<RootPair> {
    let mut c = vec![1.0, 0.0, -bt.alpha.norm()];
    c.extend(bt.v.iter().rev().map(|z| z.norm()));
    pellet_roots(c)
}

/// `chi_2 = x^{n+1} - |beta| x^{n-1} + |gamma| x^{n-2} + |w_{n-3}| x^{n-3} + ... + |w_0|`.
fn chi2(bt: &BlockTransform) -> Option<RootPair> {
    let mut c = vec![1.0, 0.0, -bt.beta.norm(), bt.gamma.norm()];
    c.extend(bt.w.iter().rev().map(|z| z.norm()));
    pellet_roots(c)
}

/// `omega_1 = x^m - |alpha| x^{m-1} + (|v_{n-3}| + |v_{n-4}|) x^{m-2} + ...`.
fn omega1(bt: &BlockTransform) -> Option<RootPair> {
    let mut c = vec![1.0, -bt.alpha.norm()];
    c.extend(bt.v_pair_sums().iter().rev());
    pellet_roots(c)
}

/// `omega_2 = x^m - (|beta| - |gamma|) x^{m-1} + (|w_{n-3}| + |w_{n-4}|) x^{m-2} + ...`;
/// it has no positive root unless `|beta| > |gamma|`.
fn omega2(bt: &BlockTransform) -> Option<RootPair> {
    let lead = bt.beta.norm() - bt.gamma.norm();
    if lead <= 0.0 {
        return None;
    }
    let mut c = vec![1.0, -lead];
    c.extend(bt.w_pair_sums().iter().rev());
    pellet_roots(c)
}

fn disc(center: Complex64, radius: f64) -> Region {
    Region::Disc(Disc::new(center, radius))
}

fn origin(radius: f64) -> Region {
    Region::Disc(Disc::origin(radius))
}

struct Ctx<'a> {
    pp: &'a PreparedPolynomial,
    bt: &'a BlockTransform,
    method: IsolationMethod,
    two: (IsolationCase, IsolationCase, IsolationCase),
}

impl Ctx<'_> {
    fn report(&self, case: IsolationCase, claims: Vec<ZeroClaim>, gap: Option<AnnulusGap>, iv: IntervalData) -> IsolationReport {
        IsolationReport {
            method: self.method,
            case,
            plane: Plane::Squared,
            claims,
            modulus_gap: gap,
            intervals: iv,
            degree: self.pp.n(),
            padded: self.pp.was_padded(),
        }
    }

    /// Two squares detached from the origin disc, for parameters `mu1 < mu2`
    /// in both intervals.
    fn two_zero(&self, path: &dyn Path, mu1: f64, mu2: f64, mut iv: IntervalData) -> IsolationReport {
        let (alpha, beta) = (self.bt.alpha, self.bt.beta);
        let ra = path.radius_alpha(self.bt, mu2);
        let rb = path.radius_beta(self.bt, mu2);
        let n = self.pp.n();
        let r0 = path.origin_radius(mu1);
        let mut claims = vec![ZeroClaim { regions: vec![origin(r0)], count: n - 2 }];
        if (alpha - beta).norm() > ra + rb {
            claims.push(ZeroClaim { regions: vec![disc(alpha, ra)], count: 1 });
            claims.push(ZeroClaim { regions: vec![disc(beta, rb)], count: 1 });
        } else {
            claims.push(ZeroClaim { regions: vec![disc(alpha, ra), disc(beta, rb)], count: 2 });
        }
        let outer = (alpha.norm() - ra).min(beta.norm() - rb);
        let gap = if outer > 0.0 { AnnulusGap::new(r0.sqrt(), outer.sqrt()) } else { None };
        iv.mu = Some((mu1, mu2));
        self.report(self.two.0, claims, gap, iv)
    }

    /// One square detached. `first` isolates the alpha disc using the right
    /// end of the alpha interval; otherwise the beta disc.
    fn one_zero(&self, path: &dyn Path, x: f64, first: bool, iv: IntervalData) -> IsolationReport {
        let (alpha, beta) = (self.bt.alpha, self.bt.beta);
        let ra = path.radius_alpha(self.bt, x);
        let rb = path.radius_beta(self.bt, x);
        let o = origin(path.origin_radius(x));
        let n = self.pp.n();
        let (case, joint, single) = if first {
            (self.two.1, vec![o, disc(beta, rb)], disc(alpha, ra))
        } else {
            (self.two.2, vec![o, disc(alpha, ra)], disc(beta, rb))
        };
        let claims = vec![
            ZeroClaim { regions: joint, count: n - 1 },
            ZeroClaim { regions: vec![single], count: 1 },
        ];
        self.report(case, claims, None, iv)
    }

    fn separated(&self, path: &dyn Path, x: f64) -> bool {
        (self.bt.alpha - self.bt.beta).norm() > path.radius_alpha(self.bt, x) + path.radius_beta(self.bt, x)
    }

    /// Cases 1, 2-first and 2-second for one path, in that priority.
    fn run(&self, path: &dyn Path, p1: Option<RootPair>, p2: Option<RootPair>, mut iv: IntervalData) -> IsolationReport {
        let mut best: Option<IsolationReport> = None;
        let mut keep = |r: IsolationReport, fired: &mut Vec<IsolationCase>| {
            fired.push(r.case);
            if best.is_none() {
                best = Some(r);
            }
        };
        let mut fired = Vec::new();
        match (p1, p2) {
            (Some(a), Some(b)) if a.x1.max(b.x1) <= a.x2.min(b.x2) => {
                let (mu1, mu2) = (a.x1.max(b.x1), a.x2.min(b.x2));
                if mu1 < mu2 {
                    keep(self.two_zero(path, mu1, mu2, iv.clone()), &mut fired);
                }
            }
            _ => {
                if let Some(a) = p1 {
                    if self.separated(path, a.x2) {
                        keep(self.one_zero(path, a.x2, true, iv.clone()), &mut fired);
                    }
                }
                if let Some(b) = p2 {
                    if self.separated(path, b.x2) {
                        keep(self.one_zero(path, b.x2, false, iv.clone()), &mut fired);
                    }
                }
            }
        }
        iv.fired = fired.clone();
        match best {
            Some(mut r) => {
                r.intervals.fired = fired;
                r
            }
            None => IsolationReport::none(self.method, Plane::Squared, self.pp.n(), self.pp.was_padded(), iv),
        }
    }
}

/// Path (a): intervals `I_1`, `I_2` from `chi_1`, `chi_2`; cases a1, a2.
pub fn tgp_a(pp: &PreparedPolynomial) -> IsolationReport {
    let bt = block_transform(pp);
    let (i1, i2) = (chi1(&bt), chi2(&bt));
    let iv = IntervalData { i1, i2, ..Default::default() };
    let ctx = Ctx {
        pp,
        bt: &bt,
        method: IsolationMethod::TgpA,
        two: (IsolationCase::A1, IsolationCase::A2First, IsolationCase::A2Second),
    };
    ctx.run(&Elementwise, i1, i2, iv)
}

/// Path (b): intervals `J_1`, `J_2` from `omega_1`, `omega_2`; cases b1, b2.
pub fn tgp_b(pp: &PreparedPolynomial) -> IsolationReport {
    let bt = block_transform(pp);
    let (j1, j2) = (omega1(&bt), omega2(&bt));
    let iv = IntervalData { j1, j2, ..Default::default() };
    let ctx = Ctx {
        pp,
        bt: &bt,
        method: IsolationMethod::TgpB,
        two: (IsolationCase::B1, IsolationCase::B2First, IsolationCase::B2Second),
    };
    ctx.run(&Blockwise, j1, j2, iv)
}

/// Both paths, reporting the most informative case in the order
/// a1, b1, a2, b2. All intervals and fired cases are kept.
pub fn tgp(pp: &PreparedPolynomial) -> IsolationReport {
    let a = tgp_a(pp);
    let b = tgp_b(pp);
    let two = |r: &IsolationReport| matches!(r.case, IsolationCase::A1 | IsolationCase::B1);
    let mut chosen = if two(&a) {
        a.clone()
    } else if two(&b) || !a.is_success() {
        b.clone()
    } else {
        a.clone()
    };
    let iv = &mut chosen.intervals;
    iv.i1 = a.intervals.i1;
    iv.i2 = a.intervals.i2;
    iv.j1 = b.intervals.j1;
    iv.j2 = b.intervals.j2;
    iv.fired = a.intervals.fired.iter().chain(&b.intervals.fired).copied().collect();
    chosen
}

/// Tangency enhancement of case a2 (second bullet): for `x >= u*`, the
/// positive root of `psi_1`, the alpha disc lies inside the origin disc, so
/// the `n - 1` squares are in `|w| <= max(u1, u*)^2` whenever `u* <= u2`.
pub fn tgp_enhance_a2(pp: &PreparedPolynomial, report: &IsolationReport) -> Result<IsolationReport> {
    if report.case != IsolationCase::A2Second {
        return Err(Error::WrongCase(report.case));
    }
    let bt = block_transform(pp);
    let u = report.intervals.i2.expect("a2 second bullet has I_2");
    let mut tail = vec![0.0, bt.alpha.norm()];
    tail.extend(bt.v.iter().rev().map(|z| z.norm()));
    let u_star = cauchy_root(&tail);
    let mut out = report.clone();
    out.intervals.u_star = Some(u_star);
    // psi_1(u2) >= 0 iff u* <= u2; check on the evaluated inequality
    let x = u.x1.max(u_star);
    if x > u.x2 || x * x < bt.alpha.norm() + bt.rho1(x) {
        return Ok(out);
    }
    let r0 = x * x;
    let rb = bt.rho2(u.x2);
    let n = pp.n();
    out.claims = vec![
        ZeroClaim { regions: vec![origin(r0)], count: n - 1 },
        ZeroClaim { regions: vec![disc(bt.beta, rb)], count: 1 },
    ];
    let outer = bt.beta.norm() - rb;
    out.modulus_gap = if outer > 0.0 { AnnulusGap::new(x, outer.sqrt()) } else { None };
    Ok(out)
}
