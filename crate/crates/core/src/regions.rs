//! Discs, their square-root images (Cassini regions) and zero-free annuli.
//!
//! Every region is closed. Membership is decided on the defining inequality
//! without tolerance; callers that need slack (the oracle) apply it
//! explicitly through [`Region::inflated`].

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Closed disc `|z - center| <= radius`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Disc {
    #[serde(with = "crate::serde_complex")]
    pub center: Complex64,
    pub radius: f64,
}

impl Disc {
    pub fn new(center: Complex64, radius: f64) -> Self {
        debug_assert!(radius >= 0.0, "negative radius {radius}");
        Disc { center, radius }
    }

    pub fn origin(radius: f64) -> Self {
        Disc::new(Complex64::new(0.0, 0.0), radius)
    }

    pub fn contains(&self, z: Complex64) -> bool {
        (z - self.center).norm() <= self.radius
    }

    /// Whether the closed discs are disjoint.
    pub fn is_disjoint(&self, other: &Disc) -> bool {
        (self.center - other.center).norm() > self.radius + other.radius
    }
}

/// `{z : |z - f| |z + f| <= radius}`, the set of `z` with `z^2` in the disc
/// centered at `f^2`.
///
/// `center` keeps the original disc center so membership is evaluated on
/// exactly the same numbers as the disc it came from.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CassiniRegion {
    #[serde(with = "crate::serde_complex")]
    pub focus: Complex64,
    pub radius: f64,
    #[serde(with = "crate::serde_complex")]
    pub center: Complex64,
}

impl CassiniRegion {
    pub fn contains(&self, z: Complex64) -> bool {
        (z * z - self.center).norm() <= self.radius
    }

    /// The boundary oval splits into two loops iff the disc misses the origin.
    pub fn is_two_loop(&self) -> bool {
        two_loop_predicate(self)
    }
}

/// Open annulus `r_inner < |z| < r_outer` known to hold no zeros.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnulusGap {
    pub r_inner: f64,
    pub r_outer: f64,
}

impl AnnulusGap {
    /// `None` unless `0 <= r_inner < r_outer`.
    pub fn new(r_inner: f64, r_outer: f64) -> Option<Self> {
        (r_inner >= 0.0 && r_inner < r_outer).then_some(AnnulusGap { r_inner, r_outer })
    }

    /// Whether `z` lies strictly inside the annulus (a point the gap rules out).
    pub fn excludes(&self, z: Complex64) -> bool {
        let r = z.norm();
        self.r_inner < r && r < self.r_outer
    }
}

/// A region that a zero claim refers to.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Region {
    Disc(Disc),
    /// `|z - center| >= radius`.
    Exterior(Disc),
    Cassini(CassiniRegion),
    /// Complement of the open annulus.
    OutsideGap(AnnulusGap),
}

impl Region {
    pub fn contains(&self, z: Complex64) -> bool {
        contains(self, z)
    }

    /// The region grown by `slack` (absolute), used for boundary-tight
    /// oracle counts.
    pub fn inflated(&self, slack: f64) -> Region {
        match *self {
            Region::Disc(d) => Region::Disc(Disc::new(d.center, d.radius + slack)),
            Region::Exterior(d) => Region::Exterior(Disc::new(d.center, (d.radius - slack).max(0.0))),
            Region::Cassini(c) => Region::Cassini(CassiniRegion { radius: c.radius + slack, ..c }),
            Region::OutsideGap(g) => {
                let (lo, hi) = (g.r_inner + slack, g.r_outer - slack);
                match AnnulusGap::new(lo, hi) {
                    Some(g) => Region::OutsideGap(g),
                    None => Region::Exterior(Disc::origin(0.0)),
                }
            }
        }
    }

    /// A modulus scale for relative slack.
    pub fn scale(&self) -> f64 {
        match self {
            Region::Disc(d) | Region::Exterior(d) => d.center.norm() + d.radius,
            Region::Cassini(c) => c.center.norm() + c.radius,
            Region::OutsideGap(g) => g.r_outer,
        }
    }
}

/// Principal square root image of a disc: `z` is a member iff `z^2 ∈ d`.
pub fn sqrt_map_disc(d: &Disc) -> CassiniRegion {
    let mut focus = d.center.sqrt();
    // principal branch with argument in (-pi/2, pi/2]
    if focus.re == 0.0 && focus.im < 0.0 {
        focus = -focus;
    }
    CassiniRegion { focus, radius: d.radius, center: d.center }
}

/// Closed-set membership.
pub fn contains(region: &Region, z: Complex64) -> bool {
    match region {
        Region::Disc(d) => d.contains(z),
        Region::Exterior(d) => (z - d.center).norm() >= d.radius,
        Region::Cassini(c) => c.contains(z),
        Region::OutsideGap(g) => !g.excludes(z),
    }
}

/// True iff the Cassini oval has two loops: `radius < |focus|^2`.
pub fn two_loop_predicate(c: &CassiniRegion) -> bool {
    c.radius < c.center.norm()
}
