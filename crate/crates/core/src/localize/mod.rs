//! Upper/lower bounds on zero moduli and isolation of groups of zeros.
//!
//! Bounds come from the unique positive root of a Cauchy-type polynomial;
//! isolation results come from the two positive roots of a Pellet-type
//! polynomial. The squared-companion methods work in the plane of the
//! *squares* of the zeros; their regions are discs there and Cassini
//! regions in the `z`-plane (see [`crate::regions::sqrt_map_disc`]).

mod bounds;
mod pellet;
mod tgp;
mod tmgp;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{count_in_union, gap_violations, RootSet};
use crate::realroots::{positive_root_pair, unique_positive_root, RealPoly, RootPair};
use crate::regions::{AnnulusGap, Region};

pub use bounds::{
    bound, cauchy_bound, cauchy_lower_bound, matrix_cauchy_bound, tgc_bound_a, tgc_bound_b,
};
pub use pellet::{matrix_pellet, pellet_classic};
pub use tgp::{tgp, tgp_a, tgp_b, tgp_enhance_a2};
pub use tmgp::tmgp;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMethod {
    Cauchy,
    MatrixCauchy,
    TgcA,
    TgcB,
}

impl BoundMethod {
    pub const ALL: [BoundMethod; 4] =
        [BoundMethod::Cauchy, BoundMethod::MatrixCauchy, BoundMethod::TgcA, BoundMethod::TgcB];

    pub fn name(self) -> &'static str {
        match self {
            BoundMethod::Cauchy => "cauchy",
            BoundMethod::MatrixCauchy => "matrix-cauchy",
            BoundMethod::TgcA => "tgc-a",
            BoundMethod::TgcB => "tgc-b",
        }
    }
}

/// A bound on the moduli of all zeros.
///
/// For upper bounds every zero satisfies `|z| <= bound`; with `lower` set
/// every zero satisfies `|z| >= bound`. `roots` holds the positive roots of
/// the auxiliary polynomials (`r1, r2`, `s1, s2`, or `s`), before any square
/// root or reciprocal; `None` marks a root that was never solved for.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub bound: f64,
    pub method: BoundMethod,
    pub roots: [Option<f64>; 2],
    pub lower: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsolationMethod {
    Pellet,
    MatrixPellet,
    TgpA,
    TgpB,
    Tmgp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IsolationCase {
    /// Classical or matrix Pellet split.
    Split,
    A1,
    A2First,
    A2Second,
    B1,
    B2First,
    B2Second,
    TmgpA,
    TmgpB,
    None,
}

/// Which plane the claim regions live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Plane {
    /// Regions contain the zeros themselves.
    Z,
    /// Regions contain the squares of the zeros.
    Squared,
}

/// `count` zeros (with multiplicity) lie in the union of `regions`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZeroClaim {
    pub regions: Vec<Region>,
    pub count: usize,
}

/// The intervals on which a Pellet-type polynomial is nonpositive, and the
/// parameters a report was built from. `None` means empty.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct IntervalData {
    pub i1: Option<RootPair>,
    pub i2: Option<RootPair>,
    pub j1: Option<RootPair>,
    pub j2: Option<RootPair>,
    pub k1: Option<RootPair>,
    pub k2: Option<RootPair>,
    /// `(mu1, mu2)` for case a1, `(mu~1, mu~2)` for b1.
    pub mu: Option<(f64, f64)>,
    pub u_star: Option<f64>,
    /// Every case whose hypotheses held, in priority order.
    pub fired: Vec<IsolationCase>,
}

/// The outcome of one isolation method.
///
/// Claims count the zeros of the polynomial the method ran on: `p` itself
/// for classical Pellet, and the even-degree form `z p(z)` for odd-degree
/// `p` otherwise (`padded`). `degree` is the total of the counts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsolationReport {
    pub method: IsolationMethod,
    pub case: IsolationCase,
    pub plane: Plane,
    pub claims: Vec<ZeroClaim>,
    /// Moduli strictly between these hold no zeros (`z`-plane).
    pub modulus_gap: Option<AnnulusGap>,
    pub intervals: IntervalData,
    pub degree: usize,
    pub padded: bool,
}

/// How a successful report isolates zeros, for tallying.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Isolation {
    /// Two zeros, each in its own region.
    TwoSeparate,
    /// Two zeros in a common region.
    TwoJoint,
    /// One zero in its own region.
    One,
}

impl IsolationReport {
    fn none(method: IsolationMethod, plane: Plane, degree: usize, padded: bool, intervals: IntervalData) -> Self {
        IsolationReport {
            method,
            case: IsolationCase::None,
            plane,
            claims: Vec::new(),
            modulus_gap: None,
            intervals,
            degree,
            padded,
        }
    }

    pub fn is_success(&self) -> bool {
        self.case != IsolationCase::None
    }

    pub fn isolation(&self) -> Option<Isolation> {
        use IsolationCase::*;
        match self.case {
            A1 | B1 | TmgpA => Some(if self.claims.len() == 3 { Isolation::TwoSeparate } else { Isolation::TwoJoint }),
            A2First | A2Second | B2First | B2Second | TmgpB => Some(Isolation::One),
            Split | None => Option::None,
        }
    }

    /// Claim counts for the zeros of the original polynomial: the artificial
    /// zero of `z p(z)` is removed from the first claim containing the origin.
    pub fn counts_for_original(&self) -> Vec<usize> {
        let mut counts: Vec<usize> = self.claims.iter().map(|c| c.count).collect();
        if self.padded {
            let origin = Complex64::new(0.0, 0.0);
            if let Some(i) = self.claims.iter().position(|c| c.regions.iter().any(|r| r.contains(origin))) {
                counts[i] -= 1;
            }
        }
        counts
    }

    /// Checks every claim and the gap against the roots of the original
    /// polynomial (the padded zero is added here when needed).
    pub fn check_against(&self, roots: &RootSet) -> Result<()> {
        if !self.is_success() {
            return Ok(());
        }
        let mut rs = roots.clone();
        if self.padded {
            rs.roots.push(Complex64::new(0.0, 0.0));
            rs.residuals.push(0.0);
        }
        if rs.roots.len() != self.degree {
            return Err(Error::SoundnessViolation(format!(
                "report covers {} zeros, oracle has {}",
                self.degree,
                rs.roots.len()
            )));
        }
        let total: usize = self.claims.iter().map(|c| c.count).sum();
        if total != self.degree {
            return Err(Error::SoundnessViolation(format!("claims sum to {total}, expected {}", self.degree)));
        }
        let squared = self.plane == Plane::Squared;
        for (i, claim) in self.claims.iter().enumerate() {
            let found = count_in_union(&rs, &claim.regions, squared);
            if found != claim.count {
                return Err(Error::SoundnessViolation(format!(
                    "{:?}/{:?} claim {i}: declared {}, oracle {found}",
                    self.method, self.case, claim.count
                )));
            }
        }
        if let Some(gap) = &self.modulus_gap {
            let bad = gap_violations(&rs, gap);
            if !bad.is_empty() {
                return Err(Error::SoundnessViolation(format!(
                    "{:?}/{:?}: roots {bad:?} inside gap {gap:?}",
                    self.method, self.case
                )));
            }
        }
        Ok(())
    }
}

/// Positive root of `x^N - c_{N-1} x^{N-1} - ... - c_0` given
/// `tail = [c_{N-1}, ..., c_0]`; zero when the tail vanishes.
pub(crate) fn cauchy_root(tail: &[f64]) -> f64 {
    if tail.iter().all(|&c| c == 0.0) {
        return 0.0;
    }
    let mut c = Vec::with_capacity(tail.len() + 1);
    c.push(1.0);
    c.extend(tail.iter().map(|&t| -t));
    unique_positive_root(&RealPoly::new(c)).expect("Cauchy form by construction")
}

/// Positive roots of a monic polynomial, leading-first, with at most one
/// negative coefficient; `None` when there is no negative coefficient or
/// no pair of distinct roots.
pub(crate) fn pellet_roots(coeffs: Vec<f64>) -> Option<RootPair> {
    if !coeffs.iter().any(|&c| c < 0.0) {
        return None;
    }
    positive_root_pair(&RealPoly::new(coeffs)).expect("Pellet form by construction")
}
