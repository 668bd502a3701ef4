//! Random test sets and the summary statistics of the bound and isolation
//! comparisons.
//!
//! Each polynomial is drawn from its own ChaCha8 stream selected by
//! `(seed, index)`, so results do not depend on thread scheduling.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::localize::{bound, matrix_pellet, pellet_classic, tgp_a, tgp_b, tmgp, BoundMethod, Isolation, IsolationReport};
use crate::oracle::{all_roots, RootSet};
use crate::poly::Polynomial;

/// A family of random monic polynomials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SetSpec {
    pub set_id: u8,
    pub degree: usize,
    /// Real and imaginary parts of free coefficients are uniform on `[-range, range]`.
    pub range: f64,
    /// Fixed real coefficients from the leading one down.
    pub fixed_leading: Vec<f64>,
}

impl SetSpec {
    /// Sets 1 to 4 at degree 20.
    pub fn standard(set_id: u8) -> Option<Self> {
        let (range, fixed_leading) = match set_id {
            1 => (2.0, vec![1.0]),
            2 => (4.0, vec![1.0]),
            3 => (4.0, vec![1.0, 2.0, 6.0, 2.0]),
            4 => (4.0, vec![1.0, 2.0, 8.0, 2.0]),
            _ => return None,
        };
        Some(SetSpec { set_id, degree: 20, range, fixed_leading })
    }

    /// The `index`-th polynomial of the set for `seed`.
    pub fn polynomial(&self, seed: u64, index: u64) -> Polynomial {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        let mut coeffs: Vec<Complex64> = self.fixed_leading.iter().map(|&c| Complex64::new(c, 0.0)).collect();
        let r = self.range;
        while coeffs.len() <= self.degree {
            coeffs.push(Complex64::new(rng.random_range(-r..=r), rng.random_range(-r..=r)));
        }
        Polynomial::new(coeffs).expect("leading coefficient is one")
    }
}

pub fn generate_set(spec: &SetSpec, seed: u64, count: usize) -> Vec<Polynomial> {
    (0..count as u64).map(|i| spec.polynomial(seed, i)).collect()
}

/// Relative tolerance for ties in the win count.
const TIE_TOL: f64 = 1e-12;
/// Bounds may undercut the oracle by this relative amount (rounding).
const BOUND_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundStats {
    pub method: BoundMethod,
    /// Mean of `bound / max |z_j|`.
    pub avg_ratio: f64,
    /// Samples where this method gave the smallest bound (ties shared).
    pub wins: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Table1Stats {
    pub set_id: u8,
    pub count: usize,
    pub seed: u64,
    pub methods: Vec<BoundStats>,
}

impl Table1Stats {
    pub fn get(&self, m: BoundMethod) -> &BoundStats {
        self.methods.iter().find(|s| s.method == m).expect("all methods present")
    }
}

pub fn run_table1(spec: &SetSpec, seed: u64, count: usize) -> Result<Table1Stats> {
    let rows: Vec<[f64; 4]> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let p = spec.polynomial(seed, i);
            let maxmod = all_roots(&p).max_modulus();
            let mut ratios = [0.0; 4];
            for (slot, m) in ratios.iter_mut().zip(BoundMethod::ALL) {
                let b = bound(&p, m, false)?.bound;
                if b < maxmod * (1.0 - BOUND_SLACK) {
                    return Err(Error::SoundnessViolation(format!(
                        "set {} index {i}: {} bound {b} below max modulus {maxmod}",
                        spec.set_id,
                        m.name()
                    )));
                }
                *slot = b / maxmod;
            }
            Ok(ratios)
        })
        .collect::<Result<_>>()?;

    let methods = BoundMethod::ALL
        .iter()
        .enumerate()
        .map(|(k, &method)| {
            let avg_ratio = rows.iter().map(|r| r[k]).sum::<f64>() / count as f64;
            let wins = rows
                .iter()
                .filter(|r| {
                    let best = r.iter().copied().fold(f64::INFINITY, f64::min);
                    r[k] <= best * (1.0 + TIE_TOL)
                })
                .count();
            BoundStats { method, avg_ratio, wins }
        })
        .collect();
    Ok(Table1Stats { set_id: spec.set_id, count, seed, methods })
}

/// Tallies for one isolation method: two zeros isolated from each other,
/// two zeros isolated together, one zero isolated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub two_separate: usize,
    pub two_joint: usize,
    pub one: usize,
}

impl Tally {
    fn add(&mut self, r: &IsolationReport) {
        match r.isolation() {
            Some(Isolation::TwoSeparate) => self.two_separate += 1,
            Some(Isolation::TwoJoint) => self.two_joint += 1,
            Some(Isolation::One) => self.one += 1,
            None => {}
        }
    }

    fn merge(mut self, o: Tally) -> Tally {
        self.two_separate += o.two_separate;
        self.two_joint += o.two_joint;
        self.one += o.one;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Table2Stats {
    pub set_id: u8,
    pub count: usize,
    pub seed: u64,
    /// Classical Pellet isolating the one and the two largest zeros
    /// (index `n - 1` and `n - 2`), counted independently.
    pub pellet: [usize; 2],
    /// Classical Pellet at index `k = 1` and `k = 2`, for comparison.
    pub pellet_low: [usize; 2],
    /// Matrix Pellet successes for the top block (`k = m - 1`).
    pub matrix_pellet: usize,
    /// Matrix Pellet successes at `k = 1`, for comparison.
    pub matrix_pellet_k1: usize,
    pub tgp_a: Tally,
    pub tgp_b: Tally,
    pub tmgp: Tally,
}

impl Table2Stats {
    fn merge(mut self, o: Table2Stats) -> Table2Stats {
        self.pellet[0] += o.pellet[0];
        self.pellet[1] += o.pellet[1];
        self.pellet_low[0] += o.pellet_low[0];
        self.pellet_low[1] += o.pellet_low[1];
        self.matrix_pellet += o.matrix_pellet;
        self.matrix_pellet_k1 += o.matrix_pellet_k1;
        self.tgp_a = self.tgp_a.merge(o.tgp_a);
        self.tgp_b = self.tgp_b.merge(o.tgp_b);
        self.tmgp = self.tmgp.merge(o.tmgp);
        self
    }
}

fn checked(r: Option<IsolationReport>, rs: &RootSet, label: &str) -> Result<bool> {
    match r {
        Some(r) if r.is_success() => {
            r.check_against(rs)
                .map_err(|e| Error::SoundnessViolation(format!("{label}: {e}")))?;
            Ok(true)
        }
        _ => Ok(false),
    }
}

fn table2_row(p: &Polynomial, label: &str) -> Result<Table2Stats> {
    let rs = all_roots(p);
    let pp = p.prepare_even()?;
    let mut row = Table2Stats::default();
    let n = p.degree();
    for (i, k) in [1, 2].into_iter().enumerate() {
        // a vanishing coefficient means the test does not apply
        let top = pellet_classic(p, n - k).ok().flatten();
        row.pellet[i] += checked(top, &rs, label)? as usize;
        let low = pellet_classic(p, k).ok().flatten();
        row.pellet_low[i] += checked(low, &rs, label)? as usize;
    }
    let top = matrix_pellet(&pp, pp.m() - 1).ok().flatten();
    row.matrix_pellet += checked(top, &rs, label)? as usize;
    let k1 = matrix_pellet(&pp, 1).ok().flatten();
    row.matrix_pellet_k1 += checked(k1, &rs, label)? as usize;
    for (tally, r) in [(&mut row.tgp_a, tgp_a(&pp)), (&mut row.tgp_b, tgp_b(&pp))] {
        checked(Some(r.clone()), &rs, label)?;
        tally.add(&r);
    }
    if let Ok(r) = tmgp(&pp) {
        checked(Some(r.clone()), &rs, label)?;
        row.tmgp.add(&r);
    }
    Ok(row)
}

/// Runs every isolation method on the set; any success that the oracle
/// contradicts aborts with [`Error::SoundnessViolation`].
pub fn run_table2(spec: &SetSpec, seed: u64, count: usize) -> Result<Table2Stats> {
    let total = (0..count as u64)
        .into_par_iter()
        .map(|i| table2_row(&spec.polynomial(seed, i), &format!("set {} index {i}", spec.set_id)))
        .try_reduce(Table2Stats::default, |a, b| Ok(a.merge(b)))?;
    Ok(Table2Stats { set_id: spec.set_id, count, seed, ..total })
}
