//! Shared inputs for the benchmarks.

use polyloc::experiments::SetSpec;
use polyloc::{Polynomial, PreparedPolynomial};

/// The first `count` polynomials of a standard test set with seed 0.
pub fn sample(set_id: u8, count: usize) -> Vec<Polynomial> {
    let spec = SetSpec::standard(set_id).expect("sets 1 to 4");
    polyloc::experiments::generate_set(&spec, 0, count)
}

/// A Set-2 style polynomial of arbitrary degree.
pub fn of_degree(degree: usize) -> Polynomial {
    let spec = SetSpec { set_id: 2, degree, range: 4.0, fixed_leading: vec![1.0] };
    spec.polynomial(0, degree as u64)
}

pub fn prepared(ps: &[Polynomial]) -> Vec<PreparedPolynomial> {
    ps.iter().map(|p| p.prepare_even().expect("degree at least one")).collect()
}
