//! Monic complex polynomials and the even-degree form used by the
//! squared-companion constructions.
//!
//! Coefficients are stored leading-first everywhere: `[1, a_{n-1}, ..., a_0]`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monic polynomial `z^n + a_{n-1} z^{n-1} + ... + a_0`, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCoeffs", into = "RawCoeffs")]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RawCoeffs {
    coeffs: Vec<[f64; 2]>,
}

impl TryFrom<RawCoeffs> for Polynomial {
    type Error = Error;

    fn try_from(raw: RawCoeffs) -> Result<Self> {
        Polynomial::new(raw.coeffs.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
    }
}

impl From<Polynomial> for RawCoeffs {
    fn from(p: Polynomial) -> Self {
        RawCoeffs { coeffs: p.coeffs.iter().map(|z| [z.re, z.im]).collect() }
    }
}

impl Polynomial {
    /// Normalizes `coeffs` (leading-first) to monic form.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::DegreeTooSmall { degree: coeffs.len().saturating_sub(1), min: 1 });
        }
        if coeffs.iter().any(|c| !c.re.is_finite() || !c.im.is_finite()) {
            return Err(Error::InvalidPolynomial("non-finite coefficient"));
        }
        let lead = coeffs[0];
        if lead == Complex64::new(0.0, 0.0) {
            return Err(Error::InvalidPolynomial("zero leading coefficient"));
        }
        let coeffs = if lead == Complex64::new(1.0, 0.0) {
            coeffs
        } else {
            coeffs.into_iter().map(|c| c / lead).collect()
        };
        Ok(Polynomial { coeffs })
    }

    /// Builds a polynomial from real coefficients, leading-first.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    /// The monic polynomial with the given zeros.
    pub fn from_roots(roots: &[Complex64]) -> Result<Self> {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            coeffs.push(Complex64::new(0.0, 0.0));
            for i in (1..coeffs.len()).rev() {
                let prev = coeffs[i - 1];
                coeffs[i] -= r * prev;
            }
        }
        Self::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Leading-first coefficient slice.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^j`.
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs[self.degree() - j]
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Value and first derivative at `z`.
    pub fn evaluate_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        let mut p = zero;
        let mut dp = zero;
        for &c in &self.coeffs {
            dp = dp * z + p;
            p = p * z + c;
        }
        (p, dp)
    }

    /// `z^n p(1/z) / a_0`, whose zeros are the reciprocals of those of `p`.
    pub fn reverse(&self) -> Result<Polynomial> {
        if self.coeff(0) == Complex64::new(0.0, 0.0) {
            return Err(Error::ZeroConstantTerm);
        }
        Polynomial::new(self.coeffs.iter().rev().copied().collect())
    }

    /// `z p(z)`.
    pub fn times_z(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(Complex64::new(0.0, 0.0));
        Polynomial { coeffs }
    }

    /// Largest coefficient modulus, including the leading one.
    pub fn max_coeff_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Even-degree form: `p` itself when the degree is even, `z p(z)` otherwise.
    pub fn prepare_even(&self) -> Result<PreparedPolynomial> {
        let l = self.degree();
        if l < 3 {
            return Err(Error::DegreeTooSmall { degree: l, min: 3 });
        }
        let padded = l % 2 == 1;
        let n = if padded { l + 1 } else { l };
        // a_j for j = 0..n-1, lowest power first
        let mut a = Vec::with_capacity(n);
        if padded {
            a.push(Complex64::new(0.0, 0.0));
        }
        a.extend((0..l).map(|j| self.coeff(j)));
        debug_assert_eq!(a.len(), n);
        Ok(PreparedPolynomial { a, n, m: n / 2, padded, source: self.clone() })
    }
}

/// Even-degree polynomial `z^n + a_{n-1} z^{n-1} + ... + a_0` with `n = 2m`,
/// obtained from a polynomial of degree `l >= 3` by multiplying with `z`
/// when `l` is odd.
#[derive(Clone, Debug, PartialEq)]
pub struct PreparedPolynomial {
    a: Vec<Complex64>,
    n: usize,
    m: usize,
    padded: bool,
    source: Polynomial,
}

impl PreparedPolynomial {
    /// `a_0, ..., a_{n-1}`, lowest power first.
    pub fn a(&self) -> &[Complex64] {
        &self.a
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn was_padded(&self) -> bool {
        self.padded
    }

    /// Degree of the polynomial this was prepared from.
    pub fn original_degree(&self) -> usize {
        self.source.degree()
    }

    /// The polynomial this was prepared from.
    pub fn unpad(&self) -> &Polynomial {
        &self.source
    }

    /// The even-degree polynomial itself (`z p(z)` when padded).
    pub fn polynomial(&self) -> Polynomial {
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        coeffs.extend(self.a.iter().rev());
        Polynomial { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn normalize_divides_by_leading() {
        let p = Polynomial::from_real(&[2.0, 0.0, -8.0]).unwrap();
        assert_eq!(p.coeffs(), &[c(1.0, 0.0), c(0.0, 0.0), c(-4.0, 0.0)]);
        let q = Polynomial::new(vec![c(1.0, 0.0), c(3.0, 1.0), c(2.0, 0.0)]).unwrap();
        assert_eq!(q.coeffs(), &[c(1.0, 0.0), c(3.0, 1.0), c(2.0, 0.0)]);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(
            Polynomial::from_real(&[0.0, 1.0, 1.0]),
            Err(Error::InvalidPolynomial("zero leading coefficient"))
        );
        assert!(matches!(Polynomial::from_real(&[1.0]), Err(Error::DegreeTooSmall { .. })));
        assert!(matches!(Polynomial::from_real(&[]), Err(Error::DegreeTooSmall { .. })));
    }

    #[test]
    fn prepare_odd_degree_pads() {
        // z^3 + 2z + 1
        let p = Polynomial::from_real(&[1.0, 0.0, 2.0, 1.0]).unwrap();
        let pp = p.prepare_even().unwrap();
        assert_eq!(pp.n(), 4);
        assert_eq!(pp.m(), 2);
        assert!(pp.was_padded());
        assert_eq!(pp.a(), &[c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(pp.polynomial(), p.times_z());
    }

    #[test]
    fn prepare_even_degree_is_identity() {
        let p = Polynomial::from_real(&[1.0, 0.0, 0.0, 0.0, -1.0]).unwrap();
        let pp = p.prepare_even().unwrap();
        assert_eq!(pp.n(), 4);
        assert!(!pp.was_padded());
        assert_eq!(pp.a(), &[c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(pp.polynomial(), p);
    }

    #[test]
    fn prepare_rejects_low_degree() {
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.prepare_even(), Err(Error::DegreeTooSmall { degree: 2, min: 3 }));
    }

    #[test]
    fn reverse_examples() {
        let p = Polynomial::from_real(&[1.0, 3.0, 2.0]).unwrap();
        assert_eq!(p.reverse().unwrap(), Polynomial::from_real(&[1.0, 1.5, 0.5]).unwrap());
        let q = Polynomial::from_real(&[1.0, 0.0, 0.0, -1.0]).unwrap();
        assert_eq!(q.reverse().unwrap(), q);
        let r = Polynomial::from_real(&[1.0, 1.0, 0.0]).unwrap();
        assert_eq!(r.reverse(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn evaluate_examples() {
        let p = Polynomial::from_real(&[1.0, 0.0, -4.0]).unwrap();
        assert_eq!(p.evaluate(c(2.0, 0.0)), c(0.0, 0.0));
        let q = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(q.evaluate(c(0.0, 1.0)), c(0.0, 0.0));
        let r = Polynomial::from_real(&[1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(r.evaluate(c(1.0, 1.0)), c(-2.0, 2.0));
    }

    #[test]
    fn derivative_matches_difference_quotient() {
        let p = Polynomial::new(vec![c(1.0, 0.0), c(0.5, -1.0), c(2.0, 0.25), c(-1.0, 3.0)]).unwrap();
        let z = c(0.7, -0.3);
        let h = 1e-6;
        let (_, dp) = p.evaluate_with_derivative(z);
        let fd = (p.evaluate(z + h) - p.evaluate(z - h)) / (2.0 * h);
        assert!((dp - fd).norm() < 1e-8);
    }

    #[test]
    fn from_roots_round_trip() {
        let p = Polynomial::from_roots(&[c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)]).unwrap();
        assert_eq!(p, Polynomial::from_real(&[1.0, -6.0, 11.0, -6.0]).unwrap());
    }

    #[test]
    fn json_schema() {
        let p: Polynomial = serde_json::from_str(r#"{"coeffs": [[2, 0], [0, 2], [4, 0]]}"#).unwrap();
        assert_eq!(p.coeffs(), &[c(1.0, 0.0), c(0.0, 1.0), c(2.0, 0.0)]);
        let back = serde_json::to_string(&p).unwrap();
        assert_eq!(back, r#"{"coeffs":[[1.0,0.0],[0.0,1.0],[2.0,0.0]]}"#);
        assert!(serde_json::from_str::<Polynomial>(r#"{"coeffs": [[0, 0], [1, 0]]}"#).is_err());
    }

    fn coeff_strategy() -> impl Strategy<Value = Complex64> {
        (-5.0f64..5.0, -5.0f64..5.0).prop_map(|(re, im)| c(re, im))
    }

    proptest! {
        #[test]
        fn reverse_is_an_involution(tail in prop::collection::vec(coeff_strategy(), 2..15)) {
            prop_assume!(tail.last().unwrap().norm() > 1e-3);
            let mut coeffs = vec![c(1.0, 0.0)];
            coeffs.extend(tail);
            let p = Polynomial::new(coeffs).unwrap();
            let rr = p.reverse().unwrap().reverse().unwrap();
            let scale = p.max_coeff_modulus();
            for (x, y) in p.coeffs().iter().zip(rr.coeffs()) {
                prop_assert!((x - y).norm() <= 1e-14 * scale);
            }
        }

        #[test]
        fn prepare_then_unpad_is_exact(tail in prop::collection::vec(coeff_strategy(), 3..22)) {
            let mut coeffs = vec![c(1.0, 0.0)];
            coeffs.extend(tail);
            let p = Polynomial::new(coeffs).unwrap();
            let pp = p.prepare_even().unwrap();
            prop_assert_eq!(pp.unpad(), &p);
            prop_assert_eq!(pp.n() % 2, 0);
            let l = p.degree();
            prop_assert!(pp.n() == l || pp.n() == l + 1);
            // the stored a_j reproduce the original coefficients exactly
            let shift = usize::from(pp.was_padded());
            for j in 0..l {
                prop_assert_eq!(pp.a()[j + shift], p.coeff(j));
            }
        }
    }
}
