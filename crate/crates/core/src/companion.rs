//! The squared companion matrix in block form and its similarity transforms.
//!
//! For an even-degree polynomial, `C(p)^2` is the identity shifted down by
//! two rows plus two nontrivial last columns. Grouped into `2x2` blocks
//! `K_0, ..., K_{m-1}` those columns make `C(p)^2` the block companion matrix
//! of a monic quadratic-block matrix polynomial. Triangularizing (or
//! diagonalizing) `K_{m-1}` with `S` and applying `S^{-1} . S` to every block
//! produces [`BlockTransform`], the data every localization result reads.
//!
//! The dense builders at the bottom of this module are quadratic-cost
//! fixtures for checking the block formulas; bound computations never use
//! them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat2::{diagonalize_2x2, schur_2x2, Mat2};
use crate::poly::{Polynomial, PreparedPolynomial};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The last block column of `C(p)^2`: `K_j` occupies rows `2j, 2j+1`.
///
/// The blocks hold the actual entries of the squared companion matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockColumn {
    pub blocks: Vec<Mat2>,
}

/// `K_0 = [[-a0, a_{n-1} a0], [-a1, a_{n-1} a1 - a0]]`,
/// `K_j = [[-a_{2j}, a_{n-1} a_{2j} - a_{2j-1}], [-a_{2j+1}, a_{n-1} a_{2j+1} - a_{2j}]]`.
pub fn squared_companion_blocks(pp: &PreparedPolynomial) -> BlockColumn {
    let a = pp.a();
    let top = a[pp.n() - 1];
    let blocks = (0..pp.m())
        .map(|j| {
            let (lo, hi) = (a[2 * j], a[2 * j + 1]);
            let before = if j == 0 { ZERO } else { a[2 * j - 1] };
            Mat2::new(-lo, top * lo - before, -hi, top * hi - lo)
        })
        .collect();
    BlockColumn { blocks }
}

/// `S`, the triangularized top block `[[alpha, gamma], [0, beta]]`, and the
/// transformed lower blocks `T_j = S^{-1} K_j S`, `j < m - 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockTransform {
    pub s: Mat2,
    #[serde(with = "crate::serde_complex")]
    pub alpha: Complex64,
    #[serde(with = "crate::serde_complex")]
    pub beta: Complex64,
    #[serde(with = "crate::serde_complex")]
    pub gamma: Complex64,
    /// First columns of `T_0, ..., T_{m-2}` stacked: `v_{2j}, v_{2j+1}`.
    #[serde(skip)]
    pub v: Vec<Complex64>,
    /// Second columns of `T_0, ..., T_{m-2}` stacked.
    #[serde(skip)]
    pub w: Vec<Complex64>,
    /// `T_0, ..., T_{m-2}`.
    #[serde(skip)]
    pub t: Vec<Mat2>,
    pub diagonalized: bool,
}

/// Diagonalizes `K_{m-1}` when its eigenvector basis is well conditioned,
/// otherwise uses a unitary Schur triangularization.
pub fn block_transform(pp: &PreparedPolynomial) -> BlockTransform {
    transform_blocks(&squared_companion_blocks(pp))
}

fn transform_blocks(col: &BlockColumn) -> BlockTransform {
    let (top, lower) = col.blocks.split_last().expect("m >= 1");
    let (s, s_inv, alpha, beta, gamma, diagonalized) = match diagonalize_2x2(top) {
        Some((s, d)) => {
            let s_inv = s.inverse().expect("eigenvector basis is nonsingular");
            (s, s_inv, d.alpha, d.beta, ZERO, true)
        }
        None => {
            let (u, t) = schur_2x2(top);
            (u, u.adjoint(), t.get(0, 0), t.get(1, 1), t.get(0, 1), false)
        }
    };
    let t: Vec<Mat2> = lower.iter().map(|k| s_inv * *k * s).collect();
    let mut v = Vec::with_capacity(2 * t.len());
    let mut w = Vec::with_capacity(2 * t.len());
    for tj in &t {
        v.extend([tj.get(0, 0), tj.get(1, 0)]);
        w.extend([tj.get(0, 1), tj.get(1, 1)]);
    }
    BlockTransform { s, alpha, beta, gamma, v, w, t, diagonalized }
}

/// `sum_{k=1}^{len} c_{len-k} y^k`, i.e. coefficients indexed by ascending
/// power of `x` weighted by descending powers of `y = 1/x`.
fn inverse_power_sum(c: &[f64], y: f64) -> f64 {
    c.iter().fold(0.0, |acc, &ck| (acc + ck) * y)
}

impl BlockTransform {
    /// `m`, the number of blocks.
    pub fn m(&self) -> usize {
        self.t.len() + 1
    }

    /// `T_{m-1} = [[alpha, gamma], [0, beta]]`.
    pub fn top_block(&self) -> Mat2 {
        Mat2::new(self.alpha, self.gamma, ZERO, self.beta)
    }

    /// `T_j` for `j = 0, ..., m - 1`.
    pub fn block(&self, j: usize) -> Mat2 {
        if j + 1 == self.m() {
            self.top_block()
        } else {
            self.t[j]
        }
    }

    /// Radius of the disc around `alpha` in the Gershgorin column set of
    /// `D_x^{-1} C_S^2 D_x`: `sum_j |v_j| / x^{n-2-j}`.
    pub fn rho1(&self, x: f64) -> f64 {
        let c: Vec<f64> = self.v.iter().map(|z| z.norm()).collect();
        inverse_power_sum(&c, 1.0 / x)
    }

    /// Radius of the disc around `beta`: `|gamma|/x + sum_j |w_j| / x^{n-1-j}`.
    pub fn rho2(&self, x: f64) -> f64 {
        let mut c: Vec<f64> = self.w.iter().map(|z| z.norm()).collect();
        c.push(self.gamma.norm());
        inverse_power_sum(&c, 1.0 / x)
    }

    /// Pairwise sums `|v_{2j}| + |v_{2j+1}|`, `j = 0..m-2`.
    pub fn v_pair_sums(&self) -> Vec<f64> {
        self.v.chunks(2).map(|p| p[0].norm() + p[1].norm()).collect()
    }

    pub fn w_pair_sums(&self) -> Vec<f64> {
        self.w.chunks(2).map(|p| p[0].norm() + p[1].norm()).collect()
    }

    /// Radius around `alpha` for the block scaling `Delta_x`.
    pub fn sigma1(&self, x: f64) -> f64 {
        inverse_power_sum(&self.v_pair_sums(), 1.0 / x)
    }

    /// Radius around `beta` for the block scaling `Delta_x`.
    pub fn sigma2(&self, x: f64) -> f64 {
        self.gamma.norm() + inverse_power_sum(&self.w_pair_sums(), 1.0 / x)
    }

    /// Spectral norms `||T_0||, ..., ||T_{m-2}||`.
    pub fn lower_norms(&self) -> Vec<f64> {
        self.t.iter().map(Mat2::spectral_norm).collect()
    }

    /// Block-column radius `sum_j ||T_j|| / x^{m-1-j}`.
    pub fn tau(&self, x: f64) -> f64 {
        inverse_power_sum(&self.lower_norms(), 1.0 / x)
    }
}

/// Square dense complex matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix { n, data: vec![ZERO; n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.n + j] = z;
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }

    /// `sum_{i != j} |a_ij|`.
    pub fn deleted_column_sum(&self, j: usize) -> f64 {
        (0..self.n).filter(|&i| i != j).map(|i| self.get(i, j).norm()).sum()
    }

    /// `D^{-1} A D` for diagonal `D = diag(d)`.
    fn diagonal_similarity(&self, d: &[f64]) -> DenseMatrix {
        let mut out = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                out.data[i * self.n + j] *= d[j] / d[i];
            }
        }
        out
    }

    /// The `2x2` block at block row `bi`, block column `bj`.
    pub fn block(&self, bi: usize, bj: usize) -> Mat2 {
        let (r, c) = (2 * bi, 2 * bj);
        Mat2::new(self.get(r, c), self.get(r, c + 1), self.get(r + 1, c), self.get(r + 1, c + 1))
    }
}

/// Companion matrix: ones on the subdiagonal, last column `-a_0, ..., -a_{n-1}`.
pub fn companion_matrix(p: &Polynomial) -> Result<DenseMatrix> {
    let n = p.degree();
    if n < 2 {
        return Err(Error::DegreeTooSmall { degree: n, min: 2 });
    }
    let mut c = DenseMatrix::zeros(n);
    for i in 1..n {
        c.set(i, i - 1, ONE);
    }
    for i in 0..n {
        c.set(i, n - 1, -p.coeff(i));
    }
    Ok(c)
}

/// `Q^{-1} C(p)^2 Q` with `Q = diag(S, ..., S)`.
pub fn squared_companion_transformed(pp: &PreparedPolynomial, bt: &BlockTransform) -> DenseMatrix {
    let n = pp.n();
    let mut c = DenseMatrix::zeros(n);
    for i in 2..n {
        c.set(i, i - 2, ONE);
    }
    for j in 0..pp.m() {
        let b = bt.block(j);
        for (r, row) in b.0.iter().enumerate() {
            c.set(2 * j + r, n - 2, row[0]);
            c.set(2 * j + r, n - 1, row[1]);
        }
    }
    c
}

/// `D_x^{-1} C_S^2(p) D_x` with `D_x = diag(x^n, ..., x)`.
pub fn build_f_matrix(pp: &PreparedPolynomial, bt: &BlockTransform, x: f64) -> Result<DenseMatrix> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::InvalidScale(x));
    }
    let n = pp.n();
    let d: Vec<f64> = (0..n).map(|i| x.powi((n - i) as i32)).collect();
    Ok(squared_companion_transformed(pp, bt).diagonal_similarity(&d))
}

/// `Delta_x^{-1} C_S^2(p) Delta_x` with `Delta_x = diag(x^m I, ..., x I)`.
pub fn build_phi_matrix(pp: &PreparedPolynomial, bt: &BlockTransform, x: f64) -> Result<DenseMatrix> {
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::InvalidScale(x));
    }
    let (n, m) = (pp.n(), pp.m());
    let d: Vec<f64> = (0..n).map(|i| x.powi((m - i / 2) as i32)).collect();
    Ok(squared_companion_transformed(pp, bt).diagonal_similarity(&d))
}
