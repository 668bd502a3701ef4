//! Bounds and isolation regions for the zeros of complex polynomials.
//!
//! The zeros of a monic polynomial `p` are the eigenvalues of its companion
//! matrix `C(p)`, and their squares are the eigenvalues of `C(p)^2`. The
//! squared companion matrix has only two nontrivial columns, made of `2x2`
//! blocks; triangularizing the last block and applying scaled Gershgorin
//! arguments yields Cauchy-type upper bounds ([`localize::tgc_bound_a`],
//! [`localize::tgc_bound_b`]) and Pellet-type isolation results
//! ([`localize::tgp`], [`localize::tmgp`]) next to the classical versions.
//!
//! Everything here is a pure function of immutable inputs.

pub mod companion;
pub mod error;
pub mod experiments;
pub mod localize;
pub mod mat2;
pub mod oracle;
pub mod poly;
pub mod realroots;
pub mod regions;
mod serde_complex;

pub use num_complex::Complex64;

pub use crate::companion::{BlockColumn, BlockTransform, DenseMatrix};
pub use crate::error::{Error, Result};
pub use crate::localize::{
    BoundMethod, BoundResult, Isolation, IsolationCase, IsolationMethod, IsolationReport, Plane, ZeroClaim,
};
pub use crate::mat2::{EigenPair2, Mat2};
pub use crate::oracle::RootSet;
pub use crate::poly::{Polynomial, PreparedPolynomial};
pub use crate::realroots::{RealPoly, RootPair};
pub use crate::regions::{AnnulusGap, CassiniRegion, Disc, Region};
