//! Analysis of convolutional codes given by a generator matrix over `F_q(z)`.
//!
//! The pipeline clears denominators, extracts a basic encoder of the same
//! rational row space, row-reduces it to minimal-basic form and reads off
//! `(n, k, δ)`, the free distance and the generalized Singleton bound.

pub mod distance;
pub mod encoder;
pub mod smith;

pub use distance::{free_distance, free_distance_oracle};
pub use encoder::{basic_encoder, clear_denominators, row_reduce, BasicExtraction, PolyEncoder};
pub use smith::{smith_form, SmithForm};

use crate::error::{Error, Result};
use crate::matrix::RatMatrix;
use crate::poly::Poly;

/// Generalized Singleton bound `(n − k)(⌊δ/k⌋ + 1) + δ + 1`.
pub fn singleton_bound(n: usize, k: usize, delta: usize) -> u64 {
    assert!(1 <= k && k <= n, "need 1 <= k <= n");
    ((n - k) * (delta / k + 1) + delta + 1) as u64
}

/// True iff `H · Gᵀ` vanishes.
pub fn check_dual(g: &RatMatrix, h: &RatMatrix) -> Result<bool> {
    if g.cols() != h.cols() {
        return Err(Error::ShapeMismatch(format!("G has {} columns, H has {}", g.cols(), h.cols())));
    }
    Ok(h.mul(&g.transpose())?.is_zero())
}

/// Parameters of an analyzed code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub delta: usize,
    pub d_free: u64,
    pub singleton_bound: u64,
    pub is_mds: bool,
    pub input_was_catastrophic: bool,
}

impl CodeReport {
    pub fn is_mds(&self) -> bool {
        self.d_free == self.singleton_bound
    }
}

/// Every intermediate of the normalization pipeline plus the final report.
#[derive(Debug, Clone)]
pub struct Analysis {
    /// Generator after clearing denominators.
    pub cleared: PolyEncoder,
    /// Monic gcd of the cleared encoder's maximal minors.
    pub minor_gcd: Poly,
    /// Minimal-basic encoder of the code.
    pub encoder: PolyEncoder,
    pub report: CodeReport,
}

/// Runs the full pipeline on a full-rank generator matrix.
pub fn analyze(g: &RatMatrix) -> Result<Analysis> {
    let cleared = clear_denominators(g)?;
    let basic = basic_encoder(&cleared)?;
    let encoder = row_reduce(&basic.encoder)?;
    let (n, k, delta) = (encoder.n(), encoder.k(), encoder.degree());
    let d_free = free_distance(&encoder)?;
    let bound = singleton_bound(n, k, delta);
    let report = CodeReport {
        n,
        k,
        delta,
        d_free,
        singleton_bound: bound,
        is_mds: d_free == bound,
        input_was_catastrophic: basic.input_was_catastrophic,
    };
    Ok(Analysis { cleared, minor_gcd: basic.minor_gcd, encoder, report })
}
