//! Lo's divisibility condition, a necessary condition for edge-gracefulness:
//! a `(p, q)`-graph can only be edge-graceful if `p | q² + q − p(p−1)/2`.
//!
//! The condition is one-directional. Passing it says nothing about whether a
//! labeling actually exists.

use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoError {
    /// The vertex count was zero.
    NoVertices,
}

impl fmt::Display for LoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoError::NoVertices => f.write_str("Lo's condition needs at least one vertex"),
        }
    }
}

impl core::error::Error for LoError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LoReport {
    pub p: u64,
    pub q: u64,
    /// `q² + q − p(p−1)/2`, exact. Negative for sparse graphs.
    pub residual: i128,
    pub divides: bool,
}

impl LoReport {
    /// `residual / p` when it divides.
    pub fn quotient(&self) -> Option<i128> {
        self.divides.then(|| self.residual / self.p as i128)
    }
}

pub fn lo_check(p: u64, q: u64) -> Result<LoReport, LoError> {
    if p == 0 {
        return Err(LoError::NoVertices);
    }
    let (pw, qw) = (p as i128, q as i128);
    // p(p-1) is a product of consecutive integers, so the halving is exact
    let residual = qw * qw + qw - pw * (pw - 1) / 2;
    Ok(LoReport { p, q, residual, divides: residual.rem_euclid(pw) == 0 })
}

/// `(7n² − 5n) / (2n + 2)`, Lo's residual for `F_{1,n}` divided by `n + 1`.
///
/// Integral exactly when the fan passes [`lo_check`].
pub fn fan_lo_quotient(n: u64) -> Ratio<i128> {
    let n = n as i128;
    Ratio::new(7 * n * n - 5 * n, 2 * n + 2)
}

/// All `n` in `1..=n_max` for which `F_{1,n}` satisfies Lo's condition, ascending.
pub fn classify_fans(n_max: u64) -> Vec<u64> {
    (1..=n_max).filter(|&n| fan_passes(n)).collect()
}

fn fan_passes(n: u64) -> bool {
    let n = n as u128;
    (7 * n * n - 5 * n) % (2 * n + 2) == 0
}
