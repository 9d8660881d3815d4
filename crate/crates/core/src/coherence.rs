//! Relative-entropy coherence of Gaussian states with respect to the Fock
//! basis, in bits.
//!
//! The incoherent reference of a Gaussian state is the product thermal state
//! with the same per-mode photon numbers, so `C(ρ) = S(ρ_th) − S(ρ)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::linalg::Matrix;

/// Round-off band below zero that is clamped instead of rejected.
pub const NEGATIVE_TOL: f64 = 1e-9;

/// `x log₂ x` with the `0 log 0 = 0` convention.
fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * libm::log2(x)
    }
}

/// Entropy in bits of one mode with symplectic eigenvalue `ν`.
pub fn mode_entropy(nu: f64) -> f64 {
    xlog2x(0.5 * (nu + 1.0)) - xlog2x(0.5 * (nu - 1.0))
}

fn clamp_nonneg(x: f64) -> Result<f64> {
    if x >= 0.0 {
        Ok(x)
    } else if x >= -NEGATIVE_TOL {
        Ok(0.0)
    } else {
        Err(Error::NegativeCoherence(x))
    }
}

/// `n̄ = (V_XX + V_PP + ⟨X⟩² + ⟨P⟩²)/4 − 1/2`.
pub fn mean_photon(state: &GaussianState, mode: usize) -> Result<f64> {
    if mode >= state.n_modes() {
        return Err(Error::ModeOutOfRange { mode, n_modes: state.n_modes() });
    }
    let (x, p) = (2 * mode, 2 * mode + 1);
    let v = state.cov();
    let m = state.mean();
    let n = 0.25 * (v[(x, x)] + v[(p, p)] + m[x] * m[x] + m[p] * m[p]) - 0.5;
    Ok(if n >= -NEGATIVE_TOL { n.max(0.0) } else { n })
}

/// Von Neumann entropy in bits.
pub fn entropy(state: &GaussianState) -> Result<f64> {
    let nus = state.symplectic_eigenvalues()?;
    Ok(nus.into_iter().map(mode_entropy).sum::<f64>().max(0.0))
}

/// Diagonal (thermal) reference: zero mean, each mode's covariance block
/// replaced by `½(V_XX + V_PP + ⟨X⟩² + ⟨P⟩²)·I`.
pub fn thermal_reference(state: &GaussianState) -> Result<GaussianState> {
    let n = state.n_modes();
    let v = state.cov();
    let m = state.mean();
    let mut diag = Vec::with_capacity(2 * n);
    for j in 0..n {
        let (x, p) = (2 * j, 2 * j + 1);
        let d = 0.5 * (v[(x, x)] + v[(p, p)] + m[x] * m[x] + m[p] * m[p]);
        diag.extend([d, d]);
    }
    GaussianState::from_parts(alloc::vec![0.0; 2 * n], Matrix::diagonal(&diag))
}

/// Entropy of the thermal reference, evaluated directly from photon numbers.
fn reference_entropy(state: &GaussianState) -> Result<f64> {
    let mut s = 0.0;
    for j in 0..state.n_modes() {
        let n = mean_photon(state, j)?;
        s += xlog2x(n + 1.0) - xlog2x(n);
    }
    Ok(s)
}

/// Total coherence `S(ρ_th) − S(ρ)`.
pub fn coherence_total(state: &GaussianState) -> Result<f64> {
    clamp_nonneg(reference_entropy(state)? - entropy(state)?)
}

/// Two disjoint groups of modes, each with a label used in reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub labels: (String, String),
}

impl Bipartition {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        for (k, &m) in a.iter().enumerate() {
            if a[..k].contains(&m) {
                return Err(Error::DuplicateMode(m));
            }
        }
        for (k, &m) in b.iter().enumerate() {
            if b[..k].contains(&m) {
                return Err(Error::DuplicateMode(m));
            }
            if a.contains(&m) {
                return Err(Error::OverlappingPartition(m));
            }
        }
        Ok(Bipartition { a, b, labels: ("A".to_string(), "B".to_string()) })
    }

    pub fn with_labels(mut self, a: impl Into<String>, b: impl Into<String>) -> Self {
        self.labels = (a.into(), b.into());
        self
    }
}

/// Coherence of each side of a partition and their sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LocalCoherence {
    pub a: f64,
    pub b: f64,
    pub sum: f64,
}

fn part_coherence(state: &GaussianState, modes: &[usize]) -> Result<f64> {
    if modes.is_empty() {
        return Ok(0.0);
    }
    coherence_total(&state.reduce(modes)?)
}

pub fn coherence_local(state: &GaussianState, partition: &Bipartition) -> Result<LocalCoherence> {
    let a = part_coherence(state, &partition.a)?;
    let b = part_coherence(state, &partition.b)?;
    Ok(LocalCoherence { a, b, sum: a + b })
}

/// `C_t − C_l`; not clamped.
pub fn coherence_correlated(state: &GaussianState, partition: &Bipartition) -> Result<f64> {
    Ok(coherence_total(state)? - coherence_local(state, partition)?.sum)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceReport {
    pub total: f64,
    pub local: Vec<(String, f64)>,
    pub local_sum: f64,
    pub correlated: f64,
}

/// Total, local and correlated coherence. Without a partition the whole
/// state is one part, so `local_sum = total` and `correlated = 0`.
pub fn coherence_report(state: &GaussianState, partition: Option<&Bipartition>) -> Result<CoherenceReport> {
    let raw_total = coherence_total(state)?;
    let Some(partition) = partition else {
        return Ok(CoherenceReport {
            total: raw_total,
            local: alloc::vec![("all".to_string(), raw_total)],
            local_sum: raw_total,
            correlated: 0.0,
        });
    };
    let local = coherence_local(state, partition)?;
    let correlated = raw_total - local.sum;
    Ok(CoherenceReport {
        // recomposed so that total == local_sum + correlated holds bitwise
        total: local.sum + correlated,
        local: alloc::vec![
            (partition.labels.0.clone(), local.a),
            (partition.labels.1.clone(), local.b),
        ],
        local_sum: local.sum,
        correlated,
    })
}
