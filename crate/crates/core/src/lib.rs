//! Gaussian-state simulation of an all-optical correlated noisy channel.
//!
//! The crate is `no_std` and only needs `alloc`. Modules, bottom up:
//!
//! - [`linalg`]: dense square matrices and a Jacobi eigensolver.
//! - [`gaussian`]: states, Gaussian unitaries, loss and partial trace.
//! - [`coherence`]: entropy and relative-entropy coherence in bits.
//! - [`protocol`]: the source / noisy channel / decoder pipeline and sweeps.

#![no_std]

extern crate alloc;

pub mod coherence;
pub mod error;
pub mod gaussian;
pub mod linalg;
pub mod protocol;

pub use coherence::{
    coherence_correlated, coherence_local, coherence_report, coherence_total, entropy, mean_photon,
    thermal_reference, Bipartition, CoherenceReport, LocalCoherence,
};
pub use error::{Error, Result};
pub use gaussian::{symplectic_eigenvalues, GaussianState, SymplecticForm, SymplecticTransform};
pub use linalg::Matrix;
pub use num_complex::Complex64;
pub use protocol::{
    build_scenario, residual_coefficient, stage_coherence, sweep_curve, AcncScenario, FwmParams, LossBudget,
    Source, Stage, StagedStates, SweepPoint,
};
