//! Multimode Gaussian states in the `X = a + a†` convention (vacuum
//! variance 1), and the Gaussian maps the channel is built from.
//!
//! Phase-space ordering is `(X₁, P₁, …, X_N, P_N)`. Every operation is pure:
//! it borrows a state and returns a new one.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{mat_vec, Matrix};

/// Tolerance on `max|V − Vᵀ|` for a valid covariance matrix.
pub const SYMMETRY_TOL: f64 = 1e-12;
/// Tolerance on the smallest eigenvalue of `V + iΩ`.
pub const UNCERTAINTY_TOL: f64 = 1e-9;
/// Symplectic eigenvalues within this distance below 1 are clamped to 1.
pub const SYMPLECTIC_CLAMP_TOL: f64 = 1e-6;

/// The symplectic form `Ω = ⊕ [[0, 1], [−1, 0]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    pub n_modes: usize,
}

impl SymplecticForm {
    pub fn new(n_modes: usize) -> Self {
        SymplecticForm { n_modes }
    }

    pub fn matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(2 * self.n_modes);
        for k in 0..self.n_modes {
            m[(2 * k, 2 * k + 1)] = 1.0;
            m[(2 * k + 1, 2 * k)] = -1.0;
        }
        m
    }
}

/// A linear phase-space map `x ↦ S x + d` representing a Gaussian unitary.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticTransform {
    pub matrix: Matrix,
    pub displacement: Vec<f64>,
}

impl SymplecticTransform {
    pub fn identity(n_modes: usize) -> Self {
        Self::linear(Matrix::identity(2 * n_modes))
    }

    fn linear(matrix: Matrix) -> Self {
        let d = matrix.dim();
        SymplecticTransform { matrix, displacement: alloc::vec![0.0; d] }
    }

    pub fn n_modes(&self) -> usize {
        self.matrix.dim() / 2
    }

    /// Two-mode squeezer `a_i → G a_i + g e^{iφ} a_j†`, `a_j → G a_j + g e^{iφ} a_i†`
    /// with `g = √(G² − 1)`.
    pub fn two_mode_squeezer(n_modes: usize, i: usize, j: usize, gain: f64, phase: f64) -> Result<Self> {
        check_pair(n_modes, i, j)?;
        check_gain("gain", gain)?;
        let g = amplitude_gain(gain);
        let (c, s) = (libm::cos(phase), libm::sin(phase));
        let mut m = Matrix::identity(2 * n_modes);
        for (a, b) in [(i, j), (j, i)] {
            let (xa, pa, xb, pb) = (2 * a, 2 * a + 1, 2 * b, 2 * b + 1);
            m[(xa, xa)] = gain;
            m[(pa, pa)] = gain;
            m[(xa, xb)] = g * c;
            m[(xa, pb)] = g * s;
            m[(pa, xb)] = g * s;
            m[(pa, pb)] = -g * c;
        }
        Ok(Self::linear(m))
    }

    /// Beam splitter `a_i → √T a_i + √(1−T) a_j`, `a_j → √(1−T) a_i − √T a_j`.
    pub fn beam_splitter(n_modes: usize, i: usize, j: usize, transmissivity: f64) -> Result<Self> {
        check_pair(n_modes, i, j)?;
        check_unit("transmissivity", transmissivity)?;
        let t = libm::sqrt(transmissivity);
        let r = libm::sqrt(1.0 - transmissivity);
        let mut m = Matrix::identity(2 * n_modes);
        for q in 0..2 {
            let (a, b) = (2 * i + q, 2 * j + q);
            m[(a, a)] = t;
            m[(a, b)] = r;
            m[(b, a)] = r;
            m[(b, b)] = -t;
        }
        Ok(Self::linear(m))
    }

    /// Phase rotation `a → e^{−iφ} a`, i.e. the block `[[cos φ, sin φ], [−sin φ, cos φ]]`.
    pub fn phase_shifter(n_modes: usize, mode: usize, phi: f64) -> Result<Self> {
        check_mode(n_modes, mode)?;
        let (c, s) = (libm::cos(phi), libm::sin(phi));
        let mut m = Matrix::identity(2 * n_modes);
        let (x, p) = (2 * mode, 2 * mode + 1);
        m[(x, x)] = c;
        m[(x, p)] = s;
        m[(p, x)] = -s;
        m[(p, p)] = c;
        Ok(Self::linear(m))
    }

    /// `max|S Ω Sᵀ − Ω|`
    pub fn symplectic_defect(&self) -> f64 {
        let omega = SymplecticForm::new(self.n_modes()).matrix();
        omega.congruence(&self.matrix).max_abs_diff(&omega)
    }
}

/// `g = √(G² − 1)` for an intensity-gain parameter `G ≥ 1`.
pub fn amplitude_gain(gain: f64) -> f64 {
    libm::sqrt((gain * gain - 1.0).max(0.0))
}

/// Gain from an interaction strength times duration, `G = cosh(ξτ)`.
pub fn gain_from_interaction(xi_tau: f64) -> f64 {
    libm::cosh(xi_tau)
}

fn check_mode(n_modes: usize, mode: usize) -> Result<()> {
    if mode < n_modes {
        Ok(())
    } else {
        Err(Error::ModeOutOfRange { mode, n_modes })
    }
}

fn check_pair(n_modes: usize, i: usize, j: usize) -> Result<()> {
    check_mode(n_modes, i)?;
    check_mode(n_modes, j)?;
    if i == j {
        return Err(Error::SameMode(i));
    }
    Ok(())
}

pub(crate) fn check_unit(name: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name, value, expected: "[0, 1]" })
    }
}

pub(crate) fn check_gain(name: &'static str, value: f64) -> Result<()> {
    if value >= 1.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name, value, expected: "finite and >= 1" })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaussianState {
    n_modes: usize,
    mean: Vec<f64>,
    cov: Matrix,
}

impl GaussianState {
    pub fn vacuum(n_modes: usize) -> Result<Self> {
        if n_modes == 0 {
            return Err(Error::InvalidModeCount(0));
        }
        Ok(GaussianState {
            n_modes,
            mean: alloc::vec![0.0; 2 * n_modes],
            cov: Matrix::identity(2 * n_modes),
        })
    }

    /// Single-mode coherent state `|α⟩`.
    pub fn coherent(alpha: Complex64) -> Self {
        let mut s = Self::vacuum(1).expect("one mode");
        s.mean[0] = 2.0 * alpha.re;
        s.mean[1] = 2.0 * alpha.im;
        s
    }

    /// Product thermal state with the given mean photon numbers.
    pub fn thermal(occupations: &[f64]) -> Result<Self> {
        if occupations.is_empty() {
            return Err(Error::InvalidModeCount(0));
        }
        let mut diag = Vec::with_capacity(2 * occupations.len());
        for &n in occupations {
            if !(n >= 0.0 && n.is_finite()) {
                return Err(Error::InvalidParameter { name: "occupation", value: n, expected: "finite and >= 0" });
            }
            diag.extend([2.0 * n + 1.0; 2]);
        }
        Ok(GaussianState {
            n_modes: occupations.len(),
            mean: alloc::vec![0.0; diag.len()],
            cov: Matrix::diagonal(&diag),
        })
    }

    /// Validating constructor: checks dimensions, symmetry and the
    /// uncertainty relation `V + iΩ ≥ 0`.
    pub fn from_parts(mean: Vec<f64>, cov: Matrix) -> Result<Self> {
        if mean.is_empty() || !mean.len().is_multiple_of(2) {
            return Err(Error::InvalidModeCount(mean.len() / 2));
        }
        if cov.dim() != mean.len() {
            return Err(Error::DimensionMismatch { expected: mean.len(), found: cov.dim() });
        }
        let state = GaussianState { n_modes: mean.len() / 2, mean, cov };
        state.validate()?;
        Ok(state)
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix {
        &self.cov
    }

    /// Checks symmetry and the uncertainty relation.
    pub fn validate(&self) -> Result<()> {
        let asym = self.cov.asymmetry();
        if asym > SYMMETRY_TOL {
            return Err(Error::NotSymmetric(asym));
        }
        let min = self.uncertainty_min_eigenvalue();
        if min < -UNCERTAINTY_TOL {
            return Err(Error::Unphysical(min));
        }
        Ok(())
    }

    /// Smallest eigenvalue of the Hermitian matrix `V + iΩ`, computed from
    /// its real symmetric embedding `[[V, −Ω], [Ω, V]]`.
    pub fn uncertainty_min_eigenvalue(&self) -> f64 {
        let d = 2 * self.n_modes;
        let omega = SymplecticForm::new(self.n_modes).matrix();
        let embed = Matrix::from_fn(2 * d, |r, c| match (r < d, c < d) {
            (true, true) => self.cov[(r, c)],
            (false, false) => self.cov[(r - d, c - d)],
            (true, false) => -omega[(r, c - d)],
            (false, true) => omega[(r - d, c)],
        });
        embed.symmetric_eigenvalues()[0]
    }

    pub fn apply(&self, s: &SymplecticTransform) -> Result<Self> {
        if s.matrix.dim() != self.mean.len() {
            return Err(Error::DimensionMismatch { expected: self.mean.len(), found: s.matrix.dim() });
        }
        let mut mean = mat_vec(&s.matrix, &self.mean);
        for (m, d) in mean.iter_mut().zip(&s.displacement) {
            *m += d;
        }
        Ok(GaussianState { n_modes: self.n_modes, mean, cov: self.cov.symmetric_congruence(&s.matrix) })
    }

    /// Displacement by a complex amplitude: `⟨X⟩ += 2 Re α`, `⟨P⟩ += 2 Im α`.
    pub fn displace(&self, mode: usize, alpha: Complex64) -> Result<Self> {
        check_mode(self.n_modes, mode)?;
        let mut out = self.clone();
        out.mean[2 * mode] += 2.0 * alpha.re;
        out.mean[2 * mode + 1] += 2.0 * alpha.im;
        Ok(out)
    }

    pub fn two_mode_squeeze(&self, i: usize, j: usize, gain: f64, phase: f64) -> Result<Self> {
        self.apply(&SymplecticTransform::two_mode_squeezer(self.n_modes, i, j, gain, phase)?)
    }

    pub fn beam_split(&self, i: usize, j: usize, transmissivity: f64) -> Result<Self> {
        self.apply(&SymplecticTransform::beam_splitter(self.n_modes, i, j, transmissivity)?)
    }

    pub fn phase_shift(&self, mode: usize, phi: f64) -> Result<Self> {
        self.apply(&SymplecticTransform::phase_shifter(self.n_modes, mode, phi)?)
    }

    /// Pure-loss channel with loss fraction `L` (transmissivity `1 − L`):
    /// the mode's block becomes `(1−L)V + L·I`, its cross terms and mean
    /// scale by `√(1−L)`.
    pub fn loss(&self, mode: usize, loss: f64) -> Result<Self> {
        check_mode(self.n_modes, mode)?;
        check_unit("loss", loss)?;
        let eta = 1.0 - loss;
        let k = libm::sqrt(eta);
        let dim = 2 * self.n_modes;
        let in_mode = |r: usize| r / 2 == mode;
        let mut out = self.clone();
        for r in 0..dim {
            for c in 0..dim {
                let v = self.cov[(r, c)];
                out.cov[(r, c)] = match (in_mode(r), in_mode(c)) {
                    (true, true) => eta * v + if r == c { loss } else { 0.0 },
                    (true, false) | (false, true) => k * v,
                    (false, false) => v,
                };
            }
        }
        out.mean[2 * mode] *= k;
        out.mean[2 * mode + 1] *= k;
        Ok(out)
    }

    /// Partial trace keeping `keep`, in that order.
    pub fn reduce(&self, keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::InvalidModeCount(0));
        }
        for (k, &m) in keep.iter().enumerate() {
            check_mode(self.n_modes, m)?;
            if keep[..k].contains(&m) {
                return Err(Error::DuplicateMode(m));
            }
        }
        let idx: Vec<usize> = keep.iter().flat_map(|&m| [2 * m, 2 * m + 1]).collect();
        Ok(GaussianState {
            n_modes: keep.len(),
            mean: idx.iter().map(|&i| self.mean[i]).collect(),
            cov: self.cov.select(&idx),
        })
    }

    /// Tensor product `self ⊗ other`, with `other`'s modes appended.
    pub fn tensor(&self, other: &GaussianState) -> Self {
        let (d1, d2) = (2 * self.n_modes, 2 * other.n_modes);
        let cov = Matrix::from_fn(d1 + d2, |r, c| match (r < d1, c < d1) {
            (true, true) => self.cov[(r, c)],
            (false, false) => other.cov[(r - d1, c - d1)],
            _ => 0.0,
        });
        let mut mean = self.mean.clone();
        mean.extend_from_slice(&other.mean);
        GaussianState { n_modes: self.n_modes + other.n_modes, mean, cov }
    }

    pub fn symplectic_eigenvalues(&self) -> Result<Vec<f64>> {
        symplectic_eigenvalues(&self.cov)
    }
}

/// Symplectic spectrum of a covariance matrix, descending.
///
/// The values are the positive square roots of the eigenvalues of
/// `−(ΩV)²`. That matrix is similar to the symmetric `A Aᵀ` with
/// `A = V^{1/2} Ω V^{1/2}`, which is what gets diagonalised; each value
/// appears twice and adjacent pairs are averaged.
pub fn symplectic_eigenvalues(cov: &Matrix) -> Result<Vec<f64>> {
    let dim = cov.dim();
    if dim == 0 || !dim.is_multiple_of(2) {
        return Err(Error::InvalidModeCount(dim / 2));
    }
    let asym = cov.asymmetry();
    if asym > SYMMETRY_TOL {
        return Err(Error::NotSymmetric(asym));
    }
    let (vals, q) = cov.symmetric_eigen();
    if let Some(&bad) = vals.iter().find(|&&v| v <= 0.0) {
        return Err(Error::Unphysical(bad));
    }
    let roots: Vec<f64> = vals.iter().map(|&v| libm::sqrt(v)).collect();
    let sqrt_v = Matrix::diagonal(&roots).symmetric_congruence(&q);
    let omega = SymplecticForm::new(dim / 2).matrix();
    let a = &(&sqrt_v * &omega) * &sqrt_v;
    let aat = &a * &a.transpose();

    let mut sq = aat.symmetric_eigenvalues();
    sq.reverse();
    let mut nus = Vec::with_capacity(dim / 2);
    for pair in sq.chunks(2) {
        let nu = libm::sqrt(0.5 * (pair[0] + pair[1]).max(0.0));
        if nu < 1.0 - SYMPLECTIC_CLAMP_TOL {
            return Err(Error::SymplecticEigenvalueBelowOne(nu));
        }
        nus.push(nu.max(1.0));
    }
    Ok(nus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn vacuum_is_identity_cov() {
        let v = GaussianState::vacuum(2).unwrap();
        assert_eq!(v.mean(), &[0.0; 4]);
        assert_eq!(v.cov(), &Matrix::identity(4));
        assert_eq!(GaussianState::vacuum(1).unwrap().mean(), &[0.0, 0.0]);
        assert_eq!(GaussianState::vacuum(3).unwrap().symplectic_eigenvalues().unwrap(), vec![1.0; 3]);
        assert_eq!(GaussianState::vacuum(0), Err(Error::InvalidModeCount(0)));
    }

    #[test]
    fn displacement_convention() {
        let v = GaussianState::vacuum(1).unwrap();
        assert_eq!(v.displace(0, Complex64::new(1.0, 0.0)).unwrap().mean(), &[2.0, 0.0]);
        assert_eq!(v.displace(0, Complex64::new(0.0, 1.0)).unwrap().mean(), &[0.0, 2.0]);
        assert_eq!(v.displace(0, Complex64::new(0.0, 0.0)).unwrap(), v);
        assert!(matches!(v.displace(1, Complex64::new(1.0, 0.0)), Err(Error::ModeOutOfRange { .. })));
    }

    #[test]
    fn squeezer_unit_gain_is_identity() {
        let s = GaussianState::coherent(Complex64::new(0.3, -0.7)).tensor(&GaussianState::thermal(&[0.4]).unwrap());
        let out = s.two_mode_squeeze(0, 1, 1.0, 0.8).unwrap();
        assert!(out.cov().max_abs_diff(s.cov()) < 1e-15);
        assert_eq!(out.mean(), s.mean());
    }

    #[test]
    fn squeezed_vacuum_variance_and_purity() {
        let g = libm::sqrt(2.0);
        let s = GaussianState::vacuum(2).unwrap().two_mode_squeeze(0, 1, g, 0.0).unwrap();
        assert!(close(s.cov()[(0, 0)], 2.0 * g * g - 1.0, 1e-12));
        assert!(close(s.cov()[(0, 0)], 3.0, 1e-12));
        for gain in [1.0, 1.5, 3.0, 5.0] {
            let st = GaussianState::vacuum(2).unwrap().two_mode_squeeze(0, 1, gain, 0.4).unwrap();
            for nu in st.symplectic_eigenvalues().unwrap() {
                assert!(close(nu, 1.0, 1e-8), "gain {gain}: nu {nu}");
            }
        }
    }

    #[test]
    fn squeezer_rejects_bad_arguments() {
        let v = GaussianState::vacuum(2).unwrap();
        assert!(matches!(v.two_mode_squeeze(0, 1, 0.5, 0.0), Err(Error::InvalidParameter { .. })));
        assert_eq!(v.two_mode_squeeze(1, 1, 2.0, 0.0), Err(Error::SameMode(1)));
    }

    #[test]
    fn beam_splitter_scales_amplitude() {
        let s = GaussianState::coherent(Complex64::new(1.0, 0.0)).tensor(&GaussianState::vacuum(1).unwrap());
        let out = s.beam_split(0, 1, 0.9).unwrap();
        assert!(close(out.mean()[0], 2.0 * libm::sqrt(0.9), 1e-15));
        assert!(close(out.mean()[0], 1.897367, 1e-6));
        assert_eq!(s.beam_split(0, 1, 1.0).unwrap(), s);
        assert!(matches!(s.beam_split(0, 1, 1.1), Err(Error::InvalidParameter { .. })));
        assert!(matches!(s.beam_split(0, 1, -0.1), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn phase_shift_by_pi_flips_sign() {
        let s = GaussianState::coherent(Complex64::new(1.0, 0.0));
        let out = s.phase_shift(0, core::f64::consts::PI).unwrap();
        assert!(close(out.mean()[0], -2.0, 1e-15));
        assert!(close(out.mean()[1], 0.0, 1e-15));
        assert_eq!(s.phase_shift(0, 0.0).unwrap(), s);
    }

    #[test]
    fn loss_limits() {
        let s = GaussianState::vacuum(2)
            .unwrap()
            .two_mode_squeeze(0, 1, 2.0, 0.0)
            .unwrap()
            .displace(0, Complex64::new(0.5, 0.2))
            .unwrap();
        assert_eq!(s.loss(0, 0.0).unwrap(), s);
        let dead = s.loss(0, 1.0).unwrap();
        let m0 = dead.reduce(&[0]).unwrap();
        assert_eq!(m0, GaussianState::vacuum(1).unwrap());
        assert_eq!(dead.cov()[(0, 2)], 0.0);
        assert!(matches!(s.loss(0, 1.5), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn loss_matches_ancilla_construction() {
        let s = GaussianState::vacuum(2)
            .unwrap()
            .two_mode_squeeze(0, 1, 2.5, 0.3)
            .unwrap()
            .displace(1, Complex64::new(-0.4, 1.1))
            .unwrap();
        for l in [0.0, 0.13, 0.5, 0.97, 1.0] {
            let direct = s.loss(1, l).unwrap();
            let via = s
                .tensor(&GaussianState::vacuum(1).unwrap())
                .beam_split(1, 2, 1.0 - l)
                .unwrap()
                .reduce(&[0, 1])
                .unwrap();
            assert!(direct.cov().max_abs_diff(via.cov()) <= 1e-12);
            for (a, b) in direct.mean().iter().zip(via.mean()) {
                assert!(close(*a, *b, 1e-12));
            }
        }
    }

    #[test]
    fn reduce_cases() {
        let v3 = GaussianState::vacuum(3).unwrap();
        assert_eq!(v3.reduce(&[0, 2]).unwrap(), GaussianState::vacuum(2).unwrap());
        assert_eq!(v3.reduce(&[0, 1, 2]).unwrap(), v3);
        let g1: f64 = 3.0;
        let tmsv = GaussianState::vacuum(2).unwrap().two_mode_squeeze(0, 1, g1, 0.0).unwrap();
        let m = tmsv.reduce(&[0]).unwrap();
        let expect = Matrix::identity(2).scale(2.0 * g1 * g1 - 1.0);
        assert!(m.cov().max_abs_diff(&expect) < 1e-12);
        assert_eq!(v3.reduce(&[1, 1]), Err(Error::DuplicateMode(1)));
        assert!(matches!(v3.reduce(&[3]), Err(Error::ModeOutOfRange { .. })));
    }

    #[test]
    fn thermal_symplectic_spectrum() {
        let t = GaussianState::thermal(&[0.0, 1.0, 2.5]).unwrap();
        let nus = t.symplectic_eigenvalues().unwrap();
        assert!(close(nus[0], 6.0, 1e-12));
        assert!(close(nus[1], 3.0, 1e-12));
        assert!(close(nus[2], 1.0, 1e-12));
    }

    #[test]
    fn tmsv_purity_from_closed_form() {
        // closed-form covariance of the squeezed vacuum: a = 2G²−1, c = 2Gg
        let gain: f64 = 3.0;
        let g = (gain * gain - 1.0).sqrt();
        let a = 2.0 * gain * gain - 1.0;
        let c = 2.0 * gain * g;
        let cov = Matrix::from_row_major(vec![
            a, 0.0, c, 0.0, //
            0.0, a, 0.0, -c, //
            c, 0.0, a, 0.0, //
            0.0, -c, 0.0, a,
        ])
        .unwrap();
        // det = (a² − c²)² = 1 for a pure state
        assert!(close(a * a - c * c, 1.0, 1e-12));
        let nus = symplectic_eigenvalues(&cov).unwrap();
        assert!(close(nus[0], 1.0, 1e-8) && close(nus[1], 1.0, 1e-8));
        let engine = GaussianState::vacuum(2).unwrap().two_mode_squeeze(0, 1, gain, 0.0).unwrap();
        assert!(engine.cov().max_abs_diff(&cov) < 1e-12);
    }

    #[test]
    fn unphysical_covariance_rejected() {
        let cov = Matrix::identity(2).scale(0.5);
        assert!(matches!(symplectic_eigenvalues(&cov), Err(Error::SymplecticEigenvalueBelowOne(_))));
        assert!(matches!(GaussianState::from_parts(vec![0.0, 0.0], cov), Err(Error::Unphysical(_))));
        let nearly = Matrix::identity(2).scale(1.0 - 1e-8);
        assert_eq!(symplectic_eigenvalues(&nearly).unwrap(), vec![1.0]);
        let asym = Matrix::from_row_major(vec![1.0, 0.1, 0.0, 1.0]).unwrap();
        assert!(matches!(symplectic_eigenvalues(&asym), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn transforms_are_symplectic() {
        let ts = [
            SymplecticTransform::two_mode_squeezer(3, 0, 2, 4.2, 1.3).unwrap(),
            SymplecticTransform::beam_splitter(3, 1, 0, 0.37).unwrap(),
            SymplecticTransform::phase_shifter(3, 2, -2.2).unwrap(),
        ];
        for t in &ts {
            assert!(t.symplectic_defect() <= 1e-12);
        }
    }

    #[test]
    fn symplectic_form_squares_to_minus_identity() {
        let o = SymplecticForm::new(3).matrix();
        assert!((&o * &o).max_abs_diff(&Matrix::identity(6).scale(-1.0)) == 0.0);
        assert_eq!(o.transpose(), o.scale(-1.0));
    }

    #[test]
    fn interaction_gain() {
        assert_eq!(gain_from_interaction(0.0), 1.0);
        assert!(close(gain_from_interaction(1.0), 1.5430806348152437, 1e-15));
    }
}
