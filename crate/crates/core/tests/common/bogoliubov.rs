//! Heisenberg-picture oracle: each output annihilation operator is tracked as
//! `a = Σ_k (α_k b_k + β_k b_k†) + ⟨a⟩` over vacuum input operators `b_k`.
//! Second moments follow from `⟨b_k b_l†⟩ = δ_kl`, all others zero.
//!
//! Shares no code with the real phase-space engine.

#![allow(dead_code)]

use acnc_core::{AcncScenario, Source};
use num_complex::Complex64 as C;

#[derive(Clone, Debug)]
pub struct ModeOp {
    pub alpha: Vec<C>,
    pub beta: Vec<C>,
    pub mean: C,
}

#[derive(Clone, Debug)]
pub struct Network {
    pub modes: Vec<ModeOp>,
    inputs: usize,
}

impl Network {
    /// `n` modes, each its own vacuum input, displaced by `seeds`.
    pub fn new(seeds: &[C]) -> Self {
        let n = seeds.len();
        let modes = (0..n)
            .map(|k| {
                let mut alpha = vec![C::new(0.0, 0.0); n];
                alpha[k] = C::new(1.0, 0.0);
                ModeOp { alpha, beta: vec![C::new(0.0, 0.0); n], mean: seeds[k] }
            })
            .collect();
        Network { modes, inputs: n }
    }

    /// `a_i → G a_i + g e^{iφ} a_j†`, `a_j → G a_j + g e^{iφ} a_i†`
    pub fn fwm(&mut self, i: usize, j: usize, gain: f64, phi: f64) {
        let g = (gain * gain - 1.0).max(0.0).sqrt();
        let e = C::from_polar(g, phi);
        let (ai, aj) = (self.modes[i].clone(), self.modes[j].clone());
        let mix = |x: &ModeOp, y: &ModeOp| ModeOp {
            alpha: x.alpha.iter().zip(&y.beta).map(|(a, b)| gain * a + e * b.conj()).collect(),
            beta: x.beta.iter().zip(&y.alpha).map(|(b, a)| gain * b + e * a.conj()).collect(),
            mean: gain * x.mean + e * y.mean.conj(),
        };
        self.modes[i] = mix(&ai, &aj);
        self.modes[j] = mix(&aj, &ai);
    }

    /// `a_i → √T a_i + √(1−T) a_j`, `a_j → √(1−T) a_i − √T a_j`
    pub fn bs(&mut self, i: usize, j: usize, t: f64) {
        let (st, sr) = (t.sqrt(), (1.0 - t).sqrt());
        let (ai, aj) = (self.modes[i].clone(), self.modes[j].clone());
        let comb = |p: f64, x: &ModeOp, q: f64, y: &ModeOp| ModeOp {
            alpha: x.alpha.iter().zip(&y.alpha).map(|(a, b)| p * a + q * b).collect(),
            beta: x.beta.iter().zip(&y.beta).map(|(a, b)| p * a + q * b).collect(),
            mean: p * x.mean + q * y.mean,
        };
        self.modes[i] = comb(st, &ai, sr, &aj);
        self.modes[j] = comb(sr, &ai, -st, &aj);
    }

    /// `a → e^{−iφ} a`
    pub fn phase(&mut self, m: usize, phi: f64) {
        let e = C::from_polar(1.0, -phi);
        let op = &mut self.modes[m];
        op.alpha.iter_mut().for_each(|x| *x *= e);
        op.beta.iter_mut().for_each(|x| *x *= e);
        op.mean *= e;
    }

    /// `a → √η a + √(1−η) v` with a fresh vacuum input `v`.
    pub fn loss(&mut self, m: usize, l: f64) {
        for op in &mut self.modes {
            op.alpha.push(C::new(0.0, 0.0));
            op.beta.push(C::new(0.0, 0.0));
        }
        self.inputs += 1;
        let (k, r) = ((1.0 - l).sqrt(), l.sqrt());
        let op = &mut self.modes[m];
        op.alpha.iter_mut().for_each(|x| *x *= k);
        op.beta.iter_mut().for_each(|x| *x *= k);
        op.mean *= k;
        *op.alpha.last_mut().unwrap() = C::new(r, 0.0);
    }

    /// Mean vector and covariance (row-major) of the listed modes in the
    /// `X = a + a†`, `P = i(a† − a)` convention.
    pub fn moments(&self, keep: &[usize]) -> (Vec<f64>, Vec<f64>) {
        // X = c a + c̄ a† with c = 1; P with c = −i
        let coeffs = [C::new(1.0, 0.0), C::new(0.0, -1.0)];
        let quads: Vec<(usize, C)> = keep.iter().flat_map(|&m| coeffs.iter().map(move |&c| (m, c))).collect();
        let mean = quads.iter().map(|&(m, c)| 2.0 * (c * self.modes[m].mean).re).collect();
        let d = quads.len();
        let mut cov = vec![0.0; d * d];
        for (r, &(p, cu)) in quads.iter().enumerate() {
            for (s, &(q, cv)) in quads.iter().enumerate() {
                let (x, y) = (&self.modes[p], &self.modes[q]);
                let mut aa = C::new(0.0, 0.0);
                let mut ad_a = C::new(0.0, 0.0);
                let mut a_ad = C::new(0.0, 0.0);
                let mut ad_ad = C::new(0.0, 0.0);
                for k in 0..self.inputs {
                    aa += x.alpha[k] * y.beta[k];
                    ad_a += x.beta[k].conj() * y.beta[k];
                    a_ad += x.alpha[k] * y.alpha[k].conj();
                    ad_ad += x.beta[k].conj() * y.alpha[k].conj();
                }
                let qq = cu * cv * aa + cu * cv.conj() * a_ad + cu.conj() * cv * ad_a + cu.conj() * cv.conj() * ad_ad;
                cov[r * d + s] = qq.re;
            }
        }
        (mean, cov)
    }
}

/// Relative-entropy coherence of a single mode with covariance `v·I` and mean
/// `(x, p)`, by hand.
pub fn single_mode_isotropic_coherence(v: f64, x: f64, p: f64) -> f64 {
    let h = |n: f64| if n <= 0.0 { 0.0 } else { (n + 1.0) * (n + 1.0).log2() - n * n.log2() };
    let nbar = (2.0 * v + x * x + p * p) / 4.0 - 0.5;
    h(nbar) - h((v - 1.0) / 2.0)
}

/// Propagates a scenario through the operator-space oracle, mirroring the
/// channel layout (a, b?, c, d).
pub fn oracle_network(s: &AcncScenario) -> (Network, Vec<usize>) {
    let zero = C::new(0.0, 0.0);
    let (mut net, a, b, c, d) = match s.source {
        Source::Coherent { alpha } => (Network::new(&[alpha, zero, zero]), 0, None, 1, 2),
        Source::Tmss { g0, theta, seed_a, seed_b } => {
            let mut n = Network::new(&[seed_a, seed_b, zero, zero]);
            n.fwm(0, 1, g0, theta);
            (n, 0, Some(1), 2, 3)
        }
    };
    let l = s.losses;
    net.fwm(c, d, s.g1, 0.0);
    if l.la > 0.0 {
        net.loss(d, l.la);
        net.loss(c, l.la);
    }
    net.bs(a, d, s.transmissivity);
    if l.lb > 0.0 {
        net.loss(a, l.lb);
    }
    net.phase(c, s.phi);
    net.fwm(a, c, s.decoder_gain(), 0.0);
    if l.la > 0.0 {
        net.loss(a, l.la);
    }
    let keep = match b {
        Some(b) => vec![a, b],
        None => vec![a],
    };
    (net, keep)
}

