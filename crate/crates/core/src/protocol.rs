//! End-to-end channel scenarios: the correlated-noise source, the
//! beam-splitter noisy channel, the decoding amplifier and the loss budget.
//!
//! Mode layout is fixed as `(a, b?, c, d)`: `a` carries the signal, `b` the
//! partner arm of a two-mode squeezed source (absent for a coherent input),
//! and `c`, `d` the correlated-noise pair.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::f64::consts::PI;
use num_complex::Complex64;

use crate::coherence::{coherence_report, Bipartition, CoherenceReport};
use crate::error::{Error, Result};
use crate::gaussian::{amplitude_gain, check_gain, check_unit, gain_from_interaction, GaussianState};

/// Gain and phase of one four-wave-mixing stage.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FwmParams {
    pub gain: f64,
    pub phase: f64,
}

impl FwmParams {
    pub fn new(gain: f64, phase: f64) -> Result<Self> {
        check_gain("gain", gain)?;
        Ok(FwmParams { gain, phase })
    }

    /// From the interaction strength times interaction time, `G = cosh(ξτ)`.
    pub fn from_interaction(xi_tau: f64, phase: f64) -> Result<Self> {
        Self::new(gain_from_interaction(xi_tau), phase)
    }

    pub fn amplitude_gain(&self) -> f64 {
        amplitude_gain(self.gain)
    }
}

/// Loss fractions: `la` on each of `d₁`, `c₁` and `a₃`, `lb` on `a₂`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LossBudget {
    pub la: f64,
    pub lb: f64,
}

impl LossBudget {
    pub fn new(la: f64, lb: f64) -> Result<Self> {
        check_unit("L_A", la)?;
        check_unit("L_B", lb)?;
        Ok(LossBudget { la, lb })
    }

    pub fn lossless() -> Self {
        LossBudget::default()
    }

    pub fn is_lossless(&self) -> bool {
        self.la == 0.0 && self.lb == 0.0
    }
}

/// Loss pairs `(L_A, L_B)` covering the realistic absorption and path-loss
/// ranges.
pub const DEFAULT_LOSS_PAIRS: [(f64, f64); 4] = [(0.1, 0.05), (0.1, 0.1), (0.2, 0.05), (0.2, 0.1)];

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Source {
    Coherent { alpha: Complex64 },
    /// Two-mode squeezed state from a phase-sensitive amplifier seeded by
    /// coherent states on both inputs.
    Tmss {
        g0: f64,
        theta: f64,
        seed_a: Complex64,
        seed_b: Complex64,
    },
}

impl Source {
    pub fn has_partner(&self) -> bool {
        matches!(self, Source::Tmss { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AcncScenario {
    pub source: Source,
    pub g1: f64,
    /// Decoder gain; `None` selects the noise-cancelling value `1/√T`.
    pub g2: Option<f64>,
    pub transmissivity: f64,
    pub phi: f64,
    pub losses: LossBudget,
}

impl AcncScenario {
    /// Defaults: `T = 0.9`, `G₁ = 1`, `G₂ = 1/√T`, `φ = π`, lossless.
    pub fn new(source: Source) -> Self {
        AcncScenario {
            source,
            g1: 1.0,
            g2: None,
            transmissivity: 0.9,
            phi: PI,
            losses: LossBudget::lossless(),
        }
    }

    pub fn coherent(alpha: Complex64) -> Self {
        Self::new(Source::Coherent { alpha })
    }

    /// Squeezed source with gain `g0`, `θ = 0` and unit seeds.
    pub fn tmss(g0: f64) -> Self {
        let one = Complex64::new(1.0, 0.0);
        Self::new(Source::Tmss { g0, theta: 0.0, seed_a: one, seed_b: one })
    }

    pub fn with_g1(mut self, g1: f64) -> Self {
        self.g1 = g1;
        self
    }

    pub fn with_g2(mut self, g2: f64) -> Self {
        self.g2 = Some(g2);
        self
    }

    pub fn with_transmissivity(mut self, t: f64) -> Self {
        self.transmissivity = t;
        self
    }

    pub fn with_phi(mut self, phi: f64) -> Self {
        self.phi = phi;
        self
    }

    pub fn with_losses(mut self, losses: LossBudget) -> Self {
        self.losses = losses;
        self
    }

    pub fn decoder_gain(&self) -> f64 {
        self.g2.unwrap_or_else(|| 1.0 / libm::sqrt(self.transmissivity))
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.transmissivity > 0.0 && self.transmissivity <= 1.0) {
            return Err(Error::InvalidParameter {
                name: "T",
                value: self.transmissivity,
                expected: "(0, 1]",
            });
        }
        check_gain("G1", self.g1)?;
        check_gain("G2", self.decoder_gain())?;
        if !self.phi.is_finite() {
            return Err(Error::InvalidParameter { name: "phi", value: self.phi, expected: "finite" });
        }
        LossBudget::new(self.losses.la, self.losses.lb)?;
        match self.source {
            Source::Coherent { alpha } => check_amplitude(alpha),
            Source::Tmss { g0, theta, seed_a, seed_b } => {
                check_gain("G0", g0)?;
                if !theta.is_finite() {
                    return Err(Error::InvalidParameter { name: "theta", value: theta, expected: "finite" });
                }
                check_amplitude(seed_a)?;
                check_amplitude(seed_b)
            }
        }
    }
}

fn check_amplitude(alpha: Complex64) -> Result<()> {
    if alpha.re.is_finite() && alpha.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParameter { name: "alpha", value: alpha.re + alpha.im, expected: "finite" })
    }
}

/// Label → mode index over the fixed ordering `(a, b?, c, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeRegistry {
    labels: Vec<&'static str>,
}

impl ModeRegistry {
    fn for_source(source: &Source) -> Self {
        let labels = if source.has_partner() {
            alloc::vec!["a", "b", "c", "d"]
        } else {
            alloc::vec!["a", "c", "d"]
        };
        ModeRegistry { labels }
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|&l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn labels(&self) -> &[&'static str] {
        &self.labels
    }

    pub fn n_modes(&self) -> usize {
        self.labels.len()
    }
}

/// Where along the channel a state is sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stage {
    Input,
    Noise,
    Acnc,
}

impl Stage {
    pub const ALL: [Stage; 3] = [Stage::Input, Stage::Noise, Stage::Acnc];

    pub fn name(&self) -> &'static str {
        match self {
            Stage::Input => "input",
            Stage::Noise => "noise",
            Stage::Acnc => "acnc",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StagedStates {
    pub registry: ModeRegistry,
    pub input_state: GaussianState,
    pub after_noise: GaussianState,
    pub after_acnc: GaussianState,
    has_partner: bool,
}

impl StagedStates {
    pub fn state(&self, stage: Stage) -> &GaussianState {
        match stage {
            Stage::Input => &self.input_state,
            Stage::Noise => &self.after_noise,
            Stage::Acnc => &self.after_acnc,
        }
    }

    /// Signal-mode (and partner-mode) marginal at a stage.
    pub fn subject_state(&self, stage: Stage) -> Result<GaussianState> {
        let labels: &[&str] = if self.has_partner { &["a", "b"] } else { &["a"] };
        let idx = labels.iter().map(|l| self.registry.index(l)).collect::<Result<Vec<_>>>()?;
        self.state(stage).reduce(&idx)
    }
}

/// Runs the source, the noisy channel and the decoder.
///
/// Noisy channel: `FWM₁(c, d; G₁, 0)`, `L_A` on `c` and `d`, `BS(a, d; T)`,
/// `L_B` on `a`. Decoder: phase `φ` on `c`, `FWM₂(a, c; G₂, 0)`, `L_A` on `a`.
pub fn build_scenario(s: &AcncScenario) -> Result<StagedStates> {
    s.validate()?;
    let registry = ModeRegistry::for_source(&s.source);
    let a = registry.index("a")?;
    let c = registry.index("c")?;
    let d = registry.index("d")?;

    let vac = GaussianState::vacuum(registry.n_modes())?;
    let input_state = match s.source {
        Source::Coherent { alpha } => vac.displace(a, alpha)?,
        Source::Tmss { g0, theta, seed_a, seed_b } => {
            let b = registry.index("b")?;
            vac.displace(a, seed_a)?
                .displace(b, seed_b)?
                .two_mode_squeeze(a, b, g0, theta)?
        }
    };

    let losses = s.losses;
    let mut noisy = input_state.two_mode_squeeze(c, d, s.g1, 0.0)?;
    if losses.la > 0.0 {
        noisy = noisy.loss(d, losses.la)?.loss(c, losses.la)?;
    }
    noisy = noisy.beam_split(a, d, s.transmissivity)?;
    if losses.lb > 0.0 {
        noisy = noisy.loss(a, losses.lb)?;
    }

    let mut decoded = noisy
        .phase_shift(c, s.phi)?
        .two_mode_squeeze(a, c, s.decoder_gain(), 0.0)?;
    if losses.la > 0.0 {
        decoded = decoded.loss(a, losses.la)?;
    }

    Ok(StagedStates {
        registry,
        input_state,
        after_noise: noisy,
        after_acnc: decoded,
        has_partner: s.source.has_partner(),
    })
}

/// Amplitude of the uncancelled noise at the decoder output under the
/// matched condition, `g₂(G₁ − g₁)` with `g₂ = √(1/T − 1)`.
pub fn residual_coefficient(g1: f64, transmissivity: f64) -> Result<f64> {
    check_gain("G1", g1)?;
    if !(transmissivity > 0.0 && transmissivity <= 1.0) {
        return Err(Error::InvalidParameter { name: "T", value: transmissivity, expected: "(0, 1]" });
    }
    let g2 = libm::sqrt(1.0 / transmissivity - 1.0);
    // G − √(G²−1) = 1/(G + √(G²−1)) avoids cancellation at large gain
    Ok(g2 / (g1 + amplitude_gain(g1)))
}

/// Coherence of the marginal on `subject` at one stage, optionally split into
/// two groups of labels.
pub fn stage_coherence(
    st: &StagedStates,
    stage: Stage,
    subject: &[&str],
    partition: Option<(&[&str], &[&str])>,
) -> Result<CoherenceReport> {
    let idx = subject.iter().map(|l| st.registry.index(l)).collect::<Result<Vec<_>>>()?;
    let reduced = st.state(stage).reduce(&idx)?;
    let Some((pa, pb)) = partition else {
        return coherence_report(&reduced, None);
    };
    let local_index = |l: &&str| -> Result<usize> {
        subject.iter().position(|s| s == l).ok_or_else(|| Error::UnknownLabel(l.to_string()))
    };
    let a = pa.iter().map(local_index).collect::<Result<Vec<_>>>()?;
    let b = pb.iter().map(local_index).collect::<Result<Vec<_>>>()?;
    let part = Bipartition::new(a, b)?.with_labels(join(pa), join(pb));
    coherence_report(&reduced, Some(&part))
}

fn join(labels: &[&str]) -> String {
    let mut s = String::new();
    for (k, l) in labels.iter().enumerate() {
        if k > 0 {
            s.push('+');
        }
        s.push_str(l);
    }
    s
}

/// The report the figures use: `a` alone for a coherent source, `{a}|{b}`
/// for a squeezed source.
pub fn default_stage_report(st: &StagedStates, stage: Stage) -> Result<CoherenceReport> {
    if st.has_partner {
        stage_coherence(st, stage, &["a", "b"], Some((&["a"], &["b"])))
    } else {
        stage_coherence(st, stage, &["a"], None)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepPoint {
    pub g1: f64,
    pub reports: Vec<(Stage, CoherenceReport)>,
}

impl SweepPoint {
    pub fn report(&self, stage: Stage) -> Option<&CoherenceReport> {
        self.reports.iter().find(|(s, _)| *s == stage).map(|(_, r)| r)
    }
}

/// `steps` evenly spaced values on `[min, max]`, endpoints included.
pub fn uniform_grid(min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    if steps == 0 {
        return Err(Error::InvalidGrid("no points"));
    }
    if !(min.is_finite() && max.is_finite()) || max < min {
        return Err(Error::InvalidGrid("bounds must be finite with min <= max"));
    }
    if steps == 1 {
        return Ok(alloc::vec![min]);
    }
    if max == min {
        return Err(Error::InvalidGrid("several points on a zero-width interval"));
    }
    let h = (max - min) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|k| if k + 1 == steps { max } else { min + h * k as f64 })
        .collect())
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid("no points"));
    }
    if grid.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(core::cmp::Ordering::Less)) {
        return Err(Error::InvalidGrid("values must be strictly ascending"));
    }
    Ok(())
}

/// Evaluates `template` at each `G₁` of `grid`.
pub fn sweep_point(template: &AcncScenario, g1: f64, stages: &[Stage]) -> Result<SweepPoint> {
    let st = build_scenario(&template.with_g1(g1))?;
    let reports = stages
        .iter()
        .map(|&stage| default_stage_report(&st, stage).map(|r| (stage, r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepPoint { g1, reports })
}

pub fn sweep_curve(template: &AcncScenario, grid: &[f64], stages: &[Stage]) -> Result<Vec<SweepPoint>> {
    check_grid(grid)?;
    grid.iter().map(|&g1| sweep_point(template, g1, stages)).collect()
}
