//! G₁ sweeps behind the four figure commands.

use acnc_core::protocol::{uniform_grid, DEFAULT_LOSS_PAIRS};
use acnc_core::{sweep_curve, AcncScenario, Complex64, LossBudget, Source, Stage, SweepPoint};

use crate::csvfmt::Table;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    /// Coherent source, lossless: input / noisy / decoded.
    Fig2,
    /// Coherent source, decoded coherence per loss pair.
    Fig3,
    /// Squeezed source, lossless: total / local / correlated per stage.
    Fig5,
    /// Squeezed source, per loss pair.
    Fig6,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FigureParams {
    pub transmissivity: f64,
    /// Coherent amplitude, or the seed on both squeezer inputs.
    pub alpha: Complex64,
    pub g1_min: f64,
    pub g1_max: f64,
    pub steps: usize,
    pub g0: f64,
    pub theta: f64,
    /// `(L_A, L_B)` pairs; empty selects the figure's default.
    pub losses: Vec<(f64, f64)>,
}

impl Default for FigureParams {
    fn default() -> Self {
        FigureParams {
            transmissivity: 0.9,
            alpha: Complex64::new(1.0, 0.0),
            g1_min: 1.0,
            g1_max: 10.0,
            steps: 200,
            g0: 3.0,
            theta: 0.0,
            losses: Vec::new(),
        }
    }
}

impl FigureParams {
    fn template(&self, squeezed: bool) -> AcncScenario {
        let source = if squeezed {
            Source::Tmss { g0: self.g0, theta: self.theta, seed_a: self.alpha, seed_b: self.alpha }
        } else {
            Source::Coherent { alpha: self.alpha }
        };
        AcncScenario::new(source).with_transmissivity(self.transmissivity)
    }

    /// Loss pairs for the per-loss figures: the given ones, or the four
    /// default pairs.
    fn loss_pairs(&self) -> Vec<(f64, f64)> {
        if self.losses.is_empty() {
            DEFAULT_LOSS_PAIRS.to_vec()
        } else {
            self.losses.clone()
        }
    }

    /// Single budget for the lossless figures: none, or exactly one pair.
    fn single_budget(&self) -> acnc_core::Result<LossBudget> {
        match self.losses.as_slice() {
            [] => Ok(LossBudget::lossless()),
            [(la, lb)] => LossBudget::new(*la, *lb),
            _ => Err(acnc_core::Error::InvalidParameter {
                name: "loss pairs",
                value: self.losses.len() as f64,
                expected: "at most one pair for this figure",
            }),
        }
    }
}

fn loss_tag(la: f64, lb: f64) -> String {
    format!("la{la}_lb{lb}")
}

fn triplet(prefix: &str) -> [String; 3] {
    [format!("{prefix}_total"), format!("{prefix}_local"), format!("{prefix}_correlated")]
}

fn push_triplet(row: &mut Vec<f64>, p: &SweepPoint, stage: Stage) {
    let r = p.report(stage).expect("stage evaluated");
    row.extend([r.total, r.local_sum, r.correlated]);
}

pub fn run_figure(figure: Figure, params: &FigureParams) -> acnc_core::Result<Table> {
    let grid = uniform_grid(params.g1_min, params.g1_max, params.steps)?;
    match figure {
        Figure::Fig2 => {
            let tpl = params.template(false).with_losses(params.single_budget()?);
            let pts = sweep_curve(&tpl, &grid, &Stage::ALL)?;
            let mut t = Table::new(["g1", "c_input", "c_noise", "c_acnc"].map(String::from).to_vec());
            for p in pts {
                let total = |s| p.report(s).expect("stage evaluated").total;
                t.rows.push(vec![p.g1, total(Stage::Input), total(Stage::Noise), total(Stage::Acnc)]);
            }
            Ok(t)
        }
        Figure::Fig3 => {
            let pairs = params.loss_pairs();
            let mut header = vec!["g1".to_string(), "c_input".to_string()];
            let mut columns = Vec::new();
            let mut input = Vec::new();
            for &(la, lb) in &pairs {
                header.push(format!("c_acnc_{}", loss_tag(la, lb)));
                let tpl = params.template(false).with_losses(LossBudget::new(la, lb)?);
                let pts = sweep_curve(&tpl, &grid, &[Stage::Input, Stage::Acnc])?;
                input = pts.iter().map(|p| p.report(Stage::Input).expect("stage").total).collect();
                columns.push(pts.iter().map(|p| p.report(Stage::Acnc).expect("stage").total).collect::<Vec<_>>());
            }
            let mut t = Table::new(header);
            for (k, &g1) in grid.iter().enumerate() {
                let mut row = vec![g1, input[k]];
                row.extend(columns.iter().map(|c| c[k]));
                t.rows.push(row);
            }
            Ok(t)
        }
        Figure::Fig5 => {
            let tpl = params.template(true).with_losses(params.single_budget()?);
            let pts = sweep_curve(&tpl, &grid, &Stage::ALL)?;
            let mut header = vec!["g1".to_string()];
            for s in Stage::ALL {
                header.extend(triplet(s.name()));
            }
            let mut t = Table::new(header);
            for p in &pts {
                let mut row = vec![p.g1];
                for s in Stage::ALL {
                    push_triplet(&mut row, p, s);
                }
                t.rows.push(row);
            }
            Ok(t)
        }
        Figure::Fig6 => {
            let pairs = params.loss_pairs();
            let mut header = vec!["g1".to_string()];
            header.extend(triplet("input"));
            let mut sweeps = Vec::new();
            for &(la, lb) in &pairs {
                let tag = loss_tag(la, lb);
                header.extend(triplet(&format!("noise_{tag}")));
                header.extend(triplet(&format!("acnc_{tag}")));
                let tpl = params.template(true).with_losses(LossBudget::new(la, lb)?);
                sweeps.push(sweep_curve(&tpl, &grid, &Stage::ALL)?);
            }
            let mut t = Table::new(header);
            for k in 0..grid.len() {
                let mut row = vec![grid[k]];
                push_triplet(&mut row, &sweeps[0][k], Stage::Input);
                for s in &sweeps {
                    push_triplet(&mut row, &s[k], Stage::Noise);
                    push_triplet(&mut row, &s[k], Stage::Acnc);
                }
                t.rows.push(row);
            }
            Ok(t)
        }
    }
}
