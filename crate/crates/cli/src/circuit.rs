//! Line-oriented circuit description language.
//!
//! ```text
//! modes 2                 # first statement
//! coherent 0 1 0          # mode, Re α, Im α
//! tmsq 0 1 3 0.5*pi       # i, j, gain, phase
//! bs 0 1 0.9              # i, j, transmissivity
//! loss 1 0.1              # mode, loss fraction
//! phase 0 -pi             # mode, angle
//! report coherence 0 1    # total coherence of the listed modes
//! report split 0 | 1      # total / local / correlated for a bipartition
//! ```

use std::f64::consts::PI;
use std::fmt::{self, Write as _};

use acnc_core::{coherence_report, Bipartition, CoherenceReport, Complex64, GaussianState};

#[derive(Clone, Debug, PartialEq)]
pub enum Instruction {
    Coherent { mode: usize, re: f64, im: f64 },
    Tmsq { i: usize, j: usize, gain: f64, phi: f64 },
    Bs { i: usize, j: usize, t: f64 },
    Loss { mode: usize, l: f64 },
    Phase { mode: usize, phi: f64 },
    ReportCoherence(Vec<usize>),
    ReportSplit(Vec<usize>, Vec<usize>),
}

#[derive(Clone, Debug)]
pub struct CircuitProgram {
    pub modes: usize,
    pub instructions: Vec<Instruction>,
    /// 1-based source line of each instruction.
    pub lines: Vec<usize>,
}

impl PartialEq for CircuitProgram {
    fn eq(&self, other: &Self) -> bool {
        self.modes == other.modes && self.instructions == other.instructions
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub reason: String,
}

fn err<T>(line: usize, reason: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, reason: reason.into() })
}

/// Decimal number, or a multiple of `pi`: `pi`, `-pi`, `0.5*pi`, `-2*pi`.
pub fn parse_number(tok: &str) -> Option<f64> {
    let (neg, body) = match tok.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, tok),
    };
    if body.is_empty() || body.starts_with(['-', '+']) {
        return None;
    }
    let value = if body == "pi" {
        PI
    } else if let Some(factor) = body.strip_suffix("*pi") {
        if factor.starts_with(['-', '+']) {
            return None;
        }
        factor.parse::<f64>().ok()? * PI
    } else {
        body.parse::<f64>().ok()?
    };
    value.is_finite().then_some(if neg { -value } else { value })
}

struct LineParser<'a> {
    line: usize,
    keyword: &'a str,
    args: &'a [&'a str],
    modes: usize,
}

impl LineParser<'_> {
    fn arity(&self, n: usize) -> Result<(), ParseError> {
        if self.args.len() == n {
            Ok(())
        } else {
            err(self.line, format!("`{}` expects {n} argument(s), found {}", self.keyword, self.args.len()))
        }
    }

    fn mode(&self, tok: &str) -> Result<usize, ParseError> {
        let m: usize = tok
            .parse()
            .or_else(|_| err(self.line, format!("invalid mode index `{tok}`")))?;
        if m >= self.modes {
            return err(self.line, format!("mode {m} out of range (modes {})", self.modes));
        }
        Ok(m)
    }

    fn pair(&self, a: &str, b: &str) -> Result<(usize, usize), ParseError> {
        let (i, j) = (self.mode(a)?, self.mode(b)?);
        if i == j {
            return err(self.line, format!("`{}` needs two distinct modes, got {i} twice", self.keyword));
        }
        Ok((i, j))
    }

    fn number(&self, tok: &str) -> Result<f64, ParseError> {
        parse_number(tok).map_or_else(|| err(self.line, format!("invalid number `{tok}`")), Ok)
    }

    fn unit(&self, name: &str, tok: &str) -> Result<f64, ParseError> {
        let v = self.number(tok)?;
        if !(0.0..=1.0).contains(&v) {
            return err(self.line, format!("{name} {v} outside [0, 1]"));
        }
        Ok(v)
    }

    fn mode_list(&self, toks: &[&str]) -> Result<Vec<usize>, ParseError> {
        if toks.is_empty() {
            return err(self.line, "empty mode list");
        }
        let mut out = Vec::with_capacity(toks.len());
        for t in toks {
            let m = self.mode(t)?;
            if out.contains(&m) {
                return err(self.line, format!("mode {m} listed twice"));
            }
            out.push(m);
        }
        Ok(out)
    }

    fn instruction(&self) -> Result<Instruction, ParseError> {
        let a = self.args;
        Ok(match self.keyword {
            "coherent" => {
                self.arity(3)?;
                Instruction::Coherent { mode: self.mode(a[0])?, re: self.number(a[1])?, im: self.number(a[2])? }
            }
            "tmsq" => {
                self.arity(4)?;
                let (i, j) = self.pair(a[0], a[1])?;
                let gain = self.number(a[2])?;
                if gain < 1.0 {
                    return err(self.line, format!("gain {gain} below 1"));
                }
                Instruction::Tmsq { i, j, gain, phi: self.number(a[3])? }
            }
            "bs" => {
                self.arity(3)?;
                let (i, j) = self.pair(a[0], a[1])?;
                Instruction::Bs { i, j, t: self.unit("transmissivity", a[2])? }
            }
            "loss" => {
                self.arity(2)?;
                Instruction::Loss { mode: self.mode(a[0])?, l: self.unit("loss", a[1])? }
            }
            "phase" => {
                self.arity(2)?;
                Instruction::Phase { mode: self.mode(a[0])?, phi: self.number(a[1])? }
            }
            "report" => match a.first().copied() {
                Some("coherence") => Instruction::ReportCoherence(self.mode_list(&a[1..])?),
                Some("split") => {
                    let rest = &a[1..];
                    let Some(bar) = rest.iter().position(|t| *t == "|") else {
                        return err(self.line, "`report split` needs a `|` between the two mode lists");
                    };
                    let left = self.mode_list(&rest[..bar])?;
                    let right = self.mode_list(&rest[bar + 1..])?;
                    if let Some(m) = right.iter().find(|m| left.contains(m)) {
                        return err(self.line, format!("mode {m} appears on both sides of the split"));
                    }
                    Instruction::ReportSplit(left, right)
                }
                Some(other) => return err(self.line, format!("unknown report kind `{other}`")),
                None => return err(self.line, "`report` expects `coherence` or `split`"),
            },
            other => return err(self.line, format!("unknown keyword `{other}`")),
        })
    }
}

pub fn parse_circuit(text: &str) -> Result<CircuitProgram, ParseError> {
    let mut modes = None;
    let mut instructions = Vec::new();
    let mut lines = Vec::new();
    let mut last_line = 0;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let body = raw.split('#').next().unwrap_or("").replace('|', " | ");
        let toks: Vec<&str> = body.split_whitespace().collect();
        let Some((&keyword, args)) = toks.split_first() else {
            continue;
        };
        match (keyword, modes) {
            ("modes", None) => {
                if args.len() != 1 {
                    return err(line, format!("`modes` expects 1 argument(s), found {}", args.len()));
                }
                match args[0].parse::<usize>() {
                    Ok(n) if n > 0 => modes = Some(n),
                    _ => return err(line, format!("invalid mode count `{}`", args[0])),
                }
            }
            ("modes", Some(_)) => return err(line, "duplicate `modes` declaration"),
            (_, None) => return err(line, "expected `modes N` before any instruction"),
            (_, Some(n)) => {
                let lp = LineParser { line, keyword, args, modes: n };
                instructions.push(lp.instruction()?);
                lines.push(line);
            }
        }
    }
    let Some(modes) = modes else {
        return err(last_line.max(1), "missing `modes N` declaration");
    };
    if instructions.is_empty() {
        return err(last_line.max(1), "program has no instructions");
    }
    Ok(CircuitProgram { modes, instructions, lines })
}

fn join(modes: &[usize]) -> String {
    modes.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::Coherent { mode, re, im } => write!(f, "coherent {mode} {re} {im}"),
            Instruction::Tmsq { i, j, gain, phi } => write!(f, "tmsq {i} {j} {gain} {phi}"),
            Instruction::Bs { i, j, t } => write!(f, "bs {i} {j} {t}"),
            Instruction::Loss { mode, l } => write!(f, "loss {mode} {l}"),
            Instruction::Phase { mode, phi } => write!(f, "phase {mode} {phi}"),
            Instruction::ReportCoherence(m) => write!(f, "report coherence {}", join(m)),
            Instruction::ReportSplit(a, b) => write!(f, "report split {} | {}", join(a), join(b)),
        }
    }
}

/// Canonical text: one statement per line, numbers in shortest round-trip
/// form, no comments.
pub fn render(program: &CircuitProgram) -> String {
    let mut out = format!("modes {}\n", program.modes);
    for ins in &program.instructions {
        let _ = writeln!(out, "{ins}");
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReportRecord {
    /// 0-based instruction index.
    pub index: usize,
    pub line: usize,
    /// `0 1` for a coherence report, `0|1` for a split.
    pub modes: String,
    pub report: CoherenceReport,
}

#[derive(Debug, thiserror::Error)]
#[error("instruction {index} (line {line}): {source}")]
pub struct ExecError {
    pub index: usize,
    pub line: usize,
    #[source]
    pub source: acnc_core::Error,
}

/// Runs the program from the vacuum and collects one record per report.
pub fn execute(program: &CircuitProgram) -> Result<Vec<ReportRecord>, ExecError> {
    let mut state = GaussianState::vacuum(program.modes).map_err(|source| ExecError { index: 0, line: 1, source })?;
    let mut records = Vec::new();
    for (index, ins) in program.instructions.iter().enumerate() {
        let line = program.lines.get(index).copied().unwrap_or(index + 2);
        let wrap = |source| ExecError { index, line, source };
        match ins {
            Instruction::Coherent { mode, re, im } => state = state.displace(*mode, Complex64::new(*re, *im)).map_err(wrap)?,
            Instruction::Tmsq { i, j, gain, phi } => state = state.two_mode_squeeze(*i, *j, *gain, *phi).map_err(wrap)?,
            Instruction::Bs { i, j, t } => state = state.beam_split(*i, *j, *t).map_err(wrap)?,
            Instruction::Loss { mode, l } => state = state.loss(*mode, *l).map_err(wrap)?,
            Instruction::Phase { mode, phi } => state = state.phase_shift(*mode, *phi).map_err(wrap)?,
            Instruction::ReportCoherence(modes) => {
                let reduced = state.reduce(modes).map_err(wrap)?;
                let report = coherence_report(&reduced, None).map_err(wrap)?;
                records.push(ReportRecord { index, line, modes: join(modes), report });
            }
            Instruction::ReportSplit(a, b) => {
                let keep: Vec<usize> = a.iter().chain(b).copied().collect();
                let reduced = state.reduce(&keep).map_err(wrap)?;
                let part = Bipartition::new((0..a.len()).collect(), (a.len()..keep.len()).collect())
                    .map_err(wrap)?
                    .with_labels(join(a), join(b));
                let report = coherence_report(&reduced, Some(&part)).map_err(wrap)?;
                records.push(ReportRecord { index, line, modes: format!("{}|{}", join(a), join(b)), report });
            }
        }
    }
    Ok(records)
}
