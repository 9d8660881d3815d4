use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use acnc_cli::circuit::{execute, parse_circuit};
use acnc_cli::csvfmt::{csv_writer, format_number, write_table};
use acnc_cli::figures::{run_figure, Figure, FigureParams};
use acnc_cli::CliError;
use acnc_core::Complex64;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "acnc", version, about = "Gaussian simulation of an all-optical correlated noisy channel")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a circuit file and print one CSV row per report statement.
    Sim {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coherent input, lossless: input / noisy channel / decoded coherence.
    Fig2(FigArgs),
    /// Coherent input, decoded coherence for each loss pair.
    Fig3(FigArgs),
    /// Two-mode squeezed input: total / local / correlated per stage.
    Fig5(FigArgs),
    /// Two-mode squeezed input for each loss pair.
    Fig6(FigArgs),
}

#[derive(Args)]
struct FigArgs {
    /// Noisy-channel transmissivity.
    #[arg(long = "t", default_value_t = 0.9)]
    t: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    alpha_re: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha_im: f64,
    #[arg(long, default_value_t = 1.0)]
    g1_min: f64,
    #[arg(long, default_value_t = 10.0)]
    g1_max: f64,
    #[arg(long, default_value_t = 200)]
    steps: usize,
    /// Gain of the squeezed source.
    #[arg(long, default_value_t = 3.0)]
    g0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    theta: f64,
    /// Absorption loss on the amplifier modes; repeat together with --lb.
    #[arg(long)]
    la: Vec<f64>,
    /// Propagation loss on the noisy signal; repeat together with --la.
    #[arg(long)]
    lb: Vec<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl FigArgs {
    fn params(&self) -> Result<FigureParams, CliError> {
        if self.la.len() != self.lb.len() {
            return Err(CliError::Usage(format!(
                "--la given {} time(s) but --lb {} time(s); they pair up",
                self.la.len(),
                self.lb.len()
            )));
        }
        Ok(FigureParams {
            transmissivity: self.t,
            alpha: Complex64::new(self.alpha_re, self.alpha_im),
            g1_min: self.g1_min,
            g1_max: self.g1_max,
            steps: self.steps,
            g0: self.g0,
            theta: self.theta,
            losses: self.la.iter().copied().zip(self.lb.iter().copied()).collect(),
        })
    }
}

fn open_out(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(csv::Error::from)?)),
        None => Box::new(io::stdout().lock()),
    })
}

fn sim(file: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file).map_err(|source| CliError::Read { path: file.to_owned(), source })?;
    let program = parse_circuit(&text)?;
    let records = execute(&program)?;
    let mut w = csv_writer(open_out(out)?);
    w.write_record(["report", "line", "modes", "total", "local_sum", "correlated"])?;
    for r in &records {
        w.write_record([
            r.index.to_string(),
            r.line.to_string(),
            r.modes.clone(),
            format_number(r.report.total),
            format_number(r.report.local_sum),
            format_number(r.report.correlated),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

fn figure(fig: Figure, args: &FigArgs) -> Result<(), CliError> {
    let table = run_figure(fig, &args.params()?)?;
    write_table(&table, open_out(args.out.as_deref())?)?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sim { file, out } => sim(file, out.as_deref()),
        Command::Fig2(a) => figure(Figure::Fig2, a),
        Command::Fig3(a) => figure(Figure::Fig3, a),
        Command::Fig5(a) => figure(Figure::Fig5, a),
        Command::Fig6(a) => figure(Figure::Fig6, a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
