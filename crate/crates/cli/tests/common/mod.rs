#![allow(dead_code)]

use acnc_cli::circuit::{CircuitProgram, Instruction};
use rand::seq::SliceRandom;
use rand::Rng;
use std::path::PathBuf;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("corpus")
}

/// Expected error line for each malformed corpus file.
pub const MALFORMED: [(&str, usize); 10] = [
    ("bad_01_out_of_range.circ", 2),
    ("bad_02_unknown_keyword.circ", 2),
    ("bad_03_arity.circ", 2),
    ("bad_04_missing_modes.circ", 1),
    ("bad_05_gain_below_one.circ", 3),
    ("bad_06_transmissivity.circ", 2),
    ("bad_07_bad_number.circ", 2),
    ("bad_08_overlapping_split.circ", 2),
    ("bad_09_duplicate_modes.circ", 2),
    ("bad_10_same_mode.circ", 4),
];

pub fn valid_files() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap().to_str().unwrap().starts_with("valid_"))
        .collect();
    v.sort();
    v
}

fn distinct_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let i = rng.gen_range(0..n);
    (i, (i + rng.gen_range(1..n)) % n)
}

/// A valid program over 2–5 modes with 1–12 instructions.
pub fn random_program(rng: &mut impl Rng) -> CircuitProgram {
    let modes = rng.gen_range(2..=5);
    let len = rng.gen_range(1..=12);
    let instructions: Vec<Instruction> = (0..len)
        .map(|_| match rng.gen_range(0..7) {
            0 => Instruction::Coherent { mode: rng.gen_range(0..modes), re: rng.gen_range(-3.0..3.0), im: rng.gen_range(-3.0..3.0) },
            1 => {
                let (i, j) = distinct_pair(rng, modes);
                Instruction::Tmsq { i, j, gain: rng.gen_range(1.0..4.0), phi: rng.gen_range(-7.0..7.0) }
            }
            2 => {
                let (i, j) = distinct_pair(rng, modes);
                Instruction::Bs { i, j, t: rng.gen_range(0.0..=1.0) }
            }
            3 => Instruction::Loss { mode: rng.gen_range(0..modes), l: rng.gen_range(0.0..=1.0) },
            4 => Instruction::Phase { mode: rng.gen_range(0..modes), phi: rng.gen_range(-7.0..7.0) },
            5 => {
                let mut all: Vec<usize> = (0..modes).collect();
                all.shuffle(rng);
                let k = rng.gen_range(1..=modes);
                Instruction::ReportCoherence(all[..k].to_vec())
            }
            _ => {
                let mut all: Vec<usize> = (0..modes).collect();
                all.shuffle(rng);
                let split = rng.gen_range(1..modes);
                let end = rng.gen_range(split + 1..=modes);
                Instruction::ReportSplit(all[..split].to_vec(), all[split..end].to_vec())
            }
        })
        .collect();
    let lines = (2..2 + instructions.len()).collect();
    CircuitProgram { modes, instructions, lines }
}
