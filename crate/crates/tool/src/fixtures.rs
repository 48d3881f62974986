//! Golden outputs shipped under `fixtures/`, each paired with the command
//! line that produces it.

use std::fmt::Write;
use std::path::Path;

use anyhow::{Context, Result};
use clap::Parser;

use crate::args::Cli;
use crate::render::render;

pub const DEFAULT_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");

pub const FIXTURES: &[(&str, &[&str])] = &[
    ("hanoi_solve_1020_T_m3.txt", &["hanoi", "solve", "--from", "1020", "--coords", "T", "--m", "3"]),
    ("hanoi_classic_n4_m5.txt", &["hanoi", "classic", "--n", "4", "--m", "5"]),
    ("hanoi_classic_n4_m5.csv", &["hanoi", "classic", "--n", "4", "--m", "5", "--format", "csv"]),
    ("embed_tau_n4_m3_matrix.txt", &["embed", "tau", "--n", "4", "--m", "3", "--matrix"]),
    ("embed_tau_n4_m5_matrix.txt", &["embed", "tau", "--n", "4", "--m", "5", "--matrix"]),
    ("embed_tau_n4_m5_matrix_inverse.txt", &["embed", "tau", "--n", "4", "--m", "5", "--matrix", "--invert"]),
];

/// Live output of the command registered for a fixture.
pub fn live_output(args: &[&str]) -> Result<String> {
    let cli = Cli::try_parse_from(std::iter::once("sierpinski").chain(args.iter().copied()))?;
    let command = cli.command.context("fixture entry without a subcommand")?;
    Ok(render(&command)?.text)
}

/// Diffs every fixture in `dir`; returns the report and whether all match.
pub fn check(dir: &Path) -> Result<(String, bool)> {
    let mut report = String::new();
    let mut all = true;
    for (file, args) in FIXTURES {
        let path = dir.join(file);
        let expected = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
        let actual = live_output(args)?;
        if expected == actual {
            writeln!(report, "ok        {file}")?;
            continue;
        }
        all = false;
        writeln!(report, "MISMATCH  {file}  ({})", args.join(" "))?;
        let (e, a): (Vec<&str>, Vec<&str>) = (expected.lines().collect(), actual.lines().collect());
        for i in 0..e.len().max(a.len()) {
            let (el, al) = (e.get(i).copied(), a.get(i).copied());
            if el != al {
                writeln!(report, "  line {}: expected {:?}, got {:?}", i + 1, el.unwrap_or(""), al.unwrap_or(""))?;
            }
        }
    }
    Ok((report, all))
}
