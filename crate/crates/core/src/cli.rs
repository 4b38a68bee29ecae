//! Matrix files and the `symdist` command line.
//!
//! A matrix file has a header line `K N` followed by `K` rows of `N` bits,
//! the `a` half then the `b` half. Whitespace inside rows and blank lines
//! are ignored.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::distance::{
    brute_force_distance, compute, random_stabilizer, Algorithm, ComputeOptions, DistanceReport,
    StabilizerInstance, BRUTE_FORCE_LIMIT,
};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the matrix file format. Lines and columns in errors are 1-based.
pub fn parse_matrix(text: &str) -> Result<BitMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "empty input, expected header `K N`"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_error(hline, 1, "header must be two integers `K N`"));
    }
    let num = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_error(hline, 1, format!("bad {what} {s:?} in header")))
    };
    let (k_rows, n_cols) = (num(fields[0], "row count")?, num(fields[1], "column count")?);
    if n_cols % 2 != 0 {
        return Err(parse_error(hline, 1, format!("column count {n_cols} is odd")));
    }
    if k_rows > n_cols {
        return Err(parse_error(
            hline,
            1,
            format!("row count {k_rows} exceeds column count {n_cols}"),
        ));
    }

    let mut rows = Vec::with_capacity(k_rows);
    for (lno, line) in lines {
        if rows.len() == k_rows {
            return Err(parse_error(lno, 1, format!("more than {k_rows} rows")));
        }
        let mut bits = Vec::with_capacity(n_cols);
        for (ci, ch) in line.chars().enumerate() {
            match ch {
                '0' | '1' => {
                    if bits.len() == n_cols {
                        return Err(parse_error(lno, ci + 1, format!("row longer than {n_cols} bits")));
                    }
                    bits.push(ch == '1');
                }
                c if c.is_whitespace() => {}
                c => return Err(parse_error(lno, ci + 1, format!("unexpected character {c:?}"))),
            }
        }
        if bits.len() != n_cols {
            return Err(parse_error(
                lno,
                line.len() + 1,
                format!("row has {} bits, expected {n_cols}", bits.len()),
            ));
        }
        rows.push(BitVector::from_bits(bits));
    }
    if rows.len() != k_rows {
        let last = text.lines().count().max(1);
        return Err(parse_error(
            last,
            1,
            format!("found {} rows, header says {k_rows}", rows.len()),
        ));
    }
    BitMatrix::from_rows(n_cols, rows)
}

pub fn parse_matrix_file(path: &Path) -> Result<StabilizerInstance> {
    let text = std::fs::read_to_string(path)?;
    StabilizerInstance::new(parse_matrix(&text)?)
}

/// Writes `m` in the matrix file format.
#[must_use]
pub fn format_matrix(m: &BitMatrix) -> String {
    let mut s = format!("{} {}\n", m.n_rows(), m.n_cols());
    for r in m.rows() {
        let _ = writeln!(s, "{r}");
    }
    s
}

#[derive(Parser, Debug)]
#[command(name = "symdist", version, about = "Symplectic minimum distance of stabilizer codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute the minimum distance of the code in FILE.
    Compute(ComputeArgs),
    /// Run every algorithm (and the brute-force oracle when feasible) and compare.
    Verify(VerifyArgs),
    /// Time the algorithms on random instances.
    Bench(BenchArgs),
    /// Write a random normalizer matrix.
    Generate(GenerateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgChoice {
    Auto,
    #[value(name = "1gamma")]
    OneGamma,
    #[value(name = "2gamma")]
    TwoGamma,
    Isometry,
    Brute,
}

impl AlgChoice {
    fn algorithm(self) -> Option<Algorithm> {
        match self {
            AlgChoice::Auto => None,
            AlgChoice::OneGamma => Some(Algorithm::Saved1Gamma),
            AlgChoice::TwoGamma => Some(Algorithm::Saved2Gamma),
            AlgChoice::Isometry => Some(Algorithm::SavedIsometry),
            AlgChoice::Brute => Some(Algorithm::BruteForce),
        }
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub alg: AlgChoice,
    #[arg(long, default_value_t = default_threads())]
    pub threads: usize,
    /// Also print the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Record and print the (g, L, U) trace.
    #[arg(long)]
    pub trace: bool,
    #[arg(long)]
    pub no_validate: bool,
    /// Minimize over every nonzero codeword, including those in the stabilizer.
    #[arg(long)]
    pub no_dual_filter: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[arg(long, default_value_t = default_threads())]
    pub threads: usize,
    #[arg(long)]
    pub no_dual_filter: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = default_threads())]
    pub threads: usize,
    /// Include the brute-force oracle.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file; stdout when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

/// Runs a parsed command line, writing normal output to `out`.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> Result<()> {
    match cli.command {
        Command::Compute(a) => run_compute(&a, out),
        Command::Verify(a) => run_verify(&a, out),
        Command::Bench(a) => run_bench(&a, out),
        Command::Generate(a) => run_generate(&a, out),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Internal(format!("json: {e}")))
}

fn run_compute<W: Write>(a: &ComputeArgs, out: &mut W) -> Result<()> {
    let inst = parse_matrix_file(&a.file)?;
    let opts = ComputeOptions {
        workers: a.threads,
        validate: !a.no_validate,
        dual_filter: !a.no_dual_filter,
        trace: a.trace,
    };
    let report = compute(&inst, a.alg.algorithm(), &opts)?;
    writeln!(out, "distance {}", report.distance)?;
    if a.trace && !a.json {
        for t in report.bounds_trace.iter().flatten() {
            writeln!(out, "g={} L={} U={}", t.g, t.lower, t.upper)?;
        }
    }
    if a.json {
        writeln!(out, "{}", to_json(&report)?)?;
    }
    Ok(())
}

fn run_verify<W: Write>(a: &VerifyArgs, out: &mut W) -> Result<()> {
    let inst = parse_matrix_file(&a.file)?;
    let opts = ComputeOptions {
        workers: a.threads,
        dual_filter: !a.no_dual_filter,
        ..ComputeOptions::default()
    };
    let mut reports = Vec::new();
    for alg in [Algorithm::Saved1Gamma, Algorithm::Saved2Gamma, Algorithm::SavedIsometry] {
        reports.push(compute(&inst, Some(alg), &opts)?);
    }
    if inst.matrix().n_rows() <= BRUTE_FORCE_LIMIT {
        reports.push(brute_force_distance(&inst, &opts)?);
    } else {
        writeln!(out, "brute_force skipped: {} rows exceed the limit of {BRUTE_FORCE_LIMIT}", inst.matrix().n_rows())?;
    }
    for r in &reports {
        writeln!(
            out,
            "{:<15} d={:<4} g={:<4} candidates={:<12} {:.6}s",
            r.algorithm.name(),
            r.distance,
            r.generations,
            r.candidates_enumerated,
            r.elapsed_seconds
        )?;
    }
    let d = reports[0].distance;
    if reports.iter().all(|r| r.distance == d) {
        writeln!(out, "AGREE d={d}")?;
        Ok(())
    } else {
        let all: Vec<String> = reports
            .iter()
            .map(|r| format!("{}={}", r.algorithm.name(), r.distance))
            .collect();
        writeln!(out, "DISAGREE {}", all.join(" "))?;
        Err(Error::Internal("algorithms disagree".into()))
    }
}

/// Timing summary of one algorithm over a dataset.
#[derive(Clone, Debug, serde::Serialize)]
pub struct BenchRow {
    pub algorithm: Algorithm,
    pub median_seconds: f64,
    pub mean_seconds: f64,
    pub distances: Vec<usize>,
}

fn median(sorted: &[f64]) -> f64 {
    match sorted.len() {
        0 => 0.0,
        l if l % 2 == 1 => sorted[l / 2],
        l => (sorted[l / 2 - 1] + sorted[l / 2]) / 2.0,
    }
}

/// Times each algorithm on `count` instances from consecutive seeds.
pub fn bench(args: &BenchArgs) -> Result<Vec<BenchRow>> {
    if args.count == 0 {
        return Err(Error::InvalidArgument("count must be positive".into()));
    }
    let instances = (0..args.count as u64)
        .map(|i| random_stabilizer(args.n, args.k, args.seed.wrapping_add(i)))
        .collect::<Result<Vec<_>>>()?;
    let mut algs = vec![Algorithm::Saved1Gamma, Algorithm::Saved2Gamma, Algorithm::SavedIsometry];
    if args.oracle {
        algs.push(Algorithm::BruteForce);
    }
    let opts = ComputeOptions {
        workers: args.threads,
        ..ComputeOptions::default()
    };
    let mut rows = Vec::new();
    for alg in algs {
        let reports: Vec<DistanceReport> = instances
            .iter()
            .map(|inst| compute(inst, Some(alg), &opts))
            .collect::<Result<_>>()?;
        let mut times: Vec<f64> = reports.iter().map(|r| r.elapsed_seconds).collect();
        times.sort_by(f64::total_cmp);
        rows.push(BenchRow {
            algorithm: alg,
            median_seconds: median(&times),
            mean_seconds: times.iter().sum::<f64>() / times.len() as f64,
            distances: reports.iter().map(|r| r.distance).collect(),
        });
    }
    if rows.iter().any(|r| r.distances != rows[0].distances) {
        return Err(Error::Internal("algorithms disagree on a bench instance".into()));
    }
    Ok(rows)
}

fn run_bench<W: Write>(a: &BenchArgs, out: &mut W) -> Result<()> {
    let rows = bench(a)?;
    if a.json {
        writeln!(out, "{}", to_json(&rows)?)?;
        return Ok(());
    }
    writeln!(
        out,
        "n={} k={} count={} seed={} threads={}",
        a.n, a.k, a.count, a.seed, a.threads
    )?;
    writeln!(out, "{:<15} {:>12} {:>12}", "algorithm", "median_s", "mean_s")?;
    for r in &rows {
        writeln!(
            out,
            "{:<15} {:>12.6} {:>12.6}",
            r.algorithm.name(),
            r.median_seconds,
            r.mean_seconds
        )?;
    }
    Ok(())
}

fn run_generate<W: Write>(a: &GenerateArgs, out: &mut W) -> Result<()> {
    let inst = random_stabilizer(a.n, a.k, a.seed)?;
    let text = format_matrix(inst.matrix());
    match &a.output {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}
