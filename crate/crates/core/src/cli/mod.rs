//! Batch front end: `kgh spectrum | wavefunction | validate`.
//!
//! Exit codes: 0 success, 1 validation failure, 2 invalid configuration,
//! 3 solver regime error or missing state, 4 unwritable output.

mod config;
mod output;
mod validate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

pub use config::{ConfigFile, Format, OutputKind, RunConfig};
pub use output::{format_real, render_csv, render_json, write_atomic, Cell};
pub use validate::{run_validation, Check, ValidationReport};

use crate::error::Error;
use crate::model::QuantumNumbers;
use crate::normalize::normalize;
use crate::spectrum::{enumerate_spectrum, BoundState, Branch};
use crate::wavefunc::{log_radii, sample};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_SOLVER: i32 = 3;
pub const EXIT_OUTPUT: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "kgh", version, about = "Klein-Gordon bound states in generalized Hulthen potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy levels, one row per bound state.
    Spectrum(Common),
    /// Normalized radial samples of one state.
    Wavefunction {
        #[command(flatten)]
        common: Common,
        /// Radial quantum number.
        #[arg(long)]
        n: u32,
        /// Angular momentum.
        #[arg(long, default_value_t = 0)]
        l: u32,
        /// Root of the quantization condition.
        #[arg(long, value_enum, default_value_t = BranchArg::Pos)]
        branch: BranchArg,
    },
    /// Run the invariant suite and write a JSON report.
    Validate {
        #[command(flatten)]
        common: Common,
        /// Shift every solved energy by this amount before checking.
        #[arg(long, hide = true, default_value_t = 0.0, allow_hyphen_values = true)]
        corrupt_energy: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BranchArg {
    Pos,
    Neg,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Self {
        match b {
            BranchArg::Pos => Branch::Positive,
            BranchArg::Neg => Branch::Negative,
        }
    }
}

/// Flags shared by all subcommands; each overrides the config file.
#[derive(Debug, Clone, Args)]
pub struct Common {
    /// JSON run configuration.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Particle mass M.
    #[arg(long, allow_hyphen_values = true)]
    pub mass: Option<f64>,
    /// Screening parameter α (inverse length).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Deformation q: nonzero, at most 1.
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<f64>,
    /// Vector potential depth V₀.
    #[arg(long, allow_hyphen_values = true)]
    pub v0: Option<f64>,
    /// Scalar potential depth S₀.
    #[arg(long, allow_hyphen_values = true)]
    pub s0: Option<f64>,
    /// Spatial dimension D (default 3).
    #[arg(long)]
    pub dim: Option<u32>,
    /// Largest angular momentum (default 0).
    #[arg(long)]
    pub l_max: Option<u32>,
    /// Largest radial quantum number (default 10).
    #[arg(long)]
    pub n_max: Option<u32>,
    /// Number of radial samples.
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 or unset: machine parallelism).
    #[arg(long, env = "KGH_THREADS", hide = true)]
    pub threads: Option<usize>,
}

impl Common {
    fn overrides(&self) -> ConfigFile {
        ConfigFile {
            mass: self.mass,
            alpha: self.alpha,
            q: self.q,
            v0: self.v0,
            s0: self.s0,
            dim: self.dim,
            l_max: self.l_max,
            n_max: self.n_max,
            points: self.points,
            format: self.format,
            output_dir: self.out.clone(),
            ..ConfigFile::default()
        }
    }

    pub fn resolve(&self) -> Result<RunConfig, String> {
        let base = match &self.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        RunConfig::from_file(base.overlay(self.overrides()))
    }
}

/// A failure together with its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidSpec(_) | Error::InvalidQuantumNumbers(_) => EXIT_CONFIG,
            _ => EXIT_SOLVER,
        };
        Failure::new(code, e.to_string())
    }
}

fn write_output(cfg: &RunConfig, name: &str, bytes: &[u8]) -> Result<(), Failure> {
    write_atomic(&cfg.output_dir, name, bytes)
        .map(|_| ())
        .map_err(|e| Failure::new(EXIT_OUTPUT, format!("cannot write {}: {e}", cfg.output_dir.join(name).display())))
}

fn render_err(e: String) -> Failure {
    Failure::new(EXIT_OUTPUT, format!("cannot render output: {e}"))
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    #[serde(rename = "D")]
    pub dim: u32,
    pub l: u32,
    pub k: u32,
    pub n: u32,
    pub branch: Branch,
    #[serde(rename = "E")]
    pub energy: f64,
    pub eps: f64,
    pub delta: f64,
    #[serde(rename = "C_n")]
    pub norm_constant: Option<f64>,
}

pub const SPECTRUM_HEADER: [&str; 9] = ["D", "l", "k", "n", "branch", "E", "eps", "delta", "C_n"];
pub const WAVEFUNCTION_HEADER: [&str; 4] = ["r", "z", "u_normalized", "R"];

/// Normalizes where an analytic route exists (0 < q ≤ 1).
fn with_norm(state: &BoundState, cfg: &RunConfig) -> Result<BoundState, Error> {
    if cfg.spec.q > 0.0 {
        normalize(state, &cfg.spec)
    } else {
        Ok(*state)
    }
}

/// All states of the configured (D, l ≤ l_max, n ≤ n_max), ordered by
/// (l, n, branch) regardless of scheduling.
pub fn spectrum_rows(cfg: &RunConfig) -> Result<Vec<SpectrumRow>, Error> {
    let per_l: Vec<Result<Vec<SpectrumRow>, Error>> = (0..=cfg.l_max)
        .into_par_iter()
        .map(|l| {
            let base = QuantumNumbers::new(cfg.dim, l, 0)?;
            let spectrum = enumerate_spectrum(&cfg.spec, &base, cfg.n_max)?;
            spectrum
                .states
                .iter()
                .map(|s| {
                    let s = with_norm(s, cfg)?;
                    Ok(SpectrumRow {
                        dim: cfg.dim,
                        l,
                        k: s.k,
                        n: s.n,
                        branch: s.branch,
                        energy: s.energy,
                        eps: s.eps,
                        delta: s.delta,
                        norm_constant: s.norm_constant,
                    })
                })
                .collect()
        })
        .collect();
    let mut rows = Vec::new();
    for r in per_l {
        rows.extend(r?);
    }
    Ok(rows)
}

pub fn render_spectrum(rows: &[SpectrumRow], format: Format) -> Result<Vec<u8>, String> {
    match format {
        Format::Json => render_json(rows),
        Format::Csv => {
            let cells: Vec<Vec<Cell>> = rows
                .iter()
                .map(|r| {
                    vec![
                        Cell::Int(r.dim.into()),
                        Cell::Int(r.l.into()),
                        Cell::Int(r.k.into()),
                        Cell::Int(r.n.into()),
                        Cell::Text(r.branch.as_str()),
                        Cell::Real(r.energy),
                        Cell::Real(r.eps),
                        Cell::Real(r.delta),
                        r.norm_constant.map_or(Cell::Missing, Cell::Real),
                    ]
                })
                .collect();
            render_csv(&SPECTRUM_HEADER, &cells)
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
struct WaveRow {
    r: f64,
    z: f64,
    u_normalized: f64,
    #[serde(rename = "R")]
    big_r: f64,
}

fn wavefunction_stem(qn: &QuantumNumbers, branch: Branch) -> String {
    let tag = match branch {
        Branch::Positive => "pos",
        Branch::Negative => "neg",
    };
    format!("wavefunction_D{}_l{}_n{}_{tag}", qn.dim, qn.ell, qn.n)
}

/// Normalized samples on the configured grid: log-spaced over
/// [1e−4/α, r_max] or uniform over (0, r_max].
pub fn wavefunction_bytes(cfg: &RunConfig, qn: &QuantumNumbers, branch: Branch) -> Result<Vec<u8>, Failure> {
    let level = crate::spectrum::solve_level(&cfg.spec, qn)?;
    let state = level.iter().find(|s| s.branch == branch).ok_or_else(|| {
        Failure::new(
            EXIT_SOLVER,
            format!(
                "no bound state with D = {}, l = {}, n = {} on the {} branch",
                qn.dim, qn.ell, qn.n, branch
            ),
        )
    })?;
    if !(cfg.spec.q > 0.0) {
        return Err(Failure::new(
            EXIT_SOLVER,
            format!("normalization is not available for q = {} < 0", cfg.spec.q),
        ));
    }
    let state = normalize(state, &cfg.spec)?;
    let g = cfg.grid;
    let radii = match g.spacing {
        crate::oracle::Spacing::Log => log_radii(cfg.spec.alpha, g.r_max, g.points),
        crate::oracle::Spacing::Uniform => (1..=g.points).map(|i| g.r_max * i as f64 / g.points as f64).collect(),
    };
    let samples = sample(&state, &cfg.spec, qn, &radii, true)?;
    match cfg.format {
        Format::Json => render_json(
            &samples
                .iter()
                .map(|s| WaveRow {
                    r: s.r,
                    z: s.z,
                    u_normalized: s.u,
                    big_r: s.big_r,
                })
                .collect::<Vec<_>>(),
        ),
        Format::Csv => render_csv(
            &WAVEFUNCTION_HEADER,
            &samples
                .iter()
                .map(|s| vec![Cell::Real(s.r), Cell::Real(s.z), Cell::Real(s.u), Cell::Real(s.big_r)])
                .collect::<Vec<_>>(),
        ),
    }
    .map_err(render_err)
}

fn validation_bytes(cfg: &RunConfig, corrupt: f64) -> Result<(bool, Vec<u8>), Failure> {
    let report = run_validation(cfg, corrupt)?;
    for c in report.checks.iter().filter(|c| !c.pass) {
        eprintln!("check failed: {} (measured {:?}, threshold {:e})", c.name, c.measured, c.threshold);
    }
    // the report is always JSON
    Ok((report.overall, render_json(&report).map_err(render_err)?))
}

pub fn cmd_spectrum(cfg: &RunConfig) -> Result<i32, Failure> {
    let rows = spectrum_rows(cfg)?;
    let mut files = vec![(
        output::file_name("spectrum", cfg.format),
        render_spectrum(&rows, cfg.format).map_err(render_err)?,
    )];
    if cfg.outputs.contains(&OutputKind::Wavefunctions) {
        for row in &rows {
            let qn = QuantumNumbers::new(row.dim, row.l, row.n)?;
            files.push((
                output::file_name(&wavefunction_stem(&qn, row.branch), cfg.format),
                wavefunction_bytes(cfg, &qn, row.branch)?,
            ));
        }
    }
    let mut code = EXIT_OK;
    if cfg.outputs.contains(&OutputKind::Validation) {
        let (pass, bytes) = validation_bytes(cfg, 0.0)?;
        files.push(("validation.json".into(), bytes));
        if !pass {
            code = EXIT_VALIDATION;
        }
    }
    for (name, bytes) in &files {
        write_output(cfg, name, bytes)?;
    }
    Ok(code)
}

pub fn cmd_wavefunction(cfg: &RunConfig, n: u32, l: u32, branch: Branch) -> Result<i32, Failure> {
    let qn = QuantumNumbers::new(cfg.dim, l, n)?;
    let bytes = wavefunction_bytes(cfg, &qn, branch)?;
    write_output(cfg, &output::file_name(&wavefunction_stem(&qn, branch), cfg.format), &bytes)?;
    Ok(EXIT_OK)
}

pub fn cmd_validate(cfg: &RunConfig, corrupt_energy: f64) -> Result<i32, Failure> {
    let (pass, bytes) = validation_bytes(cfg, corrupt_energy)?;
    write_output(cfg, "validation.json", &bytes)?;
    Ok(if pass { EXIT_OK } else { EXIT_VALIDATION })
}

fn thread_pool(threads: Option<usize>) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Failure::new(EXIT_CONFIG, format!("cannot start worker pool: {e}")))
}

/// Executes a parsed command line and returns the exit status.
pub fn run(cli: Cli) -> i32 {
    let common = match &cli.command {
        Command::Spectrum(c) | Command::Wavefunction { common: c, .. } | Command::Validate { common: c, .. } => c,
    };
    let result = common
        .resolve()
        .map_err(|m| Failure::new(EXIT_CONFIG, m))
        .and_then(|cfg| {
            let pool = thread_pool(common.threads)?;
            pool.install(|| match &cli.command {
                Command::Spectrum(_) => cmd_spectrum(&cfg),
                Command::Wavefunction { n, l, branch, .. } => cmd_wavefunction(&cfg, *n, *l, (*branch).into()),
                Command::Validate { corrupt_energy, .. } => cmd_validate(&cfg, *corrupt_energy),
            })
        });
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("kgh: {}", f.message);
            f.code
        }
    }
}

/// Parses `std::env::args` and runs; usage errors exit with 2.
pub fn main_entry() -> ExitCode {
    let code = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK }
        }
    };
    ExitCode::from(code as u8)
}
