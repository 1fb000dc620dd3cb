//! Argument handling and command execution for the `wsbound` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use wsbound_core::oracle::{default_grid, refine_to_tolerance};
use wsbound_core::report::{self, Report, ReportMeta, RowPlan, RowSettings, DEFAULT_ORACLE_TOL};
use wsbound_core::wavefunction::{radial_wavefunction, JacobiArgument, WavefunctionSpec};
use wsbound_core::{
    CentrifugalMode, ComparisonRow, Family, PhysicalSystem, PotentialParams, QuantumNumbers,
    RadialSamples, Reading,
};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

#[derive(Debug, Parser)]
#[command(
    name = "wsbound",
    version,
    about = "Bound states of the generalized Woods-Saxon family"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form energies per (n, l)
    Spectrum(Options),
    /// Sampled radial wavefunction of one level
    Wavefunction(Options),
    /// Closed-form energies against the finite-difference oracle
    Compare(Options),
    /// Comparison rows over a parameter grid
    Scan(Options),
    /// Finite-difference energies only
    Oracle(Options),
}

impl Command {
    pub fn kind(&self) -> CommandKind {
        match self {
            Command::Spectrum(_) => CommandKind::Spectrum,
            Command::Wavefunction(_) => CommandKind::Wavefunction,
            Command::Compare(_) => CommandKind::Compare,
            Command::Scan(_) => CommandKind::Scan,
            Command::Oracle(_) => CommandKind::Oracle,
        }
    }

    pub fn options(&self) -> &Options {
        match self {
            Command::Spectrum(o)
            | Command::Wavefunction(o)
            | Command::Compare(o)
            | Command::Scan(o)
            | Command::Oracle(o) => o,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Spectrum,
    Wavefunction,
    Compare,
    Scan,
    Oracle,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// generalized-ws, standard-ws or hulthen
    #[arg(long)]
    pub potential: Option<String>,
    #[arg(long = "V0", allow_negative_numbers = true)]
    pub v0: Option<f64>,
    #[arg(long = "R0", allow_negative_numbers = true)]
    pub r0: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// c-factor override (generalized-ws only)
    #[arg(long, allow_negative_numbers = true)]
    pub c: Option<f64>,
    /// Single angular momentum; excludes --lmax
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub lmax: Option<u32>,
    #[arg(long)]
    pub nmax: Option<u32>,
    /// Level for the wavefunction command
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long = "V0-list", value_delimiter = ',', allow_negative_numbers = true)]
    pub v0_list: Option<Vec<f64>>,
    #[arg(long = "R0-list", value_delimiter = ',', allow_negative_numbers = true)]
    pub r0_list: Option<Vec<f64>>,
    #[arg(long = "a-list", value_delimiter = ',', allow_negative_numbers = true)]
    pub a_list: Option<Vec<f64>>,
    #[arg(long = "c-list", value_delimiter = ',', allow_negative_numbers = true)]
    pub c_list: Option<Vec<f64>>,
    #[arg(long, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    /// A or B
    #[arg(long)]
    pub reading: Option<String>,
    /// exact or pekeris
    #[arg(long)]
    pub centrifugal: Option<String>,
    /// csv or json
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// key=value file; command-line flags take precedence
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long = "oracle-tol", allow_negative_numbers = true)]
    pub oracle_tol: Option<f64>,
    /// oracle or closed-form (wavefunction command)
    #[arg(long)]
    pub source: Option<String>,
    /// Energy for the closed-form wavefunction; defaults to the oracle level
    #[arg(long, allow_negative_numbers = true)]
    pub energy: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (csv, json)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WaveSource {
    Oracle,
    ClosedForm,
}

impl FromStr for WaveSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "oracle" => Ok(WaveSource::Oracle),
            "closed-form" => Ok(WaveSource::ClosedForm),
            other => Err(format!(
                "unknown wavefunction source `{other}` (oracle, closed-form)"
            )),
        }
    }
}

/// Parameter axes of a run; single-valued unless the command is `scan`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub v0: Vec<f64>,
    pub r0: Vec<f64>,
    pub a: Vec<f64>,
    pub c: Vec<Option<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub family: Family,
    pub sweep: Sweep,
    pub quantum: Vec<QuantumNumbers>,
    pub system: PhysicalSystem,
    pub reading: Reading,
    pub centrifugal: CentrifugalMode,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub oracle_tol: f64,
    pub source: WaveSource,
    pub energy: Option<f64>,
}

const CONFIG_KEYS: &[&str] = &[
    "potential",
    "V0",
    "R0",
    "a",
    "c",
    "l",
    "lmax",
    "nmax",
    "n",
    "V0-list",
    "R0-list",
    "a-list",
    "c-list",
    "hbar",
    "mass",
    "reading",
    "centrifugal",
    "format",
    "output",
    "oracle-tol",
    "source",
    "energy",
];

/// Reads a `key = value` file. Blank lines and `#` comments are skipped.
pub fn read_config(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return usage(format!("config line {}: expected key=value", i + 1));
        };
        let key = key.trim().trim_start_matches("--");
        if !CONFIG_KEYS.contains(&key) {
            return usage(format!("config line {}: unknown key `{key}`", i + 1));
        }
        map.insert(key.to_string(), value.trim().to_string());
    }
    Ok(map)
}

struct Merged<'a> {
    file: &'a BTreeMap<String, String>,
}

impl Merged<'_> {
    fn get<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError>
    where
        T::Err: std::fmt::Display,
    {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.file.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config `{key}`: {e}"))),
        }
    }

    fn list(&self, flag: Option<Vec<f64>>, key: &str) -> Result<Option<Vec<f64>>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.file.get(key) {
            None => Ok(None),
            Some(v) => v
                .split(',')
                .map(|x| x.trim().parse::<f64>())
                .collect::<Result<Vec<_>, _>>()
                .map(Some)
                .map_err(|e| CliError::Usage(format!("config `{key}`: {e}"))),
        }
    }
}

fn axis(
    single: Option<f64>,
    list: Option<Vec<f64>>,
    scan: bool,
    name: &str,
) -> Result<Option<Vec<f64>>, CliError> {
    match (single, list) {
        (Some(_), Some(_)) => usage(format!("--{name} and --{name}-list are mutually exclusive")),
        (_, Some(_)) if !scan => usage(format!("--{name}-list is only valid for scan")),
        (_, Some(v)) if v.is_empty() => usage(format!("--{name}-list is empty")),
        (_, Some(v)) => Ok(Some(v)),
        (Some(x), None) => Ok(Some(vec![x])),
        (None, None) => Ok(None),
    }
}

/// Merges flags over the config file and validates the combination.
pub fn resolve(command: &Command) -> Result<RunConfig, CliError> {
    let o = command.options();
    let kind = command.kind();
    let scan = kind == CommandKind::Scan;
    let file = match &o.config {
        Some(path) => read_config(path)?,
        None => BTreeMap::new(),
    };
    let m = Merged { file: &file };

    let family = match m.get(o.potential.clone(), "potential")? {
        Some(name) => name
            .parse::<Family>()
            .map_err(|e| CliError::Usage(e.to_string()))?,
        None => Family::GeneralizedWs,
    };
    let v0 = axis(
        m.get(o.v0, "V0")?,
        m.list(o.v0_list.clone(), "V0-list")?,
        scan,
        "V0",
    )?;
    let a = axis(
        m.get(o.a, "a")?,
        m.list(o.a_list.clone(), "a-list")?,
        scan,
        "a",
    )?;
    let r0 = axis(
        m.get(o.r0, "R0")?,
        m.list(o.r0_list.clone(), "R0-list")?,
        scan,
        "R0",
    )?;
    let c = axis(
        m.get(o.c, "c")?,
        m.list(o.c_list.clone(), "c-list")?,
        scan,
        "c",
    )?;
    let Some(v0) = v0 else {
        return usage("--V0 is required");
    };
    let Some(a) = a else {
        return usage("--a is required");
    };
    let r0 = r0.unwrap_or_else(|| vec![0.0]);
    if c.is_some() && family != Family::GeneralizedWs {
        return usage(format!(
            "--c applies to generalized-ws only, not {}",
            family.name()
        ));
    }
    let c = c.map_or_else(|| vec![None], |v| v.into_iter().map(Some).collect());

    let l = m.get(o.l, "l")?;
    let lmax = m.get(o.lmax, "lmax")?;
    let nmax = m.get(o.nmax, "nmax")?.unwrap_or(0);
    let ls: Vec<u32> = match (l, lmax) {
        (Some(_), Some(_)) => return usage("--l and --lmax are mutually exclusive"),
        (Some(l), None) => vec![l],
        (None, lmax) => (0..=lmax.unwrap_or(0)).collect(),
    };
    let quantum = if kind == CommandKind::Wavefunction {
        if ls.len() != 1 {
            return usage("wavefunction takes a single --l");
        }
        vec![QuantumNumbers::new(m.get(o.n, "n")?.unwrap_or(0), ls[0])]
    } else {
        if m.get(o.n, "n")?.is_some() {
            return usage("--n is only valid for wavefunction; use --nmax");
        }
        ls.iter()
            .flat_map(|&l| (0..=nmax).map(move |n| QuantumNumbers::new(n, l)))
            .collect()
    };

    let system = PhysicalSystem::new(
        m.get(o.hbar, "hbar")?.unwrap_or(1.0),
        m.get(o.mass, "mass")?.unwrap_or(1.0),
    )
    .map_err(|e| CliError::Usage(e.to_string()))?;
    let reading = match m.get(o.reading.clone(), "reading")? {
        Some(s) => s
            .parse::<Reading>()
            .map_err(|e| CliError::Usage(e.to_string()))?,
        None => Reading::A,
    };
    let centrifugal = match m.get(o.centrifugal.clone(), "centrifugal")? {
        Some(s) => s
            .parse::<CentrifugalMode>()
            .map_err(|e| CliError::Usage(e.to_string()))?,
        None => CentrifugalMode::ExactCentrifugal,
    };
    let format = m
        .get(o.format.clone(), "format")?
        .map_or(Ok(Format::Csv), |s| s.parse().map_err(CliError::Usage))?;
    let oracle_tol = m
        .get(o.oracle_tol, "oracle-tol")?
        .unwrap_or(DEFAULT_ORACLE_TOL);
    if !(oracle_tol > 0.0) {
        return usage("--oracle-tol must be positive");
    }
    let source = m
        .get(o.source.clone(), "source")?
        .map_or(Ok(WaveSource::Oracle), |s| {
            s.parse().map_err(CliError::Usage)
        })?;
    let energy = m.get(o.energy, "energy")?;
    if kind != CommandKind::Wavefunction && (o.source.is_some() || energy.is_some()) {
        return usage("--source and --energy are only valid for wavefunction");
    }

    let config = RunConfig {
        command: kind,
        family,
        sweep: Sweep { v0, r0, a, c },
        quantum,
        system,
        reading,
        centrifugal,
        format,
        output: m.get(o.output.clone(), "output")?,
        oracle_tol,
        source,
        energy,
    };
    config.cases()?;
    Ok(config)
}

impl RunConfig {
    /// Parameter sets in sweep order.
    pub fn parameter_sets(&self) -> Result<Vec<PotentialParams>, CliError> {
        let s = &self.sweep;
        let mut out = Vec::with_capacity(s.v0.len() * s.r0.len() * s.a.len() * s.c.len());
        for &v0 in &s.v0 {
            for &r0 in &s.r0 {
                for &a in &s.a {
                    for &c in &s.c {
                        let p = PotentialParams::new(v0, r0, a, self.family, c)
                            .map_err(|e| CliError::Usage(e.to_string()))?;
                        out.push(p);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn cases(&self) -> Result<Vec<(PotentialParams, QuantumNumbers)>, CliError> {
        let sets = self.parameter_sets()?;
        Ok(sets
            .iter()
            .flat_map(|p| self.quantum.iter().map(move |q| (*p, *q)))
            .collect())
    }

    pub fn row_settings(&self) -> RowSettings {
        let plan = match self.command {
            CommandKind::Spectrum => RowPlan::FORMULAS,
            CommandKind::Oracle => RowPlan::ORACLE,
            _ => RowPlan::FULL,
        };
        RowSettings {
            system: self.system,
            reading: self.reading,
            centrifugal: self.centrifugal,
            oracle_tol: self.oracle_tol,
            plan,
        }
    }

    pub fn meta(&self) -> ReportMeta {
        ReportMeta::new(self.reading, self.centrifugal)
    }
}

/// Serialized artifact plus the process status it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub body: String,
    pub status: u8,
    pub diagnostics: Vec<String>,
}

pub fn render_rows(rows: Vec<ComparisonRow>, config: &RunConfig) -> String {
    match config.format {
        Format::Csv => report::to_csv(&rows),
        Format::Json => report::to_json(&Report {
            meta: config.meta(),
            rows,
        }),
    }
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    if config.command == CommandKind::Wavefunction {
        return run_wavefunction(config);
    }
    let rows = report::sweep(&config.cases()?, &config.row_settings());
    let all_empty = !rows.is_empty() && rows.iter().all(ComparisonRow::is_empty);
    let diagnostics = if all_empty {
        vec!["no row produced a numeric value".to_string()]
    } else {
        Vec::new()
    };
    Ok(Outcome {
        body: render_rows(rows, config),
        status: if all_empty { EXIT_NUMERIC } else { 0 },
        diagnostics,
    })
}

#[derive(Debug, Serialize)]
struct WaveReport<'a> {
    meta: ReportMeta,
    source: WaveSource,
    #[serde(rename = "V0")]
    v0: f64,
    #[serde(rename = "R0")]
    r0: f64,
    a: f64,
    c: f64,
    n: u32,
    l: u32,
    energy: f64,
    samples: &'a RadialSamples,
}

fn wave_failure(msg: String) -> Outcome {
    Outcome {
        body: String::new(),
        status: EXIT_NUMERIC,
        diagnostics: vec![msg],
    }
}

fn run_wavefunction(config: &RunConfig) -> Result<Outcome, CliError> {
    let params = config.parameter_sets()?[0];
    let q = config.quantum[0];
    let sys = &config.system;
    let grid = default_grid(&params, sys);
    let term = config.centrifugal.with_alpha(params.alpha());
    let potential = |r: f64| params.value(r).unwrap_or(f64::NAN);

    let oracle = || refine_to_tolerance(potential, q.l, q.n, sys, term, config.oracle_tol, &grid);
    let (energy, samples) = match config.source {
        WaveSource::Oracle => match oracle() {
            Ok(state) => (state.energy, state.samples),
            Err(e) => return Ok(wave_failure(format!("oracle: {e}"))),
        },
        WaveSource::ClosedForm => {
            let energy = match config.energy {
                Some(e) => e,
                None => match oracle() {
                    Ok(state) => state.energy,
                    Err(e) => return Ok(wave_failure(format!("oracle: {e}"))),
                },
            };
            let samples = WavefunctionSpec::for_level(&params, energy, q, sys).and_then(|spec| {
                radial_wavefunction(&spec, q, &grid.nodes(), JacobiArgument::Compact)
            });
            match samples {
                Ok(s) => (energy, s),
                Err(e) => return Ok(wave_failure(format!("closed form: {e}"))),
            }
        }
    };

    let body = match config.format {
        Format::Csv => {
            let mut out = String::from("r,R,u\n");
            for (r, v) in samples.grid.iter().zip(&samples.values) {
                let _ = writeln!(out, "{r:.16e},{v:.16e},{:.16e}", r * v);
            }
            out
        }
        Format::Json => {
            let doc = WaveReport {
                meta: config.meta(),
                source: config.source,
                v0: params.v0(),
                r0: params.r0(),
                a: params.a(),
                c: params.c(),
                n: q.n,
                l: q.l,
                energy,
                samples: &samples,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("finite samples");
            s.push('\n');
            s
        }
    };
    Ok(Outcome {
        body,
        status: 0,
        diagnostics: Vec::new(),
    })
}
