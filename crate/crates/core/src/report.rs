//! Closed-form vs finite-difference comparison rows and their serialization.

use std::cmp::Ordering;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::oracle::{default_grid, refine_to_tolerance};
use crate::potential::{CentrifugalMode, Family, PhysicalSystem, PotentialParams, QuantumNumbers};
use crate::spectrum::{self, hulthen_term_checks, Formula, Reading, SpecialCase};

pub const CSV_HEADER: &str = "V0,R0,a,c,l,n,E_eq32,E_eq33,E_special,E_oracle,deviation,flags";
pub const DEFAULT_ORACLE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRow {
    #[serde(rename = "V0")]
    pub v0: f64,
    #[serde(rename = "R0")]
    pub r0: f64,
    pub a: f64,
    pub c: f64,
    pub l: u32,
    pub n: u32,
    #[serde(rename = "E_eq32")]
    pub e_eq32: Option<f64>,
    #[serde(rename = "E_eq33")]
    pub e_eq33: Option<f64>,
    #[serde(rename = "E_special")]
    pub e_special: Option<f64>,
    #[serde(rename = "E_oracle")]
    pub e_oracle: Option<f64>,
    pub deviation: Option<f64>,
    pub flags: Vec<String>,
}

impl ComparisonRow {
    fn key_cmp(&self, other: &Self) -> Ordering {
        self.v0
            .total_cmp(&other.v0)
            .then(self.r0.total_cmp(&other.r0))
            .then(self.a.total_cmp(&other.a))
            .then(self.c.total_cmp(&other.c))
            .then(self.l.cmp(&other.l))
            .then(self.n.cmp(&other.n))
    }

    /// True when no energy or deviation could be produced.
    pub fn is_empty(&self) -> bool {
        [
            self.e_eq32,
            self.e_eq33,
            self.e_special,
            self.e_oracle,
            self.deviation,
        ]
        .iter()
        .all(Option::is_none)
    }
}

pub fn sort_rows(rows: &mut [ComparisonRow]) {
    rows.sort_by(ComparisonRow::key_cmp);
}

/// Which parts of a row to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowPlan {
    pub formulas: bool,
    pub oracle: bool,
}

impl RowPlan {
    pub const FULL: Self = Self {
        formulas: true,
        oracle: true,
    };
    pub const FORMULAS: Self = Self {
        formulas: true,
        oracle: false,
    };
    pub const ORACLE: Self = Self {
        formulas: false,
        oracle: true,
    };
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowSettings {
    pub system: PhysicalSystem,
    pub reading: Reading,
    pub centrifugal: CentrifugalMode,
    pub oracle_tol: f64,
    pub plan: RowPlan,
}

impl Default for RowSettings {
    fn default() -> Self {
        Self {
            system: PhysicalSystem::natural(),
            reading: Reading::A,
            centrifugal: CentrifugalMode::ExactCentrifugal,
            oracle_tol: DEFAULT_ORACLE_TOL,
            plan: RowPlan::FULL,
        }
    }
}

/// Short flag text for an error.
pub fn error_tag(err: &Error) -> String {
    match err {
        Error::NoRealLevel { .. } => "D<=0".into(),
        Error::Division(_) => "1/c-diverges".into(),
        Error::HulthenSpecialCase => "c==-1".into(),
        Error::NoSuchLevel { .. } => "no-level".into(),
        Error::NotConverged { .. } => "not-converged".into(),
        Error::NonFinitePotential { .. } => "non-finite-potential".into(),
        Error::Stagnation { .. } => "stagnation".into(),
        Error::Overflow { .. } => "overflow".into(),
        Error::Domain(_) => "domain".into(),
        Error::Grid(_) => "grid".into(),
        other => format!("{other:?}")
            .split([' ', '{', '('])
            .next()
            .unwrap_or("error")
            .to_lowercase(),
    }
}

fn capture(
    flags: &mut Vec<String>,
    prefix: &str,
    c: f64,
    value: crate::Result<f64>,
) -> Option<f64> {
    match value {
        Ok(e) => Some(e),
        Err(err) => {
            if matches!(err, Error::Division(_)) && c == 0.0 {
                flags.push(format!("{prefix}:c==0"));
            } else {
                flags.push(format!("{prefix}:{}", error_tag(&err)));
            }
            None
        }
    }
}

/// Formula whose value is compared against the oracle for a generalized member.
pub fn primary_formula(c: f64) -> Formula {
    if c.abs() >= 1.0 {
        Formula::LargeC
    } else {
        Formula::SmallC
    }
}

fn formula_fields(
    params: &PotentialParams,
    q: QuantumNumbers,
    s: &RowSettings,
    row: &mut ComparisonRow,
) {
    let c = params.c();
    row.e_eq32 = capture(
        &mut row.flags,
        "eq32",
        c,
        spectrum::energy_large_c(params, q, &s.system, s.reading),
    );
    row.e_eq33 = capture(
        &mut row.flags,
        "eq33",
        c,
        spectrum::energy_small_c(params, q, &s.system, s.reading),
    );
    row.e_special = match params.family() {
        Family::GeneralizedWs => {
            row.flags.push("special:n/a".into());
            None
        }
        Family::StandardWs => {
            if c != 1.0 {
                row.flags.push("special:c-forced=1".into());
            }
            let e = spectrum::energy_special(
                params,
                q,
                &s.system,
                SpecialCase::StandardWsEq42,
                s.reading,
            );
            capture(&mut row.flags, "special", c, e)
        }
        Family::Hulthen => {
            for check in hulthen_term_checks(params.v0(), params.alpha(), q.l, q.n, &s.system) {
                if !check.agrees {
                    row.flags.push(format!("eq40:mismatch:{}", check.term));
                }
            }
            let e =
                spectrum::energy_special(params, q, &s.system, SpecialCase::HulthenEq40, s.reading);
            capture(&mut row.flags, "special", c, e)
        }
    };
}

fn oracle_field(
    params: &PotentialParams,
    q: QuantumNumbers,
    s: &RowSettings,
    row: &mut ComparisonRow,
) {
    let grid = default_grid(params, &s.system);
    let potential = |r: f64| params.value(r).unwrap_or(f64::NAN);
    let term = s.centrifugal.with_alpha(params.alpha());
    match refine_to_tolerance(potential, q.l, q.n, &s.system, term, s.oracle_tol, &grid) {
        Ok(state) => {
            if state.node_count != q.n as usize {
                row.flags.push(format!("oracle:nodes={}", state.node_count));
            }
            row.e_oracle = Some(state.energy);
        }
        Err(err) => row.flags.push(format!("oracle:{}", error_tag(&err))),
    }
}

/// One comparison row. Numeric failures become flags; nothing aborts.
pub fn compute_row(
    params: &PotentialParams,
    q: QuantumNumbers,
    settings: &RowSettings,
) -> ComparisonRow {
    let mut row = ComparisonRow {
        v0: params.v0(),
        r0: params.r0(),
        a: params.a(),
        c: params.c(),
        l: q.l,
        n: q.n,
        e_eq32: None,
        e_eq33: None,
        e_special: None,
        e_oracle: None,
        deviation: None,
        flags: Vec::new(),
    };
    if params.thin_surface_warning() && params.family() != Family::Hulthen {
        row.flags.push("thin-surface".into());
    }
    if settings.plan.formulas {
        formula_fields(params, q, settings, &mut row);
    } else {
        row.flags
            .extend(["eq32:skipped", "eq33:skipped", "special:skipped"].map(String::from));
    }
    if settings.plan.oracle {
        oracle_field(params, q, settings, &mut row);
    } else {
        row.flags.push("oracle:skipped".into());
    }

    let (label, primary) = match params.family() {
        Family::GeneralizedWs => match primary_formula(params.c()) {
            Formula::LargeC => ("eq32", row.e_eq32),
            Formula::SmallC => ("eq33", row.e_eq33),
        },
        Family::StandardWs | Family::Hulthen => ("special", row.e_special),
    };
    if params.family() == Family::GeneralizedWs && settings.plan.formulas {
        row.flags
            .push(format!("regime:{}", primary_formula(params.c()).regime()));
    }
    match (primary, row.e_oracle) {
        (Some(e), Some(o)) => row.deviation = Some(e - o),
        _ => row.flags.push(format!("deviation:n/a({label})")),
    }
    row
}

/// Rows for every parameter set and quantum-number pair, computed in parallel
/// and returned in the deterministic order.
pub fn sweep(
    cases: &[(PotentialParams, QuantumNumbers)],
    settings: &RowSettings,
) -> Vec<ComparisonRow> {
    let mut rows: Vec<ComparisonRow> = cases
        .par_iter()
        .map(|(p, q)| compute_row(p, *q, settings))
        .collect();
    sort_rows(&mut rows);
    rows
}

fn csv_float(out: &mut String, v: Option<f64>) {
    if let Some(x) = v {
        let _ = write!(out, "{x:.16e}");
    }
}

/// CSV with the fixed header; 17 significant digits, empty fields for absent values.
pub fn to_csv(rows: &[ComparisonRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        for x in [r.v0, r.r0, r.a, r.c] {
            csv_float(&mut out, Some(x));
            out.push(',');
        }
        let _ = write!(out, "{},{},", r.l, r.n);
        for x in [r.e_eq32, r.e_eq33, r.e_special, r.e_oracle, r.deviation] {
            csv_float(&mut out, x);
            out.push(',');
        }
        out.push_str(&r.flags.join(";"));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub version: String,
    pub reading: String,
    pub centrifugal_mode: String,
}

impl ReportMeta {
    pub fn new(reading: Reading, centrifugal: CentrifugalMode) -> Self {
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            reading: reading.name().to_string(),
            centrifugal_mode: centrifugal.name().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub meta: ReportMeta,
    pub rows: Vec<ComparisonRow>,
}

pub fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("rows hold finite numbers only");
    s.push('\n');
    s
}
