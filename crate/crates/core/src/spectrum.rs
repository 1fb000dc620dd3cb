//! Closed-form spectra of the generalized Woods-Saxon family.
//!
//! The large-c (`eq32`) and small-c (`eq33`) formulas and their Hulthen
//! (`eq40`) and standard Woods-Saxon (`eq42`) specializations are evaluated
//! term by term, under the readings listed in `docs/readings.md`. A
//! [`Reading`] selects between the ambiguous variants. Agreement with the
//! finite-difference solver is reported by [`crate::report`], not assumed.
//!
//! The special cases substitute `c = +-1` into the general formulas; the
//! standalone special forms are kept as [`eq40_printed`] and [`eq42_printed`]
//! for term-by-term cross-checks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{PhysicalSystem, PotentialParams, QuantumNumbers};

/// Selects among the readings of the garbled spots in the printed formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Reading {
    /// `2n/sqrt(D)` in the large-c bracket; small-c bracket squared.
    #[default]
    A,
    /// `2/sqrt(D)` in the large-c bracket; small-c bracket left unsquared.
    B,
}

impl Reading {
    pub fn name(self) -> &'static str {
        match self {
            Reading::A => "A",
            Reading::B => "B",
        }
    }
}

impl std::str::FromStr for Reading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Reading::A),
            "B" | "b" => Ok(Reading::B),
            other => Err(Error::Domain(format!("unknown reading '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpecialCase {
    /// `c = -1` through the small-c formula.
    HulthenEq40,
    /// `c = 1` through the large-c formula.
    StandardWsEq42,
}

/// The dimensionless bundle feeding the NU polynomials. `delta0` keeps energy units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DimensionlessSet {
    pub eps2: f64,
    pub beta2: f64,
    pub gamma2: f64,
    pub xi1sq: f64,
    pub xi2sq: f64,
    pub xi3sq: f64,
    pub xi4sq: f64,
    pub delta0: f64,
}

/// Coefficients of `sigma_bar = -a s^2 + b s + d` and the derived `b1, b2, b3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoeffSet {
    pub a: f64,
    pub b: f64,
    pub d: f64,
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
}

/// `2 hbar^2 l(l+1) / (m alpha^2)`, kept as printed.
pub fn delta0(l: u32, alpha: f64, system: &PhysicalSystem) -> f64 {
    let ll = f64::from(l) * f64::from(l + 1);
    2.0 * system.hbar2_over_mass() * ll / (alpha * alpha)
}

pub fn dimensionless_set(
    params: &PotentialParams,
    e: f64,
    l: u32,
    system: &PhysicalSystem,
) -> Result<DimensionlessSet> {
    let c = params.c();
    let one_c = 1.0 + c;
    if one_c == 0.0 {
        return Err(Error::HulthenSpecialCase);
    }
    let alpha = params.alpha();
    let v0 = params.v0();
    let m = system.mass();
    // m / (hbar^2 alpha^2)
    let g = m / (system.hbar() * system.hbar() * alpha * alpha);
    let d0 = delta0(l, alpha, system);
    Ok(DimensionlessSet {
        eps2: -0.5 * g * e,
        beta2: 0.5 * g * v0 / one_c,
        gamma2: 0.5 * g * v0 / (one_c * one_c),
        xi1sq: 0.5 * g * d0,
        xi2sq: 0.5 * g * c * c * d0,
        xi3sq: g * c * d0,
        xi4sq: 0.5 * g,
        delta0: d0,
    })
}

/// The `b2`, `b3` entries use `d` in place of the symbol that collides with the c-factor.
pub fn coeff_set(dset: &DimensionlessSet) -> CoeffSet {
    let a = dset.eps2 + dset.gamma2 + dset.xi1sq + dset.xi4sq;
    let b = dset.beta2 + dset.xi3sq;
    let d = dset.xi2sq;
    CoeffSet {
        a,
        b,
        d,
        b1: -4.0 * a + 1.0,
        b2: 2.0 * d - 4.0 * b,
        b3: d * d - 4.0 * d,
    }
}

/// Which printed formula a value came from, with its stated validity regime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Formula {
    LargeC,
    SmallC,
}

impl Formula {
    pub fn regime(self) -> &'static str {
        match self {
            Formula::LargeC => "c>>1",
            Formula::SmallC => "c<<1",
        }
    }
}

/// Shared scalars of the transcriptions.
#[derive(Debug, Clone, Copy)]
struct Scales {
    /// hbar^2 alpha^2 / m
    kinetic: f64,
    /// m / (hbar^2 alpha^2)
    inverse: f64,
    hbar_alpha: f64,
    mass: f64,
}

impl Scales {
    fn new(alpha: f64, system: &PhysicalSystem) -> Self {
        let hbar_alpha = system.hbar() * alpha;
        let kinetic = hbar_alpha * hbar_alpha / system.mass();
        Self {
            kinetic,
            inverse: 1.0 / kinetic,
            hbar_alpha,
            mass: system.mass(),
        }
    }
}

fn check_radicand(d: f64) -> Result<f64> {
    if d > 0.0 && d.is_finite() {
        Ok(d)
    } else {
        Err(Error::NoRealLevel { radicand: d })
    }
}

fn finite(e: f64) -> Result<f64> {
    if e.is_finite() {
        Ok(e)
    } else {
        Err(Error::Division("1/c term diverges"))
    }
}

/// `3 n (n - 1)` as it appears in every bracket.
fn ladder(n: u32) -> f64 {
    let n = f64::from(n);
    3.0 * n * (n - 1.0)
}

/// Square-root argument of the large-c formula.
pub fn large_c_radicand(v0: f64, alpha: f64, c: f64, l: u32, system: &PhysicalSystem) -> f64 {
    let sc = Scales::new(alpha, system);
    let d0 = delta0(l, alpha, system);
    2.0 * c - 2.0 * sc.inverse * (v0 / (1.0 + c) + c * d0)
}

/// Square-root argument of the small-c formula.
pub fn small_c_radicand(v0: f64, alpha: f64, c: f64, l: u32, system: &PhysicalSystem) -> f64 {
    let sc = Scales::new(alpha, system);
    let d0 = delta0(l, alpha, system);
    2.0 * c - 2.0 * sc.inverse * (v0 * (1.0 - c) + c * d0)
}

/// Large-c formula on raw parameters.
pub fn eq32(
    v0: f64,
    alpha: f64,
    c: f64,
    l: u32,
    n: u32,
    system: &PhysicalSystem,
    reading: Reading,
) -> Result<f64> {
    if 1.0 + c == 0.0 {
        return Err(Error::HulthenSpecialCase);
    }
    if c == 0.0 {
        return Err(Error::Division("1/c term at c = 0"));
    }
    let sc = Scales::new(alpha, system);
    let d0 = delta0(l, alpha, system);
    let one_c = 1.0 + c;
    let coupling = v0 / one_c + c * d0;
    let d = check_radicand(2.0 * c - 2.0 * sc.inverse * coupling)?;

    let momentum = 2.0 * sc.hbar_alpha / sc.mass;
    let head = 1.0 + d0 + v0 / (one_c * one_c)
        - 0.5 * sc.kinetic
        - 0.25 * momentum * momentum * (2.0 * c - 4.0 * sc.inverse * coupling) * (c - 1.0);

    let lead = match reading {
        Reading::A => 2.0 * f64::from(n),
        Reading::B => 2.0,
    } / d.sqrt();
    let bracket = lead + (4.0 + c - ladder(n)) / (2.0 * d) - 1.0 / c;
    finite(head - 2.0 * sc.kinetic * bracket * bracket)
}

/// Small-c formula on raw parameters. Defined at `c = -1`.
pub fn eq33(
    v0: f64,
    alpha: f64,
    c: f64,
    l: u32,
    n: u32,
    system: &PhysicalSystem,
    reading: Reading,
) -> Result<f64> {
    if c == 0.0 {
        return Err(Error::Division("1/c term at c = 0"));
    }
    let sc = Scales::new(alpha, system);
    let d0 = delta0(l, alpha, system);
    let d = check_radicand(2.0 * c - 2.0 * sc.inverse * (v0 * (1.0 - c) + c * d0))?;

    let head = 1.0 + d0 - 0.5 * sc.kinetic
        + v0 * (1.0 - 2.0 * c)
        + sc.hbar_alpha * sc.hbar_alpha / (4.0 * sc.mass)
            * (2.0 * c - 2.0 * sc.inverse * (v0 * (1.0 - c) + 2.0 * d0 * c))
            * (c - 1.0);

    let bracket = 2.0 * f64::from(n) / (c * d.sqrt()) + (4.0 + c - ladder(n)) / (2.0 * d) - 1.0 / c;
    let tail = match reading {
        Reading::A => bracket * bracket,
        Reading::B => bracket,
    };
    finite(head - 2.0 * sc.kinetic * tail)
}

/// Large-c spectrum for a parameter set (the set's own c-factor).
pub fn energy_large_c(
    params: &PotentialParams,
    q: QuantumNumbers,
    system: &PhysicalSystem,
    reading: Reading,
) -> Result<f64> {
    eq32(
        params.v0(),
        params.alpha(),
        params.c(),
        q.l,
        q.n,
        system,
        reading,
    )
}

/// Small-c spectrum for a parameter set (the set's own c-factor).
pub fn energy_small_c(
    params: &PotentialParams,
    q: QuantumNumbers,
    system: &PhysicalSystem,
    reading: Reading,
) -> Result<f64> {
    eq33(
        params.v0(),
        params.alpha(),
        params.c(),
        q.l,
        q.n,
        system,
        reading,
    )
}

/// Special-case spectra: the general formulas with `c` forced to `-1` or `1`.
/// Only depth and steepness are taken from `params`.
pub fn energy_special(
    params: &PotentialParams,
    q: QuantumNumbers,
    system: &PhysicalSystem,
    which: SpecialCase,
    reading: Reading,
) -> Result<f64> {
    match which {
        SpecialCase::HulthenEq40 => {
            eq33(params.v0(), params.alpha(), -1.0, q.l, q.n, system, reading)
        }
        SpecialCase::StandardWsEq42 => {
            eq32(params.v0(), params.alpha(), 1.0, q.l, q.n, system, reading)
        }
    }
}

/// The standard Woods-Saxon special form as printed (`c = 1` already substituted).
pub fn eq42_printed(
    v0: f64,
    alpha: f64,
    l: u32,
    n: u32,
    system: &PhysicalSystem,
    reading: Reading,
) -> Result<f64> {
    let sc = Scales::new(alpha, system);
    let d0 = delta0(l, alpha, system);
    let d = check_radicand(2.0 - 2.0 * sc.inverse * (v0 / 2.0 + d0))?;
    let lead = match reading {
        Reading::A => 2.0 * f64::from(n),
        Reading::B => 2.0,
    } / d.sqrt();
    let bracket = lead + (5.0 - ladder(n)) / (2.0 * d) - 1.0;
    Ok(1.0 + d0 + v0 / 4.0 - 0.5 * sc.kinetic - 2.0 * sc.kinetic * bracket * bracket)
}

/// The Hulthen special form as printed (`c = -1` already substituted, bracket unsquared).
pub fn eq40_printed(v0: f64, alpha: f64, l: u32, n: u32, system: &PhysicalSystem) -> Result<f64> {
    let sc = Scales::new(alpha, system);
    let d0 = delta0(l, alpha, system);
    let d = check_radicand(-2.0 - 2.0 * sc.inverse * (2.0 * v0 - d0))?;
    let nf = f64::from(n);
    let head = 1.0 + d0 - 0.5 * sc.kinetic + 3.0 * v0
        - sc.hbar_alpha * sc.hbar_alpha / (2.0 * sc.mass) * (-2.0 - 4.0 * sc.inverse * (v0 - d0));
    let bracket = 2.0 * nf / d.sqrt() + 3.0 * (1.0 - nf * (nf - 1.0)) / (2.0 * d) + 1.0;
    Ok(head + 2.0 * sc.kinetic * bracket)
}

/// One term of the Hulthen substitution check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermCheck {
    pub term: &'static str,
    /// Small-c formula evaluated at `c = -1`.
    pub substituted: f64,
    /// The printed special form.
    pub printed: f64,
    pub agrees: bool,
}

/// Term-by-term comparison of the small-c formula at `c = -1` against the
/// printed Hulthen form. Bracket terms carry their outer prefactor, so sign
/// differences show up. Terms that do not reconcile are reported, not hidden.
pub fn hulthen_term_checks(
    v0: f64,
    alpha: f64,
    l: u32,
    n: u32,
    system: &PhysicalSystem,
) -> Vec<TermCheck> {
    let sc = Scales::new(alpha, system);
    let d0 = delta0(l, alpha, system);
    let c = -1.0;
    let nf = f64::from(n);

    let head_sub = 1.0 + d0 - 0.5 * sc.kinetic + v0 * (1.0 - 2.0 * c);
    let head_pr = 1.0 + d0 - 0.5 * sc.kinetic + 3.0 * v0;
    let second_sub = sc.hbar_alpha * sc.hbar_alpha / (4.0 * sc.mass)
        * (2.0 * c - 2.0 * sc.inverse * (v0 * (1.0 - c) + 2.0 * d0 * c))
        * (c - 1.0);
    let second_pr =
        -sc.hbar_alpha * sc.hbar_alpha / (2.0 * sc.mass) * (-2.0 - 4.0 * sc.inverse * (v0 - d0));
    let d_sub = 2.0 * c - 2.0 * sc.inverse * (v0 * (1.0 - c) + c * d0);
    let d_pr = -2.0 - 2.0 * sc.inverse * (2.0 * v0 - d0);
    let pre = 2.0 * sc.kinetic;
    let lead_sub = -pre * 2.0 * nf / (c * d_sub.sqrt());
    let lead_pr = pre * 2.0 * nf / d_pr.sqrt();
    let ladder_sub = -pre * (4.0 + c - ladder(n)) / (2.0 * d_sub);
    let ladder_pr = pre * 3.0 * (1.0 - nf * (nf - 1.0)) / (2.0 * d_pr);
    let last_sub = -pre * (-1.0 / c);
    let last_pr = pre;

    let rows = [
        ("constant block", head_sub, head_pr),
        ("second line", second_sub, second_pr),
        ("square-root argument", d_sub, d_pr),
        ("n/sqrt term", lead_sub, lead_pr),
        ("n(n-1) term", ladder_sub, ladder_pr),
        ("1/c term", last_sub, last_pr),
        ("bracket power", 2.0, 1.0),
    ];
    rows.iter()
        .map(|&(term, substituted, printed)| TermCheck {
            term,
            substituted,
            printed,
            agrees: close(substituted, printed),
        })
        .collect()
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= 1e-12 * 1f64.max(x.abs()).max(y.abs())
}
