//! Jacobi-polynomial radial wavefunctions of the generalized family and their
//! numerical normalization.
//!
//! The closed form is `R(r) = r^-1 s^(A/2) (c+s)^(B - sqrt(eta2)) P_n^(A/2, B)(x)`
//! with `s = c (exp(2 alpha r) - 1)`, `A = 2 mu/c - 1`, `B = 2 nu / c^2`,
//! `mu = -sqrt(eta2)/c^2 + c + 2` and `nu = (2/c^2) sqrt((1-c) eta2 + eta1 + c^2)`,
//! where `eta1 = b1` and `eta2 = b2` come from [`coeff_set`].
//!
//! For `c < 0` both `s` and `c + s` are negative on `r > 0`; their powers are
//! taken on magnitudes, which only changes a constant phase that the
//! normalization absorbs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jacobi::jacobi_value;
use crate::potential::{PhysicalSystem, PotentialParams, QuantumNumbers};
use crate::quadrature::{simpson, simpson_with_estimate, uniform_spacing, SimpsonEstimate};
use crate::spectrum::{coeff_set, dimensionless_set};

/// Sampled radial function `R(r)`; the norm is `int |r R(r)|^2 dr`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialSamples {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    /// Factor already applied to `values`; 1 for raw samples.
    pub normalization: f64,
}

impl RadialSamples {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::Grid(format!(
                "{} grid points but {} values",
                grid.len(),
                values.len()
            )));
        }
        if grid.len() < 2 {
            return Err(Error::Grid("need at least two samples".into()));
        }
        if grid.iter().any(|r| !(*r >= 0.0 && r.is_finite())) {
            return Err(Error::Grid(
                "grid points must be finite and nonnegative".into(),
            ));
        }
        if grid.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Grid("grid must be strictly increasing".into()));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Overflow {
                what: "radial sample",
                r: grid[i],
            });
        }
        Ok(Self {
            grid,
            values,
            normalization: 1.0,
        })
    }

    fn density(&self) -> Vec<f64> {
        self.grid
            .iter()
            .zip(&self.values)
            .map(|(r, v)| {
                let u = r * v;
                u * u
            })
            .collect()
    }

    /// `int |r R|^2 dr` by composite Simpson, with a Richardson estimate.
    pub fn norm_integral(&self) -> Result<SimpsonEstimate> {
        let h = uniform_spacing(&self.grid)?;
        Ok(simpson_with_estimate(&self.density(), h))
    }

    /// Scaled copy with unit norm.
    pub fn normalized(&self) -> Result<Self> {
        let n = normalization_constant(self)?;
        Ok(Self {
            grid: self.grid.clone(),
            values: self.values.iter().map(|v| v * n).collect(),
            normalization: self.normalization * n,
        })
    }

    /// Reduced wavefunction `u(r) = r R(r)`.
    pub fn reduced(&self) -> Vec<f64> {
        self.grid
            .iter()
            .zip(&self.values)
            .map(|(r, v)| r * v)
            .collect()
    }

    pub fn node_count(&self) -> usize {
        count_sign_changes(&self.values, 0.0)
    }
}

/// Interior sign changes, skipping entries with `|v| <= floor * max|v|`.
pub fn count_sign_changes(values: &[f64], floor: f64) -> usize {
    let peak = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let cut = floor * peak;
    let mut last = 0.0f64;
    let mut changes = 0;
    for &v in values {
        if v.abs() <= cut || v == 0.0 {
            continue;
        }
        if last != 0.0 && (v > 0.0) != (last > 0.0) {
            changes += 1;
        }
        last = v;
    }
    changes
}

/// `N` such that `int |N r R(r)|^2 dr = 1` over the sample grid.
pub fn normalization_constant(samples: &RadialSamples) -> Result<f64> {
    let h = uniform_spacing(&samples.grid)?;
    let integral = simpson(&samples.density(), h);
    if !(integral > 0.0) || !integral.is_finite() {
        return Err(Error::DegenerateWavefunction);
    }
    Ok(1.0 / integral.sqrt())
}

/// Exponent data of one level of the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionSpec {
    /// `A = 2 mu / c - 1`
    pub a_exp: f64,
    /// `B = 2 nu / c^2`
    pub b_exp: f64,
    pub n: u32,
    pub params: PotentialParams,
    pub sqrt_eta2: f64,
    pub mu: f64,
    pub nu: f64,
}

impl WavefunctionSpec {
    /// Builds the exponents from the dimensionless set at energy `e`.
    pub fn for_level(
        params: &PotentialParams,
        e: f64,
        q: QuantumNumbers,
        system: &PhysicalSystem,
    ) -> Result<Self> {
        let coeffs = coeff_set(&dimensionless_set(params, e, q.l, system)?);
        let c = params.c();
        let (eta1, eta2) = (coeffs.b1, coeffs.b2);
        if eta2 < 0.0 {
            return Err(Error::NonRealExponent {
                what: "sqrt(eta2)",
                value: eta2,
            });
        }
        let sqrt_eta2 = eta2.sqrt();
        let c2 = c * c;
        let mu = -sqrt_eta2 / c2 + c + 2.0;
        let nu_arg = (1.0 - c) * eta2 + eta1 + c2;
        if nu_arg < 0.0 {
            return Err(Error::NonRealExponent {
                what: "nu",
                value: nu_arg,
            });
        }
        let nu = 2.0 / c2 * nu_arg.sqrt();
        Ok(Self {
            a_exp: 2.0 * mu / c - 1.0,
            b_exp: 2.0 * nu / c2,
            n: q.n,
            params: *params,
            sqrt_eta2,
            mu,
            nu,
        })
    }

    /// Jacobi parameters `(A/2, B)`.
    pub fn jacobi_params(&self) -> (f64, f64) {
        (0.5 * self.a_exp, self.b_exp)
    }

    /// Exponent of `(c + s)` in the assembled wavefunction.
    pub fn tail_exponent(&self) -> f64 {
        self.b_exp - self.sqrt_eta2
    }
}

/// `s^-p (c+s)^-q d^n/ds^n [s^(n+p) (c+s)^(n+q)]` with `(p, q) = (A/2, B)`,
/// evaluated through its Jacobi identification `c^n n! P_n^(p,q)(1 + 2s/c)`.
pub fn rodrigues_chi(spec: &WavefunctionSpec, s: f64, n: u32) -> Result<f64> {
    let c = spec.params.c();
    let (p, q) = spec.jacobi_params();
    if (s == 0.0 && p < 0.0) || (c + s == 0.0 && q < 0.0) {
        return Err(Error::Pole { s });
    }
    let factorial: f64 = (1..=n).map(f64::from).product();
    Ok(c.powi(n as i32) * factorial * jacobi_value(n, p, q, 1.0 + 2.0 * s / c))
}

/// Where the Jacobi factor of the assembled wavefunction is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum JacobiArgument {
    /// `x = 1 - 2 exp(-2 alpha r) = (s - c)/(s + c)`, which sweeps `(-1, 1)` as r runs over `(0, inf)`.
    #[default]
    Compact,
    /// `x = 1 + 2s/c`, the variable of the Rodrigues identification; stays above 1 for `r > 0`.
    Rodrigues,
}

impl JacobiArgument {
    fn at(self, alpha: f64, r: f64) -> f64 {
        match self {
            JacobiArgument::Compact => 1.0 - 2.0 * (-2.0 * alpha * r).exp(),
            JacobiArgument::Rodrigues => 2.0 * (2.0 * alpha * r).exp() - 1.0,
        }
    }
}

/// Samples the closed-form `R(r)` on `grid` and normalizes it in r-space.
pub fn radial_wavefunction(
    spec: &WavefunctionSpec,
    q: QuantumNumbers,
    grid: &[f64],
    argument: JacobiArgument,
) -> Result<RadialSamples> {
    let alpha = spec.params.alpha();
    let ln_c = spec.params.c().abs().ln();
    let (p, b) = spec.jacobi_params();
    let tail = spec.tail_exponent();

    let mut logs = Vec::with_capacity(grid.len());
    let mut signs = Vec::with_capacity(grid.len());
    for &r in grid {
        if !(r > 0.0) {
            return Err(Error::Domain(format!(
                "radial wavefunction needs r > 0, got {r}"
            )));
        }
        let x = argument.at(alpha, r);
        let poly = jacobi_value(q.n, p, b, x);
        let ln_s = ln_c + (2.0 * alpha * r).exp_m1().ln();
        let ln_cs = ln_c + 2.0 * alpha * r;
        let log = p * ln_s + tail * ln_cs - r.ln() + poly.abs().ln();
        if log.is_nan() || log == f64::INFINITY || !poly.is_finite() {
            return Err(Error::Overflow {
                what: "closed-form wavefunction",
                r,
            });
        }
        logs.push(log);
        signs.push(poly.signum());
    }
    let shift = logs
        .iter()
        .copied()
        .filter(|l| l.is_finite())
        .fold(f64::NEG_INFINITY, f64::max);
    if !shift.is_finite() {
        return Err(Error::DegenerateWavefunction);
    }
    let values = logs
        .iter()
        .zip(&signs)
        .map(|(l, sg)| sg * (l - shift).exp())
        .collect();
    RadialSamples::new(grid.to_vec(), values)?.normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::Family;

    fn sample_spec(n: u32) -> WavefunctionSpec {
        let p = PotentialParams::new(0.5, 0.0, 0.5, Family::GeneralizedWs, Some(-3.0)).unwrap();
        WavefunctionSpec::for_level(
            &p,
            -1.0,
            QuantumNumbers::new(n, 1),
            &PhysicalSystem::natural(),
        )
        .unwrap()
    }

    fn uniform(lo: f64, hi: f64, m: usize) -> Vec<f64> {
        (0..m)
            .map(|i| lo + (hi - lo) * i as f64 / (m - 1) as f64)
            .collect()
    }

    #[test]
    fn constant_profile_normalization() {
        let grid = uniform(0.0, 1.0, 101);
        let s = RadialSamples::new(grid.clone(), vec![1.0; 101]).unwrap();
        assert!((normalization_constant(&s).unwrap() - 3f64.sqrt()).abs() < 1e-14);
        let doubled = RadialSamples::new(grid, vec![2.0; 101]).unwrap();
        let ratio = normalization_constant(&s).unwrap() / normalization_constant(&doubled).unwrap();
        assert!((ratio - 2.0).abs() < 1e-15);
    }

    #[test]
    fn zero_profile_is_degenerate() {
        let s = RadialSamples::new(uniform(0.0, 1.0, 11), vec![0.0; 11]).unwrap();
        assert_eq!(
            normalization_constant(&s),
            Err(Error::DegenerateWavefunction)
        );
    }

    #[test]
    fn samples_validate() {
        assert!(RadialSamples::new(vec![0.0, 1.0], vec![1.0]).is_err());
        assert!(RadialSamples::new(vec![1.0, 0.5], vec![1.0, 1.0]).is_err());
        assert!(RadialSamples::new(vec![0.5, 1.0], vec![f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn normalizing_twice_is_stable() {
        let spec = sample_spec(2);
        let grid = uniform(0.005, 8.0, 1601);
        let once = radial_wavefunction(
            &spec,
            QuantumNumbers::new(2, 1),
            &grid,
            JacobiArgument::Compact,
        )
        .unwrap();
        let twice = once.normalized().unwrap();
        for (a, b) in once.values.iter().zip(&twice.values) {
            assert!((a - b).abs() <= 1e-14 * a.abs().max(f64::MIN_POSITIVE));
        }
    }

    #[test]
    fn regime_has_real_exponents() {
        for n in 0..4 {
            let spec = sample_spec(n);
            let (p, q) = spec.jacobi_params();
            assert!(p > -1.0 && q > -1.0, "{p} {q}");
            assert!(0.5 * spec.a_exp + spec.tail_exponent() < 0.0);
        }
    }

    #[test]
    fn non_real_exponent_is_reported() {
        let p = PotentialParams::new(1.0, 0.0, 0.5, Family::StandardWs, None).unwrap();
        let r = WavefunctionSpec::for_level(
            &p,
            -0.2,
            QuantumNumbers::new(0, 0),
            &PhysicalSystem::natural(),
        );
        assert!(matches!(r, Err(Error::NonRealExponent { .. })));
    }

    #[test]
    fn rejects_origin_and_pole() {
        let spec = sample_spec(1);
        let err = radial_wavefunction(
            &spec,
            QuantumNumbers::new(1, 1),
            &[0.0, 1.0],
            JacobiArgument::Compact,
        );
        assert!(matches!(err, Err(Error::Domain(_))));
        let mut neg = spec;
        neg.a_exp = -1.5;
        assert!(matches!(
            rodrigues_chi(&neg, 0.0, 1),
            Err(Error::Pole { .. })
        ));
        assert_eq!(rodrigues_chi(&spec, -0.7, 0).unwrap(), 1.0);
    }
}
