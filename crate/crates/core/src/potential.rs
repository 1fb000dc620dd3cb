//! The generalized Woods-Saxon family, its Hulthen and standard members,
//! the effective potential and the exponential coordinate transform
//! `s = c (exp(2 alpha r) - 1)`.
//!
//! Sign convention: `V0 > 0` is the depth and every member is written with an
//! explicit leading minus, so the physical members are attractive wells.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Units of action and mass. Natural units (`hbar = mass = 1`) by default.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalSystem {
    hbar: f64,
    mass: f64,
}

impl PhysicalSystem {
    pub fn new(hbar: f64, mass: f64) -> Result<Self> {
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::Domain(format!("hbar must be positive, got {hbar}")));
        }
        if !(mass > 0.0 && mass.is_finite()) {
            return Err(Error::Domain(format!("mass must be positive, got {mass}")));
        }
        Ok(Self { hbar, mass })
    }

    pub fn natural() -> Self {
        Self {
            hbar: 1.0,
            mass: 1.0,
        }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// `hbar^2 / mass`, the kinetic prefactor that shows up everywhere.
    pub fn hbar2_over_mass(&self) -> f64 {
        self.hbar * self.hbar / self.mass
    }
}

impl Default for PhysicalSystem {
    fn default() -> Self {
        Self::natural()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `-V0 / (1 + c exp(2 alpha r))` with a free c-factor.
    GeneralizedWs,
    /// Generalized form with `c = exp(-2 alpha R0)`.
    StandardWs,
    /// `-V0 exp(-2 alpha r) / (1 - exp(-2 alpha r))`, screening `2 alpha`.
    Hulthen,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::GeneralizedWs => "generalized-ws",
            Family::StandardWs => "standard-ws",
            Family::Hulthen => "hulthen",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generalized-ws" | "generalized" | "mgws" => Ok(Family::GeneralizedWs),
            "standard-ws" | "ws" => Ok(Family::StandardWs),
            "hulthen" => Ok(Family::Hulthen),
            other => Err(Error::Domain(format!("unknown potential family '{other}'"))),
        }
    }
}

/// How the centrifugal barrier enters the effective potential.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CentrifugalMode {
    #[default]
    ExactCentrifugal,
    PekerisApprox,
}

impl CentrifugalMode {
    pub fn name(self) -> &'static str {
        match self {
            CentrifugalMode::ExactCentrifugal => "exact",
            CentrifugalMode::PekerisApprox => "pekeris",
        }
    }

    /// Binds the steepness needed by the exponential surrogate.
    pub fn with_alpha(self, alpha: f64) -> Centrifugal {
        match self {
            CentrifugalMode::ExactCentrifugal => Centrifugal::Exact,
            CentrifugalMode::PekerisApprox => Centrifugal::Pekeris { alpha },
        }
    }
}

impl std::str::FromStr for CentrifugalMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" | "exact-centrifugal" => Ok(CentrifugalMode::ExactCentrifugal),
            "pekeris" | "pekeris-approx" => Ok(CentrifugalMode::PekerisApprox),
            other => Err(Error::Domain(format!("unknown centrifugal mode '{other}'"))),
        }
    }
}

/// A centrifugal treatment with everything it needs to be evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Centrifugal {
    Exact,
    Pekeris { alpha: f64 },
}

/// Stand-in for `1/r^2` used by the exponential surrogate:
/// `4 alpha^2 e^{-2 alpha r} / (1 - e^{-2 alpha r})^2 = alpha^2 / sinh^2(alpha r)`.
pub fn pekeris_inverse_square(alpha: f64, r: f64) -> f64 {
    let sh = (alpha * r).sinh();
    alpha * alpha / (sh * sh)
}

/// `hbar^2 l(l+1) / (2 m) * f(r)` where `f` is `1/r^2` or its surrogate.
pub fn centrifugal_term(l: u32, r: f64, system: &PhysicalSystem, term: Centrifugal) -> f64 {
    if l == 0 {
        return 0.0;
    }
    let ll = f64::from(l) * f64::from(l + 1);
    let inv_r2 = match term {
        Centrifugal::Exact => 1.0 / (r * r),
        Centrifugal::Pekeris { alpha } => pekeris_inverse_square(alpha, r),
    };
    0.5 * system.hbar2_over_mass() * ll * inv_r2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub n: u32,
    pub l: u32,
}

impl QuantumNumbers {
    pub fn new(n: u32, l: u32) -> Self {
        Self { n, l }
    }
}

/// Potential parameters with the derived steepness and c-factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialParams {
    v0: f64,
    r0: f64,
    a: f64,
    alpha: f64,
    c: f64,
    family: Family,
    thin_surface_warning: bool,
}

impl PotentialParams {
    /// Validates the inputs and derives `alpha = 1/(2a)` and `c`.
    ///
    /// `c_override` is only accepted for the generalized family; without it
    /// the generalized family takes the standard value `exp(-2 alpha R0)`.
    pub fn new(v0: f64, r0: f64, a: f64, family: Family, c_override: Option<f64>) -> Result<Self> {
        if !(v0 > 0.0 && v0.is_finite()) {
            return Err(Error::Domain(format!("V0 must be positive, got {v0}")));
        }
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::Domain(format!("a must be positive, got {a}")));
        }
        if !(r0 >= 0.0 && r0.is_finite()) {
            return Err(Error::Domain(format!("R0 must be nonnegative, got {r0}")));
        }
        let alpha = 1.0 / (2.0 * a);
        let c = match (family, c_override) {
            (Family::GeneralizedWs, Some(c)) => {
                if c == 0.0 {
                    return Err(Error::Domain(
                        "c = 0 makes the coordinate transform degenerate".into(),
                    ));
                }
                if !c.is_finite() {
                    return Err(Error::Domain(format!("c must be finite, got {c}")));
                }
                c
            }
            (_, Some(_)) => {
                return Err(Error::Domain(format!(
                    "c override is only allowed for {}",
                    Family::GeneralizedWs.name()
                )))
            }
            (Family::GeneralizedWs | Family::StandardWs, None) => (-2.0 * alpha * r0).exp(),
            (Family::Hulthen, None) => -1.0,
        };
        Ok(Self {
            v0,
            r0,
            a,
            alpha,
            c,
            family,
            thin_surface_warning: a >= r0,
        })
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn r0(&self) -> f64 {
        self.r0
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Set when the diffuseness is not small against the radius (`a >= R0`).
    pub fn thin_surface_warning(&self) -> bool {
        self.thin_surface_warning
    }

    /// Same depth and steepness with a different c-factor, as a generalized member.
    pub fn with_c(&self, c: f64) -> Result<Self> {
        Self::new(self.v0, self.r0, self.a, Family::GeneralizedWs, Some(c))
    }

    /// `V(r)` for the selected family.
    pub fn value(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        match self.family {
            Family::GeneralizedWs | Family::StandardWs => self.generalized_form(r),
            Family::Hulthen => {
                let denom = (2.0 * self.alpha * r).exp_m1();
                let v = -self.v0 / denom;
                if denom == 0.0 || !v.is_finite() {
                    return Err(Error::Overflow {
                        what: "Hulthen potential",
                        r,
                    });
                }
                Ok(v)
            }
        }
    }

    /// `-V0 / (1 + c exp(2 alpha r))` with this parameter set's c, whatever the
    /// family. With `c = -1` this is the formal transcription of the Hulthen
    /// member, which is repulsive (`V0 / (exp(2 alpha r) - 1)`).
    pub fn generalized_form(&self, r: f64) -> Result<f64> {
        check_radius(r)?;
        let denom = 1.0 + self.c * (2.0 * self.alpha * r).exp();
        let v = -self.v0 / denom;
        if denom == 0.0 || v.is_nan() || v.is_infinite() {
            return Err(Error::Overflow {
                what: "generalized Woods-Saxon potential",
                r,
            });
        }
        Ok(v)
    }

    pub fn effective(
        &self,
        l: u32,
        r: f64,
        system: &PhysicalSystem,
        mode: CentrifugalMode,
    ) -> Result<f64> {
        let v = self.value(r)?;
        Ok(v + centrifugal_term(l, r, system, mode.with_alpha(self.alpha)))
    }

    /// `s = c (exp(2 alpha r) - 1)`.
    pub fn s_of_r(&self, r: f64) -> Result<f64> {
        if !(r >= 0.0) {
            return Err(Error::Domain(format!("r must be nonnegative, got {r}")));
        }
        let s = self.c * (2.0 * self.alpha * r).exp_m1();
        if !s.is_finite() {
            return Err(Error::Overflow {
                what: "coordinate transform",
                r,
            });
        }
        Ok(s)
    }

    /// Inverse of [`s_of_r`](Self::s_of_r).
    pub fn r_of_s(&self, s: f64) -> Result<f64> {
        let ratio = s / self.c;
        if !(ratio >= 0.0) || !ratio.is_finite() {
            return Err(Error::Domain(format!(
                "s = {s} is outside the image of r >= 0 for c = {}",
                self.c
            )));
        }
        Ok(ratio.ln_1p() / (2.0 * self.alpha))
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("r must be positive, got {r}")))
    }
}

/// Free-function form of [`PotentialParams::new`].
pub fn make_params(
    v0: f64,
    r0: f64,
    a: f64,
    family: Family,
    c_override: Option<f64>,
) -> Result<PotentialParams> {
    PotentialParams::new(v0, r0, a, family, c_override)
}

pub fn potential_value(params: &PotentialParams, r: f64) -> Result<f64> {
    params.value(r)
}

pub fn effective_potential(
    params: &PotentialParams,
    l: u32,
    r: f64,
    system: &PhysicalSystem,
    mode: CentrifugalMode,
) -> Result<f64> {
    params.effective(l, r, system, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ws(v0: f64, r0: f64, a: f64) -> PotentialParams {
        PotentialParams::new(v0, r0, a, Family::StandardWs, None).unwrap()
    }

    #[test]
    fn derived_alpha_and_c() {
        let p = ws(1.0, 0.0, 0.5);
        assert_eq!(p.alpha(), 1.0);
        assert_eq!(p.c(), 1.0);

        let p = ws(1.0, 2f64.ln(), 1.0);
        assert_eq!(p.alpha(), 0.5);
        assert_relative_eq!(p.c(), 0.5, max_relative = 1e-15);

        let p = ws(50.0, 6.0, 0.6);
        assert_relative_eq!(p.alpha(), 0.833_333_333_333_333_3, max_relative = 1e-15);
        // exp(-10) to 11 digits
        assert_relative_eq!(p.c(), 4.539_992_976_2e-5, max_relative = 1e-10);
        assert!(!p.thin_surface_warning());

        let h = PotentialParams::new(1.0, 0.0, 1.0, Family::Hulthen, None).unwrap();
        assert_eq!(h.c(), -1.0);
        assert!(h.thin_surface_warning());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(PotentialParams::new(0.0, 1.0, 1.0, Family::StandardWs, None).is_err());
        assert!(PotentialParams::new(1.0, 1.0, -1.0, Family::StandardWs, None).is_err());
        assert!(PotentialParams::new(1.0, -1.0, 1.0, Family::StandardWs, None).is_err());
        assert!(PotentialParams::new(1.0, 1.0, 1.0, Family::GeneralizedWs, Some(0.0)).is_err());
        assert!(PotentialParams::new(1.0, 1.0, 1.0, Family::StandardWs, Some(2.0)).is_err());
        assert!(PotentialParams::new(1.0, 1.0, 1.0, Family::Hulthen, Some(-1.0)).is_err());
        let g = PotentialParams::new(1.0, 1.0, 1.0, Family::GeneralizedWs, Some(-3.0)).unwrap();
        assert_eq!(g.c(), -3.0);
    }

    #[test]
    fn woods_saxon_reference_values() {
        let p = ws(50.0, 6.0, 0.6);
        assert_relative_eq!(p.value(6.0).unwrap(), -25.0, max_relative = 1e-14);
        assert_relative_eq!(
            p.value(6.0 + 0.6 * 3f64.ln()).unwrap(),
            -12.5,
            max_relative = 1e-13
        );
        // -50 / (1 + e^{5/3}), e^{5/3} = 5.294490050...
        assert_relative_eq!(
            p.value(7.0).unwrap(),
            -7.943_455_244_045_757,
            max_relative = 1e-13
        );
        assert!(p.value(0.0).is_err());
        assert!(p.value(-1.0).is_err());
    }

    #[test]
    fn hulthen_and_formal_transcription() {
        let h = PotentialParams::new(0.2, 0.0, 5.0, Family::Hulthen, None).unwrap();
        let r = 3.0;
        let expected = -0.2 * (-0.2f64 * r).exp() / (1.0 - (-0.2f64 * r).exp());
        assert_relative_eq!(h.value(r).unwrap(), expected, max_relative = 1e-14);
        // formal c = -1 substitution flips the sign
        let formal = h.generalized_form(r).unwrap();
        assert_relative_eq!(formal, -expected, max_relative = 1e-12);
        assert!(matches!(h.value(1e-320), Err(Error::Overflow { .. })));
    }

    #[test]
    fn pole_of_negative_c_is_reported() {
        let g = PotentialParams::new(1.0, 0.0, 0.5, Family::GeneralizedWs, Some(-1.0)).unwrap();
        // 1 + c e^{2r} vanishes only at r = 0; pick c so the pole sits at r = 1
        let g2 = g.with_c(-(-2.0f64).exp()).unwrap();
        assert!(g2.generalized_form(1.0).is_err());
        assert!(g2.generalized_form(1.5).unwrap() > 0.0);
    }

    #[test]
    fn effective_potential_modes() {
        let sys = PhysicalSystem::natural();
        let p = ws(50.0, 6.0, 0.6);
        for mode in [
            CentrifugalMode::ExactCentrifugal,
            CentrifugalMode::PekerisApprox,
        ] {
            assert_eq!(
                p.effective(0, 2.5, &sys, mode).unwrap(),
                p.value(2.5).unwrap()
            );
        }
        // pure centrifugal part: hbar = m = 1, l = 1, r = 2
        assert_relative_eq!(
            centrifugal_term(1, 2.0, &sys, Centrifugal::Exact),
            0.25,
            max_relative = 1e-15
        );

        let exact = centrifugal_term(1, 1.0, &sys, Centrifugal::Exact);
        let approx = centrifugal_term(1, 1.0, &sys, Centrifugal::Pekeris { alpha: 0.01 });
        assert!(((approx - exact) / exact).abs() < 1e-4);
        assert!(p
            .effective(1, 0.0, &sys, CentrifugalMode::ExactCentrifugal)
            .is_err());
    }

    #[test]
    fn system_units() {
        let s = PhysicalSystem::new(2.0, 4.0).unwrap();
        assert_eq!(s.hbar2_over_mass(), 1.0);
        assert!(PhysicalSystem::new(0.0, 1.0).is_err());
        assert!(PhysicalSystem::new(1.0, -1.0).is_err());
        assert_eq!(PhysicalSystem::default(), PhysicalSystem::natural());
    }

    #[test]
    fn transform_values_and_inverse() {
        let p = PotentialParams::new(1.0, 0.0, 1.0, Family::GeneralizedWs, Some(0.5)).unwrap();
        assert_eq!(p.s_of_r(0.0).unwrap(), 0.0);
        assert_relative_eq!(p.s_of_r(4f64.ln()).unwrap(), 1.5, max_relative = 1e-14);

        let q = PotentialParams::new(1.0, 1.0, 0.5, Family::StandardWs, None).unwrap();
        assert_relative_eq!(q.c(), (-2.0f64).exp(), max_relative = 1e-15);
        for r in [0.1, 1.0, 10.0] {
            let back = q.r_of_s(q.s_of_r(r).unwrap()).unwrap();
            assert!(
                (back - r).abs() <= 1e-12 * r.max(1.0),
                "r = {r}, back = {back}"
            );
        }
        assert!(q.s_of_r(-1.0).is_err());
        assert!(q.s_of_r(1e4).is_err());
        assert!(q.r_of_s(-1.0).is_err());
    }

    #[test]
    fn parse_names() {
        assert_eq!("standard-ws".parse::<Family>().unwrap(), Family::StandardWs);
        assert_eq!(
            "pekeris".parse::<CentrifugalMode>().unwrap(),
            CentrifugalMode::PekerisApprox
        );
        assert!("square".parse::<Family>().is_err());
    }
}
