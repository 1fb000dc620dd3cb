//! Numeric Nikiforov-Uvarov engine.
//!
//! A hypergeometric-type equation
//! `psi'' + (tau_bar / sigma) psi' + (sigma_bar / sigma^2) psi = 0`
//! is reduced by choosing `pi(s) = (sigma' - tau_bar)/2 +- sqrt(Q_k(s))`, where
//! `Q_k = ((sigma' - tau_bar)/2)^2 - sigma_bar + k sigma` must be the square of
//! a linear polynomial. Among the admissible `(k, pi)` the engine keeps the one
//! whose `tau = tau_bar + 2 pi` has a negative slope, and quantizes through
//! `lambda = k + pi'` against `lambda_n = -n tau' - n(n-1)/2 sigma''`.
//!
//! Everything is numeric over real coefficients. Energy dependence is handled
//! by a closure that builds the problem at a given energy, plus bracketing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly2;

/// Relative tolerance on the radicand discriminant for the perfect-square test.
pub const PERFECT_SQUARE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuProblem {
    sigma: Poly2,
    tau_bar: Poly2,
    sigma_bar: Poly2,
}

impl NuProblem {
    pub fn new(sigma: Poly2, tau_bar: Poly2, sigma_bar: Poly2) -> Result<Self> {
        if sigma.is_zero() {
            return Err(Error::Domain("sigma must not vanish identically".into()));
        }
        if tau_bar.c2 != 0.0 {
            return Err(Error::Domain("tau_bar must have degree at most one".into()));
        }
        let all = [sigma, tau_bar, sigma_bar];
        if all
            .iter()
            .any(|p| ![p.c0, p.c1, p.c2].iter().all(|c| c.is_finite()))
        {
            return Err(Error::Domain("non-finite polynomial coefficient".into()));
        }
        Ok(Self {
            sigma,
            tau_bar,
            sigma_bar,
        })
    }

    pub fn sigma(&self) -> Poly2 {
        self.sigma
    }

    pub fn tau_bar(&self) -> Poly2 {
        self.tau_bar
    }

    pub fn sigma_bar(&self) -> Poly2 {
        self.sigma_bar
    }

    /// `(sigma' - tau_bar) / 2`.
    pub fn half_shift(&self) -> Poly2 {
        (self.sigma.derivative() - self.tau_bar).scale(0.5)
    }

    /// `Q_k(s)`, the polynomial under the square root.
    pub fn radicand(&self, k: f64) -> Poly2 {
        let p = self.half_shift();
        p.mul_linear(&p) - self.sigma_bar + self.sigma.scale(k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Branch {
    PlusRoot,
    MinusRoot,
}

/// One admissible `pi(s)` together with the linear square root it came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiCandidate {
    pub pi: Poly2,
    pub root: Poly2,
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NuSolution {
    pub k: f64,
    pub pi: Poly2,
    pub tau: Poly2,
    pub lambda: f64,
    pub branch: Branch,
}

impl NuSolution {
    pub fn tau_slope(&self) -> f64 {
        self.tau.c1
    }
}

/// Values of `k` for which `Q_k` has zero discriminant, ascending.
///
/// The discriminant `B(k)^2 - 4 A(k) C(k)` is itself quadratic in `k`. Complex
/// roots give an empty list; a double root is reported once.
pub fn k_values(problem: &NuProblem) -> Vec<f64> {
    let base = problem.radicand(0.0);
    let sg = problem.sigma;
    let (a0, b0, c0) = (base.c2, base.c1, base.c0);
    let q2 = sg.c1 * sg.c1 - 4.0 * sg.c2 * sg.c0;
    let q1 = 2.0 * b0 * sg.c1 - 4.0 * (a0 * sg.c0 + c0 * sg.c2);
    let q0 = b0 * b0 - 4.0 * a0 * c0;

    let mut roots = Vec::with_capacity(2);
    if q2 != 0.0 {
        let disc = q1 * q1 - 4.0 * q2 * q0;
        let scale = (q1 * q1).max((4.0 * q2 * q0).abs()).max(f64::MIN_POSITIVE);
        if disc < 0.0 && disc.abs() > 1e-12 * scale {
            return roots;
        }
        let sq = disc.max(0.0).sqrt();
        if sq == 0.0 {
            roots.push(-q1 / (2.0 * q2));
        } else {
            // cancellation-free pair
            let sign = if q1 < 0.0 { -1.0 } else { 1.0 };
            let t = -0.5 * (q1 + sign * sq);
            roots.push(t / q2);
            roots.push(q0 / t);
        }
    } else if q1 != 0.0 {
        roots.push(-q0 / q1);
    } else if q0 == 0.0 {
        // discriminant vanishes for every k; the smallest natural choice is k = 0
        roots.push(0.0);
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup();
    roots
}

/// Linear square root of `Q_k` with nonnegative leading coefficient.
pub fn square_root_of_radicand(problem: &NuProblem, k: f64) -> Result<Poly2> {
    let q = problem.radicand(k);
    let scale = 1f64.max(q.max_abs_coeff());
    let tol = PERFECT_SQUARE_TOL * scale;
    let residual = q.c1 * q.c1 - 4.0 * q.c2 * q.c0;
    if residual.abs() > tol {
        return Err(Error::NotPerfectSquare { residual });
    }
    if q.c2 < -tol {
        return Err(Error::NegativeRadicand { leading: q.c2 });
    }
    if q.c0 < -tol {
        return Err(Error::NegativeRadicand { leading: q.c0 });
    }
    let lead = q.c2.max(0.0).sqrt();
    let constant = q.c0.max(0.0).sqrt();
    // (lead s + sgn(c1) constant)^2 reproduces the middle coefficient when residual = 0
    let sign = if q.c1 < 0.0 { -1.0 } else { 1.0 };
    if lead == 0.0 {
        return Ok(Poly2::constant(constant));
    }
    Ok(Poly2::linear(sign * constant, lead))
}

/// Both sign branches of `pi(s)` for a given `k`; one entry when the root vanishes.
pub fn pi_candidates(problem: &NuProblem, k: f64) -> Result<Vec<PiCandidate>> {
    let root = square_root_of_radicand(problem, k)?;
    let p = problem.half_shift();
    if root.is_zero() {
        return Ok(vec![PiCandidate {
            pi: p,
            root,
            branch: Branch::PlusRoot,
        }]);
    }
    Ok(vec![
        PiCandidate {
            pi: p + root,
            root,
            branch: Branch::PlusRoot,
        },
        PiCandidate {
            pi: p - root,
            root,
            branch: Branch::MinusRoot,
        },
    ])
}

/// Picks the `(k, pi)` with `tau' < 0`: the most negative slope wins, then the smaller `k`.
pub fn select_branch(problem: &NuProblem) -> Result<NuSolution> {
    let mut best: Option<NuSolution> = None;
    for k in k_values(problem) {
        let Ok(candidates) = pi_candidates(problem, k) else {
            continue;
        };
        for cand in candidates {
            let tau = problem.tau_bar + cand.pi.scale(2.0);
            if !(tau.c1 < 0.0) {
                continue;
            }
            let sol = NuSolution {
                k,
                pi: cand.pi,
                tau,
                lambda: k + cand.pi.c1,
                branch: cand.branch,
            };
            best = match best {
                Some(b) if (b.tau.c1, b.k) <= (sol.tau.c1, sol.k) => Some(b),
                _ => Some(sol),
            };
        }
    }
    best.ok_or(Error::NoBoundBranch)
}

/// `lambda_n = -n tau' - n(n-1)/2 sigma''`.
pub fn lambda_n(solution: &NuSolution, problem: &NuProblem, n: u32) -> f64 {
    let n = f64::from(n);
    let sigma_pp = 2.0 * problem.sigma.c2;
    -n * solution.tau.c1 - 0.5 * n * (n - 1.0) * sigma_pp
}

/// `lambda(E) - lambda_n(E)` for the problem built at energy `e`.
pub fn quantization_residual<F>(problem_at: F, n: u32, e: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<NuProblem>,
{
    let problem = problem_at(e)?;
    let sol = select_branch(&problem)?;
    Ok(sol.lambda - lambda_n(&sol, &problem, n))
}

/// Bisection on the quantization residual over a caller-supplied bracket.
pub fn solve_quantization<F>(problem_at: F, n: u32, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<NuProblem>,
{
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let f_lo = quantization_residual(&problem_at, n, lo)?;
    let f_hi = quantization_residual(&problem_at, n, hi)?;
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoRoot { lo, hi });
    }
    let lo_negative = f_lo < 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid == lo || mid == hi {
            break;
        }
        let f_mid = quantization_residual(&problem_at, n, mid)?;
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
