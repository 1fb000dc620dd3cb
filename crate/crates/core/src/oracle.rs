//! Finite-difference ground truth for radial bound states.
//!
//! `-(hbar^2/2m) u'' + V_eff u = E u` is discretized with central differences
//! on a uniform grid with `u = 0` one spacing outside each end. The resulting
//! symmetric tridiagonal matrix is searched level by level: Sturm counts
//! isolate the k-th eigenvalue by bisection, inverse iteration gives the
//! eigenvector. Refinement halves the spacing and stretches the box until
//! successive energies settle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::potential::{centrifugal_term, Centrifugal, PhysicalSystem, PotentialParams};
use crate::quadrature::simpson;
use crate::wavefunction::{count_sign_changes, RadialSamples};

/// Bisection stops once the bracket is this small relative to `max(1, |E|)`.
pub const ENERGY_TOL: f64 = 1e-12;
/// Accepted `||H v - E v||_inf / ||v||_inf` after inverse iteration.
pub const RESIDUAL_TOL: f64 = 1e-8;
pub const MAX_INVERSE_ITERATIONS: usize = 50;
pub const MAX_REFINEMENTS: usize = 8;
/// Box growth per refinement step; the spacing halves each step.
pub const R_MAX_GROWTH: f64 = 1.25;
pub const DEFAULT_POINTS: usize = 4001;

/// Multiple of `eps * ||H||` below which `H v - E v` is pure rounding.
pub const ROUNDING_FLOOR: f64 = 16.0 * f64::EPSILON;

/// Entries below this fraction of the peak are ignored when counting nodes.
const NODE_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, points: usize) -> Result<Self> {
        if points < 3 {
            return Err(Error::Grid(format!("need at least 3 points, got {points}")));
        }
        if !(r_min > 0.0) || !(r_max > r_min) || !r_max.is_finite() {
            return Err(Error::Grid(format!(
                "need 0 < r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        Ok(Self {
            r_min,
            r_max,
            points,
        })
    }

    /// Grid whose first node sits one spacing from the origin.
    pub fn from_origin(r_max: f64, points: usize) -> Result<Self> {
        Self::new(r_max / points as f64, r_max, points)
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.points - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        self.r_min + i as f64 * self.spacing()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.node(i)).collect()
    }

    /// Half the spacing, a `R_MAX_GROWTH` longer box, first node one spacing from the origin.
    pub fn refined(&self) -> Result<Self> {
        let h = 0.5 * self.spacing();
        let r_max = self.r_max * R_MAX_GROWTH;
        let points = (r_max / h).round() as usize;
        Self::from_origin(points as f64 * h, points)
    }
}

/// Starting grid for a member of the family: the box covers the surface
/// region and about 30 decay lengths of a level at half the depth.
pub fn default_grid(params: &PotentialParams, system: &PhysicalSystem) -> RadialGrid {
    let e_guess = 0.5 * params.v0();
    let kappa = (2.0 * system.mass() * e_guess).sqrt() / system.hbar();
    let r_max = (20.0 * params.a() + 2.0 * params.r0()).max(30.0 / kappa);
    RadialGrid::from_origin(r_max, DEFAULT_POINTS).expect("positive box")
}

#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalHamiltonian {
    pub diagonal: Vec<f64>,
    pub off_diagonal: f64,
}

impl TridiagonalHamiltonian {
    pub fn len(&self) -> usize {
        self.diagonal.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonal.is_empty()
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin(&self) -> (f64, f64) {
        let spread = 2.0 * self.off_diagonal.abs();
        let lo = self.diagonal.iter().copied().fold(f64::INFINITY, f64::min) - spread;
        let hi = self
            .diagonal
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
            + spread;
        (lo, hi)
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = self.len();
        let e = self.off_diagonal;
        (0..n)
            .map(|i| {
                let mut acc = self.diagonal[i] * v[i];
                if i > 0 {
                    acc += e * v[i - 1];
                }
                if i + 1 < n {
                    acc += e * v[i + 1];
                }
                acc
            })
            .collect()
    }

    /// `||H v - E v||_inf / ||v||_inf`.
    pub fn residual(&self, v: &[f64], energy: f64) -> f64 {
        let hv = self.apply(v);
        let num = hv
            .iter()
            .zip(v)
            .fold(0.0f64, |m, (a, b)| m.max((a - energy * b).abs()));
        let den = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        num / den
    }

    /// Solves `(H - shift) y = rhs` by Thomas elimination with a pivot floor.
    fn shifted_solve(&self, shift: f64, rhs: &[f64]) -> Vec<f64> {
        let n = self.len();
        let e = self.off_diagonal;
        let floor = f64::EPSILON * (self.gershgorin().1.abs() + shift.abs()).max(1.0);
        let guard = |p: f64| {
            if p.abs() < floor {
                if p < 0.0 {
                    -floor
                } else {
                    floor
                }
            } else {
                p
            }
        };
        let mut upper = vec![0.0; n];
        let mut y = vec![0.0; n];
        let mut pivot = guard(self.diagonal[0] - shift);
        upper[0] = e / pivot;
        y[0] = rhs[0] / pivot;
        for i in 1..n {
            pivot = guard(self.diagonal[i] - shift - e * upper[i - 1]);
            upper[i] = e / pivot;
            y[i] = (rhs[i] - e * y[i - 1]) / pivot;
        }
        for i in (0..n - 1).rev() {
            y[i] -= upper[i] * y[i + 1];
        }
        y
    }
}

/// Central-difference Hamiltonian for `potential` plus the centrifugal term.
pub fn build_hamiltonian<F>(
    potential: F,
    l: u32,
    grid: &RadialGrid,
    system: &PhysicalSystem,
    centrifugal: Centrifugal,
) -> Result<TridiagonalHamiltonian>
where
    F: Fn(f64) -> f64,
{
    let h = grid.spacing();
    let kinetic = system.hbar2_over_mass() / (h * h);
    let mut diagonal = Vec::with_capacity(grid.points());
    for i in 0..grid.points() {
        let r = grid.node(i);
        let v = potential(r) + centrifugal_term(l, r, system, centrifugal);
        if !v.is_finite() {
            return Err(Error::NonFinitePotential { node: i, r });
        }
        diagonal.push(kinetic + v);
    }
    Ok(TridiagonalHamiltonian {
        diagonal,
        off_diagonal: -0.5 * kinetic,
    })
}

/// Number of eigenvalues strictly below `e`, from the signs of the LDL^T pivots of `H - e I`.
pub fn count_states_below(h: &TridiagonalHamiltonian, e: f64) -> usize {
    let off2 = h.off_diagonal * h.off_diagonal;
    let pivmin = f64::MIN_POSITIVE * off2.max(1.0);
    let mut count = 0;
    let mut q = h.diagonal[0] - e;
    for i in 0..h.len() {
        if i > 0 {
            q = (h.diagonal[i] - e) - off2 / q;
        }
        if q.abs() < pivmin {
            q = if q < 0.0 { -pivmin } else { pivmin };
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// k-th eigenvalue (0-based) of `h` inside `[lo, hi)` by bisection on the Sturm count.
pub fn bisect_eigenvalue(h: &TridiagonalHamiltonian, k: usize, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= ENERGY_TOL * mid.abs().max(1.0) || mid == lo || mid == hi {
            break;
        }
        if count_states_below(h, mid) > k {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Eigenvector for an accurate eigenvalue estimate, scaled to unit max-norm.
///
/// Accepts once the residual is below [`RESIDUAL_TOL`], or below the rounding
/// floor of the product `H v` when the grid is so fine that the floor is larger.
pub fn inverse_iteration(h: &TridiagonalHamiltonian, energy: f64) -> Result<(Vec<f64>, f64)> {
    let n = h.len();
    let (lo, hi) = h.gershgorin();
    let target = RESIDUAL_TOL.max(ROUNDING_FLOOR * lo.abs().max(hi.abs()));
    // smooth, sign-definite start
    let mut v: Vec<f64> = (0..n)
        .map(|i| 1.0 + 0.5 * ((i as f64 + 0.5) / n as f64))
        .collect();
    let mut best = f64::INFINITY;
    for _ in 0..MAX_INVERSE_ITERATIONS {
        let mut y = h.shifted_solve(energy, &v);
        let peak = y.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if !(peak > 0.0) || !peak.is_finite() {
            return Err(Error::Stagnation { residual: f64::NAN });
        }
        y.iter_mut().for_each(|x| *x /= peak);
        let res = h.residual(&y, energy);
        v = y;
        if res < target {
            return Ok(polish(h, energy, v, res));
        }
        if res >= best * 0.999 {
            return Err(Error::Stagnation { residual: res });
        }
        best = res;
    }
    Err(Error::Stagnation { residual: best })
}

/// Extra sweeps after acceptance to wash out nearby levels in the decaying tail.
const POLISH_SWEEPS: usize = 2;

fn polish(
    h: &TridiagonalHamiltonian,
    energy: f64,
    mut v: Vec<f64>,
    mut res: f64,
) -> (Vec<f64>, f64) {
    for _ in 0..POLISH_SWEEPS {
        let mut y = h.shifted_solve(energy, &v);
        let peak = y.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if !(peak > 0.0) || !peak.is_finite() {
            break;
        }
        y.iter_mut().for_each(|x| *x /= peak);
        let r = h.residual(&y, energy);
        if r > res.max(RESIDUAL_TOL) {
            break;
        }
        v = y;
        res = r;
    }
    (v, res)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundState {
    /// Level index within the l-channel; equals the node count for a correct level.
    pub n: u32,
    pub l: u32,
    pub energy: f64,
    pub samples: RadialSamples,
    pub node_count: usize,
    pub converged: bool,
    pub grid_meta: RadialGrid,
    pub residual: f64,
}

/// k-th bound level (0-based) on a fixed grid.
pub fn solve_bound_state<F>(
    potential: F,
    l: u32,
    k: u32,
    grid: &RadialGrid,
    system: &PhysicalSystem,
    centrifugal: Centrifugal,
) -> Result<BoundState>
where
    F: Fn(f64) -> f64,
{
    let h = build_hamiltonian(potential, l, grid, system, centrifugal)?;
    let idx = k as usize;
    let available = count_states_below(&h, 0.0);
    if available <= idx {
        return Err(Error::NoSuchLevel {
            index: idx,
            available,
        });
    }
    let (lo, _) = h.gershgorin();
    let energy = bisect_eigenvalue(&h, idx, lo, 0.0);
    let (mut u, residual) = inverse_iteration(&h, energy)?;

    // sign convention: positive near the origin
    if let Some(first) = u.iter().find(|x| x.abs() > NODE_FLOOR) {
        if *first < 0.0 {
            u.iter_mut().for_each(|x| *x = -*x);
        }
    }
    let node_count = count_sign_changes(&u, NODE_FLOOR);
    let norm = simpson(&u.iter().map(|x| x * x).collect::<Vec<_>>(), grid.spacing()).sqrt();
    let nodes = grid.nodes();
    let values = u.iter().zip(&nodes).map(|(x, r)| x / (norm * r)).collect();
    let mut samples = RadialSamples::new(nodes, values)?;
    samples.normalization = 1.0 / norm;
    Ok(BoundState {
        n: k,
        l,
        energy,
        samples,
        node_count,
        converged: false,
        grid_meta: *grid,
        residual,
    })
}

/// Re-solves on successively refined grids until two energies agree to `tol`.
pub fn refine_to_tolerance<F>(
    potential: F,
    l: u32,
    k: u32,
    system: &PhysicalSystem,
    centrifugal: Centrifugal,
    tol: f64,
    initial: &RadialGrid,
) -> Result<BoundState>
where
    F: Fn(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let mut grid = *initial;
    let mut energies = Vec::new();
    let mut last_missing = None;
    let mut previous: Option<f64> = None;
    for step in 0..=MAX_REFINEMENTS {
        if step > 0 {
            grid = grid.refined()?;
        }
        match solve_bound_state(&potential, l, k, &grid, system, centrifugal) {
            Ok(mut state) => {
                energies.push(state.energy);
                if let Some(prev) = previous {
                    if (state.energy - prev).abs() < tol {
                        state.converged = true;
                        return Ok(state);
                    }
                }
                previous = Some(state.energy);
            }
            Err(err @ Error::NoSuchLevel { .. }) => {
                previous = None;
                last_missing = Some(err);
            }
            Err(other) => return Err(other),
        }
    }
    match (energies.is_empty(), last_missing) {
        (true, Some(err)) => Err(err),
        _ => Err(Error::NotConverged { energies }),
    }
}
