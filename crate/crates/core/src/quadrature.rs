//! Composite Simpson on uniform samples and Gauss-Legendre rules.

use crate::error::{Error, Result};

/// Composite Simpson on uniformly spaced samples.
///
/// An odd number of intervals is closed with Simpson's 3/8 rule on the last
/// three. Two samples fall back to the trapezoid.
pub fn simpson(values: &[f64], h: f64) -> f64 {
    let m = values.len();
    match m {
        0 | 1 => 0.0,
        2 => 0.5 * h * (values[0] + values[1]),
        3 => h / 3.0 * (values[0] + 4.0 * values[1] + values[2]),
        _ => {
            let intervals = m - 1;
            let (even_end, tail) = if intervals % 2 == 0 {
                (m - 1, 0.0)
            } else {
                (m - 4, three_eighths(&values[m - 4..], h))
            };
            let mut odd = 0.0;
            let mut even = 0.0;
            for i in 1..even_end {
                if i % 2 == 1 {
                    odd += values[i];
                } else {
                    even += values[i];
                }
            }
            if even_end == 0 {
                return tail;
            }
            h / 3.0 * (values[0] + 4.0 * odd + 2.0 * even + values[even_end]) + tail
        }
    }
}

fn three_eighths(v: &[f64], h: f64) -> f64 {
    3.0 * h / 8.0 * (v[0] + 3.0 * v[1] + 3.0 * v[2] + v[3])
}

/// A Simpson value with its Richardson error estimate from the doubled spacing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimpsonEstimate {
    pub value: f64,
    pub coarse: f64,
    pub error: f64,
}

impl SimpsonEstimate {
    /// Ratio test: the fine and coarse results agree to `rel`.
    pub fn converged(&self, rel: f64) -> bool {
        self.error <= rel * self.value.abs().max(f64::MIN_POSITIVE)
    }
}

pub fn simpson_with_estimate(values: &[f64], h: f64) -> SimpsonEstimate {
    let value = simpson(values, h);
    // coarse rule on every other sample, keeping the endpoint when it falls off the stride
    let coarse_samples: Vec<f64> = values.iter().step_by(2).copied().collect();
    let coarse = if values.len() % 2 == 1 {
        simpson(&coarse_samples, 2.0 * h)
    } else {
        let last = values.len() - 1;
        simpson(&coarse_samples, 2.0 * h) + 0.5 * h * (values[last - 1] + values[last])
    };
    SimpsonEstimate {
        value,
        coarse,
        error: (value - coarse).abs() / 15.0,
    }
}

/// Spacing of a uniform grid, or an error naming the first irregular step.
pub fn uniform_spacing(grid: &[f64]) -> Result<f64> {
    if grid.len() < 2 {
        return Err(Error::Grid("need at least two grid points".into()));
    }
    let h = (grid[grid.len() - 1] - grid[0]) / (grid.len() - 1) as f64;
    if !(h > 0.0) {
        return Err(Error::Grid("grid must be strictly increasing".into()));
    }
    for (i, w) in grid.windows(2).enumerate() {
        if ((w[1] - w[0]) - h).abs() > 1e-8 * h {
            return Err(Error::Grid(format!("non-uniform spacing at index {i}")));
        }
    }
    Ok(h)
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "Gauss-Legendre order must be positive");
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let nf = order as f64;
        for i in 0..(order + 1) / 2 {
            // Tricomi initial guess, then Newton on P_n
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(order, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(order, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[order - 1 - i] = x;
            weights[i] = w;
            weights[order - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simpson_is_exact_for_cubics() {
        let h = 0.1;
        for m in [3usize, 4, 5, 8, 11] {
            let v: Vec<f64> = (0..m)
                .map(|i| (i as f64 * h).powi(3) - 2.0 * (i as f64 * h))
                .collect();
            let b = (m - 1) as f64 * h;
            let exact = b.powi(4) / 4.0 - b * b;
            assert!((simpson(&v, h) - exact).abs() < 1e-14, "m = {m}");
        }
    }

    #[test]
    fn richardson_estimate_tracks_error() {
        let h = 0.01;
        let v: Vec<f64> = (0..=1000).map(|i| (i as f64 * h).sin()).collect();
        let est = simpson_with_estimate(&v, h);
        let exact = 1.0 - 10f64.cos();
        assert!((est.value - exact).abs() < 1e-9);
        assert!(est.error < 1e-8);
        assert!(est.converged(1e-8));
    }

    #[test]
    fn gauss_legendre_weights_and_polynomials() {
        for order in [1usize, 2, 5, 16, 64] {
            let gl = GaussLegendre::new(order);
            let total: f64 = gl.weights().iter().sum();
            assert!((total - 2.0).abs() < 1e-13, "order {order}");
            let deg = 2 * order - 2;
            let exact = if deg % 2 == 0 {
                2.0 / (deg as f64 + 1.0)
            } else {
                0.0
            };
            let got = gl.integrate(|x| x.powi(deg as i32), -1.0, 1.0);
            assert!((got - exact).abs() < 1e-13);
        }
    }

    #[test]
    fn spacing_checks() {
        assert_eq!(uniform_spacing(&[0.0, 0.5, 1.0]).unwrap(), 0.5);
        assert!(uniform_spacing(&[0.0, 0.4, 1.0]).is_err());
        assert!(uniform_spacing(&[1.0]).is_err());
        assert!(uniform_spacing(&[1.0, 0.0]).is_err());
    }
}
