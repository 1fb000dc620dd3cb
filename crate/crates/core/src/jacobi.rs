//! Jacobi polynomials `P_n^(a,b)(x)`.

use crate::error::{Error, Result};

/// `P_n^(a,b)(x)` on the orthogonality interval, with the classical parameter range.
pub fn jacobi_eval(n: u32, a: f64, b: f64, x: f64) -> Result<f64> {
    if !(a > -1.0) || !(b > -1.0) {
        return Err(Error::Domain(format!(
            "Jacobi parameters must exceed -1, got ({a}, {b})"
        )));
    }
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "Jacobi argument {x} outside [-1, 1]"
        )));
    }
    Ok(jacobi_value(n, a, b, x))
}

/// Three-term recurrence, valid for every real `x` and any parameters; the
/// explicit sum takes over when a recurrence denominator vanishes.
pub fn jacobi_value(n: u32, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    if n == 1 {
        return p1;
    }
    let mut prev = 1.0;
    let mut cur = p1;
    for k in 2..=n {
        let k = f64::from(k);
        let s = 2.0 * k + a + b;
        let denom = 2.0 * k * (k + a + b) * (s - 2.0);
        if denom == 0.0 {
            return jacobi_explicit(n, a, b, x);
        }
        let next = ((s - 1.0) * (s * (s - 2.0) * x + a * a - b * b) * cur
            - 2.0 * (k + a - 1.0) * (k + b - 1.0) * s * prev)
            / denom;
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized binomial coefficient `z (z-1) ... (z-k+1) / k!`.
pub fn binomial(z: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (z - f64::from(i)) / f64::from(i + 1))
}

/// `sum_s C(n+a, n-s) C(n+b, s) ((x-1)/2)^s ((x+1)/2)^(n-s)`.
pub fn jacobi_explicit(n: u32, a: f64, b: f64, x: f64) -> f64 {
    let nf = f64::from(n);
    let lo = 0.5 * (x - 1.0);
    let hi = 0.5 * (x + 1.0);
    (0..=n)
        .map(|s| {
            binomial(nf + a, n - s)
                * binomial(nf + b, s)
                * lo.powi(s as i32)
                * hi.powi((n - s) as i32)
        })
        .sum()
}
