//! Second, straight-line transcription of the closed-form energies.
//!
//! Written term by term from the printed formulas without sharing any code
//! with `wsbound_core::spectrum`. `None` marks an undefined evaluation.

#![allow(dead_code)]

pub struct Units {
    pub hbar: f64,
    pub mass: f64,
}

pub const NATURAL: Units = Units {
    hbar: 1.0,
    mass: 1.0,
};

fn delta0(l: u32, alpha: f64, u: &Units) -> f64 {
    let l = l as f64;
    2.0 * u.hbar * u.hbar * l * (l + 1.0) / (u.mass * alpha * alpha)
}

pub fn large_c(
    v0: f64,
    alpha: f64,
    c: f64,
    l: u32,
    n: u32,
    u: &Units,
    reading_b: bool,
) -> Option<f64> {
    if c == 0.0 || c == -1.0 {
        return None;
    }
    let (h, m) = (u.hbar, u.mass);
    let d0 = delta0(l, alpha, u);
    let n = n as f64;
    let under_root = 2.0 * c - (2.0 * m / (h * h * alpha * alpha)) * (v0 / (1.0 + c) + c * d0);
    if !(under_root > 0.0) {
        return None;
    }
    let first_bracket = 2.0 * c - (4.0 * m / (h * h * alpha * alpha)) * (v0 / (1.0 + c) + c * d0);
    let leading = if reading_b {
        2.0 / under_root.sqrt()
    } else {
        2.0 * n / under_root.sqrt()
    };
    let last_bracket = leading + (4.0 + c - 3.0 * n * (n - 1.0)) / (2.0 * under_root) - 1.0 / c;
    let e = 1.0 + d0 + v0 / ((1.0 + c) * (1.0 + c))
        - 0.5 * (h * h * alpha * alpha / m)
        - 0.25 * (2.0 * h * alpha / m).powi(2) * first_bracket * (c - 1.0)
        - (2.0 * h * h * alpha * alpha / m) * last_bracket.powi(2);
    e.is_finite().then_some(e)
}

pub fn small_c(
    v0: f64,
    alpha: f64,
    c: f64,
    l: u32,
    n: u32,
    u: &Units,
    reading_b: bool,
) -> Option<f64> {
    if c == 0.0 {
        return None;
    }
    let (h, m) = (u.hbar, u.mass);
    let d0 = delta0(l, alpha, u);
    let n = n as f64;
    let under_root = 2.0 * c - (2.0 * m / (h * h * alpha * alpha)) * (v0 * (1.0 - c) + c * d0);
    if !(under_root > 0.0) {
        return None;
    }
    let second = (1.0 / (4.0 * m))
        * (h * alpha).powi(2)
        * (2.0 * c - (2.0 * m / (h * h * alpha * alpha)) * (v0 * (1.0 - c) + 2.0 * d0 * c))
        * (c - 1.0);
    let last_bracket = 2.0 * n / (c * under_root.sqrt())
        + (4.0 + c - 3.0 * n * (n - 1.0)) / (2.0 * under_root)
        - 1.0 / c;
    let tail = if reading_b {
        last_bracket
    } else {
        last_bracket.powi(2)
    };
    let e = 1.0 + d0 - 0.5 * (h * h * alpha * alpha / m) + v0 * (1.0 - 2.0 * c) + second
        - (2.0 * h * h * alpha * alpha / m) * tail;
    e.is_finite().then_some(e)
}

pub fn standard_ws(v0: f64, alpha: f64, l: u32, n: u32, u: &Units, reading_b: bool) -> Option<f64> {
    let (h, m) = (u.hbar, u.mass);
    let d0 = delta0(l, alpha, u);
    let n = n as f64;
    let under_root = 2.0 - (2.0 * m / (h * h * alpha * alpha)) * (v0 / 2.0 + d0);
    if !(under_root > 0.0) {
        return None;
    }
    let leading = if reading_b {
        2.0 / under_root.sqrt()
    } else {
        2.0 * n / under_root.sqrt()
    };
    let bracket = leading + (5.0 - 3.0 * n * (n - 1.0)) / (2.0 * under_root) - 1.0;
    Some(
        1.0 + d0 + v0 / 4.0
            - 0.5 * (h * h * alpha * alpha / m)
            - (2.0 * h * h * alpha * alpha / m) * bracket.powi(2),
    )
}

pub fn hulthen_printed(v0: f64, alpha: f64, l: u32, n: u32, u: &Units) -> Option<f64> {
    let (h, m) = (u.hbar, u.mass);
    let d0 = delta0(l, alpha, u);
    let n = n as f64;
    let under_root = -2.0 - (2.0 * m / (h * h * alpha * alpha)) * (2.0 * v0 - d0);
    if !(under_root > 0.0) {
        return None;
    }
    let bracket =
        2.0 * n / under_root.sqrt() + 3.0 * (1.0 - n * (n - 1.0)) / (2.0 * under_root) + 1.0;
    Some(
        1.0 + d0 - 0.5 * (h * h * alpha * alpha / m) + 3.0 * v0
            - (1.0 / (2.0 * m))
                * (h * alpha).powi(2)
                * (-2.0 - (4.0 * m / (h * h * alpha * alpha)) * (v0 - d0))
            + (2.0 * h * h * alpha * alpha / m) * bracket,
    )
}
