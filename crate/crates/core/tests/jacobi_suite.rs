use wsbound_core::jacobi::{jacobi_eval, jacobi_explicit, jacobi_value};
use wsbound_core::quadrature::GaussLegendre;
use wsbound_core::wavefunction::{rodrigues_chi, WavefunctionSpec};
use wsbound_core::{Family, PotentialParams};

const PAIRS: [(f64, f64); 4] = [(0.0, 0.0), (0.5, 0.5), (1.0, 2.5), (2.5, 0.5)];

/// Weighted inner product on [-1, 1] through x = cos(theta), which turns the
/// endpoint weights into smooth powers of sin(theta/2) and cos(theta/2).
fn inner(m: u32, n: u32, a: f64, b: f64, gl: &GaussLegendre) -> f64 {
    gl.integrate(
        |t| {
            let x = t.cos();
            let (sh, ch) = ((0.5 * t).sin(), (0.5 * t).cos());
            let w = 2f64.powf(a + b + 1.0) * sh.powf(2.0 * a + 1.0) * ch.powf(2.0 * b + 1.0);
            w * jacobi_value(m, a, b, x) * jacobi_value(n, a, b, x)
        },
        0.0,
        std::f64::consts::PI,
    )
}

#[test]
fn orthogonality() {
    let gl = GaussLegendre::new(64);
    for (a, b) in PAIRS {
        let norms: Vec<f64> = (0..=8).map(|n| inner(n, n, a, b, &gl)).collect();
        assert!(norms.iter().all(|&h| h > 0.0));
        for m in 0..=8u32 {
            for n in 0..m {
                let scaled =
                    inner(m, n, a, b, &gl) / (norms[m as usize] * norms[n as usize]).sqrt();
                assert!(
                    scaled.abs() < 1e-10,
                    "(a, b) = ({a}, {b}), m = {m}, n = {n}: {scaled:e}"
                );
            }
        }
    }
}

#[test]
fn legendre_norms_are_classical() {
    let gl = GaussLegendre::new(64);
    for n in 0..=8u32 {
        let h = inner(n, n, 0.0, 0.0, &gl);
        assert!((h - 2.0 / (2.0 * f64::from(n) + 1.0)).abs() < 1e-13);
    }
}

fn integer_binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn endpoint_identity() {
    for a in 0..=3u64 {
        for b in [0.0, 0.5, 2.5] {
            for n in 0..=6u64 {
                let expected = integer_binomial(n + a, n) as f64;
                let got = jacobi_eval(n as u32, a as f64, b, 1.0).unwrap();
                assert!(
                    ((got - expected) / expected).abs() < 1e-13,
                    "a={a} b={b} n={n}: {got} vs {expected}"
                );
            }
        }
    }
}

#[test]
fn explicit_low_orders() {
    for (a, b) in PAIRS.iter().copied().chain([(3.2, -0.4), (-0.5, 1.7)]) {
        for i in 0..=20 {
            let x = -1.0 + 0.1 * f64::from(i);
            let t = x - 1.0;
            let p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * t;
            let p2 = 0.5 * (a + 1.0) * (a + 2.0)
                + 0.5 * (a + 2.0) * (a + b + 3.0) * t
                + (a + b + 3.0) * (a + b + 4.0) * t * t / 8.0;
            assert!((jacobi_eval(1, a, b, x).unwrap() - p1).abs() < 1e-13 * p1.abs().max(1.0));
            assert!((jacobi_eval(2, a, b, x).unwrap() - p2).abs() < 1e-13 * p2.abs().max(1.0));
            let e3 = jacobi_explicit(3, a, b, x);
            assert!((jacobi_value(3, a, b, x) - e3).abs() < 1e-13 * e3.abs().max(1.0));
        }
    }
}

#[test]
fn symmetry_under_reflection() {
    for (a, b) in PAIRS {
        for n in 0..=8u32 {
            for x in [-0.9, -0.2, 0.35, 0.8] {
                let lhs = jacobi_value(n, a, b, -x);
                let rhs = if n % 2 == 0 { 1.0 } else { -1.0 } * jacobi_value(n, b, a, x);
                assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0));
            }
        }
    }
}

fn rodrigues_spec(c: f64, p: f64, q: f64) -> WavefunctionSpec {
    let params = PotentialParams::new(1.0, 1.0, 0.5, Family::GeneralizedWs, Some(c)).unwrap();
    WavefunctionSpec {
        a_exp: 2.0 * p,
        b_exp: q,
        n: 0,
        params,
        sqrt_eta2: 0.0,
        mu: 0.0,
        nu: 0.0,
    }
}

/// `s^-p (c+s)^-q d^n/ds^n [s^(n+p) (c+s)^(n+q)]` by central differences.
fn rodrigues_fd(c: f64, p: f64, q: f64, s: f64, n: u32) -> f64 {
    let f = |x: f64| x.powf(f64::from(n) + p) * (c + x).powf(f64::from(n) + q);
    let deriv = match n {
        1 => {
            let h = 1e-5 * s;
            (f(s + h) - f(s - h)) / (2.0 * h)
        }
        2 => {
            let h = 1e-3 * s;
            (-f(s + 2.0 * h) + 16.0 * f(s + h) - 30.0 * f(s) + 16.0 * f(s - h) - f(s - 2.0 * h))
                / (12.0 * h * h)
        }
        _ => unreachable!(),
    };
    deriv * s.powf(-p) * (c + s).powf(-q)
}

#[test]
fn rodrigues_matches_finite_differences() {
    for (c, p, q) in [(2.0, 0.7, 0.9), (0.5, 1.5, 0.25), (3.0, 0.0, 2.0)] {
        let spec = rodrigues_spec(c, p, q);
        for n in 1..=2u32 {
            for i in 0..10 {
                let s = 0.2 + 0.45 * f64::from(i);
                let closed = rodrigues_chi(&spec, s, n).unwrap();
                let fd = rodrigues_fd(c, p, q, s, n);
                assert!(
                    ((closed - fd) / fd).abs() < 1e-6,
                    "c={c} n={n} s={s}: {closed} vs {fd}"
                );
            }
        }
    }
}
