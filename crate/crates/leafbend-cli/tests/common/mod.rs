//! Independent oracles for the acceptance gate: Maclaurin series for the
//! Fresnel integrals, fixed-panel composite Simpson quadrature, and
//! bisection inversion of the first-kind elliptic integral. None of these
//! share an algorithm with the library routines they judge.

#![allow(dead_code)]

use leafbend::{jacobi_dn, EllipticModulus, Point2};

const SERIES_CUTOFF: f64 = 1e-12;

/// C(t) = Σ (−1)ⁿ t^{4n+1} / ((2n)!(4n+1)), truncated at |term| < 1e−12.
pub fn series_fresnel_c(t: f64) -> f64 {
    let t4 = t.powi(4);
    let mut power = t; // t^{4n+1}
    let mut factorial = 1.0; // (2n)!
    let mut sign = 1.0;
    let mut sum = 0.0;
    for n in 0..200u32 {
        let term = sign * power / (factorial * (4 * n + 1) as f64);
        sum += term;
        if term.abs() < SERIES_CUTOFF {
            return sum;
        }
        let k = 2.0 * n as f64;
        factorial *= (k + 1.0) * (k + 2.0);
        power *= t4;
        sign = -sign;
    }
    panic!("series did not converge for t = {t}");
}

/// S(t) = Σ (−1)ⁿ t^{4n+3} / ((2n+1)!(4n+3)), truncated at |term| < 1e−12.
pub fn series_fresnel_s(t: f64) -> f64 {
    let t4 = t.powi(4);
    let mut power = t * t * t; // t^{4n+3}
    let mut factorial = 1.0; // (2n+1)!
    let mut sign = 1.0;
    let mut sum = 0.0;
    for n in 0..200u32 {
        let term = sign * power / (factorial * (4 * n + 3) as f64);
        sum += term;
        if term.abs() < SERIES_CUTOFF {
            return sum;
        }
        let k = 2.0 * n as f64 + 1.0;
        factorial *= (k + 1.0) * (k + 2.0);
        power *= t4;
        sign = -sign;
    }
    panic!("series did not converge for t = {t}");
}

/// Composite Simpson rule with a fixed even panel count.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    assert!(panels >= 2 && panels.is_multiple_of(2));
    let h = (b - a) / panels as f64;
    let mut sum = f(a) + f(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + h * i as f64);
    }
    sum * h / 3.0
}

/// Incomplete elliptic integral of the first kind F(phi, k) by quadrature.
pub fn elliptic_f(phi: f64, k: f64, panels: usize) -> f64 {
    simpson(
        |theta| {
            let s = theta.sin();
            1.0 / (1.0 - (k * s) * (k * s)).sqrt()
        },
        0.0,
        phi,
        panels,
    )
}

/// Jacobi amplitude am(u, k) for 0 <= u <= K(k), by bisecting F(phi, k) = u.
pub fn am_bisect(u: f64, k: f64, panels: usize) -> f64 {
    assert!(u >= 0.0);
    let mut lo = 0.0f64;
    let mut hi = std::f64::consts::FRAC_PI_2;
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if elliptic_f(mid, k, panels) < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// cn(u, k) for |u| <= K(k), via the bisected amplitude (cn is even).
pub fn oracle_cn(u: f64, k: f64, panels: usize) -> f64 {
    am_bisect(u.abs(), k, panels).cos()
}

/// Epsilon by direct quadrature of dn², using the library dn pointwise.
pub fn oracle_epsilon(u: f64, k: f64, panels: usize) -> f64 {
    let modulus = EllipticModulus::new(k).unwrap();
    simpson(
        |v| {
            let d = jacobi_dn(v, modulus);
            d * d
        },
        0.0,
        u,
        panels,
    )
}

/// Parse an `s,x,y` CSV (header required) into rows.
pub fn parse_sxy(text: &str) -> Vec<(f64, Point2)> {
    let mut lines = text.lines();
    assert_eq!(lines.next().map(str::trim), Some("s,x,y"), "bad header");
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut f = l.trim().split(',').map(|v| v.parse::<f64>().unwrap());
            let s = f.next().unwrap();
            let x = f.next().unwrap();
            let y = f.next().unwrap();
            (s, Point2::new(x, y))
        })
        .collect()
}

/// Uniformly distributed f64 in [lo, hi) from a seeded generator.
pub fn uniform(rng: &mut impl rand::Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.gen::<f64>()
}

/// Standard normal via Box–Muller, fully deterministic for a seeded rng.
pub fn gaussian(rng: &mut impl rand::Rng) -> f64 {
    let u1: f64 = rng.gen::<f64>().max(1e-300);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}
