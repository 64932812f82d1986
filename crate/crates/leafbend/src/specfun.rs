//! Special functions underlying the page model: Fresnel-type phase integrals
//! and Jacobi elliptic functions.
//!
//! Conventions: the Fresnel integrals here are C(t) = ∫₀ᵗ cos(u²) du and
//! S(t) = ∫₀ᵗ sin(u²) du (no π/2 normalization). The third argument of every
//! Jacobi function is the **modulus k**, not the parameter m = k²; k = 0
//! degenerates to trigonometric functions, k = 1 to hyperbolic ones.

use crate::error::{Error, Result};

/// Absolute tolerance for the quadrature routines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    abs_tol: f64,
}

impl Tolerance {
    pub fn new(abs_tol: f64) -> Result<Self> {
        if !abs_tol.is_finite() || abs_tol <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be finite and positive, got {abs_tol}"
            )));
        }
        Ok(Self { abs_tol })
    }

    pub fn abs_tol(self) -> f64 {
        self.abs_tol
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { abs_tol: 1e-10 }
    }
}

/// Elliptic modulus k ∈ [0, 1].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EllipticModulus {
    k: f64,
}

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self> {
        if !k.is_finite() || !(0.0..=1.0).contains(&k) {
            return Err(Error::Domain(format!("modulus must lie in [0, 1], got {k}")));
        }
        Ok(Self { k })
    }

    pub fn k(self) -> f64 {
        self.k
    }
}

/// Which trigonometric kernel a phase integral uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Cos,
    Sin,
}

/// Tangent-angle law of the spiral family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PhaseKind {
    /// φ(u) = u², the classical Cornu spiral.
    Cornu,
    /// φ(u) = m·u − u²/2, curvature m − s.
    ShiftedEuler { m: f64 },
}

impl PhaseKind {
    /// Tangent angle φ(u).
    pub fn phase(self, u: f64) -> f64 {
        match self {
            PhaseKind::Cornu => u * u,
            PhaseKind::ShiftedEuler { m } => m * u - u * u / 2.0,
        }
    }

    /// Curvature dφ/ds at arc length s.
    pub fn curvature(self, s: f64) -> f64 {
        match self {
            PhaseKind::Cornu => 2.0 * s,
            PhaseKind::ShiftedEuler { m } => m - s,
        }
    }

    fn validate(self) -> Result<()> {
        if let PhaseKind::ShiftedEuler { m } = self {
            if !m.is_finite() {
                return Err(Error::Domain(format!("phase parameter m must be finite, got {m}")));
            }
        }
        Ok(())
    }
}

/// ∫₀ᵗ cos(φ(u)) du or ∫₀ᵗ sin(φ(u)) du for the given phase law.
pub fn phase_integral(t: f64, phase: PhaseKind, trig: Trig, tol: Tolerance) -> Result<f64> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("integration limit must be finite, got {t}")));
    }
    phase.validate()?;
    let f = move |u: f64| match trig {
        Trig::Cos => phase.phase(u).cos(),
        Trig::Sin => phase.phase(u).sin(),
    };
    Ok(adaptive_simpson(&f, 0.0, t, tol.abs_tol()))
}

/// Fresnel cosine integral C(t) = ∫₀ᵗ cos(u²) du. Odd in t.
pub fn fresnel_c(t: f64, tol: Tolerance) -> Result<f64> {
    phase_integral(t, PhaseKind::Cornu, Trig::Cos, tol)
}

/// Fresnel sine integral S(t) = ∫₀ᵗ sin(u²) du. Odd in t.
pub fn fresnel_s(t: f64, tol: Tolerance) -> Result<f64> {
    phase_integral(t, PhaseKind::Cornu, Trig::Sin, tol)
}

/// Adaptive Simpson quadrature of `f` over [a, b] (either order) to absolute
/// tolerance `tol`, with Richardson extrapolation of the accepted panels.
pub(crate) fn adaptive_simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    if a > b {
        return -adaptive_simpson(f, b, a, tol);
    }
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 0)
}

#[allow(clippy::too_many_arguments)] // recursion carries the shared-endpoint state
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    // Force a few splits so an oscillatory integrand cannot fool the
    // first coarse estimate; cap recursion against pathological inputs.
    const MIN_DEPTH: u32 = 4;
    const MAX_DEPTH: u32 = 48;

    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let refined = left + right;
    let err = refined - whole;

    if depth >= MAX_DEPTH || (depth >= MIN_DEPTH && err.abs() <= 15.0 * tol) {
        return refined + err / 15.0;
    }
    let half = 0.5 * tol;
    simpson_step(f, a, m, fa, flm, fm, left, half, depth + 1)
        + simpson_step(f, m, b, fm, frm, fb, right, half, depth + 1)
}

const AGM_TOL: f64 = 1e-8; // quadratic convergence makes the result good to ~AGM_TOL²

/// Jacobi sn, cn, dn by the arithmetic–geometric mean / descending Landen
/// recursion. `k` is the modulus.
pub fn jacobi_sncndn(u: f64, k: EllipticModulus) -> (f64, f64, f64) {
    let k = k.k();
    if k == 0.0 {
        return (u.sin(), u.cos(), 1.0);
    }
    if k == 1.0 {
        let sech = 1.0 / u.cosh();
        return (u.tanh(), sech, sech);
    }

    let mut emc = 1.0 - k * k; // complementary parameter k'²
    let mut a = 1.0;
    let mut dn = 1.0;
    let mut em = [0.0f64; 16];
    let mut en = [0.0f64; 16];
    let mut c = 0.0;
    let mut last = 0;
    for i in 0..16 {
        last = i;
        em[i] = a;
        emc = emc.sqrt();
        en[i] = emc;
        c = 0.5 * (a + emc);
        if (a - emc).abs() <= AGM_TOL * a {
            break;
        }
        emc *= a;
        a = c;
    }

    let scaled = u * c;
    let mut sn = scaled.sin();
    let mut cn = scaled.cos();
    if sn != 0.0 {
        let mut t = cn / sn;
        c *= t;
        for i in (0..=last).rev() {
            let b = em[i];
            t *= c;
            c *= dn;
            dn = (en[i] + t) / (b + t);
            t = c / b;
        }
        let inv = 1.0 / (c * c + 1.0).sqrt();
        sn = if sn >= 0.0 { inv } else { -inv };
        cn = c * sn;
    }
    (sn, cn, dn)
}

pub fn jacobi_sn(u: f64, k: EllipticModulus) -> f64 {
    jacobi_sncndn(u, k).0
}

pub fn jacobi_cn(u: f64, k: EllipticModulus) -> f64 {
    jacobi_sncndn(u, k).1
}

pub fn jacobi_dn(u: f64, k: EllipticModulus) -> f64 {
    jacobi_sncndn(u, k).2
}

/// Jacobi epsilon ε(u, k) = ∫₀ᵘ dn²(v, k) dv, the elliptic integral of the
/// second kind along the amplitude. ε(u, 0) = u and ε(u, 1) = tanh(u).
pub fn jacobi_epsilon(u: f64, k: EllipticModulus) -> f64 {
    let kv = k.k();
    if kv == 0.0 {
        return u;
    }
    if kv == 1.0 {
        return u.tanh();
    }

    let kp2 = 1.0 - kv * kv;
    let big_k = carlson_rf(0.0, kp2, 1.0);
    let big_e = big_k - kv * kv / 3.0 * carlson_rd(0.0, kp2, 1.0);

    // Reduce to |u_r| ≤ K using ε(u + 2K) = ε(u) + 2E, then integrate the
    // remainder as the incomplete second-kind integral at the amplitude.
    let periods = (u / (2.0 * big_k)).round();
    let ur = u - 2.0 * big_k * periods;
    let (sn, cn, _) = jacobi_sncndn(ur, k);
    let phi = sn.atan2(cn);
    2.0 * periods * big_e + incomplete_e(phi, kv)
}

/// Legendre E(φ, k) via Carlson symmetric forms.
fn incomplete_e(phi: f64, k: f64) -> f64 {
    let s = phi.sin();
    let c2 = phi.cos().powi(2);
    let q = 1.0 - (k * s) * (k * s);
    s * carlson_rf(c2, q, 1.0) - k * k / 3.0 * s.powi(3) * carlson_rd(c2, q, 1.0)
}

const CARLSON_ERRTOL: f64 = 1e-4;

/// Carlson symmetric integral R_F(x, y, z); duplication-theorem iteration.
fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let (ave, dx, dy, dz) = loop {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        let ave = (x + y + z) / 3.0;
        let dx = (ave - x) / ave;
        let dy = (ave - y) / ave;
        let dz = (ave - z) / ave;
        if dx.abs().max(dy.abs()).max(dz.abs()) < CARLSON_ERRTOL {
            break (ave, dx, dy, dz);
        }
    };
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / ave.sqrt()
}

/// Carlson symmetric integral R_D(x, y, z) = R_J(x, y, z, z).
fn carlson_rd(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    let mut sum = 0.0;
    let mut fac = 1.0;
    let (ave, dx, dy, dz) = loop {
        let sx = x.sqrt();
        let sy = y.sqrt();
        let sz = z.sqrt();
        let lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (z + lam));
        fac *= 0.25;
        x = 0.25 * (x + lam);
        y = 0.25 * (y + lam);
        z = 0.25 * (z + lam);
        let ave = 0.2 * (x + y + 3.0 * z);
        let dx = (ave - x) / ave;
        let dy = (ave - y) / ave;
        let dz = (ave - z) / ave;
        if dx.abs().max(dy.abs()).max(dz.abs()) < CARLSON_ERRTOL {
            break (ave, dx, dy, dz);
        }
    };
    let ea = dx * dy;
    let eb = dz * dz;
    let ec = ea - eb;
    let ed = ea - 6.0 * eb;
    let ee = ed + ec + ec;
    let c1 = 3.0 / 14.0;
    let c2 = 1.0 / 6.0;
    let c3 = 9.0 / 22.0;
    let c4 = 3.0 / 26.0;
    let poly = 1.0
        + ed * (-c1 + 0.25 * c3 * ed - 1.5 * c4 * dz * ee)
        + dz * (c2 * ee + dz * (-c3 * ec + dz * c4 * ea));
    3.0 * sum + fac * poly / (ave * ave.sqrt())
}
