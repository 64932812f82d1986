//! The two cross-section curve families: generalized Euler spirals (unit-speed
//! curves with polynomial tangent angle) and elastica curves via Jacobi
//! functions.

use crate::error::{Error, Result};
use crate::specfun::{
    jacobi_cn, jacobi_epsilon, phase_integral, EllipticModulus, PhaseKind, Tolerance, Trig,
};

/// A point in the cross-section plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dist(self, other: Self) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

/// Where the lateral stretch weight anchors its zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// w(t) = (l − t)^λ: vanishes at the far end t = l.
    EndWeight,
    /// w(t) = (t − e)^λ: vanishes at the start t = e.
    ArcWeight,
}

/// Parameters of the bent-page spiral model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpiralParams {
    pub phase: PhaseKind,
    /// Arc length where the profile starts (the free edge), e.
    pub s_start: f64,
    /// Arc length where the profile ends (the axial end), l.
    pub s_end: f64,
    /// Stretch exponent λ ≥ 0; λ = 0 disables the stretch.
    pub lambda: f64,
    pub weight: WeightMode,
}

impl SpiralParams {
    pub fn new(
        phase: PhaseKind,
        s_start: f64,
        s_end: f64,
        lambda: f64,
        weight: WeightMode,
    ) -> Result<Self> {
        let p = Self { phase, s_start, s_end, lambda, weight };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.s_start.is_finite() || !self.s_end.is_finite() || self.s_start >= self.s_end {
            return Err(Error::InvalidArgument(format!(
                "need finite s_start < s_end, got [{}, {}]",
                self.s_start, self.s_end
            )));
        }
        if let PhaseKind::ShiftedEuler { m } = self.phase {
            if !m.is_finite() {
                return Err(Error::InvalidArgument(format!("phase parameter m must be finite, got {m}")));
            }
        }
        if !self.lambda.is_finite() || self.lambda < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "stretch exponent must be finite and >= 0, got {}",
                self.lambda
            )));
        }
        Ok(())
    }

    /// Stretch weight w(t). λ = 0 gives the unit weight everywhere (0⁰ = 1).
    pub fn weight_at(&self, t: f64) -> f64 {
        if self.lambda == 0.0 {
            return 1.0;
        }
        let base = match self.weight {
            WeightMode::EndWeight => self.s_end - t,
            WeightMode::ArcWeight => t - self.s_start,
        };
        // Rounding can land t a few ulps outside [s_start, s_end]; a negative
        // base would turn powf into NaN, so extend by zero instead.
        base.max(0.0).powf(self.lambda)
    }
}

/// Parameters of the elastica cross-section curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ElasticaParams {
    pub k: EllipticModulus,
    pub s_start: f64,
    pub s_end: f64,
}

impl ElasticaParams {
    pub fn new(k: EllipticModulus, s_start: f64, s_end: f64) -> Result<Self> {
        if !s_start.is_finite() || !s_end.is_finite() || s_start >= s_end {
            return Err(Error::InvalidArgument(format!(
                "need finite s_start < s_end, got [{s_start}, {s_end}]"
            )));
        }
        Ok(Self { k, s_start, s_end })
    }
}

/// An ordered polyline of (arc length, point) samples.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    samples: Vec<(f64, Point2)>,
}

impl SampledCurve {
    /// Wraps samples after checking they are strictly increasing in s,
    /// at least two, and finite.
    pub fn from_samples(samples: Vec<(f64, Point2)>) -> Result<Self> {
        if samples.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "a sampled curve needs at least 2 samples, got {}",
                samples.len()
            )));
        }
        for pair in samples.windows(2) {
            // partial_cmp so a NaN pair (incomparable) also refuses.
            if pair[0].0.partial_cmp(&pair[1].0) != Some(std::cmp::Ordering::Less) {
                return Err(Error::InvalidArgument(format!(
                    "samples must strictly increase in s ({} then {})",
                    pair[0].0, pair[1].0
                )));
            }
        }
        for &(s, p) in &samples {
            if !s.is_finite() || !p.x.is_finite() || !p.y.is_finite() {
                return Err(Error::InvalidArgument("non-finite sample".into()));
            }
        }
        Ok(Self { samples })
    }

    pub fn samples(&self) -> &[(f64, Point2)] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least 2 samples
    }
}

/// Tangent angle φ(s) of the spiral.
pub fn spiral_phase(s: f64, phase: PhaseKind) -> f64 {
    phase.phase(s)
}

/// Curvature dφ/ds of the spiral.
pub fn spiral_curvature(s: f64, phase: PhaseKind) -> f64 {
    phase.curvature(s)
}

/// Point of the unit-speed spiral: (∫₀ˢ cos φ, ∫₀ˢ sin φ).
pub fn spiral_point(s: f64, phase: PhaseKind, tol: Tolerance) -> Result<Point2> {
    let x = phase_integral(s, phase, Trig::Cos, tol)?;
    let y = phase_integral(s, phase, Trig::Sin, tol)?;
    Ok(Point2::new(x, y))
}

/// Unit tangent (cos φ(s), sin φ(s)).
pub fn spiral_tangent(s: f64, phase: PhaseKind) -> Point2 {
    let phi = phase.phase(s);
    Point2::new(phi.cos(), phi.sin())
}

/// Point of the elastica: (2k·cn(s, k), 2ε(s, k) − s). k = 0 degenerates to
/// the straight rod (0, s).
pub fn elastica_point(s: f64, params: ElasticaParams) -> Point2 {
    let k = params.k;
    Point2::new(
        2.0 * k.k() * jacobi_cn(s, k),
        2.0 * jacobi_epsilon(s, k) - s,
    )
}

/// n points uniform in s over [a, b], endpoints exact.
pub(crate) fn uniform_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    let step = (b - a) / (n - 1) as f64;
    let mut grid: Vec<f64> = (0..n).map(|i| a + step * i as f64).collect();
    grid[n - 1] = b;
    grid
}

/// Cumulative (∫₀ᵗ cos φ, ∫₀ᵗ sin φ) over an ascending grid of t values,
/// integrating each gap once so the whole sweep costs O(n) panels.
pub(crate) fn phase_prefix(
    phase: PhaseKind,
    ts: &[f64],
    tol: Tolerance,
) -> Result<Vec<(f64, f64)>> {
    phase_prefix_checked(phase, ts, tol)
}

fn phase_prefix_checked(phase: PhaseKind, ts: &[f64], tol: Tolerance) -> Result<Vec<(f64, f64)>> {
    use crate::specfun::adaptive_simpson;
    debug_assert!(ts.windows(2).all(|w| w[0] <= w[1]));
    if ts.iter().any(|t| !t.is_finite()) {
        return Err(Error::Domain("non-finite grid point".into()));
    }
    let seg_tol = tol.abs_tol() / (ts.len() as f64 + 1.0);
    let cos_f = move |u: f64| phase.phase(u).cos();
    let sin_f = move |u: f64| phase.phase(u).sin();
    let mut out = Vec::with_capacity(ts.len());
    let mut c = adaptive_simpson(&cos_f, 0.0, ts[0], seg_tol);
    let mut s = adaptive_simpson(&sin_f, 0.0, ts[0], seg_tol);
    out.push((c, s));
    for pair in ts.windows(2) {
        c += adaptive_simpson(&cos_f, pair[0], pair[1], seg_tol);
        s += adaptive_simpson(&sin_f, pair[0], pair[1], seg_tol);
        out.push((c, s));
    }
    Ok(out)
}

/// Sample the spiral uniformly in arc length, endpoints included.
pub fn sample_spiral(params: SpiralParams, n: usize, tol: Tolerance) -> Result<SampledCurve> {
    params.validate()?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2 samples, got {n}")));
    }
    let grid = uniform_grid(params.s_start, params.s_end, n);
    let prefix = phase_prefix(params.phase, &grid, tol)?;
    let samples = grid
        .iter()
        .zip(prefix)
        .map(|(&s, (x, y))| (s, Point2::new(x, y)))
        .collect();
    SampledCurve::from_samples(samples)
}

/// Sample the elastica uniformly in arc length, endpoints included.
pub fn sample_elastica(params: ElasticaParams, n: usize) -> Result<SampledCurve> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2 samples, got {n}")));
    }
    let grid = uniform_grid(params.s_start, params.s_end, n);
    let samples = grid.iter().map(|&s| (s, elastica_point(s, params))).collect();
    SampledCurve::from_samples(samples)
}
