//! Monotone lookup table between flat arc-length coordinate s and curved
//! projected coordinate u, plus parameter fitting against observed profiles.

use crate::bentframe::{axial_frame, stretched_polyline, BentProfile};
use crate::curves::{SampledCurve, SpiralParams, WeightMode};
use crate::error::{Error, Result};
use crate::numfmt::format_sig;
use crate::specfun::{PhaseKind, Tolerance};

/// Piecewise-linear table pairing s with u. Built only from strictly
/// monotone data, so the inverse is single-valued.
#[derive(Debug, Clone, PartialEq)]
pub struct FlattenMap {
    knots: Vec<(f64, f64)>,
    increasing: bool,
}

/// Extract the (s, stretched.x) table from a profile and verify monotonicity.
pub fn build_map(profile: &BentProfile) -> Result<FlattenMap> {
    FlattenMap::from_knots(
        profile
            .samples
            .iter()
            .map(|sample| (sample.s, sample.stretched.x))
            .collect(),
    )
}

impl FlattenMap {
    /// Validate and wrap raw knots: at least 8, strictly increasing in s,
    /// strictly monotone in u. The direction of u is detected here.
    pub fn from_knots(knots: Vec<(f64, f64)>) -> Result<Self> {
        if knots.len() < 8 {
            return Err(Error::InvalidArgument(format!(
                "a flatten map needs at least 8 knots, got {}",
                knots.len()
            )));
        }
        for pair in knots.windows(2) {
            // partial_cmp so a NaN pair (incomparable) also refuses.
            if pair[0].0.partial_cmp(&pair[1].0) != Some(std::cmp::Ordering::Less) {
                return Err(Error::InvalidArgument(format!(
                    "knots must strictly increase in s ({} then {})",
                    pair[0].0, pair[1].0
                )));
            }
        }
        if knots.iter().any(|&(s, u)| !s.is_finite() || !u.is_finite()) {
            return Err(Error::InvalidArgument("non-finite knot".into()));
        }
        let increasing = match knots[1].1.partial_cmp(&knots[0].1) {
            Some(std::cmp::Ordering::Greater) => true,
            Some(std::cmp::Ordering::Less) => false,
            _ => return Err(Error::NonMonotone { lo: knots[0].0, hi: knots[1].0 }),
        };
        for pair in knots.windows(2) {
            let step_up = pair[1].1 > pair[0].1;
            if pair[1].1 == pair[0].1 || step_up != increasing {
                return Err(Error::NonMonotone { lo: pair[0].0, hi: pair[1].0 });
            }
        }
        Ok(Self { knots, increasing })
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn is_increasing(&self) -> bool {
        self.increasing
    }

    /// (min, max) of the s column.
    pub fn s_range(&self) -> (f64, f64) {
        (self.knots[0].0, self.knots[self.knots.len() - 1].0)
    }

    /// (min, max) of the u column.
    pub fn u_range(&self) -> (f64, f64) {
        let first = self.knots[0].1;
        let last = self.knots[self.knots.len() - 1].1;
        if self.increasing { (first, last) } else { (last, first) }
    }

    /// u = F(s), linear between knots, exact at knots.
    pub fn forward(&self, s: f64) -> Result<f64> {
        let (lo, hi) = self.s_range();
        if !s.is_finite() || s < lo || s > hi {
            return Err(Error::OutOfDomain { value: s, min: lo, max: hi });
        }
        let idx = self.knots.partition_point(|k| k.0 <= s);
        let i = idx.clamp(1, self.knots.len() - 1) - 1;
        let (s0, u0) = self.knots[i];
        let (s1, u1) = self.knots[i + 1];
        if s == s0 {
            return Ok(u0);
        }
        if s == s1 {
            return Ok(u1);
        }
        Ok(u0 + (s - s0) / (s1 - s0) * (u1 - u0))
    }

    /// s = F⁻¹(u), linear between knots, exact at knots.
    pub fn inverse(&self, u: f64) -> Result<f64> {
        let (lo, hi) = self.u_range();
        if !u.is_finite() || u < lo || u > hi {
            return Err(Error::OutOfDomain { value: u, min: lo, max: hi });
        }
        let idx = if self.increasing {
            self.knots.partition_point(|k| k.1 <= u)
        } else {
            self.knots.partition_point(|k| k.1 >= u)
        };
        let i = idx.clamp(1, self.knots.len() - 1) - 1;
        let (s0, u0) = self.knots[i];
        let (s1, u1) = self.knots[i + 1];
        if u == u0 {
            return Ok(s0);
        }
        if u == u1 {
            return Ok(s1);
        }
        Ok(s0 + (u - u0) / (u1 - u0) * (s1 - s0))
    }

    /// Serialize as `s,u` CSV with 9 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,u\n");
        for &(s, u) in &self.knots {
            out.push_str(&format_sig(s, 9));
            out.push(',');
            out.push_str(&format_sig(u, 9));
            out.push('\n');
        }
        out
    }

    /// Parse the CSV form written by `to_csv`.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        match lines.next().map(str::trim) {
            Some("s,u") => {}
            other => {
                return Err(Error::Format(format!(
                    "expected header 's,u', got {:?}",
                    other.unwrap_or("")
                )))
            }
        }
        let mut knots = Vec::new();
        for (idx, line) in lines.enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (s, u) = line
                .split_once(',')
                .ok_or_else(|| Error::Format(format!("line {}: missing comma", idx + 2)))?;
            let parse = |v: &str| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Format(format!("line {}: bad number {v:?}", idx + 2)))
            };
            knots.push((parse(s)?, parse(u)?));
        }
        Self::from_knots(knots)
    }
}

/// One fit search axis: uniform grid of `count` values over [min, max].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridAxis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self> {
        let axis = Self { min, max, count };
        axis.validate()?;
        Ok(axis)
    }

    fn validate(&self) -> Result<()> {
        if self.count == 0 || !self.min.is_finite() || !self.max.is_finite() || self.min > self.max
        {
            return Err(Error::InvalidArgument(format!(
                "grid axis needs count >= 1 and finite min <= max, got [{}, {}] x {}",
                self.min, self.max, self.count
            )));
        }
        Ok(())
    }

    fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        let mut v: Vec<f64> = (0..self.count).map(|i| self.min + step * i as f64).collect();
        v[self.count - 1] = self.max;
        v
    }

    fn spacing(&self) -> f64 {
        if self.count > 1 {
            (self.max - self.min) / (self.count - 1) as f64
        } else {
            (self.max - self.min).max(1e-3)
        }
    }
}

/// Search region for `fit_params`. `m` present switches the family to the
/// shifted Euler phase with m as a fourth axis; absent means Cornu.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitGrid {
    pub l: GridAxis,
    pub e: GridAxis,
    pub lambda: GridAxis,
    pub m: Option<GridAxis>,
    pub weight: WeightMode,
}

/// Recovered parameters with the residual of the final candidate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult {
    pub params: SpiralParams,
    pub rms_residual: f64,
    pub iterations: u64,
}

// Candidate vector order: [l, e, lambda, m].
struct Objective<'a> {
    observed: &'a SampledCurve,
    fractions: Vec<f64>,
    weight: WeightMode,
    use_m: bool,
    tol: Tolerance,
    evals: u64,
}

impl<'a> Objective<'a> {
    fn new(observed: &'a SampledCurve, weight: WeightMode, use_m: bool, tol: Tolerance) -> Self {
        let samples = observed.samples();
        let s0 = samples[0].0;
        let span = samples[samples.len() - 1].0 - s0;
        let fractions = samples.iter().map(|&(s, _)| (s - s0) / span).collect();
        Self { observed, fractions, weight, use_m, tol, evals: 0 }
    }

    /// RMS point distance between the observed polyline and the candidate
    /// profile at matching arc fractions. None for infeasible candidates.
    fn rms(&mut self, cand: [f64; 4]) -> Result<Option<f64>> {
        self.evals += 1;
        let [l, e, lambda, m] = cand;
        if e >= l - 1e-9 {
            return Ok(None);
        }
        let phase = if self.use_m {
            PhaseKind::ShiftedEuler { m }
        } else {
            PhaseKind::Cornu
        };
        let params = match SpiralParams::new(phase, e, l, lambda, self.weight) {
            Ok(p) => p,
            Err(_) => return Ok(None),
        };
        let frame = match axial_frame(params, self.tol) {
            Ok(f) => f,
            Err(_) => return Ok(None),
        };
        let ts: Vec<f64> = self
            .fractions
            .iter()
            .map(|&f| (e + f * (l - e)).clamp(e, l))
            .collect();
        let points = stretched_polyline(&params, &frame, &ts, self.tol)?;
        let sum_sq: f64 = points
            .iter()
            .zip(self.observed.samples())
            .map(|(p, &(_, q))| {
                let d = p.dist(q);
                d * d
            })
            .sum();
        let rms = (sum_sq / points.len() as f64).sqrt();
        if !rms.is_finite() {
            return Err(Error::Numeric(format!(
                "residual is not finite at l={l}, e={e}, lambda={lambda}"
            )));
        }
        Ok(Some(rms))
    }
}

const GOLDEN_RATIO_CONJ: f64 = 0.618_033_988_749_894_9;

/// Coarse grid search followed by coordinate-wise golden-section refinement,
/// clamped to the grid's ranges. Deterministic for identical inputs.
pub fn fit_params(observed: &SampledCurve, grid: &FitGrid, tol: Tolerance) -> Result<FitResult> {
    if observed.len() < 16 {
        return Err(Error::InvalidArgument(format!(
            "fit needs at least 16 observed samples, got {}",
            observed.len()
        )));
    }
    grid.l.validate()?;
    grid.e.validate()?;
    grid.lambda.validate()?;
    if let Some(m) = &grid.m {
        m.validate()?;
    }

    let mut obj = Objective::new(observed, grid.weight, grid.m.is_some(), tol);
    let m_axis = grid.m.unwrap_or(GridAxis { min: 0.0, max: 0.0, count: 1 });

    let mut best: Option<([f64; 4], f64)> = None;
    for &l in &grid.l.values() {
        for &e in &grid.e.values() {
            for &lambda in &grid.lambda.values() {
                for &m in &m_axis.values() {
                    let cand = [l, e, lambda, m];
                    if let Some(rms) = obj.rms(cand)? {
                        if best.is_none_or(|(_, b)| rms < b) {
                            best = Some((cand, rms));
                        }
                    }
                }
            }
        }
    }
    let (mut best_cand, mut best_rms) = best.ok_or_else(|| {
        Error::InvalidArgument("no feasible candidate in the search grid".into())
    })?;

    // Coordinate-wise golden-section refinement around the best grid cell,
    // never leaving the grid's own ranges.
    let axes: [(usize, GridAxis); 4] =
        [(0, grid.l), (1, grid.e), (2, grid.lambda), (3, m_axis)];
    const CYCLES: usize = 60;
    const SECTION_STEPS: usize = 80;
    for _ in 0..CYCLES {
        let before = best_rms;
        for &(idx, axis) in &axes {
            if axis.min == axis.max {
                continue;
            }
            let lo = (best_cand[idx] - axis.spacing()).max(axis.min);
            let hi = (best_cand[idx] + axis.spacing()).min(axis.max);
            let (x, fx) =
                golden_section(&mut obj, best_cand, idx, lo, hi, SECTION_STEPS, best_rms)?;
            if fx < best_rms {
                best_rms = fx;
                best_cand[idx] = x;
            }
        }
        if before - best_rms < 1e-16 {
            break;
        }
    }

    let [l, e, lambda, m] = best_cand;
    let phase = if grid.m.is_some() {
        PhaseKind::ShiftedEuler { m }
    } else {
        PhaseKind::Cornu
    };
    let params = SpiralParams::new(phase, e, l, lambda, grid.weight)?;
    Ok(FitResult { params, rms_residual: best_rms, iterations: obj.evals })
}

fn golden_section(
    obj: &mut Objective,
    base: [f64; 4],
    idx: usize,
    mut a: f64,
    mut b: f64,
    steps: usize,
    seed_best: f64,
) -> Result<(f64, f64)> {
    let eval = |obj: &mut Objective, x: f64| -> Result<f64> {
        let mut cand = base;
        cand[idx] = x;
        Ok(obj.rms(cand)?.unwrap_or(f64::INFINITY))
    };
    let mut best_x = base[idx];
    let mut best_f = seed_best;
    let mut x1 = b - GOLDEN_RATIO_CONJ * (b - a);
    let mut x2 = a + GOLDEN_RATIO_CONJ * (b - a);
    let mut f1 = eval(obj, x1)?;
    let mut f2 = eval(obj, x2)?;
    for _ in 0..steps {
        if f1 < best_f {
            best_f = f1;
            best_x = x1;
        }
        if f2 < best_f {
            best_f = f2;
            best_x = x2;
        }
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - GOLDEN_RATIO_CONJ * (b - a);
            f1 = eval(obj, x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + GOLDEN_RATIO_CONJ * (b - a);
            f2 = eval(obj, x2)?;
        }
        if (b - a).abs() < 1e-13 {
            break;
        }
    }
    Ok((best_x, best_f))
}
