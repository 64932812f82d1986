//! Rigid transform placing the curve's axial end at the origin with the
//! start-to-end chord along the x-axis, plus the lateral stretch weighting.

use crate::curves::{phase_prefix, spiral_point, uniform_grid, Point2, SpiralParams};
use crate::error::{Error, Result};
use crate::specfun::Tolerance;

pub use crate::curves::WeightMode;

/// The rigid motion of the transform: rotation angle θ and the pivot point
/// (the spiral's value at s = l) that is carried to the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame {
    pub rotation: f64,
    pub pivot: Point2,
}

/// One profile sample: the rigidly transformed point and its stretched image.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    pub s: f64,
    pub transformed: Point2,
    pub stretched: Point2,
}

/// The bent-page profile: parameters, frame, and uniform samples.
#[derive(Debug, Clone, PartialEq)]
pub struct BentProfile {
    pub params: SpiralParams,
    pub frame: Frame,
    pub samples: Vec<ProfileSample>,
}

/// Compute the frame for the given parameters: pivot at the curve's end
/// point, rotation from the two-argument arctangent of the end→start chord.
pub fn axial_frame(params: SpiralParams, tol: Tolerance) -> Result<Frame> {
    params.validate()?;
    let end = spiral_point(params.s_end, params.phase, tol)?;
    let start = spiral_point(params.s_start, params.phase, tol)?;
    let (dx, dy) = (start.x - end.x, start.y - end.y);
    if dx.hypot(dy) < 1e-12 {
        return Err(Error::Geometry(format!(
            "chord between s = {} and s = {} is degenerate",
            params.s_start, params.s_end
        )));
    }
    Ok(Frame { rotation: dy.atan2(dx), pivot: end })
}

// Reflected rotation about the pivot: x' = c·dx + s·dy, y' = s·dx − c·dy.
// This is an improper isometry (determinant −1); it maps the pivot to the
// origin and the chord direction onto the +x axis.
fn apply_frame(p: Point2, frame: &Frame) -> Point2 {
    let (c, s) = (frame.rotation.cos(), frame.rotation.sin());
    let dx = p.x - frame.pivot.x;
    let dy = p.y - frame.pivot.y;
    Point2::new(c * dx + s * dy, s * dx - c * dy)
}

fn check_domain(t: f64, params: &SpiralParams) -> Result<()> {
    if !t.is_finite() || t < params.s_start || t > params.s_end {
        return Err(Error::OutOfDomain {
            value: t,
            min: params.s_start,
            max: params.s_end,
        });
    }
    Ok(())
}

/// The spiral point at t, rigidly moved so the axial end sits at the origin.
pub fn transformed_point(
    t: f64,
    params: SpiralParams,
    frame: &Frame,
    tol: Tolerance,
) -> Result<Point2> {
    check_domain(t, &params)?;
    let p = spiral_point(t, params.phase, tol)?;
    Ok(apply_frame(p, frame))
}

/// The transformed point with both components scaled by the stretch weight.
pub fn stretched_point(
    t: f64,
    params: SpiralParams,
    frame: &Frame,
    tol: Tolerance,
) -> Result<Point2> {
    let p = transformed_point(t, params, frame, tol)?;
    let w = params.weight_at(t);
    Ok(Point2::new(p.x * w, p.y * w))
}

/// Build the full profile: n samples uniform in s, each with its transformed
/// and stretched coordinates.
pub fn build_profile(params: SpiralParams, n: usize, tol: Tolerance) -> Result<BentProfile> {
    params.validate()?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need n >= 2 samples, got {n}")));
    }
    let frame = axial_frame(params, tol)?;
    let grid = uniform_grid(params.s_start, params.s_end, n);
    let samples = profile_samples(&params, &frame, &grid, tol)?;
    Ok(BentProfile { params, frame, samples })
}

/// Stretched profile points at an arbitrary ascending list of arc lengths;
/// shares one cumulative integration sweep across all of them.
pub(crate) fn stretched_polyline(
    params: &SpiralParams,
    frame: &Frame,
    ts: &[f64],
    tol: Tolerance,
) -> Result<Vec<Point2>> {
    let prefix = phase_prefix(params.phase, ts, tol)?;
    Ok(ts
        .iter()
        .zip(prefix)
        .map(|(&t, (x, y))| {
            let p = apply_frame(Point2::new(x, y), frame);
            let w = params.weight_at(t);
            Point2::new(p.x * w, p.y * w)
        })
        .collect())
}

fn profile_samples(
    params: &SpiralParams,
    frame: &Frame,
    grid: &[f64],
    tol: Tolerance,
) -> Result<Vec<ProfileSample>> {
    let prefix = phase_prefix(params.phase, grid, tol)?;
    Ok(grid
        .iter()
        .zip(prefix)
        .map(|(&s, (x, y))| {
            let transformed = apply_frame(Point2::new(x, y), frame);
            let w = params.weight_at(s);
            ProfileSample {
                s,
                transformed,
                stretched: Point2::new(transformed.x * w, transformed.y * w),
            }
        })
        .collect())
}
