//! Shared fixtures for the criterion benches in `benches/`.

use leafbend::{PhaseKind, RasterImage, SpiralParams, WeightMode};

/// The bent-leaf profile used throughout the benches.
pub fn profile_params() -> SpiralParams {
    SpiralParams::new(PhaseKind::Cornu, -0.78622, 0.7, 2.0, WeightMode::EndWeight).unwrap()
}

/// A monotone projection suitable for image warps.
pub fn warp_params() -> SpiralParams {
    SpiralParams::new(
        PhaseKind::ShiftedEuler { m: 0.6 },
        0.0,
        1.2,
        0.0,
        WeightMode::EndWeight,
    )
    .unwrap()
}

/// Vertical stripe pattern, the usual warping test card.
pub fn stripes(width: usize, height: usize, period: f64) -> RasterImage {
    let data = (0..height)
        .flat_map(|_| {
            (0..width).map(move |x| {
                let v = 127.5 + 100.0 * (2.0 * std::f64::consts::PI * x as f64 / period).sin();
                v.round().clamp(0.0, 255.0) as u8
            })
        })
        .collect();
    RasterImage::new(width, height, 1, data).unwrap()
}
