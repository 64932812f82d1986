//! Registered parameter sets behind `--preset figN`.

use crate::curves::{ElasticaParams, SpiralParams, WeightMode};
use crate::specfun::{EllipticModulus, PhaseKind};

/// Free-edge arc length e of the bent-page profile presets.
pub const PROFILE_E: f64 = -0.78622;
/// Axial-end arc length l of the bent-page profile presets.
pub const PROFILE_L: f64 = 2.170803;
/// Elastica modulus of the fig3 preset.
pub const ELASTICA_K: f64 = 0.3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Raw Cornu spiral over [0, 7π/6].
    Fig2,
    /// Elastica with k = 0.3 over [0, 1].
    Fig3,
    /// Bent profile, unstretched (λ = 0).
    Fig4,
    /// Bent profile, laterally stretched with weight (l − t)².
    Fig5,
}

/// Which curve family a preset draws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PresetModel {
    Spiral(SpiralParams),
    Elastica(ElasticaParams),
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::Fig2, Preset::Fig3, Preset::Fig4, Preset::Fig5];

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "fig2" => Some(Preset::Fig2),
            "fig3" => Some(Preset::Fig3),
            "fig4" => Some(Preset::Fig4),
            "fig5" => Some(Preset::Fig5),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Fig4 => "fig4",
            Preset::Fig5 => "fig5",
        }
    }

    pub fn model(self) -> PresetModel {
        match self {
            Preset::Fig2 => PresetModel::Spiral(
                SpiralParams::new(
                    PhaseKind::Cornu,
                    0.0,
                    7.0 * std::f64::consts::PI / 6.0,
                    0.0,
                    WeightMode::EndWeight,
                )
                .expect("fig2 constants are valid"),
            ),
            Preset::Fig3 => PresetModel::Elastica(
                ElasticaParams::new(
                    EllipticModulus::new(ELASTICA_K).expect("fig3 modulus is valid"),
                    0.0,
                    1.0,
                )
                .expect("fig3 constants are valid"),
            ),
            Preset::Fig4 => PresetModel::Spiral(
                SpiralParams::new(PhaseKind::Cornu, PROFILE_E, PROFILE_L, 0.0, WeightMode::EndWeight)
                    .expect("fig4 constants are valid"),
            ),
            Preset::Fig5 => PresetModel::Spiral(
                SpiralParams::new(PhaseKind::Cornu, PROFILE_E, PROFILE_L, 2.0, WeightMode::EndWeight)
                    .expect("fig5 constants are valid"),
            ),
        }
    }
}
