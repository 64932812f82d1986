//! Run configuration: defaults, JSON file, command-line flags, and presets,
//! merged in that order. A preset overwrites the fields it defines.

use std::path::Path;

use clap::{Args, ValueEnum};
use leafbend::{
    ElasticaParams, EllipticModulus, Error, PhaseKind, Preset, PresetModel, ResampleMode, Result,
    SpiralParams, Tolerance, WeightMode,
};
use serde::Deserialize;

#[derive(ValueEnum, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum PhaseFlag {
    /// Quadratic tangent angle s² (curvature 2s).
    Cornu,
    /// Shifted tangent angle m·s − s²/2 (curvature m − s).
    Euler,
}

#[derive(ValueEnum, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum WeightFlag {
    /// Weight (l − t)^λ, vanishing at the axial end.
    End,
    /// Weight (t − e)^λ, vanishing at the free edge.
    Arc,
}

#[derive(ValueEnum, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ModeFlag {
    Nearest,
    Linear,
}

#[derive(ValueEnum, Deserialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum CurveFlag {
    /// Raw spiral points.
    Spiral,
    /// Elastica points.
    Elastica,
    /// Transformed and stretched profile points.
    Profile,
}

/// Shared model flags. Everything is optional here; unset values fall back
/// to the config file and then to the built-in defaults.
#[derive(Args, Debug, Clone, Default)]
pub struct ConfigFlags {
    /// JSON config file with keys matching these flag names
    #[arg(long)]
    pub config: Option<std::path::PathBuf>,

    /// Parameter preset: fig2, fig3, fig4, or fig5
    #[arg(long)]
    pub preset: Option<String>,

    /// Curve family drawn by `plot`
    #[arg(long, value_enum)]
    pub curve: Option<CurveFlag>,

    /// Tangent-angle family
    #[arg(long, value_enum)]
    pub phase: Option<PhaseFlag>,

    /// Phase parameter m of the euler family
    #[arg(long, allow_negative_numbers = true)]
    pub m: Option<f64>,

    /// Arc length of the free edge (curve start)
    #[arg(long, allow_negative_numbers = true)]
    pub e: Option<f64>,

    /// Arc length of the axial end (curve end)
    #[arg(long, allow_negative_numbers = true)]
    pub l: Option<f64>,

    /// Lateral stretch exponent λ (0 disables the stretch)
    #[arg(long)]
    pub lambda: Option<f64>,

    /// Which end the stretch weight vanishes at
    #[arg(long, value_enum)]
    pub weight: Option<WeightFlag>,

    /// Elastica modulus k in [0, 1]
    #[arg(long)]
    pub k: Option<f64>,

    /// Sample/knot count for curves and lookup tables
    #[arg(long)]
    pub knots: Option<usize>,

    /// Absolute quadrature tolerance
    #[arg(long)]
    pub tol: Option<f64>,

    /// Column resampling kernel for bend/dewarp
    #[arg(long, value_enum)]
    pub mode: Option<ModeFlag>,

    /// Output image width for bend/dewarp (defaults to the input width)
    #[arg(long)]
    pub width: Option<usize>,
}

/// The JSON form of `ConfigFlags`, same keys.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    preset: Option<String>,
    curve: Option<CurveFlag>,
    phase: Option<PhaseFlag>,
    m: Option<f64>,
    e: Option<f64>,
    l: Option<f64>,
    lambda: Option<f64>,
    weight: Option<WeightFlag>,
    k: Option<f64>,
    knots: Option<usize>,
    tol: Option<f64>,
    mode: Option<ModeFlag>,
    width: Option<usize>,
}

/// Fully resolved configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub phase: PhaseFlag,
    pub m: f64,
    pub e: f64,
    pub l: f64,
    pub lambda: f64,
    pub weight: WeightFlag,
    pub k: f64,
    pub knots: usize,
    pub tol: f64,
    pub mode: ModeFlag,
    pub curve: CurveFlag,
    pub width: Option<usize>,
    pub preset: Option<Preset>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            phase: PhaseFlag::Cornu,
            m: 0.6,
            e: -0.78622,
            l: 2.170803,
            lambda: 2.0,
            weight: WeightFlag::End,
            k: 0.3,
            knots: 2048,
            tol: 1e-10,
            mode: ModeFlag::Linear,
            curve: CurveFlag::Profile,
            width: None,
            preset: None,
        }
    }
}

impl RunConfig {
    /// Merge defaults <- config file <- flags, then let the preset (flag
    /// wins over file) overwrite the fields it defines.
    pub fn resolve(flags: &ConfigFlags) -> Result<Self> {
        let file = match &flags.config {
            Some(path) => load_file(path)?,
            None => FileConfig::default(),
        };
        let mut cfg = Self::default();

        macro_rules! merge {
            ($field:ident) => {
                if let Some(v) = file.$field {
                    cfg.$field = v;
                }
                if let Some(v) = flags.$field {
                    cfg.$field = v;
                }
            };
        }
        merge!(phase);
        merge!(m);
        merge!(e);
        merge!(l);
        merge!(lambda);
        merge!(weight);
        merge!(k);
        merge!(knots);
        merge!(tol);
        merge!(mode);
        merge!(curve);
        if let Some(v) = file.width {
            cfg.width = Some(v);
        }
        if let Some(v) = flags.width {
            cfg.width = Some(v);
        }

        let preset_name = flags.preset.as_deref().or(file.preset.as_deref());
        if let Some(name) = preset_name {
            let preset = Preset::from_name(name).ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown preset {name:?} (expected fig2, fig3, fig4, or fig5)"
                ))
            })?;
            cfg.apply_preset(preset);
        }
        Ok(cfg)
    }

    fn apply_preset(&mut self, preset: Preset) {
        self.preset = Some(preset);
        match preset.model() {
            PresetModel::Spiral(p) => {
                self.phase = PhaseFlag::Cornu;
                self.e = p.s_start;
                self.l = p.s_end;
                self.lambda = p.lambda;
                self.weight = match p.weight {
                    WeightMode::EndWeight => WeightFlag::End,
                    WeightMode::ArcWeight => WeightFlag::Arc,
                };
                self.curve = if preset == Preset::Fig2 {
                    CurveFlag::Spiral
                } else {
                    CurveFlag::Profile
                };
            }
            PresetModel::Elastica(p) => {
                self.k = p.k.k();
                self.e = p.s_start;
                self.l = p.s_end;
                self.curve = CurveFlag::Elastica;
            }
        }
    }

    pub fn phase_kind(&self) -> PhaseKind {
        match self.phase {
            PhaseFlag::Cornu => PhaseKind::Cornu,
            PhaseFlag::Euler => PhaseKind::ShiftedEuler { m: self.m },
        }
    }

    pub fn weight_mode(&self) -> WeightMode {
        match self.weight {
            WeightFlag::End => WeightMode::EndWeight,
            WeightFlag::Arc => WeightMode::ArcWeight,
        }
    }

    pub fn resample_mode(&self) -> ResampleMode {
        match self.mode {
            ModeFlag::Nearest => ResampleMode::Nearest,
            ModeFlag::Linear => ResampleMode::Linear,
        }
    }

    pub fn tolerance(&self) -> Result<Tolerance> {
        Tolerance::new(self.tol)
    }

    pub fn spiral_params(&self) -> Result<SpiralParams> {
        SpiralParams::new(self.phase_kind(), self.e, self.l, self.lambda, self.weight_mode())
    }

    pub fn elastica_params(&self) -> Result<ElasticaParams> {
        ElasticaParams::new(EllipticModulus::new(self.k)?, self.e, self.l)
    }
}

fn load_file(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|err| Error::Format(format!("config {}: {err}", path.display())))
}
