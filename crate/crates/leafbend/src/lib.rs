//! Geometric model of a bent page cross-section.
//!
//! The pipeline: a generalized Euler spiral (or elastica) models the curled
//! page edge-on; a rigid transform puts the axial end at the origin with the
//! chord along x; a lateral stretch weight flattens the tail; the stretched
//! x-coordinate against arc length forms a monotone lookup table; that table
//! bends or dewarps raster images column-wise.

pub mod bentframe;
pub mod curves;
pub mod error;
pub mod flattenmap;
pub mod imagewarp;
pub mod numfmt;
pub mod presets;
pub mod specfun;

pub use bentframe::{axial_frame, build_profile, stretched_point, transformed_point, BentProfile, Frame, ProfileSample};
pub use curves::{
    elastica_point, sample_elastica, sample_spiral, spiral_curvature, spiral_phase, spiral_point,
    spiral_tangent, ElasticaParams, Point2, SampledCurve, SpiralParams, WeightMode,
};
pub use error::{Error, Result};
pub use flattenmap::{build_map, fit_params, FitGrid, FitResult, FlattenMap, GridAxis};
pub use imagewarp::{bend_image, dewarp_image, read_pgm, write_pgm, RasterImage, ResampleMode};
pub use presets::{Preset, PresetModel};
pub use specfun::{
    fresnel_c, fresnel_s, jacobi_cn, jacobi_dn, jacobi_epsilon, jacobi_sn, jacobi_sncndn,
    phase_integral, EllipticModulus, PhaseKind, Tolerance, Trig,
};
