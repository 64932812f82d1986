//! The five subcommands. Each returns the library `Result`; exit-code
//! mapping lives in `main`.

use std::path::Path;

use leafbend::numfmt::format_sig;
use leafbend::{
    bend_image, build_map, build_profile, dewarp_image, fit_params, read_pgm, sample_elastica,
    sample_spiral, write_pgm, Error, FitGrid, GridAxis, PhaseKind, Point2, RasterImage, Result,
    SampledCurve, WeightMode,
};

use crate::config::{CurveFlag, RunConfig, WeightFlag};
use crate::svg::polyline_svg;

/// Sample the configured curve and write `<out>.csv` and `<out>.svg`.
pub fn cmd_plot(cfg: &RunConfig, out_base: &Path) -> Result<()> {
    let rows: Vec<(f64, Point2)> = match cfg.curve {
        CurveFlag::Spiral => sample_spiral(cfg.spiral_params()?, cfg.knots, cfg.tolerance()?)?
            .samples()
            .to_vec(),
        CurveFlag::Elastica => sample_elastica(cfg.elastica_params()?, cfg.knots)?
            .samples()
            .to_vec(),
        CurveFlag::Profile => {
            let profile = build_profile(cfg.spiral_params()?, cfg.knots, cfg.tolerance()?)?;
            profile.samples.iter().map(|s| (s.s, s.stretched)).collect()
        }
    };

    let mut csv = String::from("s,x,y\n");
    for &(s, p) in &rows {
        csv.push_str(&format_sig(s, 12));
        csv.push(',');
        csv.push_str(&format_sig(p.x, 12));
        csv.push(',');
        csv.push_str(&format_sig(p.y, 12));
        csv.push('\n');
    }
    std::fs::write(out_base.with_extension("csv"), csv)?;
    std::fs::write(out_base.with_extension("svg"), polyline_svg(&rows))?;
    Ok(())
}

/// Build the flatten lookup table and write its CSV.
pub fn cmd_table(cfg: &RunConfig, out: &Path) -> Result<()> {
    let profile = build_profile(cfg.spiral_params()?, cfg.knots, cfg.tolerance()?)?;
    let map = build_map(&profile)?;
    std::fs::write(out, map.to_csv())?;
    Ok(())
}

#[derive(Clone, Copy)]
pub enum WarpDirection {
    Bend,
    Dewarp,
}

/// Bend or dewarp a PGM/PPM image through the configured map.
pub fn cmd_warp(cfg: &RunConfig, dir: WarpDirection, input: &Path, output: &Path) -> Result<()> {
    let img = read_pgm(&std::fs::read(input)?)?;
    let profile = build_profile(cfg.spiral_params()?, cfg.knots, cfg.tolerance()?)?;
    let map = build_map(&profile)?;
    let out_width = cfg.width.unwrap_or(img.width);
    if out_width == 0 {
        return Err(Error::InvalidArgument("output width must be at least 1".into()));
    }
    let mode = cfg.resample_mode();
    let warped: RasterImage = match dir {
        WarpDirection::Bend => bend_image(&img, &map, mode, out_width),
        WarpDirection::Dewarp => dewarp_image(&img, &map, mode, out_width),
    };
    std::fs::write(output, write_pgm(&warped))?;
    Ok(())
}

/// Axis spec `min:max:count` for the fit search grid.
pub fn parse_axis(text: &str) -> std::result::Result<GridAxis, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let [min, max, count] = parts.as_slice() else {
        return Err(format!("expected min:max:count, got {text:?}"));
    };
    let min = min.parse::<f64>().map_err(|e| format!("bad min in {text:?}: {e}"))?;
    let max = max.parse::<f64>().map_err(|e| format!("bad max in {text:?}: {e}"))?;
    let count = count.parse::<usize>().map_err(|e| format!("bad count in {text:?}: {e}"))?;
    GridAxis::new(min, max, count).map_err(|e| e.to_string())
}

pub struct FitSpec {
    pub l: GridAxis,
    pub e: GridAxis,
    pub lambda: GridAxis,
    pub m: Option<GridAxis>,
    pub weight: WeightFlag,
}

/// Fit model parameters to an observed polyline CSV and print them as
/// `key=value` lines.
pub fn cmd_fit(cfg: &RunConfig, spec: &FitSpec, input: &Path) -> Result<String> {
    let text = std::fs::read_to_string(input)?;
    let observed = parse_observed(&text)?;
    let weight = match spec.weight {
        WeightFlag::End => WeightMode::EndWeight,
        WeightFlag::Arc => WeightMode::ArcWeight,
    };
    let grid = FitGrid { l: spec.l, e: spec.e, lambda: spec.lambda, m: spec.m, weight };
    let fit = fit_params(&observed, &grid, cfg.tolerance()?)?;

    let mut out = String::new();
    match fit.params.phase {
        PhaseKind::Cornu => out.push_str("phase=cornu\n"),
        PhaseKind::ShiftedEuler { m } => {
            out.push_str("phase=euler\n");
            out.push_str(&format!("m={}\n", format_sig(m, 12)));
        }
    }
    out.push_str(&format!("e={}\n", format_sig(fit.params.s_start, 12)));
    out.push_str(&format!("l={}\n", format_sig(fit.params.s_end, 12)));
    out.push_str(&format!("lambda={}\n", format_sig(fit.params.lambda, 12)));
    out.push_str(match fit.params.weight {
        WeightMode::EndWeight => "weight=end\n",
        WeightMode::ArcWeight => "weight=arc\n",
    });
    out.push_str(&format!("rms_residual={}\n", format_sig(fit.rms_residual, 12)));
    out.push_str(&format!("iterations={}\n", fit.iterations));
    Ok(out)
}

/// Observed polyline CSV: header `s,x,y` for explicit arc length, or `x,y`
/// with arc length reconstructed as cumulative chord length.
fn parse_observed(text: &str) -> Result<SampledCurve> {
    let mut lines = text.lines();
    let header = lines.next().map(str::trim).unwrap_or("");
    let has_s = match header {
        "s,x,y" => true,
        "x,y" => false,
        other => {
            return Err(Error::Format(format!(
                "expected header 's,x,y' or 'x,y', got {other:?}"
            )))
        }
    };
    let mut samples: Vec<(f64, Point2)> = Vec::new();
    let mut chord = 0.0;
    for (idx, line) in lines.enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let expected = if has_s { 3 } else { 2 };
        if fields.len() != expected {
            return Err(Error::Format(format!(
                "line {}: expected {expected} fields, got {}",
                idx + 2,
                fields.len()
            )));
        }
        let parse = |v: &str| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::Format(format!("line {}: bad number {v:?}", idx + 2)))
        };
        if has_s {
            let s = parse(fields[0])?;
            samples.push((s, Point2::new(parse(fields[1])?, parse(fields[2])?)));
        } else {
            let p = Point2::new(parse(fields[0])?, parse(fields[1])?);
            if let Some(&(_, prev)) = samples.last() {
                chord += prev.dist(p);
            }
            samples.push((chord, p));
        }
    }
    SampledCurve::from_samples(samples)
}
