//! Raster bending and dewarping through a flatten map, with binary PGM/PPM
//! I/O. The cross-section coordinate runs along image columns; rows are
//! resampled horizontally and never mixed.

use crate::error::{Error, Result};
use crate::flattenmap::FlattenMap;

/// Row-major 8-bit image, 1 (gray) or 3 (RGB) channels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterImage {
    pub width: usize,
    pub height: usize,
    pub channels: usize,
    pub data: Vec<u8>,
}

impl RasterImage {
    pub fn new(width: usize, height: usize, channels: usize, data: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 {
            return Err(Error::InvalidArgument(format!(
                "image dimensions must be at least 1x1, got {width}x{height}"
            )));
        }
        if channels != 1 && channels != 3 {
            return Err(Error::InvalidArgument(format!(
                "channels must be 1 or 3, got {channels}"
            )));
        }
        if data.len() != width * height * channels {
            return Err(Error::InvalidArgument(format!(
                "data length {} does not match {width}x{height}x{channels}",
                data.len()
            )));
        }
        Ok(Self { width, height, channels, data })
    }

    pub fn constant(width: usize, height: usize, channels: usize, value: u8) -> Result<Self> {
        Self::new(width, height, channels, vec![value; width * height * channels])
    }
}

/// Horizontal resampling kernel.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResampleMode {
    Nearest,
    Linear,
}

/// Parse a binary PGM (P5) or PPM (P6) with maxval 255.
pub fn read_pgm(bytes: &[u8]) -> Result<RasterImage> {
    let mut pos = 0usize;
    let magic = take_token(bytes, &mut pos)?;
    let channels = match magic {
        b"P5" => 1,
        b"P6" => 3,
        other => {
            return Err(Error::Format(format!(
                "unsupported PNM magic {:?} (binary P5/P6 only)",
                String::from_utf8_lossy(other)
            )))
        }
    };
    let width = parse_dim(take_token(bytes, &mut pos)?, "width")?;
    let height = parse_dim(take_token(bytes, &mut pos)?, "height")?;
    let maxval = parse_dim(take_token(bytes, &mut pos)?, "maxval")?;
    if maxval != 255 {
        return Err(Error::Format(format!("maxval must be 255, got {maxval}")));
    }
    // Exactly one whitespace byte separates the header from the payload.
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        _ => return Err(Error::Format("missing whitespace after maxval".into())),
    }
    let expected = width * height * channels;
    let payload = &bytes[pos..];
    if payload.len() < expected {
        return Err(Error::Format(format!(
            "truncated payload: expected {expected} bytes, got {}",
            payload.len()
        )));
    }
    if payload.len() > expected {
        return Err(Error::Format(format!(
            "trailing data: expected {expected} payload bytes, got {}",
            payload.len()
        )));
    }
    RasterImage::new(width, height, channels, payload.to_vec())
}

fn take_token<'a>(bytes: &'a [u8], pos: &mut usize) -> Result<&'a [u8]> {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
    let start = *pos;
    while *pos < bytes.len() && !bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
    if start == *pos {
        return Err(Error::Format("unexpected end of header".into()));
    }
    Ok(&bytes[start..*pos])
}

fn parse_dim(token: &[u8], what: &str) -> Result<usize> {
    std::str::from_utf8(token)
        .ok()
        .and_then(|t| t.parse::<usize>().ok())
        .filter(|&v| v > 0)
        .ok_or_else(|| {
            Error::Format(format!(
                "bad {what} token {:?}",
                String::from_utf8_lossy(token)
            ))
        })
}

/// Serialize as binary PGM (1 channel) or PPM (3 channels), maxval 255:
/// `P5\n<w> <h>\n255\n` followed by exactly w·h·channels bytes.
pub fn write_pgm(img: &RasterImage) -> Vec<u8> {
    let magic = if img.channels == 1 { "P5" } else { "P6" };
    let mut out = format!("{magic}\n{} {}\n255\n", img.width, img.height).into_bytes();
    out.extend_from_slice(&img.data);
    out
}

// Precomputed per-column source: fill with white, pick one column, or blend
// two adjacent columns.
enum ColSrc {
    Fill,
    Pick(usize),
    Lerp(usize, usize, f64),
}

fn column_sources(positions: &[f64], src_width: usize, mode: ResampleMode) -> Vec<ColSrc> {
    let w = src_width as f64;
    positions
        .iter()
        .map(|&p| {
            if !p.is_finite() || p < -0.5 || p > w - 0.5 {
                return ColSrc::Fill;
            }
            match mode {
                ResampleMode::Nearest => {
                    ColSrc::Pick(p.round().clamp(0.0, w - 1.0) as usize)
                }
                ResampleMode::Linear => {
                    let clamped = p.clamp(0.0, w - 1.0);
                    let i0 = clamped.floor() as usize;
                    let i1 = (i0 + 1).min(src_width - 1);
                    let frac = clamped - i0 as f64;
                    if frac == 0.0 {
                        ColSrc::Pick(i0)
                    } else {
                        ColSrc::Lerp(i0, i1, frac)
                    }
                }
            }
        })
        .collect()
}

fn resample_columns(img: &RasterImage, positions: &[f64], mode: ResampleMode) -> RasterImage {
    let sources = column_sources(positions, img.width, mode);
    let ch = img.channels;
    let mut data = Vec::with_capacity(positions.len() * img.height * ch);
    for row in 0..img.height {
        let row_base = row * img.width * ch;
        for src in &sources {
            match *src {
                ColSrc::Fill => data.extend(std::iter::repeat_n(255u8, ch)),
                ColSrc::Pick(i) => {
                    let at = row_base + i * ch;
                    data.extend_from_slice(&img.data[at..at + ch]);
                }
                ColSrc::Lerp(i0, i1, frac) => {
                    let a = row_base + i0 * ch;
                    let b = row_base + i1 * ch;
                    for c in 0..ch {
                        let v = f64::from(img.data[a + c]) * (1.0 - frac)
                            + f64::from(img.data[b + c]) * frac;
                        data.push(v.round() as u8);
                    }
                }
            }
        }
    }
    RasterImage {
        width: positions.len(),
        height: img.height,
        channels: ch,
        data,
    }
}

// Pixel centers sit at integer positions; a normalized coordinate in [0, 1]
// spans [-0.5, width - 0.5] so that equal-width affine resampling is the
// exact identity.
fn center_position(normalized: f64, width: usize) -> f64 {
    normalized * width as f64 - 0.5
}

/// Flatten a bent-page image: output column j holds the content at flat
/// coordinate s_j, fetched from the curved position F(s_j). Out-of-range
/// sources fill white.
pub fn dewarp_image(
    img: &RasterImage,
    map: &FlattenMap,
    mode: ResampleMode,
    out_width: usize,
) -> RasterImage {
    let (s_lo, s_hi) = map.s_range();
    let (u_lo, u_hi) = map.u_range();
    let positions: Vec<f64> = (0..out_width)
        .map(|j| {
            let s = s_lo + (j as f64 + 0.5) / out_width as f64 * (s_hi - s_lo);
            match map.forward(s) {
                Ok(u) => center_position((u - u_lo) / (u_hi - u_lo), img.width),
                Err(_) => f64::NAN, // outside the table: filled white
            }
        })
        .collect();
    resample_columns(img, &positions, mode)
}

/// Bend a flat-page image: output column j spans the curved coordinate u_j,
/// fetched from the flat position F⁻¹(u_j). Mirror of `dewarp_image`.
pub fn bend_image(
    img: &RasterImage,
    map: &FlattenMap,
    mode: ResampleMode,
    out_width: usize,
) -> RasterImage {
    let (s_lo, s_hi) = map.s_range();
    let (u_lo, u_hi) = map.u_range();
    let positions: Vec<f64> = (0..out_width)
        .map(|j| {
            let u = u_lo + (j as f64 + 0.5) / out_width as f64 * (u_hi - u_lo);
            match map.inverse(u) {
                Ok(s) => center_position((s - s_lo) / (s_hi - s_lo), img.width),
                Err(_) => f64::NAN,
            }
        })
        .collect();
    resample_columns(img, &positions, mode)
}
