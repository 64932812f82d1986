//! Image-warp checks: PNM round-trips on random images, the bend/dewarp
//! stripe round-trip error, and resampling invariants through real maps.

mod common;

use leafbend::{
    bend_image, build_map, build_profile, dewarp_image, read_pgm, write_pgm, FlattenMap,
    PhaseKind, RasterImage, ResampleMode, SpiralParams, Tolerance, WeightMode,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn roundtrip_map() -> FlattenMap {
    let params = SpiralParams::new(
        PhaseKind::ShiftedEuler { m: 0.6 },
        0.0,
        1.2,
        0.0,
        WeightMode::EndWeight,
    )
    .unwrap();
    let profile = build_profile(params, 512, Tolerance::default()).unwrap();
    build_map(&profile).unwrap()
}

fn stripes(width: usize, height: usize, period: f64, amplitude: f64) -> RasterImage {
    let data: Vec<u8> = (0..height)
        .flat_map(|_| {
            (0..width).map(move |x| {
                let v = 127.5 + amplitude * (2.0 * std::f64::consts::PI * x as f64 / period).sin();
                v.round().clamp(0.0, 255.0) as u8
            })
        })
        .collect();
    RasterImage::new(width, height, 1, data).unwrap()
}

fn mae(a: &RasterImage, b: &RasterImage) -> f64 {
    assert_eq!(a.data.len(), b.data.len());
    let sum: u64 = a
        .data
        .iter()
        .zip(&b.data)
        .map(|(&x, &y)| (i64::from(x) - i64::from(y)).unsigned_abs())
        .sum();
    sum as f64 / a.data.len() as f64
}

#[test]
fn pnm_round_trips_random_images() {
    let mut rng = ChaCha8Rng::seed_from_u64(53);
    for _ in 0..50 {
        let width = rng.gen_range(1..40);
        let height = rng.gen_range(1..20);
        let channels = if rng.gen_bool(0.5) { 1 } else { 3 };
        let data: Vec<u8> = (0..width * height * channels).map(|_| rng.gen()).collect();
        let img = RasterImage::new(width, height, channels, data).unwrap();
        let bytes = write_pgm(&img);
        assert_eq!(read_pgm(&bytes).unwrap(), img, "{width}x{height}x{channels}");
    }
}

#[test]
fn pnm_header_shape() {
    let img = RasterImage::constant(3, 2, 1, 8).unwrap();
    let bytes = write_pgm(&img);
    assert!(bytes.starts_with(b"P5\n3 2\n255\n"));
    assert_eq!(bytes.len(), b"P5\n3 2\n255\n".len() + 6);
}

#[test]
fn stripe_round_trip_stays_sharp() {
    let map = roundtrip_map();
    let orig = stripes(256, 32, 16.0, 100.0);
    let bent = bend_image(&orig, &map, ResampleMode::Linear, 256);
    let flat = dewarp_image(&bent, &map, ResampleMode::Linear, 256);
    assert_eq!(flat.width, orig.width);
    assert_eq!(flat.height, orig.height);
    let err = mae(&orig, &flat);
    assert!(err <= 1.0, "round-trip MAE {err}");
}

#[test]
fn round_trip_error_shrinks_with_longer_stripes() {
    let map = roundtrip_map();
    let short = stripes(256, 8, 16.0, 100.0);
    let long = stripes(256, 8, 48.0, 100.0);
    let rt = |img: &RasterImage| {
        let bent = bend_image(img, &map, ResampleMode::Linear, 256);
        dewarp_image(&bent, &map, ResampleMode::Linear, 256)
    };
    assert!(mae(&long, &rt(&long)) < mae(&short, &rt(&short)));
}

#[test]
fn nearest_emits_only_source_bytes() {
    let map = roundtrip_map();
    let mut rng = ChaCha8Rng::seed_from_u64(59);
    let width = 64;
    let data: Vec<u8> = (0..width * 4).map(|_| rng.gen()).collect();
    let img = RasterImage::new(width, 4, 1, data).unwrap();
    for out in [
        bend_image(&img, &map, ResampleMode::Nearest, 97),
        dewarp_image(&img, &map, ResampleMode::Nearest, 41),
    ] {
        for (row, chunk) in out.data.chunks(out.width).enumerate() {
            let source_row = &img.data[row * width..(row + 1) * width];
            for &v in chunk {
                assert!(
                    v == 255 || source_row.contains(&v),
                    "row {row} emitted {v} not present in the source"
                );
            }
        }
    }
}

#[test]
fn rows_never_mix() {
    // Give each row a constant value; warped rows must stay constant.
    let map = roundtrip_map();
    let height = 6;
    let width = 50;
    let data: Vec<u8> = (0..height).flat_map(|r| vec![40 * r as u8; width]).collect();
    let img = RasterImage::new(width, height, 1, data).unwrap();
    for mode in [ResampleMode::Nearest, ResampleMode::Linear] {
        let out = bend_image(&img, &map, mode, 73);
        for (row, chunk) in out.data.chunks(out.width).enumerate() {
            let v = 40 * row as u8;
            assert!(chunk.iter().all(|&x| x == v), "row {row} mixed");
        }
    }
}

#[test]
fn dewarp_preserves_gradient_order() {
    // A monotone map resamples a horizontal gradient into a monotone row.
    let map = roundtrip_map();
    let width = 128;
    let data: Vec<u8> = (0..width).map(|x| (x * 2) as u8).collect();
    let img = RasterImage::new(width, 1, 1, data).unwrap();
    let out = dewarp_image(&img, &map, ResampleMode::Linear, 200);
    let row = &out.data;
    let increasing = row.windows(2).all(|w| w[0] <= w[1]);
    let decreasing = row.windows(2).all(|w| w[0] >= w[1]);
    assert!(increasing || decreasing, "gradient order lost");
}

#[test]
fn rgb_channels_survive_warp() {
    let map = roundtrip_map();
    // Red gradient, constant green, blue stripes.
    let width = 96;
    let data: Vec<u8> = (0..width)
        .flat_map(|x| [(x * 2) as u8, 77, if x % 8 < 4 { 0 } else { 200 }])
        .collect();
    let img = RasterImage::new(width, 1, 3, data).unwrap();
    let bent = bend_image(&img, &map, ResampleMode::Linear, width);
    let flat = dewarp_image(&bent, &map, ResampleMode::Linear, width);
    assert_eq!(flat.channels, 3);
    // Constant channel passes through untouched.
    for px in flat.data.chunks(3) {
        assert_eq!(px[1], 77);
    }
    assert!(mae(&img, &flat) < 4.0);
}

#[test]
fn warp_is_deterministic() {
    let map = roundtrip_map();
    let img = stripes(100, 3, 12.0, 90.0);
    let a = bend_image(&img, &map, ResampleMode::Linear, 80);
    let b = bend_image(&img, &map, ResampleMode::Linear, 80);
    assert_eq!(a, b);
}
