//! Minimal SVG output: one polyline in a fitted viewBox.

use leafbend::numfmt::format_sig;
use leafbend::Point2;

/// Render the points as a single black polyline. The curve's y axis points
/// up, SVG's points down, so y is negated; the viewBox carries a 5% margin
/// on each side.
pub fn polyline_svg(points: &[(f64, Point2)]) -> String {
    let xs = points.iter().map(|&(_, p)| p.x);
    let ys = points.iter().map(|&(_, p)| -p.y);
    let (min_x, max_x) = bounds(xs);
    let (min_y, max_y) = bounds(ys);
    // Degenerate spans still deserve a visible box.
    let span_x = (max_x - min_x).max(1e-6);
    let span_y = (max_y - min_y).max(1e-6);
    let (mx, my) = (0.05 * span_x, 0.05 * span_y);

    let mut coords = String::new();
    for (i, &(_, p)) in points.iter().enumerate() {
        if i > 0 {
            coords.push(' ');
        }
        coords.push_str(&fmt(p.x));
        coords.push(',');
        coords.push_str(&fmt(-p.y));
    }

    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"{}\" points=\"{}\"/>\n\
         </svg>\n",
        fmt(min_x - mx),
        fmt(min_y - my),
        fmt(span_x + 2.0 * mx),
        fmt(span_y + 2.0 * my),
        fmt(0.005 * span_x.max(span_y)),
        coords
    )
}

// 9 significant digits, with the padding zeros CSV wants stripped back off.
fn fmt(x: f64) -> String {
    let s = format_sig(x, 9);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)))
}
