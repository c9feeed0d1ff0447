//! Standalone SVG rendering of a sampled curve with inflection markers.
//!
//! Fixed 800x500 canvas with 10% margins; the output is plain SVG 1.1
//! (well-formed XML, root `svg` element with a `viewBox`) and is
//! byte-deterministic for identical inputs.

use std::path::Path;

use cycleforge_core::SampledCurve64;

use crate::error::CliError;
use crate::output::write_atomic;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_X: f64 = 80.0; // 10% of width
const MARGIN_Y: f64 = 50.0; // 10% of height

/// Renders the curve as an SVG document string.
pub fn render_svg(curve: &SampledCurve64, markers: &[(f64, f64)]) -> String {
    let ts = curve.ts();
    let ys = curve.ys();
    let (t_min, t_max) = (ts[0], ts[ts.len() - 1]);
    let y_min = ys.iter().copied().fold(f64::INFINITY, f64::min);
    let y_max = ys.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let plot_w = WIDTH - 2.0 * MARGIN_X;
    let plot_h = HEIGHT - 2.0 * MARGIN_Y;
    let t_span = t_max - t_min;
    let y_span = y_max - y_min;

    let x_px = |t: f64| MARGIN_X + (t - t_min) / t_span * plot_w;
    // Flat curves sit mid-plot instead of dividing by a zero span.
    let y_px = |y: f64| {
        if y_span > 0.0 {
            HEIGHT - MARGIN_Y - (y - y_min) / y_span * plot_h
        } else {
            HEIGHT / 2.0
        }
    };

    let mut points = String::new();
    for (t, y) in ts.iter().zip(ys) {
        if !points.is_empty() {
            points.push(' ');
        }
        points.push_str(&format!("{:.2},{:.2}", x_px(*t), y_px(*y)));
    }

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         width=\"{WIDTH}\" height=\"{HEIGHT}\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    // Axes along the plot box.
    svg.push_str(&format!(
        "  <line x1=\"{MARGIN_X}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        y0 = HEIGHT - MARGIN_Y,
        x1 = WIDTH - MARGIN_X,
    ));
    svg.push_str(&format!(
        "  <line x1=\"{MARGIN_X}\" y1=\"{MARGIN_Y}\" x2=\"{MARGIN_X}\" y2=\"{y0}\" stroke=\"black\" stroke-width=\"1\"/>\n",
        y0 = HEIGHT - MARGIN_Y,
    ));
    svg.push_str(&format!(
        "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"{points}\"/>\n"
    ));
    for (t, y) in markers {
        svg.push_str(&format!(
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"4\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n",
            x_px(*t),
            y_px(*y)
        ));
    }
    // Axis labels: the time range along x, the value range along y.
    svg.push_str(&format!(
        "  <text x=\"{MARGIN_X}\" y=\"{ly}\" font-size=\"12\" font-family=\"sans-serif\">t = {t_min}</text>\n",
        ly = HEIGHT - MARGIN_Y + 20.0,
    ));
    svg.push_str(&format!(
        "  <text x=\"{x}\" y=\"{ly}\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"end\">t = {t_max}</text>\n",
        x = WIDTH - MARGIN_X,
        ly = HEIGHT - MARGIN_Y + 20.0,
    ));
    svg.push_str(&format!(
        "  <text x=\"{x}\" y=\"{y}\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"end\">{y_min}</text>\n",
        x = MARGIN_X - 6.0,
        y = HEIGHT - MARGIN_Y + 4.0,
    ));
    svg.push_str(&format!(
        "  <text x=\"{x}\" y=\"{y}\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"end\">{y_max}</text>\n",
        x = MARGIN_X - 6.0,
        y = MARGIN_Y + 4.0,
    ));
    svg.push_str(&format!(
        "  <text x=\"{x}\" y=\"{ly}\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\">y_dd</text>\n",
        x = MARGIN_X,
        ly = MARGIN_Y - 10.0,
    ));
    svg.push_str("</svg>\n");
    svg
}

/// Writes [`render_svg`] atomically.
pub fn emit_svg(
    curve: &SampledCurve64,
    markers: &[(f64, f64)],
    path: &Path,
) -> Result<(), CliError> {
    write_atomic(path, render_svg(curve, markers).as_bytes())
}
