//! SVG rendering of planar grid drawings. Vertices are filled circles;
//! lattice points strictly inside an edge segment are empty circles.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{difference_gcd, GridPoint};
use crate::verify::GridDrawing;

/// Interior lattice points drawn per edge at most; longer runs are elided.
const MAX_MARKS_PER_EDGE: u64 = 256;

fn coord(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::MAX)
}

/// Renders a two-dimensional drawing with the y axis pointing up.
pub fn render_svg(dr: &GridDrawing) -> Result<String> {
    if dr.dim() != 2 {
        return Err(Error::UnsupportedDimension(dr.dim()));
    }
    let pts = dr.points();
    let (mut lo, mut hi) = ([0.0f64; 2], [0.0f64; 2]);
    for (i, p) in pts.iter().enumerate() {
        for k in 0..2 {
            let c = coord(&p.0[k]);
            if i == 0 || c < lo[k] {
                lo[k] = c;
            }
            if i == 0 || c > hi[k] {
                hi[k] = c;
            }
        }
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1.0);
    let unit = (800.0 / span).min(40.0);
    let margin = 20.0;
    let (w, h) = (
        (hi[0] - lo[0]) * unit + 2.0 * margin,
        (hi[1] - lo[1]) * unit + 2.0 * margin,
    );
    let at = |x: f64, y: f64| (margin + (x - lo[0]) * unit, h - margin - (y - lo[1]) * unit);
    let r = (unit / 6.0).clamp(1.5, 5.0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="1">"#);
    for &(u, v) in dr.graph().edges() {
        let (x1, y1) = at(coord(&pts[u].0[0]), coord(&pts[u].0[1]));
        let (x2, y2) = at(coord(&pts[v].0[0]), coord(&pts[v].0[1]));
        let _ = writeln!(
            out,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="white" stroke="black">"#);
    for &(u, v) in dr.graph().edges() {
        for p in interior_points(&pts[u], &pts[v]) {
            let (x, y) = at(coord(&p.0[0]), coord(&p.0[1]));
            let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}"/>"#);
        }
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="black">"#);
    for (v, p) in pts.iter().enumerate() {
        let (x, y) = at(coord(&p.0[0]), coord(&p.0[1]));
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r:.2}"><title>{v}</title></circle>"#
        );
    }
    let _ = writeln!(out, "</g>\n</svg>");
    Ok(out)
}

fn interior_points(a: &GridPoint, b: &GridPoint) -> Vec<GridPoint> {
    let g = difference_gcd(a, b);
    if g.is_zero() {
        return Vec::new();
    }
    let steps = g.to_u64().unwrap_or(u64::MAX);
    let step: Vec<BigInt> = a.0.iter().zip(&b.0).map(|(x, y)| (y - x) / &g).collect();
    (1..steps.min(MAX_MARKS_PER_EDGE + 1))
        .map(|j| GridPoint(a.0.iter().zip(&step).map(|(x, s)| x + s * j).collect()))
        .collect()
}
