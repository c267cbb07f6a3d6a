//! SVG drawing of an angulation.
//!
//! Vertices sit on a circle, vertex 1 at the top and the rest clockwise.
//! Coordinates are printed with two decimals so output is byte-stable.

use std::fmt::Write;

use crate::polygon::{Angulation, MDiagonal, PolygonError};

const SIZE: f64 = 400.0;
const RADIUS: f64 = 170.0;

fn position(v: u32, vertices: u32) -> (f64, f64) {
    let angle = std::f64::consts::FRAC_PI_2 - std::f64::consts::TAU * f64::from(v - 1) / f64::from(vertices);
    let c = SIZE / 2.0;
    (c + RADIUS * angle.cos(), c - RADIUS * angle.sin())
}

/// Draws `a`; when `highlight` is given, that diagonal is drawn in red and
/// its flip candidates dashed.
pub fn angulation_to_svg(a: &Angulation, highlight: Option<MDiagonal>) -> Result<String, PolygonError> {
    let p = a.polygon();
    let n = p.vertices();
    let candidates = match highlight {
        Some(d) => a.flips(d)?,
        None => Vec::new(),
    };
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    let points: Vec<String> = (1..=n)
        .map(|v| {
            let (x, y) = position(v, n);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    writeln!(out, r#"  <polygon points="{}" fill="none" stroke="black"/>"#, points.join(" ")).unwrap();
    let line = |out: &mut String, d: MDiagonal, style: &str| {
        let (i, j) = d.endpoints();
        let ((x1, y1), (x2, y2)) = (position(i, n), position(j, n));
        writeln!(
            out,
            r#"  <line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" data-diagonal="{d}" {style}/>"#
        )
        .unwrap();
    };
    for &d in a.diagonals() {
        let style = if Some(d) == highlight { r#"stroke="red" stroke-width="2""# } else { r#"stroke="black""# };
        line(&mut out, d, style);
    }
    for &d in &candidates {
        line(&mut out, d, r#"stroke="grey" stroke-dasharray="6,4""#);
    }
    for v in 1..=n {
        let (x, y) = position(v, n);
        let (lx, ly) = (SIZE / 2.0 + (x - SIZE / 2.0) * 1.1, SIZE / 2.0 + (y - SIZE / 2.0) * 1.1);
        writeln!(out, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="3"/>"#).unwrap();
        writeln!(
            out,
            r#"  <text x="{lx:.2}" y="{ly:.2}" text-anchor="middle" dominant-baseline="middle">{v}</text>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
