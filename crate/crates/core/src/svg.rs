//! SVG drawing of the fundamental polygon with the curve as chords.
//!
//! The `4n`-gon is inscribed in a circle with vertex 0 at the top and
//! vertices numbered clockwise. Side `2t` carries the `t`-th symbol of the
//! surface word; side `2t+1` is free boundary, drawn as a shallow inward
//! arc. Crossing points are spaced evenly along their side in point-list
//! order, so straight chords cross exactly when their endpoints interleave.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::representative::{EdgePoint, PointList, SegmentList};
use crate::words::SurfaceWord;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    pub polygon_radius: f64,
    pub margin: f64,
    pub edge_stroke: f64,
    pub chord_stroke: f64,
    pub point_radius: f64,
    pub edge_font_size: f64,
    pub point_font_size: f64,
    /// How far the free sides bow toward the center, as a fraction of the
    /// distance from their midpoint to the center.
    pub boundary_bow: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            polygon_radius: 300.0,
            margin: 60.0,
            edge_stroke: 2.0,
            chord_stroke: 1.5,
            point_radius: 3.0,
            edge_font_size: 20.0,
            point_font_size: 11.0,
            boundary_bow: 0.2,
        }
    }
}

type Xy = (f64, f64);

fn center(spec: &RenderSpec) -> Xy {
    let c = spec.polygon_radius + spec.margin;
    (c, c)
}

fn vertex(t: usize, sides: usize, spec: &RenderSpec) -> Xy {
    let (cx, cy) = center(spec);
    let angle = -PI / 2.0 + 2.0 * PI * t as f64 / sides as f64;
    (
        cx + spec.polygon_radius * angle.cos(),
        cy + spec.polygon_radius * angle.sin(),
    )
}

fn lerp(a: Xy, b: Xy, f: f64) -> Xy {
    (a.0 + (b.0 - a.0) * f, a.1 + (b.1 - a.1) * f)
}

/// Moves `p` away from the center by `d` pixels.
fn push_out(p: Xy, d: f64, spec: &RenderSpec) -> Xy {
    let (cx, cy) = center(spec);
    let (dx, dy) = (p.0 - cx, p.1 - cy);
    let len = (dx * dx + dy * dy).sqrt().max(1e-9);
    (p.0 + dx / len * d, p.1 + dy / len * d)
}

/// Two decimals, with negative zero printed as `0.00`.
fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_string()
    } else {
        s
    }
}

/// Screen position of every crossing point, in derived cyclic order.
pub fn point_coordinates(
    surface: &SurfaceWord,
    p: &PointList,
    spec: &RenderSpec,
) -> Vec<(EdgePoint, Xy)> {
    let sides = 2 * surface.symbols().len();
    let derived = p.derived();
    let mut out = Vec::with_capacity(derived.len());
    let mut next = 0;
    for (u, &s) in surface.symbols().iter().enumerate() {
        let m = p.multiplicity(surface.letter_index(s.letter()).unwrap());
        let (a, b) = (vertex(2 * u, sides, spec), vertex(2 * u + 1, sides, spec));
        for j in 0..m {
            let pt = derived[next + j];
            out.push((pt, lerp(a, b, (j + 1) as f64 / (m + 1) as f64)));
        }
        next += m;
    }
    out
}

pub fn emit_svg(
    surface: &SurfaceWord,
    p: &PointList,
    c: &SegmentList,
    spec: &RenderSpec,
) -> Vec<u8> {
    let sides = 2 * surface.symbols().len();
    let size = 2.0 * (spec.polygon_radius + spec.margin);
    let (cx, cy) = center(spec);
    let mut s = String::new();

    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" viewBox="0 0 {w} {w}">"#,
        w = num(size)
    )
    .unwrap();
    writeln!(s, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();

    writeln!(
        s,
        r#"  <g id="polygon" fill="none" stroke="black" stroke-width="{}">"#,
        num(spec.edge_stroke)
    )
    .unwrap();
    for t in 0..sides {
        let a = vertex(t, sides, spec);
        let b = vertex((t + 1) % sides, sides, spec);
        if t % 2 == 0 {
            writeln!(
                s,
                r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                num(a.0),
                num(a.1),
                num(b.0),
                num(b.1)
            )
            .unwrap();
        } else {
            let mid = lerp(a, b, 0.5);
            let ctrl = lerp(mid, (cx, cy), spec.boundary_bow);
            writeln!(
                s,
                r#"    <path d="M {} {} Q {} {} {} {}" stroke="gray" stroke-dasharray="6 4"/>"#,
                num(a.0),
                num(a.1),
                num(ctrl.0),
                num(ctrl.1),
                num(b.0),
                num(b.1)
            )
            .unwrap();
        }
    }
    writeln!(s, "  </g>").unwrap();

    writeln!(
        s,
        r#"  <g id="edge-labels" font-family="serif" font-size="{}" text-anchor="middle" dominant-baseline="middle">"#,
        num(spec.edge_font_size)
    )
    .unwrap();
    for (u, sym) in surface.symbols().iter().enumerate() {
        let mid = lerp(
            vertex(2 * u, sides, spec),
            vertex(2 * u + 1, sides, spec),
            0.5,
        );
        let at = push_out(mid, spec.edge_font_size * 1.4, spec);
        writeln!(
            s,
            r#"    <text x="{}" y="{}">{}</text>"#,
            num(at.0),
            num(at.1),
            sym
        )
        .unwrap();
    }
    writeln!(s, "  </g>").unwrap();

    let coords = point_coordinates(surface, p, spec);
    let lookup = |pt: EdgePoint| {
        coords
            .iter()
            .find(|(q, _)| *q == pt)
            .map(|&(_, xy)| xy)
            .expect("segment endpoint in point list")
    };

    writeln!(
        s,
        r#"  <g id="chords" stroke="firebrick" stroke-width="{}">"#,
        num(spec.chord_stroke)
    )
    .unwrap();
    for (i, w) in c.segments().iter().enumerate() {
        let (a, b) = (lookup(w.start), lookup(w.end));
        writeln!(
            s,
            r#"    <line id="segment-{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            i,
            num(a.0),
            num(a.1),
            num(b.0),
            num(b.1)
        )
        .unwrap();
    }
    writeln!(s, "  </g>").unwrap();

    writeln!(
        s,
        r#"  <g id="points" font-family="sans-serif" font-size="{}" text-anchor="middle" dominant-baseline="middle">"#,
        num(spec.point_font_size)
    )
    .unwrap();
    for (pt, xy) in &coords {
        let at = push_out(*xy, spec.point_font_size * 1.2, spec);
        writeln!(
            s,
            r#"    <circle cx="{}" cy="{}" r="{}" fill="black"/>"#,
            num(xy.0),
            num(xy.1),
            num(spec.point_radius)
        )
        .unwrap();
        writeln!(
            s,
            r#"    <text x="{}" y="{}">{}</text>"#,
            num(at.0),
            num(at.1),
            pt
        )
        .unwrap();
    }
    writeln!(s, "  </g>").unwrap();
    writeln!(s, "</svg>").unwrap();
    s.into_bytes()
}
