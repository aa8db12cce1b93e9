//! SVG output: vertices as dots, edges as straight segments.

use std::fmt::Write;

use crate::geometry::Point;
use crate::graph::{Edge, PlanarEmbedding};
use crate::solver::Drawing;

pub const VIEWBOX: f64 = 1000.0;
pub const MARGIN: f64 = 20.0;
pub const VERTEX_RADIUS: f64 = 3.0;
pub const STROKE_WIDTH: f64 = 1.0;

/// Maps drawing coordinates into the viewBox with a uniform scale, centred,
/// y pointing up.
#[derive(Debug, Clone, Copy)]
pub struct ViewTransform {
    scale: f64,
    min: Point,
    offset: Point,
}

impl ViewTransform {
    pub fn fit(points: &[Point]) -> Self {
        let mut min = Point::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in points {
            min = Point::new(min.x.min(p.x), min.y.min(p.y));
            max = Point::new(max.x.max(p.x), max.y.max(p.y));
        }
        let span = (max.x - min.x).max(max.y - min.y);
        let inner = VIEWBOX - 2.0 * MARGIN;
        let scale = if span > 0.0 { inner / span } else { 1.0 };
        let offset = Point::new(
            MARGIN + (inner - (max.x - min.x) * scale) / 2.0,
            MARGIN + (inner - (max.y - min.y) * scale) / 2.0,
        );
        Self { scale, min, offset }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(
            self.offset.x + (p.x - self.min.x) * self.scale,
            VIEWBOX - (self.offset.y + (p.y - self.min.y) * self.scale),
        )
    }
}

pub fn render_svg(d: &Drawing, emb: &PlanarEmbedding) -> String {
    let view = ViewTransform::fit(&d.positions);
    let pts: Vec<Point> = d.positions.iter().map(|&p| view.apply(p)).collect();
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {VIEWBOX} {VIEWBOX}" width="{VIEWBOX}" height="{VIEWBOX}">"#
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="{STROKE_WIDTH}">"#);
    for &Edge(u, v) in emb.edges() {
        let (a, b) = (pts[u], pts[v]);
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
            a.x, a.y, b.x, b.y
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(out, r#"<g fill="black">"#);
    for p in &pts {
        let _ = writeln!(out, r#"<circle cx="{:.3}" cy="{:.3}" r="{VERTEX_RADIUS}"/>"#, p.x, p.y);
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::octahedron;
    use crate::solver::{regular_polygon, tutte};

    #[test]
    fn fits_inside_margins_and_keeps_aspect() {
        let pts = [Point::new(-1.0, 0.0), Point::new(3.0, 1.0)];
        let view = ViewTransform::fit(&pts);
        let (a, b) = (view.apply(pts[0]), view.apply(pts[1]));
        assert_eq!((a.x, b.x), (MARGIN, VIEWBOX - MARGIN));
        // 4 wide, 1 tall: vertical extent is a quarter of the horizontal one
        assert!(((a.y - b.y) - (b.x - a.x) / 4.0).abs() < 1e-9);
        assert!(b.y < a.y, "y axis points up");
        assert!(((a.y + b.y) / 2.0 - VIEWBOX / 2.0).abs() < 1e-9);
    }

    #[test]
    fn renders_every_vertex_and_edge() {
        let emb = octahedron();
        let d = tutte(&emb, &regular_polygon(emb.outer_face(), 1.0).unwrap()).unwrap();
        let svg = render_svg(&d, &emb);
        assert_eq!(svg.matches("<line ").count(), emb.m());
        assert_eq!(svg.matches("<circle ").count(), emb.n());
        assert!(svg.contains(r#"viewBox="0 0 1000 1000""#));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
