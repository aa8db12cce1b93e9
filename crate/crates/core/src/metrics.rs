//! Drawing quality metrics and geometric validation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{segments_cross, Point};
use crate::graph::{Edge, PlanarEmbedding};
use crate::solver::Drawing;

/// Turns with `|cross| <= CONVEXITY_TOLERANCE * scale^2` count as straight.
pub const CONVEXITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrawingMetrics {
    pub edge_length_ratio: f64,
    pub crossing_count: usize,
    pub all_faces_convex: bool,
    #[serde(skip)]
    pub min_edge_length: f64,
    #[serde(skip)]
    pub max_edge_length: f64,
}

impl DrawingMetrics {
    pub fn measure(d: &Drawing, emb: &PlanarEmbedding) -> Result<Self> {
        let (min_edge_length, max_edge_length) = edge_length_range(&d.positions, emb.edges())?;
        Ok(Self {
            edge_length_ratio: max_edge_length / min_edge_length,
            crossing_count: crossing_count(d, emb),
            all_faces_convex: faces_convex(d, emb),
            min_edge_length,
            max_edge_length,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("metrics serialise")
    }
}

fn edge_length_range(points: &[Point], edges: &[Edge]) -> Result<(f64, f64)> {
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for &e in edges {
        let len = points[e.0].distance(points[e.1]);
        if !(len > 0.0) {
            return Err(Error::ZeroLengthEdge(e));
        }
        lo = lo.min(len);
        hi = hi.max(len);
    }
    Ok((lo, hi))
}

/// Longest edge over shortest edge.
pub fn edge_length_ratio(d: &Drawing, emb: &PlanarEmbedding) -> Result<f64> {
    ratio_of(&d.positions, emb.edges())
}

/// Edge-length ratio of a raw straight-line drawing.
pub fn ratio_of(points: &[Point], edges: &[Edge]) -> Result<f64> {
    let (lo, hi) = edge_length_range(points, edges)?;
    Ok(hi / lo)
}

/// Number of edge pairs, without a shared endpoint, whose segments properly cross.
pub fn crossing_count(d: &Drawing, emb: &PlanarEmbedding) -> usize {
    count_crossings(&d.positions, emb.edges())
}

pub fn count_crossings(points: &[Point], edges: &[Edge]) -> usize {
    let mut count = 0;
    for (i, &Edge(a, b)) in edges.iter().enumerate() {
        for &Edge(c, e) in &edges[i + 1..] {
            if a == c || a == e || b == c || b == e {
                continue;
            }
            if segments_cross(points[a], points[b], points[c], points[e]) {
                count += 1;
            }
        }
    }
    count
}

/// True when every interior face polygon turns consistently in one direction.
pub fn faces_convex(d: &Drawing, emb: &PlanarEmbedding) -> bool {
    let scale = d.scale();
    let tol = CONVEXITY_TOLERANCE * scale * scale;
    emb.interior_faces()
        .all(|f| polygon_convex(&f.vertices, &d.positions, tol))
}

pub fn polygon_convex(cycle: &[usize], points: &[Point], tol: f64) -> bool {
    let k = cycle.len();
    let mut sign = 0.0f64;
    for i in 0..k {
        let a = points[cycle[i]];
        let b = points[cycle[(i + 1) % k]];
        let c = points[cycle[(i + 2) % k]];
        let (e1, e2) = (b - a, c - b);
        let cross = e1.cross(e2);
        if cross.abs() <= tol {
            // near-straight is fine, doubling back is not
            if e1.x * e2.x + e1.y * e2.y < 0.0 {
                return false;
            }
            continue;
        }
        if sign != 0.0 && cross.signum() != sign {
            return false;
        }
        sign = cross.signum();
    }
    true
}
