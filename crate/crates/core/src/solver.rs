//! Stress-graph (weighted Tutte) embeddings.
//!
//! The outer face is pinned to a strictly convex polygon; every interior
//! vertex `u` then satisfies `sum_v w_uv (p_u - p_v) = 0`, i.e. it sits at the
//! weighted barycentre of its neighbours.

use std::collections::HashSet;
use std::f64::consts::{FRAC_PI_2, TAU};

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::{Edge, PlanarEmbedding};
use crate::linalg::LaplacianFactor;

pub const DEFAULT_RADIUS: f64 = 1.0;

/// Largest accepted equilibrium residual, relative to the polygon scale.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Positions of the outer-face vertices, in the cyclic order of the face.
#[derive(Debug, Clone, PartialEq)]
pub struct OuterPolygon {
    vertices: Vec<usize>,
    positions: Vec<Point>,
}

impl OuterPolygon {
    /// Checks that the cycle is a strictly convex polygon (either orientation).
    pub fn new(vertices: Vec<usize>, positions: Vec<Point>) -> Result<Self> {
        let k = vertices.len();
        if k < 3 || positions.len() != k {
            return Err(Error::InvalidPolygon(format!(
                "{k} vertices with {} positions",
                positions.len()
            )));
        }
        if vertices.iter().collect::<HashSet<_>>().len() != k {
            return Err(Error::InvalidPolygon("repeated vertex".into()));
        }
        if positions.iter().any(|p| !p.x.is_finite() || !p.y.is_finite()) {
            return Err(Error::InvalidPolygon("non-finite coordinate".into()));
        }
        let mut sign = 0.0f64;
        let mut turning = 0.0;
        for i in 0..k {
            let a = positions[i];
            let b = positions[(i + 1) % k];
            let c = positions[(i + 2) % k];
            let (e1, e2) = (b - a, c - b);
            let cross = e1.cross(e2);
            if cross == 0.0 || (sign != 0.0 && cross.signum() != sign) {
                return Err(Error::InvalidPolygon(format!("turn at vertex {} is not strict", vertices[(i + 1) % k])));
            }
            sign = cross.signum();
            turning += cross.atan2(e1.x * e2.x + e1.y * e2.y);
        }
        if (turning.abs() - TAU).abs() > 1e-6 {
            return Err(Error::InvalidPolygon("polygon winds more than once".into()));
        }
        Ok(Self { vertices, positions })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, Point)> + '_ {
        self.vertices.iter().copied().zip(self.positions.iter().copied())
    }

    /// Largest distance from the vertex centroid; the radius for regular polygons.
    pub fn scale(&self) -> f64 {
        let k = self.positions.len() as f64;
        let c = self.positions.iter().fold(Point::ORIGIN, |acc, &p| acc + p) * (1.0 / k);
        self.positions.iter().map(|&p| p.distance(c)).fold(0.0, f64::max)
    }

    pub fn rotated(&self, angle: f64) -> Self {
        Self {
            vertices: self.vertices.clone(),
            positions: self.positions.iter().map(|p| p.rotated(angle)).collect(),
        }
    }
}

/// Places the `i`-th outer vertex at angle `pi/2 + 2 pi i / k` on a circle
/// of the given radius centred at the origin.
pub fn regular_polygon(outer_face: &[usize], radius: f64) -> Result<OuterPolygon> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::BadParams(format!("radius must be positive, got {radius}")));
    }
    let k = outer_face.len();
    let positions = (0..k)
        .map(|i| Point::from_polar(radius, FRAC_PI_2 + TAU * i as f64 / k as f64))
        .collect();
    OuterPolygon::new(outer_face.to_vec(), positions)
}

/// Positive stress per undirected edge, aligned with `PlanarEmbedding::edges`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightAssignment {
    edges: Vec<Edge>,
    weights: Vec<f64>,
}

impl WeightAssignment {
    /// `edges` must be sorted and duplicate-free.
    pub fn new(edges: Vec<Edge>, weights: Vec<f64>) -> Result<Self> {
        if edges.len() != weights.len() || edges.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::EdgeSetMismatch);
        }
        Ok(Self { edges, weights })
    }

    pub fn uniform(emb: &PlanarEmbedding, weight: f64) -> Self {
        Self {
            edges: emb.edges().to_vec(),
            weights: vec![weight; emb.m()],
        }
    }

    pub fn from_fn(emb: &PlanarEmbedding, mut f: impl FnMut(usize, Edge) -> f64) -> Self {
        Self {
            edges: emb.edges().to_vec(),
            weights: emb.edges().iter().enumerate().map(|(i, &e)| f(i, e)).collect(),
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn get(&self, e: Edge) -> Option<f64> {
        self.edges.binary_search(&e).ok().map(|i| self.weights[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Edge, f64)> + '_ {
        self.edges.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            edges: self.edges.clone(),
            weights: self.weights.iter().map(|w| w * factor).collect(),
        }
    }
}

/// Vertex positions of a stress embedding.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    pub positions: Vec<Point>,
    pub polygon: OuterPolygon,
    /// Largest distance of an interior vertex from the weighted barycentre of
    /// its neighbours, i.e. `|sum w (p_u - p_v)| / sum w`, per coordinate.
    pub residual: f64,
}

impl Drawing {
    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn position(&self, v: usize) -> Point {
        self.positions[v]
    }

    /// Counter-clockwise rotation of every vertex and of the polygon about the origin.
    pub fn rotated(&self, angle: f64) -> Self {
        Self {
            positions: self.positions.iter().map(|p| p.rotated(angle)).collect(),
            polygon: self.polygon.rotated(angle),
            residual: self.residual,
        }
    }

    pub fn scale(&self) -> f64 {
        self.polygon.scale()
    }
}

/// Solves the weighted equilibrium system with the outer face pinned to `poly`.
pub fn solve_stress(emb: &PlanarEmbedding, w: &WeightAssignment, poly: &OuterPolygon) -> Result<Drawing> {
    if w.edges() != emb.edges() {
        return Err(Error::EdgeSetMismatch);
    }
    let n = emb.n();
    let mut pinned: Vec<Option<Point>> = vec![None; n];
    for (v, p) in poly.iter() {
        if v >= n || !emb.is_outer(v) {
            return Err(Error::InvalidPolygon(format!("vertex {v} is not on the outer face")));
        }
        pinned[v] = Some(p);
    }
    if poly.len() != emb.outer_face().len() {
        return Err(Error::InvalidPolygon("polygon does not cover the outer face".into()));
    }

    // Unknown index for each interior vertex.
    let mut slot = vec![usize::MAX; n];
    let mut interior = Vec::new();
    for v in 0..n {
        if pinned[v].is_none() {
            slot[v] = interior.len();
            interior.push(v);
        }
    }

    let k = interior.len();
    let mut couplings = Vec::new();
    let mut ground = vec![0.0; k];
    let mut rhs_x = vec![0.0; k];
    let mut rhs_y = vec![0.0; k];
    for (e, wt) in w.iter() {
        let Edge(u, v) = e;
        match (pinned[u], pinned[v]) {
            (Some(_), Some(_)) => continue,
            _ if !(wt > 0.0 && wt.is_finite()) => return Err(Error::NonPositiveWeight(e, wt)),
            (None, None) => couplings.push((slot[u], slot[v], wt)),
            (Some(p), None) | (None, Some(p)) => {
                let i = if pinned[u].is_none() { slot[u] } else { slot[v] };
                ground[i] += wt;
                rhs_x[i] += wt * p.x;
                rhs_y[i] += wt * p.y;
            }
        }
    }

    let mut positions: Vec<Point> = pinned.iter().map(|p| p.unwrap_or(Point::ORIGIN)).collect();
    if k > 0 {
        let factor = LaplacianFactor::new(k, &couplings, &ground)?;
        let xs = factor.solve(&rhs_x);
        let ys = factor.solve(&rhs_y);
        for (i, &v) in interior.iter().enumerate() {
            positions[v] = Point::new(xs[i], ys[i]);
        }
    }

    let residual = equilibrium_residual(emb, w, &positions);
    let tolerance = RESIDUAL_TOLERANCE * poly.scale();
    if !(residual <= tolerance) {
        return Err(Error::ResidualTooLarge { residual, tolerance });
    }
    Ok(Drawing {
        positions,
        polygon: poly.clone(),
        residual,
    })
}

/// Unweighted Tutte embedding.
pub fn tutte(emb: &PlanarEmbedding, poly: &OuterPolygon) -> Result<Drawing> {
    solve_stress(emb, &WeightAssignment::uniform(emb, 1.0), poly)
}

/// Max over interior vertices of `|sum w (p_u - p_v)| / sum w`, per coordinate.
pub fn equilibrium_residual(emb: &PlanarEmbedding, w: &WeightAssignment, positions: &[Point]) -> f64 {
    let n = emb.n();
    let mut force = vec![Point::ORIGIN; n];
    let mut total = vec![0.0; n];
    for (Edge(u, v), wt) in w.iter() {
        let d = (positions[u] - positions[v]) * wt;
        force[u] = force[u] + d;
        force[v] = force[v] - d;
        total[u] += wt;
        total[v] += wt;
    }
    (0..n)
        .filter(|&v| !emb.is_outer(v))
        .map(|v| force[v].x.abs().max(force[v].y.abs()) / total[v])
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{k4, octahedron};
    use nalgebra::{DMatrix, DVector};

    #[test]
    fn square_polygon_angles() {
        let sq = regular_polygon(&[0, 1, 2, 3], 1.0).unwrap();
        let expect = [(0.0, 1.0), (-1.0, 0.0), (0.0, -1.0), (1.0, 0.0)];
        for (p, (x, y)) in sq.positions().iter().zip(expect) {
            assert!((p.x - x).abs() < 1e-15 && (p.y - y).abs() < 1e-15);
        }
        let tri = regular_polygon(&[0, 1, 2], 1.0).unwrap();
        assert!((tri.positions()[0].y - 1.0).abs() < 1e-15 && tri.positions()[0].x.abs() < 1e-15);
        for k in 3..40 {
            let verts: Vec<usize> = (0..k).collect();
            assert!(regular_polygon(&verts, 2.5).is_ok());
        }
    }

    #[test]
    fn non_convex_polygon_rejected() {
        let dart = vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(0.0, 0.5),
            Point::new(-2.0, 1.0),
        ];
        assert!(OuterPolygon::new(vec![0, 1, 2, 3], dart).is_err());
    }

    #[test]
    fn k4_interior_at_centroid() {
        let emb = k4();
        let poly = regular_polygon(emb.outer_face(), 1.0).unwrap();
        let d = tutte(&emb, &poly).unwrap();
        let c = d.position(3);
        assert!(c.x.abs() < 1e-14 && c.y.abs() < 1e-14);
    }

    #[test]
    fn weighted_average_between_two_pins() {
        // Pins at x=0 (weight 1) and x=1 (weight 3); the third pin is far away
        // with a negligible weight, since every vertex of a 3-connected graph
        // has at least three neighbours.
        let emb = k4();
        let outer = emb.outer_face().to_vec();
        let positions = vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0), Point::new(0.5, 1e6)];
        let poly = OuterPolygon::new(outer.clone(), positions).unwrap();
        let mut w = vec![1.0; emb.m()];
        w[emb.edge_index(outer[1], 3).unwrap()] = 3.0;
        w[emb.edge_index(outer[2], 3).unwrap()] = 1e-12;
        let w = WeightAssignment::new(emb.edges().to_vec(), w).unwrap();
        let d = solve_stress(&emb, &w, &poly).unwrap();
        assert!((d.position(3).x - 0.75).abs() < 1e-9, "{:?}", d.position(3));
    }

    #[test]
    fn octahedron_matches_dense_solve() {
        let emb = octahedron();
        let poly = regular_polygon(emb.outer_face(), 1.0).unwrap();
        let d = tutte(&emb, &poly).unwrap();
        assert!(d.residual < 1e-9);

        let interior: Vec<usize> = (0..emb.n()).filter(|&v| !emb.is_outer(v)).collect();
        let k = interior.len();
        let pos = |v: usize| poly.iter().find(|&(u, _)| u == v).map(|(_, p)| p);
        let mut a = DMatrix::<f64>::zeros(k, k);
        let mut bx = DVector::<f64>::zeros(k);
        let mut by = DVector::<f64>::zeros(k);
        for (i, &u) in interior.iter().enumerate() {
            for &v in emb.neighbors(u) {
                a[(i, i)] += 1.0;
                match pos(v) {
                    Some(p) => {
                        bx[i] += p.x;
                        by[i] += p.y;
                    }
                    None => {
                        let j = interior.iter().position(|&x| x == v).unwrap();
                        a[(i, j)] -= 1.0;
                    }
                }
            }
        }
        let lu = a.lu();
        let xs = lu.solve(&bx).unwrap();
        let ys = lu.solve(&by).unwrap();
        for (i, &u) in interior.iter().enumerate() {
            assert!((d.position(u).x - xs[i]).abs() < 1e-12);
            assert!((d.position(u).y - ys[i]).abs() < 1e-12);
        }
        // The inner triangle is concentric with the outer one.
        let c = interior.iter().fold(Point::ORIGIN, |acc, &v| acc + d.position(v)) * (1.0 / 3.0);
        assert!(c.norm() < 1e-12);
        let r0 = d.position(interior[0]).norm();
        assert!(interior.iter().all(|&v| (d.position(v).norm() - r0).abs() < 1e-12));
        assert!(r0 < 1.0);
    }

    #[test]
    fn scale_equivariance() {
        let emb = octahedron();
        let poly = regular_polygon(emb.outer_face(), 1.0).unwrap();
        let w = WeightAssignment::from_fn(&emb, |i, _| 1.0 + i as f64);
        let a = solve_stress(&emb, &w, &poly).unwrap();
        let b = solve_stress(&emb, &w.scaled(1e5), &poly).unwrap();
        for (p, q) in a.positions.iter().zip(&b.positions) {
            assert!(p.distance(*q) < 1e-12);
        }
    }

    #[test]
    fn rejects_bad_weights() {
        let emb = k4();
        let poly = regular_polygon(emb.outer_face(), 1.0).unwrap();
        let mut w = vec![1.0; emb.m()];
        let e = emb.edge_index(3, emb.outer_face()[0]).unwrap();
        w[e] = 0.0;
        let w = WeightAssignment::new(emb.edges().to_vec(), w).unwrap();
        assert_eq!(solve_stress(&emb, &w, &poly).unwrap_err().kind(), "NonPositiveWeight");

        // Outer-face edges are inert and may carry anything.
        let w = WeightAssignment::from_fn(&emb, |_, e| if emb.is_outer_edge(e) { -5.0 } else { 1.0 });
        assert!(solve_stress(&emb, &w, &poly).is_ok());

        let short = WeightAssignment::new(emb.edges()[..3].to_vec(), vec![1.0; 3]).unwrap();
        assert_eq!(solve_stress(&emb, &short, &poly).unwrap_err(), Error::EdgeSetMismatch);
    }
}
