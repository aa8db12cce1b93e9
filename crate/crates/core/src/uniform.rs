//! Drawings whose x-coordinates are exactly the positions `1..=n` of an
//! st-ordering, outer vertices included.
//!
//! The outer face is placed on a convex polygon built around the fixed
//! x-coordinates: one horizontal top edge, one horizontal bottom edge, and
//! a left and right chain of sloped edges, the right chain rescaled in y so
//! both chains span the same height. Weights then come from the spread
//! construction with unit target gaps.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::graph::{Edge, PlanarEmbedding};
use crate::solver::{regular_polygon, solve_stress, tutte, Drawing, OuterPolygon, WeightAssignment, DEFAULT_RADIUS};
use crate::spread::{count_paths, ensure_general_position, spread_weights, st_orient, StOrientation, TargetCoordinates};

/// Position of every vertex in an st-ordering, starting at 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StOrdering {
    pub index: Vec<usize>,
}

impl StOrdering {
    /// Vertices sorted by index.
    pub fn order(&self) -> Vec<usize> {
        let mut order = vec![0; self.index.len()];
        for (v, &i) in self.index.iter().enumerate() {
            order[i - 1] = v;
        }
        order
    }

    pub fn orientation(&self, emb: &PlanarEmbedding) -> Result<StOrientation> {
        StOrientation::from_order(self.order(), emb.edges())
    }
}

/// The left-to-right order of a Tutte drawing on the regular polygon, after
/// the same general-position rotation the spread uses.
pub fn st_indices(emb: &PlanarEmbedding) -> Result<StOrdering> {
    let base = tutte(emb, &regular_polygon(emb.outer_face(), DEFAULT_RADIUS)?)?;
    let (framed, _) = ensure_general_position(&base)?;
    let orientation = st_orient(&framed, emb)?;
    let mut index = vec![0; emb.n()];
    for (i, &v) in orientation.order().iter().enumerate() {
        index[v] = i + 1;
    }
    Ok(StOrdering { index })
}

/// Convex placement of `outer` (in outer-face order) with `x = index`.
///
/// Walking `outer` from its leftmost vertex `L` to its rightmost `R` gives the
/// lower chain; the rest of the cycle is the upper chain. The polygon visits
/// `outer` counter-clockwise, like [`regular_polygon`].
pub fn convex_outer_placement(outer: &[usize], ordering: &StOrdering) -> Result<OuterPolygon> {
    let k = outer.len();
    if k < 3 {
        return Err(Error::InvalidPolygon(format!("outer cycle of length {k}")));
    }
    let x = |v: usize| ordering.index[v] as f64;
    let start = (0..k).min_by_key(|&i| ordering.index[outer[i]]).unwrap();
    let cycle: Vec<usize> = (0..k).map(|i| outer[(start + i) % k]).collect();
    let right = (0..k).max_by_key(|&i| ordering.index[cycle[i]]).unwrap();
    let lower: Vec<usize> = cycle[..=right].to_vec();
    let mut upper: Vec<usize> = cycle[right..].to_vec();
    upper.push(cycle[0]);
    upper.reverse();
    for chain in [&lower, &upper] {
        if chain.windows(2).any(|w| x(w[1]) <= x(w[0])) {
            return Err(Error::NotStOrientation("outer chains are not x-monotone".into()));
        }
    }

    let mut y = vec![0.0; ordering.index.len()];
    if k == 3 {
        // lower chain L -> M -> R puts M below, otherwise above
        let (middle, sign) = if lower.len() == 3 { (lower[1], -1.0) } else { (upper[1], 1.0) };
        y[middle] = sign;
    } else {
        let (top, bottom) = choose_top_bottom(&upper, &lower)?;
        // counter-clockwise order: T_l ... L ... B_l, then B_r ... R ... T_r
        let left_upper: Vec<usize> = upper[..=top].iter().rev().copied().collect();
        let left_lower = &lower[..=bottom];
        let right_lower = &lower[bottom + 1..];
        let right_upper: Vec<usize> = upper[top + 1..].iter().rev().copied().collect();

        place_run(&left_upper, (180.0, 270.0), Anchor::End, &x, &mut y);
        place_run(left_lower, (270.0, 360.0), Anchor::Start, &x, &mut y);
        place_run(right_lower, (0.0, 90.0), Anchor::End, &x, &mut y);
        place_run(&right_upper, (90.0, 180.0), Anchor::Start, &x, &mut y);

        let (tl, bl) = (upper[top], lower[bottom]);
        let (tr, br) = (upper[top + 1], lower[bottom + 1]);
        let alpha = (y[tl] - y[bl]) / (y[tr] - y[br]);
        let shift = y[br];
        // R ends the lower run and starts the upper one; map it once
        for &v in right_lower.iter().chain(&right_upper[1..]) {
            y[v] = y[bl] + alpha * (y[v] - shift);
        }
    }
    let positions: Vec<Point> = outer.iter().map(|&v| Point::new(x(v), y[v])).collect();
    OuterPolygon::new(outer.to_vec(), positions)
}

/// Top edge `(upper[i], upper[i+1])` and bottom edge `(lower[j], lower[j+1])`
/// maximizing the shorter of the two side chains.
fn choose_top_bottom(upper: &[usize], lower: &[usize]) -> Result<(usize, usize)> {
    let (p, q) = (upper.len() - 1, lower.len() - 1);
    let mut best: Option<((usize, Edge, Edge), (usize, usize))> = None;
    for i in 0..p {
        for j in 0..q {
            if (i == 0 && j == 0) || (i == p - 1 && j == q - 1) {
                continue;
            }
            let shorter = (i + j).min(p - 1 - i + q - 1 - j);
            let key = (
                usize::MAX - shorter,
                Edge::new(upper[i], upper[i + 1]),
                Edge::new(lower[j], lower[j + 1]),
            );
            if best.as_ref().is_none_or(|(k, _)| key < *k) {
                best = Some((key, (i, j)));
            }
        }
    }
    best.map(|(_, ij)| ij).ok_or(Error::NoValidTopBottom)
}

enum Anchor {
    Start,
    End,
}

/// Places a monotone run of vertices whose edges, in the given order, have
/// direction angles evenly spaced inside `range` (degrees). The anchor vertex
/// keeps y = 0.
fn place_run(run: &[usize], range: (f64, f64), anchor: Anchor, x: &impl Fn(usize) -> f64, y: &mut [f64]) {
    let edges = run.len().saturating_sub(1);
    let dy: Vec<f64> = (0..edges)
        .map(|s| {
            let theta = range.0 + (range.1 - range.0) * (s + 1) as f64 / (edges + 1) as f64;
            (x(run[s + 1]) - x(run[s])) * theta.to_radians().tan()
        })
        .collect();
    match anchor {
        Anchor::Start => {
            y[run[0]] = 0.0;
            for s in 0..edges {
                y[run[s + 1]] = y[run[s]] + dy[s];
            }
        }
        Anchor::End => {
            y[run[edges]] = 0.0;
            for s in (0..edges).rev() {
                y[run[s]] = y[run[s + 1]] - dy[s];
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct UniformDrawing {
    pub weights: WeightAssignment,
    pub drawing: Drawing,
    pub ordering: StOrdering,
}

impl UniformDrawing {
    /// Largest `|x_v - index(v)|` over all vertices.
    pub fn spacing_error(&self) -> f64 {
        self.drawing
            .positions
            .iter()
            .zip(&self.ordering.index)
            .map(|(p, &i)| (p.x - i as f64).abs())
            .fold(0.0, f64::max)
    }
}

pub fn uniform_drawing(emb: &PlanarEmbedding) -> Result<UniformDrawing> {
    let ordering = st_indices(emb)?;
    let orientation = ordering.orientation(emb)?;
    let poly = convex_outer_placement(emb.outer_face(), &ordering)?;
    let targets = TargetCoordinates {
        x: ordering.index.iter().map(|&i| i as f64).collect(),
    };
    let weights = spread_weights(&orientation, &targets, &count_paths(&orientation))?;
    let drawing = solve_stress(emb, &weights, &poly)?;
    Ok(UniformDrawing {
        weights,
        drawing,
        ordering,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate_planar;
    use crate::graph::tests::{k4, octahedron};
    use crate::graph::worst_case_graph;
    use crate::metrics::{crossing_count, edge_length_ratio, faces_convex, polygon_convex};

    fn ordering(index: &[usize]) -> StOrdering {
        StOrdering { index: index.to_vec() }
    }

    fn horizontal_edges(poly: &OuterPolygon) -> usize {
        let pts = poly.positions();
        (0..pts.len()).filter(|&i| pts[i].y == pts[(i + 1) % pts.len()].y).count()
    }

    fn check_polygon(poly: &OuterPolygon, ord: &StOrdering) {
        for (v, p) in poly.iter() {
            assert_eq!(p.x, ord.index[v] as f64);
        }
        let idx: Vec<usize> = (0..poly.len()).collect();
        assert!(polygon_convex(&idx, poly.positions(), 0.0));
    }

    #[test]
    fn k4_indices() {
        let emb = k4();
        let ord = st_indices(&emb).unwrap();
        let mut sorted = ord.index.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3, 4]);
        let source = ord.order()[0];
        assert!(emb.is_outer(source));
        let o = ord.orientation(&emb).unwrap();
        assert_eq!(o.source(), source);
    }

    #[test]
    fn triangle_placement() {
        let ord = ordering(&[1, 3, 5]);
        let poly = convex_outer_placement(&[0, 1, 2], &ord).unwrap();
        check_polygon(&poly, &ord);
        assert_eq!(poly.positions()[1].y, -1.0);
        let poly = convex_outer_placement(&[0, 2, 1], &ord).unwrap();
        check_polygon(&poly, &ord);
        assert_eq!(poly.positions()[2].y, 1.0);
    }

    #[test]
    fn quadrilateral_has_two_horizontal_edges() {
        for index in [[1, 2, 3, 4], [1, 3, 2, 4], [1, 4, 2, 3], [2, 1, 4, 3]] {
            let ord = ordering(&index);
            if let Ok(poly) = convex_outer_placement(&[0, 1, 2, 3], &ord) {
                check_polygon(&poly, &ord);
                assert_eq!(horizontal_edges(&poly), 2, "{index:?}");
            }
        }
    }

    #[test]
    fn non_monotone_outer_cycle_rejected() {
        // 1 -> 3 -> 2 -> 4 around the cycle zigzags in x
        let ord = ordering(&[1, 3, 2, 4]);
        assert!(matches!(
            convex_outer_placement(&[0, 1, 2, 3], &ord),
            Err(Error::NotStOrientation(_))
        ));
    }

    #[test]
    fn long_chains_stay_convex() {
        for k in 4..12 {
            let outer: Vec<usize> = (0..k).collect();
            // alternate sides so both chains are long
            let mut xs: Vec<usize> = (0..k).map(|i| if i <= k / 2 { 2 * i + 1 } else { 2 * (k - i) }).collect();
            xs[0] = 1;
            let mut rank: Vec<usize> = (0..k).collect();
            rank.sort_by_key(|&i| xs[i]);
            let mut index = vec![0; k];
            for (r, &v) in rank.iter().enumerate() {
                index[v] = r + 1;
            }
            let ord = ordering(&index);
            let poly = convex_outer_placement(&outer, &ord).unwrap();
            check_polygon(&poly, &ord);
            assert_eq!(horizontal_edges(&poly), 2);
        }
    }

    #[test]
    fn uniform_spacing_on_small_graphs() {
        for emb in [k4(), octahedron(), worst_case_graph(6).unwrap()] {
            let u = uniform_drawing(&emb).unwrap();
            assert!(u.spacing_error() < 1e-6);
            assert_eq!(crossing_count(&u.drawing, &emb), 0);
            assert!(faces_convex(&u.drawing, &emb));
        }
    }

    #[test]
    fn uniform_spacing_on_generated_graphs() {
        for seed in 0..10 {
            let n = 20 + 4 * seed as usize;
            let emb = generate_planar(n, 5 * n / 2, seed).unwrap();
            let u = uniform_drawing(&emb).unwrap();
            assert!(u.spacing_error() < 1e-6, "seed {seed}: {}", u.spacing_error());
            assert_eq!(crossing_count(&u.drawing, &emb), 0);
            assert!(faces_convex(&u.drawing, &emb));
            let rho = edge_length_ratio(&u.drawing, &emb).unwrap();
            assert!(rho <= 3.0 * n as f64, "seed {seed}: rho {rho}");
        }
    }
}
