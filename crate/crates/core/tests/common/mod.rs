//! Reference computations written independently of the library code paths
//! they check.

#![allow(dead_code)]

use stressdraw_core::graph::{Edge, PlanarEmbedding};
use stressdraw_core::schnyder::SchnyderWood;
use stressdraw_core::spread::StOrientation;
use stressdraw_core::{Drawing, Point, WeightAssignment};

/// Walks every canonical path (T1 to the tail, the edge, Tn from the head)
/// and counts how many pass through each edge.
pub fn enumerate_paths(o: &StOrientation) -> Vec<u64> {
    let index = |a: usize, b: usize| o.edges().binary_search(&Edge::new(a, b)).unwrap();
    let mut counts = vec![0u64; o.edges().len()];
    for &(tail, head) in o.directed_edges() {
        let mut v = tail;
        while let Some(p) = o.t1_parent(v) {
            counts[index(p, v)] += 1;
            v = p;
        }
        assert_eq!(v, o.source());
        counts[index(tail, head)] += 1;
        let mut v = head;
        while let Some(p) = o.tn_parent(v) {
            counts[index(v, p)] += 1;
            v = p;
        }
        assert_eq!(v, o.sink());
    }
    counts
}

/// Largest weighted force imbalance at an interior vertex, divided by the
/// vertex's total weight.
pub fn residual(emb: &PlanarEmbedding, w: &WeightAssignment, pos: &[Point]) -> f64 {
    let n = emb.n();
    let mut force = vec![(0.0f64, 0.0f64); n];
    let mut total = vec![0.0f64; n];
    for (Edge(u, v), wt) in w.iter() {
        let (dx, dy) = (pos[v].x - pos[u].x, pos[v].y - pos[u].y);
        force[u].0 += wt * dx;
        force[u].1 += wt * dy;
        force[v].0 -= wt * dx;
        force[v].1 -= wt * dy;
        total[u] += wt;
        total[v] += wt;
    }
    (0..n)
        .filter(|&v| !emb.is_outer(v))
        .map(|v| force[v].0.hypot(force[v].1) / total[v])
        .fold(0.0, f64::max)
}

fn orientation(a: Point, b: Point, c: Point) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Pairs of edges without a shared endpoint whose interiors intersect,
/// including collinear overlaps.
pub fn crossings(pos: &[Point], edges: &[Edge]) -> usize {
    let on_segment = |a: Point, b: Point, p: Point| {
        p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
    };
    let mut count = 0;
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                continue;
            }
            let (a, b, c, d) = (pos[e.0], pos[e.1], pos[f.0], pos[f.1]);
            let (o1, o2) = (orientation(a, b, c), orientation(a, b, d));
            let (o3, o4) = (orientation(c, d, a), orientation(c, d, b));
            let proper = o1 * o2 < 0.0 && o3 * o4 < 0.0;
            let touching = (o1 == 0.0 && on_segment(a, b, c))
                || (o2 == 0.0 && on_segment(a, b, d))
                || (o3 == 0.0 && on_segment(c, d, a))
                || (o4 == 0.0 && on_segment(c, d, b));
            if proper || touching {
                count += 1;
            }
        }
    }
    count
}

/// Non-strict convexity: no interior face has corners turning both ways by
/// more than `tol`. Corners within `tol` of straight are accepted.
pub fn faces_convex(emb: &PlanarEmbedding, pos: &[Point], tol: f64) -> Result<(), String> {
    for face in emb.interior_faces() {
        let c = &face.vertices;
        let k = c.len();
        let turns: Vec<f64> = (0..k)
            .map(|i| orientation(pos[c[i]], pos[c[(i + 1) % k]], pos[c[(i + 2) % k]]))
            .collect();
        if turns.iter().any(|&t| t > tol) && turns.iter().any(|&t| t < -tol) {
            return Err(format!("face {c:?} turns both ways"));
        }
    }
    Ok(())
}

/// Smallest absolute orientation among the four tests of any crossing pair,
/// relative to the squared coordinate magnitude. Values near machine epsilon
/// mean the crossing is decided by rounding.
pub fn crossing_margin(pos: &[Point], edges: &[Edge]) -> f64 {
    let magnitude = pos.iter().map(|p| p.x.abs().max(p.y.abs())).fold(0.0, f64::max);
    let mut margin = f64::INFINITY;
    for (i, e) in edges.iter().enumerate() {
        for f in &edges[i + 1..] {
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                continue;
            }
            if crossings(pos, &[*e, *f]) == 1 {
                let (a, b, c, d) = (pos[e.0], pos[e.1], pos[f.0], pos[f.1]);
                let smallest = [orientation(a, b, c), orientation(a, b, d), orientation(c, d, a), orientation(c, d, b)]
                    .into_iter()
                    .map(f64::abs)
                    .fold(f64::INFINITY, f64::min);
                margin = margin.min(smallest / (magnitude * magnitude));
            }
        }
    }
    margin
}

/// Spread targets from scratch: order all vertices of the framed reference
/// drawing by x, keep outer vertices where they are, and space each run of
/// interior vertices evenly between its outer neighbours in that order.
pub fn spread_targets(emb: &PlanarEmbedding, framed: &Drawing) -> Vec<f64> {
    let mut order: Vec<usize> = (0..emb.n()).collect();
    order.sort_by(|&a, &b| framed.positions[a].x.partial_cmp(&framed.positions[b].x).unwrap());
    let mut target = vec![f64::NAN; emb.n()];
    let pinned: Vec<usize> = (0..order.len()).filter(|&i| emb.is_outer(order[i])).collect();
    assert_eq!(pinned[0], 0);
    assert_eq!(*pinned.last().unwrap(), order.len() - 1);
    for pair in pinned.windows(2) {
        let (i, j) = (pair[0], pair[1]);
        let (xa, xb) = (framed.positions[order[i]].x, framed.positions[order[j]].x);
        for k in i..=j {
            target[order[k]] = xa + (xb - xa) * (k - i) as f64 / (j - i) as f64;
        }
    }
    target
}

/// Schnyder wood invariants: one outgoing edge per color at every interior
/// vertex, none at the roots, every interior edge colored exactly once, the
/// outer triangle uncolored, and every color class acyclic towards its root.
pub fn check_schnyder(emb: &PlanarEmbedding, wood: &SchnyderWood) -> Result<(), String> {
    let roots = wood.roots();
    let mut out = vec![[0usize; 3]; emb.n()];
    for (i, &Edge(u, v)) in emb.edges().iter().enumerate() {
        let outer_edge = roots.contains(&u) && roots.contains(&v);
        match (wood.edge_color(i), outer_edge) {
            (None, true) => {}
            (Some((c, tail)), false) if (1..=3).contains(&c) && (tail == u || tail == v) => {
                out[tail][c as usize - 1] += 1;
            }
            (color, _) => return Err(format!("edge {u}-{v}: color {color:?}, outer {outer_edge}")),
        }
    }
    for v in 0..emb.n() {
        let expected = if roots.contains(&v) { [0, 0, 0] } else { [1, 1, 1] };
        if out[v] != expected {
            return Err(format!("vertex {v} has out-degrees {:?}", out[v]));
        }
    }
    for c in 1..=3u8 {
        for v in (0..emb.n()).filter(|v| !roots.contains(v)) {
            let mut u = v;
            for _ in 0..=emb.n() {
                match wood.parent(u, c) {
                    Some(p) => u = p,
                    None => break,
                }
            }
            if u != roots[c as usize - 1] {
                return Err(format!("color {c} path from {v} ends at {u}"));
            }
        }
    }
    Ok(())
}

pub fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}
