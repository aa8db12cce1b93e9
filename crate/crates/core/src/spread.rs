//! Weights that spread vertex coordinates evenly along a direction.
//!
//! An unweighted Tutte drawing, viewed in a frame rotated so that the chosen
//! direction is the x-axis, orients every edge from left to right. For each
//! edge `e` one canonical source-to-sink path is formed: BFS tree `T1` from
//! the source to the tail of `e`, then `e`, then BFS tree `Tn` to the sink.
//! Giving an edge `v_i v_j` weight `1 / (x_j - x_i)` per path it lies on keeps
//! every interior vertex in x-equilibrium at the target coordinates, so the
//! total weight is `n_ij / (x_j - x_i)` with `n_ij` the number of canonical
//! paths through the edge.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, PlanarEmbedding};
use crate::solver::{solve_stress, tutte, Drawing, OuterPolygon, WeightAssignment};

/// Rotation step tried by [`ensure_general_position`].
pub const ROTATION_STEP: f64 = 1e-3;
pub const MAX_ROTATIONS: usize = 64;
/// Minimum x-gap between any two vertices, relative to the polygon scale.
pub const GENERAL_POSITION_GAP: f64 = 1e-9;

/// Acyclic orientation with a single source and sink, plus the two BFS trees
/// used to route canonical paths.
#[derive(Debug, Clone, PartialEq)]
pub struct StOrientation {
    order: Vec<usize>,
    rank: Vec<usize>,
    edges: Vec<Edge>,
    /// `(tail, head)` aligned with `edges`.
    directed: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    t1_parent: Vec<Option<usize>>,
    tn_parent: Vec<Option<usize>>,
    t1_bfs: Vec<usize>,
    tn_bfs: Vec<usize>,
}

impl StOrientation {
    /// Orients each edge from the earlier to the later vertex of `order`.
    /// `edges` must be sorted.
    pub fn from_order(order: Vec<usize>, edges: &[Edge]) -> Result<Self> {
        let n = order.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::NotStOrientation("order is not a permutation".into()));
            }
            rank[v] = i;
        }
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        let directed: Vec<(usize, usize)> = edges
            .iter()
            .map(|&Edge(u, v)| if rank[u] < rank[v] { (u, v) } else { (v, u) })
            .collect();
        for &(t, h) in &directed {
            out_adj[t].push(h);
            in_adj[h].push(t);
        }
        for list in out_adj.iter_mut().chain(in_adj.iter_mut()) {
            list.sort_unstable();
        }
        for (i, &v) in order.iter().enumerate() {
            if i > 0 && in_adj[v].is_empty() {
                return Err(Error::NotStOrientation(format!("vertex {v} has no incoming edge")));
            }
            if i + 1 < n && out_adj[v].is_empty() {
                return Err(Error::NotStOrientation(format!("vertex {v} has no outgoing edge")));
            }
        }
        let (t1_parent, t1_bfs) = bfs_tree(order[0], &out_adj);
        let (tn_parent, tn_bfs) = bfs_tree(order[n - 1], &in_adj);
        Ok(Self {
            order,
            rank,
            edges: edges.to_vec(),
            directed,
            out_adj,
            in_adj,
            t1_parent,
            tn_parent,
            t1_bfs,
            tn_bfs,
        })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn source(&self) -> usize {
        self.order[0]
    }

    pub fn sink(&self) -> usize {
        *self.order.last().unwrap()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `(tail, head)` per edge, aligned with [`edges`](Self::edges).
    pub fn directed_edges(&self) -> &[(usize, usize)] {
        &self.directed
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// Parent of `v` in the tree directed out of the source.
    pub fn t1_parent(&self, v: usize) -> Option<usize> {
        self.t1_parent[v]
    }

    /// Next vertex after `v` on the tree directed into the sink.
    pub fn tn_parent(&self, v: usize) -> Option<usize> {
        self.tn_parent[v]
    }
}

fn bfs_tree(root: usize, adj: &[Vec<usize>]) -> (Vec<Option<usize>>, Vec<usize>) {
    let mut parent = vec![None; adj.len()];
    let mut seen = vec![false; adj.len()];
    let mut visit = Vec::with_capacity(adj.len());
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        visit.push(v);
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(v);
                queue.push_back(w);
            }
        }
    }
    (parent, visit)
}

/// Target coordinate per vertex along the spread direction.
#[derive(Debug, Clone, PartialEq)]
pub struct TargetCoordinates {
    pub x: Vec<f64>,
}

/// Number of canonical paths through each edge, aligned with the edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCounts {
    pub counts: Vec<u64>,
}

/// Rotates the drawing in steps of [`ROTATION_STEP`] until all x-coordinates
/// are pairwise separated. Returns the rotated copy and the angle used.
pub fn ensure_general_position(d: &Drawing) -> Result<(Drawing, f64)> {
    let gap = GENERAL_POSITION_GAP * d.scale();
    if distinct_x(d, gap) {
        return Ok((d.clone(), 0.0));
    }
    for attempt in 1..=MAX_ROTATIONS {
        let angle = attempt as f64 * ROTATION_STEP;
        let rotated = d.rotated(angle);
        if distinct_x(&rotated, gap) {
            return Ok((rotated, angle));
        }
    }
    Err(Error::DegeneratePosition(MAX_ROTATIONS))
}

fn distinct_x(d: &Drawing, gap: f64) -> bool {
    let mut xs: Vec<f64> = d.positions.iter().map(|p| p.x).collect();
    xs.sort_by(f64::total_cmp);
    xs.windows(2).all(|w| w[1] - w[0] > gap)
}

/// Orients edges left to right in a drawing in general position.
pub fn st_orient(d: &Drawing, emb: &PlanarEmbedding) -> Result<StOrientation> {
    let mut order: Vec<usize> = (0..emb.n()).collect();
    order.sort_by(|&a, &b| d.positions[a].x.total_cmp(&d.positions[b].x).then(a.cmp(&b)));
    StOrientation::from_order(order, emb.edges())
}

/// Evenly spaced targets between consecutive fixed coordinates.
///
/// `fixed[v]` holds the coordinate of each pinned vertex. Every maximal run of
/// `k` free vertices between fixed values `a < b` receives `a + j (b - a) / (k + 1)`.
pub fn target_x(order: &[usize], fixed: &[Option<f64>]) -> Result<TargetCoordinates> {
    let mut x = vec![f64::NAN; fixed.len()];
    let mut last: Option<f64> = None;
    let mut run: Vec<usize> = Vec::new();
    for &v in order {
        match fixed[v] {
            Some(b) => {
                if let Some(a) = last {
                    if !(b > a) {
                        return Err(Error::NotStOrientation(format!(
                            "fixed coordinates not increasing at vertex {v}"
                        )));
                    }
                    let k = run.len() as f64;
                    for (j, &u) in run.iter().enumerate() {
                        x[u] = a + (j + 1) as f64 * (b - a) / (k + 1.0);
                    }
                } else if !run.is_empty() {
                    return Err(Error::NotStOrientation("free vertex before the first fixed one".into()));
                }
                run.clear();
                x[v] = b;
                last = Some(b);
            }
            None => run.push(v),
        }
    }
    if !run.is_empty() {
        return Err(Error::NotStOrientation("free vertex after the last fixed one".into()));
    }
    Ok(TargetCoordinates { x })
}

/// `n_ij = 1 + [ij in T1] sum_{D_j} d+ + [ij in Tn] sum_{A_i} d-`, by one
/// bottom-up pass over each tree.
pub fn count_paths(o: &StOrientation) -> PathCounts {
    let n = o.order.len();
    let mut below_out: Vec<u64> = (0..n).map(|v| o.out_degree(v) as u64).collect();
    for &v in o.t1_bfs.iter().rev() {
        if let Some(p) = o.t1_parent[v] {
            below_out[p] += below_out[v];
        }
    }
    let mut below_in: Vec<u64> = (0..n).map(|v| o.in_degree(v) as u64).collect();
    for &v in o.tn_bfs.iter().rev() {
        if let Some(p) = o.tn_parent[v] {
            below_in[p] += below_in[v];
        }
    }
    let counts = o
        .directed
        .iter()
        .map(|&(i, j)| {
            let mut c = 1;
            if o.t1_parent[j] == Some(i) {
                c += below_out[j];
            }
            if o.tn_parent[i] == Some(j) {
                c += below_in[i];
            }
            c
        })
        .collect();
    PathCounts { counts }
}

/// Weight `n_ij / (x_j - x_i)` per oriented edge.
pub fn spread_weights(o: &StOrientation, t: &TargetCoordinates, counts: &PathCounts) -> Result<WeightAssignment> {
    let weights = o
        .directed
        .iter()
        .zip(&counts.counts)
        .zip(&o.edges)
        .map(|((&(i, j), &c), &e)| {
            let gap = t.x[j] - t.x[i];
            if gap > 0.0 {
                Ok(c as f64 / gap)
            } else {
                Err(Error::ZeroGap(e))
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    WeightAssignment::new(o.edges.clone(), weights)
}

/// Result of [`spread_drawing`].
#[derive(Debug, Clone)]
pub struct Spread {
    pub weights: WeightAssignment,
    pub drawing: Drawing,
    /// Direction actually spread along, after any general-position rotation.
    pub frame_angle: f64,
    pub orientation: StOrientation,
    pub targets: TargetCoordinates,
}

impl Spread {
    /// Largest deviation of a solved interior coordinate from its target,
    /// measured along the spread direction.
    pub fn target_error(&self, emb: &PlanarEmbedding) -> f64 {
        let framed = self.drawing.rotated(-self.frame_angle);
        (0..emb.n())
            .filter(|&v| !emb.is_outer(v))
            .map(|v| (framed.positions[v].x - self.targets.x[v]).abs())
            .fold(0.0, f64::max)
    }
}

/// Spreads vertices evenly along `direction` (radians; 0 spreads x, pi/2 spreads y).
pub fn spread_drawing(emb: &PlanarEmbedding, poly: &OuterPolygon, direction: f64) -> Result<Spread> {
    let base = tutte(emb, poly)?;
    spread_from_reference(emb, poly, &base, direction)
}

/// As [`spread_drawing`], reusing an existing Tutte drawing of `emb` on `poly`.
pub fn spread_from_reference(
    emb: &PlanarEmbedding,
    poly: &OuterPolygon,
    base: &Drawing,
    direction: f64,
) -> Result<Spread> {
    let (framed, extra) = ensure_general_position(&base.rotated(-direction))?;
    let frame_angle = direction - extra;
    let orientation = st_orient(&framed, emb)?;
    let fixed: Vec<Option<f64>> = (0..emb.n())
        .map(|v| emb.is_outer(v).then(|| framed.positions[v].x))
        .collect();
    let targets = target_x(orientation.order(), &fixed)?;
    let counts = count_paths(&orientation);
    let weights = spread_weights(&orientation, &targets, &counts)?;
    let drawing = solve_stress(emb, &weights, poly)?;
    Ok(Spread {
        weights,
        drawing,
        frame_angle,
        orientation,
        targets,
    })
}
