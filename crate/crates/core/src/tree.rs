//! Weights that decay with depth in spanning structures rooted at the outer
//! face: edge at depth `i` gets `a / r^i`, so edges near the boundary pull
//! harder.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Edge, PlanarEmbedding};
use crate::metrics::edge_length_ratio;
use crate::schnyder::schnyder_wood;
use crate::solver::{solve_stress, Drawing, OuterPolygon, WeightAssignment};

/// Integer scaling parameters searched when picking the best `r`.
pub const BEST_R_RANGE: std::ops::RangeInclusive<u32> = 2..=16;

/// Depth (>= 1) per edge, aligned with `PlanarEmbedding::edges`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthAssignment {
    pub depth: Vec<u32>,
}

/// Distance of every vertex from the outer face (outer vertices at level 0).
pub fn bfs_levels(emb: &PlanarEmbedding) -> Vec<u32> {
    let mut level = vec![u32::MAX; emb.n()];
    let mut queue: VecDeque<usize> = emb.outer_face().iter().copied().collect();
    for &v in emb.outer_face() {
        level[v] = 0;
    }
    while let Some(v) = queue.pop_front() {
        for &w in emb.neighbors(v) {
            if level[w] == u32::MAX {
                level[w] = level[v] + 1;
                queue.push_back(w);
            }
        }
    }
    level
}

/// BFS from a super-vertex joined to every outer vertex; an edge's depth is
/// `min(level(u), level(v)) + 1`.
pub fn bfs_depths(emb: &PlanarEmbedding) -> DepthAssignment {
    let level = bfs_levels(emb);
    DepthAssignment {
        depth: emb.edges().iter().map(|&Edge(u, v)| level[u].min(level[v]) + 1).collect(),
    }
}

pub fn depth_weights(emb: &PlanarEmbedding, depths: &DepthAssignment, a: f64, r: f64) -> Result<WeightAssignment> {
    if !(a > 0.0 && a.is_finite()) || !(r > 1.0 && r.is_finite()) {
        return Err(Error::BadParams(format!("need a > 0 and r > 1, got a = {a}, r = {r}")));
    }
    if depths.depth.len() != emb.m() {
        return Err(Error::EdgeSetMismatch);
    }
    let w = WeightAssignment::from_fn(emb, |i, _| a / r.powi(depths.depth[i] as i32));
    if let Some((e, x)) = w.iter().find(|&(_, x)| !(x > 0.0)) {
        return Err(Error::NonPositiveWeight(e, x));
    }
    Ok(w)
}

pub fn bfs_spread(emb: &PlanarEmbedding, poly: &OuterPolygon, a: f64, r: f64) -> Result<Drawing> {
    let w = depth_weights(emb, &bfs_depths(emb), a, r)?;
    solve_stress(emb, &w, poly)
}

/// Depth of each interior edge within its own Schnyder tree; outer-triangle
/// edges get depth 1.
pub fn schnyder_depths(emb: &PlanarEmbedding) -> Result<DepthAssignment> {
    let wood = schnyder_wood(emb)?;
    let depth = emb
        .edges()
        .iter()
        .enumerate()
        .map(|(i, _)| match wood.edge_color(i) {
            None => 1,
            Some((color, tail)) => wood.tree_depth(color, tail),
        })
        .collect();
    Ok(DepthAssignment { depth })
}

pub fn schnyder_spread(emb: &PlanarEmbedding, poly: &OuterPolygon, a: f64, r: f64) -> Result<Drawing> {
    let w = depth_weights(emb, &schnyder_depths(emb)?, a, r)?;
    solve_stress(emb, &w, poly)
}

/// Which spanning structure provides the depths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DepthSource {
    Bfs,
    Schnyder,
}

#[derive(Debug, Clone)]
pub struct BestR {
    pub r: u32,
    pub ratio: f64,
    pub weights: WeightAssignment,
    pub drawing: Drawing,
}

/// Tries every integer `r` in `range` and keeps the lowest edge-length ratio
/// (smallest `r` on ties).
pub fn best_r(
    emb: &PlanarEmbedding,
    poly: &OuterPolygon,
    source: DepthSource,
    a: f64,
    range: std::ops::RangeInclusive<u32>,
) -> Result<BestR> {
    let depths = match source {
        DepthSource::Bfs => bfs_depths(emb),
        DepthSource::Schnyder => schnyder_depths(emb)?,
    };
    let candidates = range
        .collect::<Vec<u32>>()
        .into_par_iter()
        .map(|r| {
            let w = depth_weights(emb, &depths, a, r as f64)?;
            let drawing = solve_stress(emb, &w, poly)?;
            let ratio = edge_length_ratio(&drawing, emb)?;
            Ok(BestR {
                r,
                ratio,
                weights: w,
                drawing,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    candidates
        .into_iter()
        .reduce(|best, c| if c.ratio < best.ratio { c } else { best })
        .ok_or_else(|| Error::BadParams("empty r range".into()))
}
