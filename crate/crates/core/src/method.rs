//! One entry point per drawing method, used by the CLI, the gallery and the
//! benches.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::PlanarEmbedding;
use crate::metrics::DrawingMetrics;
use crate::morph::xy_morph;
use crate::solver::{regular_polygon, solve_stress, tutte, Drawing, WeightAssignment, DEFAULT_RADIUS};
use crate::spread::{spread_drawing, Spread};
use crate::tree::{best_r, bfs_depths, depth_weights, schnyder_depths, DepthSource, BEST_R_RANGE};
use crate::uniform::uniform_drawing;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Tutte,
    XSpread,
    YSpread,
    XyMorph,
    Bfs,
    Schnyder,
    Uniform,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Tutte,
        Method::XSpread,
        Method::YSpread,
        Method::XyMorph,
        Method::Bfs,
        Method::Schnyder,
        Method::Uniform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Tutte => "tutte",
            Method::XSpread => "xspread",
            Method::YSpread => "yspread",
            Method::XyMorph => "xymorph",
            Method::Bfs => "bfs",
            Method::Schnyder => "schnyder",
            Method::Uniform => "uniform",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown method {s:?}")))
    }
}

/// Depth scaling for the tree methods: a fixed `r`, or the best integer in
/// [`BEST_R_RANGE`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RChoice {
    Fixed(f64),
    Best,
}

impl FromStr for RChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "best" {
            return Ok(RChoice::Best);
        }
        s.parse::<f64>()
            .ok()
            .filter(|r| *r > 1.0 && r.is_finite())
            .map(RChoice::Fixed)
            .ok_or_else(|| Error::BadParams(format!("r must be a number > 1 or \"best\", got {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodParams {
    /// Spread direction in degrees (x-spread, y-spread, xy-morph).
    pub angle_degrees: f64,
    pub a: f64,
    pub r: RChoice,
}

impl Default for MethodParams {
    fn default() -> Self {
        Self {
            angle_degrees: 0.0,
            a: 1.0,
            r: RChoice::Fixed(5.0),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MethodResult {
    pub method: Method,
    pub weights: WeightAssignment,
    pub drawing: Drawing,
    /// Scaling parameter used by the tree methods.
    pub r: Option<f64>,
}

/// Draws `emb` with `method`. Every method except `uniform` pins the outer
/// face to the regular polygon of radius [`DEFAULT_RADIUS`].
pub fn run_method(emb: &PlanarEmbedding, method: Method, params: &MethodParams) -> Result<MethodResult> {
    let poly = regular_polygon(emb.outer_face(), DEFAULT_RADIUS)?;
    let angle = params.angle_degrees.to_radians();
    let mut r = None;
    let (weights, drawing) = match method {
        Method::Tutte => (WeightAssignment::uniform(emb, 1.0), tutte(emb, &poly)?),
        Method::XSpread => split(spread_drawing(emb, &poly, angle)?),
        Method::YSpread => split(spread_drawing(emb, &poly, angle + std::f64::consts::FRAC_PI_2)?),
        Method::XyMorph => {
            let m = xy_morph(emb, &poly, angle)?;
            (m.weights, m.drawing)
        }
        Method::Bfs | Method::Schnyder => {
            let source = if method == Method::Bfs { DepthSource::Bfs } else { DepthSource::Schnyder };
            match params.r {
                RChoice::Best => {
                    let best = best_r(emb, &poly, source, params.a, BEST_R_RANGE)?;
                    r = Some(best.r as f64);
                    (best.weights, best.drawing)
                }
                RChoice::Fixed(value) => {
                    r = Some(value);
                    let depths = match source {
                        DepthSource::Bfs => bfs_depths(emb),
                        DepthSource::Schnyder => schnyder_depths(emb)?,
                    };
                    let w = depth_weights(emb, &depths, params.a, value)?;
                    let d = solve_stress(emb, &w, &poly)?;
                    (w, d)
                }
            }
        }
        Method::Uniform => {
            let u = uniform_drawing(emb)?;
            (u.weights, u.drawing)
        }
    };
    Ok(MethodResult {
        method,
        weights,
        drawing,
        r,
    })
}

fn split(s: Spread) -> (WeightAssignment, Drawing) {
    (s.weights, s.drawing)
}

/// The five columns of the comparison table.
pub const GALLERY_METHODS: [Method; 5] = [Method::Tutte, Method::XSpread, Method::YSpread, Method::XyMorph, Method::Bfs];

#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub name: String,
    pub n: usize,
    pub m: usize,
    /// One cell per [`GALLERY_METHODS`] entry, in order.
    pub results: Vec<Result<GalleryCell>>,
}

impl GalleryEntry {
    /// A row for a graph that could not be loaded: every cell carries `error`.
    pub fn load_failure(name: &str, error: Error) -> Self {
        Self {
            name: name.to_string(),
            n: 0,
            m: 0,
            results: GALLERY_METHODS.iter().map(|_| Err(error.clone())).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GalleryCell {
    pub result: MethodResult,
    pub metrics: DrawingMetrics,
}

/// Runs every gallery method on one graph; BFS uses the best `r`. Failures are
/// kept per cell.
pub fn gallery_entry(name: &str, emb: &PlanarEmbedding) -> GalleryEntry {
    let params = MethodParams {
        r: RChoice::Best,
        ..MethodParams::default()
    };
    GalleryEntry {
        name: name.to_string(),
        n: emb.n(),
        m: emb.m(),
        results: GALLERY_METHODS
            .iter()
            .map(|&m| {
                let result = run_method(emb, m, &params)?;
                let metrics = DrawingMetrics::measure(&result.drawing, emb)?;
                Ok(GalleryCell { result, metrics })
            })
            .collect(),
    }
}

pub fn gallery(graphs: &[(String, PlanarEmbedding)]) -> Vec<GalleryEntry> {
    graphs.par_iter().map(|(name, emb)| gallery_entry(name, emb)).collect()
}
