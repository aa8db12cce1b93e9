//! Convex combinations of spread weight systems and the kaleidoscope sweep.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::PlanarEmbedding;
use crate::metrics::edge_length_ratio;
use crate::solver::{solve_stress, tutte, Drawing, OuterPolygon, WeightAssignment};
use crate::spread::{spread_from_reference, Spread};

/// Per-edge `(1 - t) w0 + t w1`.
pub fn morph_weights(w0: &WeightAssignment, w1: &WeightAssignment, t: f64) -> Result<WeightAssignment> {
    if w0.edges() != w1.edges() {
        return Err(Error::EdgeSetMismatch);
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::BadParams(format!("morph parameter {t} outside [0, 1]")));
    }
    let weights = w0
        .weights()
        .iter()
        .zip(w1.weights())
        .map(|(&a, &b)| (1.0 - t) * a + t * b)
        .collect();
    WeightAssignment::new(w0.edges().to_vec(), weights)
}

#[derive(Debug, Clone)]
pub struct XyMorph {
    pub weights: WeightAssignment,
    pub drawing: Drawing,
    pub x_spread: Spread,
    pub y_spread: Spread,
}

/// Halfway morph between the spread along `angle` and the spread along
/// `angle + pi/2`, on the same outer polygon.
pub fn xy_morph(emb: &PlanarEmbedding, poly: &OuterPolygon, angle: f64) -> Result<XyMorph> {
    let base = tutte(emb, poly)?;
    xy_morph_from_reference(emb, poly, &base, angle)
}

fn xy_morph_from_reference(emb: &PlanarEmbedding, poly: &OuterPolygon, base: &Drawing, angle: f64) -> Result<XyMorph> {
    let x_spread = spread_from_reference(emb, poly, base, angle)?;
    let y_spread = spread_from_reference(emb, poly, base, angle + std::f64::consts::FRAC_PI_2)?;
    let weights = morph_weights(&x_spread.weights, &y_spread.weights, 0.5)?;
    let drawing = solve_stress(emb, &weights, poly)?;
    Ok(XyMorph {
        weights,
        drawing,
        x_spread,
        y_spread,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KaleidoscopeRow {
    pub angle_degrees: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Kaleidoscope {
    /// Ordered by angle.
    pub rows: Vec<KaleidoscopeRow>,
    pub argmin: usize,
    pub argmax: usize,
}

impl Kaleidoscope {
    pub fn best(&self) -> KaleidoscopeRow {
        self.rows[self.argmin]
    }

    pub fn worst(&self) -> KaleidoscopeRow {
        self.rows[self.argmax]
    }
}

/// Angles `0, step, 2 step, ...` up to 90 degrees; 90 is always included.
pub fn sweep_angles(step_degrees: f64) -> Result<Vec<f64>> {
    if !(step_degrees > 0.0 && step_degrees <= 90.0) {
        return Err(Error::BadParams(format!("angle step {step_degrees} outside (0, 90]")));
    }
    let mut angles: Vec<f64> = (0..)
        .map(|i| i as f64 * step_degrees)
        .take_while(|&a| a <= 90.0 + 1e-9)
        .map(|a| a.min(90.0))
        .collect();
    if *angles.last().unwrap() < 90.0 - 1e-9 {
        angles.push(90.0);
    }
    Ok(angles)
}

/// Edge-length ratio of the xy-morph at every sweep angle. Angles are
/// evaluated in parallel; rows come back in angle order.
pub fn kaleidoscope(emb: &PlanarEmbedding, poly: &OuterPolygon, step_degrees: f64) -> Result<Kaleidoscope> {
    let angles = sweep_angles(step_degrees)?;
    let base = tutte(emb, poly)?;
    let rows = angles
        .par_iter()
        .map(|&deg| {
            let m = xy_morph_from_reference(emb, poly, &base, deg.to_radians())?;
            Ok(KaleidoscopeRow {
                angle_degrees: deg,
                ratio: edge_length_ratio(&m.drawing, emb)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let by_ratio = |a: &(usize, &KaleidoscopeRow), b: &(usize, &KaleidoscopeRow)| a.1.ratio.total_cmp(&b.1.ratio);
    // first minimum and first maximum on ties
    let argmin = rows.iter().enumerate().min_by(by_ratio).unwrap().0;
    let argmax = rows.iter().enumerate().max_by(|a, b| by_ratio(a, b).then(b.0.cmp(&a.0))).unwrap().0;
    Ok(Kaleidoscope { rows, argmin, argmax })
}

/// The xy-morph drawing for one sweep angle in degrees.
pub fn kaleidoscope_drawing(emb: &PlanarEmbedding, poly: &OuterPolygon, angle_degrees: f64) -> Result<XyMorph> {
    xy_morph(emb, poly, angle_degrees.to_radians())
}
