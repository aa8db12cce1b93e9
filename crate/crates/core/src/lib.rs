//! Convex straight-line drawings of 3-connected planar graphs as weighted
//! Tutte (stress-graph) embeddings, with weight systems that spread vertices
//! along a direction, morph between spreads, or decay with depth from the
//! outer face.

pub mod error;
pub mod generate;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod method;
pub mod metrics;
pub mod morph;
pub mod render;
pub mod schnyder;
pub mod solver;
pub mod spread;
pub mod tree;
pub mod uniform;

pub use error::{Error, Result};
pub use generate::{generate_planar, generate_planar_closest};
pub use geometry::Point;
pub use graph::{validate_three_connected, worst_case_graph, Edge, Face, PlanarEmbedding};
pub use method::{run_method, Method, MethodParams, MethodResult, RChoice};
pub use metrics::{edge_length_ratio, DrawingMetrics};
pub use morph::{kaleidoscope, morph_weights, xy_morph, Kaleidoscope};
pub use solver::{regular_polygon, solve_stress, tutte, Drawing, OuterPolygon, WeightAssignment};
pub use spread::{spread_drawing, Spread};
pub use uniform::{uniform_drawing, UniformDrawing};
