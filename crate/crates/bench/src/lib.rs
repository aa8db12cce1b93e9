//! Shared fixtures for the criterion benches.

use stressdraw_core::generate::generate_planar;
use stressdraw_core::graph::PlanarEmbedding;

/// Generated graph with roughly 2.5 edges per vertex, as in the gallery runs.
pub fn fixture(n: usize, seed: u64) -> PlanarEmbedding {
    generate_planar(n, n * 5 / 2, seed).expect("fixture parameters are feasible")
}
