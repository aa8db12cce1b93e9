//! Seeded pseudorandom 3-connected planar graphs.
//!
//! A maximal planar graph is grown by repeatedly inserting a vertex into a
//! uniformly chosen face; edges are then deleted in random order, skipping
//! any deletion that would break 3-connectivity, until the requested edge
//! count is reached.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{is_three_connected, traverse_rotation, Edge, PlanarEmbedding};

/// Fresh triangulations tried before reporting [`Error::GenerationStalled`].
pub const RETRY_BUDGET: u64 = 16;

/// Generates a 3-connected planar embedding with exactly `n` vertices and
/// `m` edges. Deterministic for a fixed seed.
pub fn generate_planar(n: usize, m: usize, seed: u64) -> Result<PlanarEmbedding> {
    check_params(n, m)?;
    let mut best = usize::MAX;
    for attempt in 0..RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        let mut rotation = random_triangulation(n, &mut rng);
        let reached = prune_edges(&mut rotation, m, &mut rng);
        if reached == m {
            return with_largest_outer_face(rotation);
        }
        best = best.min(reached);
    }
    Err(Error::GenerationStalled {
        n,
        requested: m,
        achieved: best,
    })
}

/// Like [`generate_planar`] but, when the edge target is unreachable, returns
/// the sparsest graph found (the closest achievable count above `m`).
pub fn generate_planar_closest(n: usize, m: usize, seed: u64) -> Result<PlanarEmbedding> {
    check_params(n, m)?;
    let mut best: Option<Vec<Vec<usize>>> = None;
    let mut best_m = usize::MAX;
    for attempt in 0..RETRY_BUDGET {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt.wrapping_mul(0x9E37_79B9_7F4A_7C15)));
        let mut rotation = random_triangulation(n, &mut rng);
        let reached = prune_edges(&mut rotation, m, &mut rng);
        if reached < best_m {
            best_m = reached;
            best = Some(rotation);
        }
        if reached == m {
            break;
        }
    }
    with_largest_outer_face(best.expect("retry budget is positive"))
}

fn check_params(n: usize, m: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::InfeasibleParams(format!("n = {n}, need n >= 4")));
    }
    if 2 * m < 3 * n || m > 3 * n - 6 {
        return Err(Error::InfeasibleParams(format!(
            "m = {m} outside [3n/2, 3n-6] = [{}, {}] for n = {n}",
            (3 * n).div_ceil(2),
            3 * n - 6
        )));
    }
    Ok(())
}

/// Stacked triangulation on `n` vertices, as a counter-clockwise rotation system.
fn random_triangulation(n: usize, rng: &mut impl Rng) -> Vec<Vec<usize>> {
    let mut rotation = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
    // Faces as dart-ordered triangles, each lying left of its darts.
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let fi = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[fi];
        // At each corner (prev, cur, next), `next` immediately precedes `prev`
        // in the rotation of `cur`; the new vertex goes between them.
        for (cur, next) in [(a, b), (b, c), (c, a)] {
            let rot = &mut rotation[cur];
            let at = rot.iter().position(|&x| x == next).unwrap();
            rot.insert(at + 1, v);
        }
        rotation.push(vec![a, b, c]);
        faces[fi] = [v, a, b];
        faces.push([v, b, c]);
        faces.push([v, c, a]);
    }
    rotation
}

/// Deletes random edges while the graph stays 3-connected. Returns the final
/// edge count. A deletion that fails once fails forever (connectivity is
/// monotone under edge removal), so each edge is tried at most once.
fn prune_edges(rotation: &mut [Vec<usize>], target: usize, rng: &mut impl Rng) -> usize {
    let mut edges: Vec<Edge> = rotation
        .iter()
        .enumerate()
        .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| Edge(u, v)))
        .collect();
    edges.sort_unstable();
    edges.shuffle(rng);
    let mut m = edges.len();
    for Edge(u, v) in edges {
        if m == target {
            break;
        }
        if rotation[u].len() <= 3 || rotation[v].len() <= 3 {
            continue;
        }
        let pu = rotation[u].iter().position(|&x| x == v).unwrap();
        let pv = rotation[v].iter().position(|&x| x == u).unwrap();
        rotation[u].remove(pu);
        rotation[v].remove(pv);
        if is_three_connected(rotation) {
            m -= 1;
        } else {
            rotation[u].insert(pu, v);
            rotation[v].insert(pv, u);
        }
    }
    m
}

/// Picks the longest face as outer face, ties broken by the smallest vertex id
/// on the face.
fn with_largest_outer_face(rotation: Vec<Vec<usize>>) -> Result<PlanarEmbedding> {
    let faces = traverse_rotation(&rotation)?;
    let outer = faces
        .iter()
        .max_by(|a, b| {
            a.len().cmp(&b.len()).then_with(|| {
                let ma = a.vertices.iter().min().unwrap();
                let mb = b.vertices.iter().min().unwrap();
                mb.cmp(ma)
            })
        })
        .expect("embedding has faces");
    let min_pos = outer
        .vertices
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .unwrap();
    let mut seq = outer.vertices.clone();
    seq.rotate_left(min_pos);
    PlanarEmbedding::new(rotation, seq)
}
