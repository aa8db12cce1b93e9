//! Combinatorial planar embeddings: rotation systems, face traversal and
//! connectivity validation.
//!
//! Rotation lists are read as counter-clockwise neighbour orders. A dart
//! `u -> v` is followed by `v -> w`, where `w` precedes `u` in the rotation of
//! `v`; with that rule every face lies to the left of its darts, bounded faces
//! come out counter-clockwise and the unbounded face clockwise.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Point;

/// Undirected edge with endpoints stored in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(u: usize, v: usize) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn other(self, v: usize) -> usize {
        if v == self.0 {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// A face as the cyclic vertex sequence of its traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub vertices: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive vertex pairs, wrapping around.
    pub fn boundary(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    /// True when `seq` describes this face up to cyclic shift, in either direction.
    pub fn matches(&self, seq: &[usize]) -> bool {
        if seq.len() != self.vertices.len() || seq.is_empty() {
            return false;
        }
        let k = seq.len();
        let Some(start) = self.vertices.iter().position(|&v| v == seq[0]) else {
            return false;
        };
        let forward = (0..k).all(|i| self.vertices[(start + i) % k] == seq[i]);
        let backward = (0..k).all(|i| self.vertices[(start + k - i) % k] == seq[i]);
        forward || backward
    }
}

/// A simple, connected, 3-connected graph together with a planar rotation
/// system and a designated outer face.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarEmbedding {
    rotation: Vec<Vec<usize>>,
    outer_face: Vec<usize>,
    edges: Vec<Edge>,
    edge_index: HashMap<Edge, usize>,
    faces: Vec<Face>,
    outer_face_index: usize,
    on_outer: Vec<bool>,
}

impl PlanarEmbedding {
    /// Builds and validates an embedding. `outer_face` may be given in either
    /// traversal direction; it is stored in traversal order starting at its
    /// first listed vertex.
    pub fn new(rotation: Vec<Vec<usize>>, outer_face: Vec<usize>) -> Result<Self> {
        let faces = traverse_rotation(&rotation)?;
        let outer_face_index = faces
            .iter()
            .position(|f| f.matches(&outer_face))
            .ok_or_else(|| Error::InvalidOuterFace(outer_face.clone()))?;
        if !is_three_connected(&rotation) {
            return Err(Error::NotThreeConnected);
        }

        let face = &faces[outer_face_index].vertices;
        let start = face.iter().position(|&v| v == outer_face[0]).unwrap();
        let outer_face: Vec<usize> = (0..face.len())
            .map(|i| face[(start + i) % face.len()])
            .collect();

        let mut edges: Vec<Edge> = rotation
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| Edge(u, v)))
            .collect();
        edges.sort_unstable();
        let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();

        let mut on_outer = vec![false; rotation.len()];
        for &v in &outer_face {
            on_outer[v] = true;
        }

        Ok(Self {
            rotation,
            outer_face,
            edges,
            edge_index,
            faces,
            outer_face_index,
            on_outer,
        })
    }

    /// Embedding induced by a straight-line planar drawing. Neighbours are
    /// ordered counter-clockwise by angle and the clockwise face becomes the
    /// outer face.
    pub fn from_geometry(points: &[Point], edges: &[(usize, usize)]) -> Result<Self> {
        let n = points.len();
        let mut rotation = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::MalformedRotation(format!("edge ({u}, {v}) out of range")));
            }
            rotation[u].push(v);
            rotation[v].push(u);
        }
        for (u, nbrs) in rotation.iter_mut().enumerate() {
            let p = points[u];
            nbrs.sort_by(|&a, &b| {
                let ta = (points[a].y - p.y).atan2(points[a].x - p.x);
                let tb = (points[b].y - p.y).atan2(points[b].x - p.x);
                ta.total_cmp(&tb)
            });
        }
        let faces = traverse_rotation(&rotation)?;
        let outer = faces
            .iter()
            .find(|f| signed_area(&f.vertices, points) < 0.0)
            .ok_or_else(|| Error::MalformedRotation("drawing has no clockwise face".into()))?
            .vertices
            .clone();
        Self::new(rotation, outer)
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Edges in increasing lexicographic order; weight vectors are aligned with it.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&Edge::new(u, v)).copied()
    }

    pub fn outer_face(&self) -> &[usize] {
        &self.outer_face
    }

    pub fn is_outer(&self, v: usize) -> bool {
        self.on_outer[v]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn outer_face_index(&self) -> usize {
        self.outer_face_index
    }

    /// All faces except the outer one.
    pub fn interior_faces(&self) -> impl Iterator<Item = &Face> {
        let skip = self.outer_face_index;
        self.faces
            .iter()
            .enumerate()
            .filter(move |&(i, _)| i != skip)
            .map(|(_, f)| f)
    }

    /// True when both endpoints lie on the outer face and the edge is one of its sides.
    pub fn is_outer_edge(&self, e: Edge) -> bool {
        let k = self.outer_face.len();
        (0..k).any(|i| Edge::new(self.outer_face[i], self.outer_face[(i + 1) % k]) == e)
    }

    pub fn is_triangulation(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3)
    }
}

/// Face traversal of a validated embedding.
pub fn traverse_faces(emb: &PlanarEmbedding) -> Vec<Face> {
    emb.faces.clone()
}

/// Traverses all faces of a raw rotation system, checking simplicity,
/// symmetry, connectivity and the Euler formula.
pub fn traverse_rotation(rotation: &[Vec<usize>]) -> Result<Vec<Face>> {
    let n = rotation.len();
    if n < 3 {
        return Err(Error::MalformedRotation(format!("need at least 3 vertices, got {n}")));
    }
    let mut position: HashMap<(usize, usize), usize> = HashMap::new();
    for (u, nbrs) in rotation.iter().enumerate() {
        for (i, &v) in nbrs.iter().enumerate() {
            if v >= n {
                return Err(Error::MalformedRotation(format!("vertex {u} lists unknown vertex {v}")));
            }
            if v == u {
                return Err(Error::MalformedRotation(format!("self-loop at vertex {u}")));
            }
            if position.insert((u, v), i).is_some() {
                return Err(Error::MalformedRotation(format!("repeated edge ({u}, {v})")));
            }
        }
    }
    for &(u, v) in position.keys() {
        if !position.contains_key(&(v, u)) {
            return Err(Error::MalformedRotation(format!(
                "{v} is in the rotation of {u} but not vice versa"
            )));
        }
    }
    if !is_connected(rotation, None) {
        return Err(Error::MalformedRotation("graph is disconnected".into()));
    }

    let mut offset = Vec::with_capacity(n + 1);
    offset.push(0);
    for nbrs in rotation {
        offset.push(offset.last().unwrap() + nbrs.len());
    }
    let darts = offset[n];
    let m = darts / 2;

    let mut used = vec![false; darts];
    let mut faces = Vec::new();
    for u in 0..n {
        for i in 0..rotation[u].len() {
            if used[offset[u] + i] {
                continue;
            }
            let mut vertices = Vec::new();
            let (mut tail, mut idx) = (u, i);
            while !used[offset[tail] + idx] {
                used[offset[tail] + idx] = true;
                vertices.push(tail);
                let head = rotation[tail][idx];
                let deg = rotation[head].len();
                let back = position[&(head, tail)];
                idx = (back + deg - 1) % deg;
                tail = head;
            }
            faces.push(Face { vertices });
        }
    }

    let f = faces.len();
    if n + f != m + 2 {
        return Err(Error::EulerViolation { n, m, f });
    }
    Ok(faces)
}

/// Pairwise vertex-removal definition of 3-connectivity: removing any two
/// vertices leaves the graph connected.
pub fn validate_three_connected(emb: &PlanarEmbedding) -> bool {
    is_three_connected(emb.rotation())
}

/// Checks, for every vertex `x`, that `G - x` has no articulation point.
pub(crate) fn is_three_connected(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if !is_connected(adj, None) {
        return false;
    }
    if n <= 3 {
        return true;
    }
    (0..n).all(|x| is_biconnected_without(adj, x))
}

pub(crate) fn is_connected(adj: &[Vec<usize>], removed: Option<usize>) -> bool {
    let n = adj.len();
    let Some(root) = (0..n).find(|&v| Some(v) != removed) else {
        return true;
    };
    let mut seen = vec![false; n];
    if let Some(x) = removed {
        seen[x] = true;
    }
    seen[root] = true;
    let mut stack = vec![root];
    let mut count = 1 + usize::from(removed.is_some());
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Iterative Hopcroft-Tarjan low-point search on `G - removed`.
fn is_biconnected_without(adj: &[Vec<usize>], removed: usize) -> bool {
    const UNSEEN: usize = usize::MAX;
    let n = adj.len();
    let root = if removed == 0 { 1 } else { 0 };
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut visited = 1;
    let mut root_children = 0;
    disc[root] = 0;

    // (vertex, parent, next neighbour position)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
    while let Some(top) = stack.last_mut() {
        let (v, parent, i) = *top;
        if i < adj[v].len() {
            top.2 += 1;
            let w = adj[v][i];
            if w == removed || w == parent {
                continue;
            }
            if disc[w] == UNSEEN {
                time += 1;
                disc[w] = time;
                low[w] = time;
                visited += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != UNSEEN {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    return false;
                }
            }
        }
    }
    visited == n - 1 && root_children <= 1
}

pub(crate) fn signed_area(cycle: &[usize], points: &[Point]) -> f64 {
    let k = cycle.len();
    (0..k)
        .map(|i| {
            let a = points[cycle[i]];
            let b = points[cycle[(i + 1) % k]];
            a.x * b.y - b.x * a.y
        })
        .sum::<f64>()
        / 2.0
}

/// Two apex vertices joined to each other and to every vertex of a path of
/// `k` vertices. Vertex 0 and 1 are the apexes, `2..k+2` the path in order.
/// The outer face is the triangle on the apexes and the last path vertex.
pub fn worst_case_graph(k: usize) -> Result<PlanarEmbedding> {
    if k == 0 {
        return Err(Error::BadParams("worst-case path length must be at least 1".into()));
    }
    let mut points = vec![Point::new(0.0, 1.0), Point::new(0.0, -1.0)];
    points.extend((1..=k).map(|i| Point::new(i as f64, 0.0)));
    let mut edges = vec![(0, 1)];
    for i in 0..k {
        let p = 2 + i;
        edges.push((0, p));
        edges.push((1, p));
        if i + 1 < k {
            edges.push((p, p + 1));
        }
    }
    PlanarEmbedding::from_geometry(&points, &edges)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn k4() -> PlanarEmbedding {
        let pts = [
            Point::new(0.0, 1.0),
            Point::new(-1.0, -1.0),
            Point::new(1.0, -1.0),
            Point::new(0.0, 0.0),
        ];
        PlanarEmbedding::from_geometry(&pts, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
            .unwrap()
    }

    pub(crate) fn octahedron() -> PlanarEmbedding {
        let pts = [
            Point::new(0.0, 4.0),
            Point::new(-4.0, -3.0),
            Point::new(4.0, -3.0),
            Point::new(0.0, -1.0),
            Point::new(1.0, 0.8),
            Point::new(-1.0, 0.8),
        ];
        let edges = [
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (1, 3),
            (2, 3),
            (2, 4),
            (0, 4),
            (0, 5),
            (1, 5),
        ];
        PlanarEmbedding::from_geometry(&pts, &edges).unwrap()
    }

    fn brute_three_connected(adj: &[Vec<usize>]) -> bool {
        let n = adj.len();
        let survives = |a: usize, b: usize| {
            let reduced: Vec<Vec<usize>> = (0..n)
                .map(|v| {
                    if v == a || v == b {
                        Vec::new()
                    } else {
                        adj[v].iter().copied().filter(|&w| w != a && w != b).collect()
                    }
                })
                .collect();
            let alive: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
            let mut seen = vec![false; n];
            let mut stack = vec![alive[0]];
            seen[alive[0]] = true;
            while let Some(v) = stack.pop() {
                for &w in &reduced[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            alive.iter().all(|&v| seen[v])
        };
        is_connected(adj, None)
            && (0..n).all(|a| (a + 1..n).all(|b| n <= 3 || survives(a, b)))
    }

    #[test]
    fn k4_has_four_triangles() {
        let emb = k4();
        let faces = traverse_faces(&emb);
        assert_eq!(faces.len(), 4);
        assert!(faces.iter().all(|f| f.len() == 3));
        assert!(validate_three_connected(&emb));
    }

    #[test]
    fn triangle_has_two_faces() {
        let faces = traverse_rotation(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(faces.len(), 2);
    }

    #[test]
    fn octahedron_euler() {
        let emb = octahedron();
        assert_eq!((emb.n(), emb.m(), emb.faces().len()), (6, 12, 8));
        let darts: usize = emb.faces().iter().map(Face::len).sum();
        assert_eq!(darts, 2 * emb.m());
        assert!(emb.is_triangulation());
    }

    #[test]
    fn asymmetric_rotation_rejected() {
        let err = traverse_rotation(&[vec![1, 2], vec![2], vec![0, 1]]).unwrap_err();
        assert_eq!(err.kind(), "MalformedRotation");
    }

    #[test]
    fn non_planar_rotation_violates_euler() {
        // K4 with a rotation that is not planar at vertex 3.
        let rot = vec![vec![1, 2, 3], vec![2, 0, 3], vec![0, 1, 3], vec![0, 1, 2]];
        let err = traverse_rotation(&rot).unwrap_err();
        assert!(matches!(err, Error::EulerViolation { .. }), "{err:?}");
    }

    #[test]
    fn cycle_is_not_three_connected() {
        let c5: Vec<Vec<usize>> = (0..5).map(|i| vec![(i + 4) % 5, (i + 1) % 5]).collect();
        assert!(!is_three_connected(&c5));
        assert!(!brute_three_connected(&c5));
    }

    #[test]
    fn worst_case_sizes() {
        let w1 = worst_case_graph(1).unwrap();
        assert_eq!((w1.n(), w1.m()), (3, 3));
        let w3 = worst_case_graph(3).unwrap();
        assert_eq!((w3.n(), w3.m()), (5, 9));
        for k in [5, 10] {
            let w = worst_case_graph(k).unwrap();
            assert_eq!(w.n(), k + 2);
            assert_eq!(w.m(), 2 * k + (k - 1) + 1);
            assert!(brute_three_connected(w.rotation()));
            assert!(validate_three_connected(&w));
        }
        let mut outer = w3.outer_face().to_vec();
        outer.sort_unstable();
        assert_eq!(outer, vec![0, 1, 4]);
    }

    #[test]
    fn fast_check_matches_pairwise_removal() {
        // Wheels, a wheel missing one spoke and the triangular prism.
        let wheel = |k: usize| -> Vec<Vec<usize>> {
            let mut adj: Vec<Vec<usize>> = (0..k).map(|i| vec![(i + k - 1) % k, (i + 1) % k, k]).collect();
            adj.push((0..k).collect());
            adj
        };
        let mut spokeless = wheel(6);
        spokeless[0].retain(|&v| v != 6);
        spokeless[6].retain(|&v| v != 0);
        let prism = vec![
            vec![1, 2, 3],
            vec![0, 2, 4],
            vec![0, 1, 5],
            vec![0, 4, 5],
            vec![1, 3, 5],
            vec![2, 3, 4],
        ];
        for adj in [wheel(5), wheel(8), spokeless, prism] {
            assert_eq!(is_three_connected(&adj), brute_three_connected(&adj));
        }
    }

    #[test]
    fn outer_face_accepted_in_either_direction() {
        let emb = k4();
        let mut rev = emb.outer_face().to_vec();
        rev.reverse();
        let again = PlanarEmbedding::new(emb.rotation().to_vec(), rev).unwrap();
        assert_eq!(again.outer_face_index(), emb.outer_face_index());
        let err = PlanarEmbedding::new(emb.rotation().to_vec(), vec![0, 1, 2, 3]).unwrap_err();
        assert_eq!(err.kind(), "InvalidOuterFace");
    }
}
