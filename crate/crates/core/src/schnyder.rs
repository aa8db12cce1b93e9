//! Schnyder woods of maximal planar graphs, built from a canonical ordering.
//!
//! With outer triangle `v1, v2, vn` (in outer-face order), vertices are peeled
//! off from `vn` down to `v3`. Each step removes a boundary vertex without
//! chords; at removal, `v -> c_l` gets color 1, `v -> c_r` color 2, and each
//! neighbour `u` strictly between them on the new boundary gets `u -> v` with
//! color 3. Tree `c` is rooted at the outer vertex `roots[c - 1]`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::PlanarEmbedding;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchnyderWood {
    roots: [usize; 3],
    /// `(color, tail)` per edge index; `None` on the outer triangle.
    colors: Vec<Option<(u8, usize)>>,
    /// Outgoing neighbour per color for each vertex; roots have none.
    parents: Vec<[Option<usize>; 3]>,
    /// Distance to the root within each tree.
    depths: Vec<[u32; 3]>,
    /// Canonical ordering `v1, v2, ..., vn`.
    order: Vec<usize>,
}

impl SchnyderWood {
    pub fn roots(&self) -> [usize; 3] {
        self.roots
    }

    pub fn edge_color(&self, edge_index: usize) -> Option<(u8, usize)> {
        self.colors[edge_index]
    }

    pub fn parent(&self, v: usize, color: u8) -> Option<usize> {
        self.parents[v][color as usize - 1]
    }

    /// Number of tree edges between `v` and the root of tree `color`.
    pub fn tree_depth(&self, color: u8, v: usize) -> u32 {
        self.depths[v][color as usize - 1]
    }

    pub fn canonical_order(&self) -> &[usize] {
        &self.order
    }

    pub fn out_degree(&self, v: usize, color: u8) -> usize {
        self.colors
            .iter()
            .filter(|c| matches!(c, Some((k, tail)) if *k == color && *tail == v))
            .count()
    }
}

pub fn schnyder_wood(emb: &PlanarEmbedding) -> Result<SchnyderWood> {
    if !emb.is_triangulation() || emb.outer_face().len() != 3 {
        return Err(Error::NotTriangulation);
    }
    let n = emb.n();
    let outer = emb.outer_face();
    let (v1, v2, vn) = (outer[0], outer[1], outer[2]);

    // Boundary of the remaining graph as a cycle v1 -> ... -> v2 -> v1.
    let mut next = vec![usize::MAX; n];
    let mut prev = vec![usize::MAX; n];
    let mut on_boundary = vec![false; n];
    let mut removed = vec![false; n];
    let mut chords = vec![0usize; n];
    for (a, b) in [(v1, vn), (vn, v2), (v2, v1)] {
        next[a] = b;
        prev[b] = a;
        on_boundary[a] = true;
    }
    let mut boundary_len = 3;
    let mut ready = BTreeSet::from([vn]);
    let mut colors = vec![None; emb.m()];
    let mut parents = vec![[None; 3]; n];
    let mut peeled = Vec::with_capacity(n);

    let mut set_color = |tail: usize, head: usize, color: u8, parents: &mut Vec<[Option<usize>; 3]>| {
        let i = emb.edge_index(tail, head).expect("adjacent");
        colors[i] = Some((color, tail));
        parents[tail][color as usize - 1] = Some(head);
    };

    while let Some(v) = ready.pop_first() {
        let (cl, cr) = (prev[v], next[v]);
        // interior neighbours: counter-clockwise from c_r to c_l, then reversed
        let rot = emb.neighbors(v);
        let start = rot.iter().position(|&u| u == cr).expect("boundary neighbour");
        let mut inner = Vec::new();
        for k in 1..rot.len() {
            let u = rot[(start + k) % rot.len()];
            if u == cl {
                break;
            }
            if removed[u] || on_boundary[u] {
                return Err(Error::Format(format!("vertex {v} is not peelable")));
            }
            inner.push(u);
        }
        inner.reverse();

        removed[v] = true;
        on_boundary[v] = false;
        peeled.push(v);
        if v != vn {
            set_color(v, cl, 1, &mut parents);
            set_color(v, cr, 2, &mut parents);
        }
        for &u in &inner {
            set_color(u, v, 3, &mut parents);
        }

        // splice c_l, inner..., c_r into the boundary in place of v
        let mut last = cl;
        for &u in &inner {
            next[last] = u;
            prev[u] = last;
            on_boundary[u] = true;
            last = u;
        }
        next[last] = cr;
        prev[cr] = last;
        if inner.is_empty() && boundary_len > 3 {
            // c_l c_r was a chord and is now a boundary edge
            chords[cl] -= 1;
            chords[cr] -= 1;
        }
        boundary_len = boundary_len - 1 + inner.len();
        for &u in &inner {
            for &w in emb.neighbors(u) {
                if removed[w] || !on_boundary[w] || w == prev[u] || w == next[u] {
                    continue;
                }
                chords[u] += 1;
                if !inner.contains(&w) {
                    chords[w] += 1;
                    ready.remove(&w);
                }
            }
        }
        for u in inner.iter().copied().chain([cl, cr]) {
            if u != v1 && u != v2 && on_boundary[u] && chords[u] == 0 {
                ready.insert(u);
            } else {
                ready.remove(&u);
            }
        }
    }
    if peeled.len() != n - 2 {
        return Err(Error::Format(format!("canonical ordering stalled after {} vertices", peeled.len())));
    }

    let roots = [v1, v2, vn];
    let mut order = vec![v1, v2];
    order.extend(peeled.iter().rev());
    let depths = tree_depths(&parents, &order, roots);
    Ok(SchnyderWood {
        roots,
        colors,
        parents,
        depths,
        order,
    })
}

fn tree_depths(parents: &[[Option<usize>; 3]], order: &[usize], roots: [usize; 3]) -> Vec<[u32; 3]> {
    let n = parents.len();
    let mut depths = vec![[u32::MAX; 3]; n];
    for c in 0..3 {
        depths[roots[c]][c] = 0;
        // trees 1 and 2 point backwards in the canonical order, tree 3 forwards
        let walk: Box<dyn Iterator<Item = &usize>> = if c < 2 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &v in walk {
            if let Some(p) = parents[v][c] {
                depths[v][c] = depths[p][c] + 1;
            }
        }
    }
    depths
}
