//! Sparse direct solver for grounded weighted Laplacians.
//!
//! The systems produced by pinning an outer face have the form
//! `(g_i + sum_j w_ij) x_i - sum_j w_ij x_j = b_i` with every `w_ij > 0` and
//! `g_i >= 0` (the weight from `i` to pinned vertices). Gaussian elimination
//! is carried out on the graph itself: eliminating a vertex connects its
//! remaining neighbours pairwise (star-mesh transform) and passes a share of
//! its ground weight to each of them. Pivots are recomputed as sums of
//! non-negative terms, never by subtraction, so weights spanning many orders
//! of magnitude do not cancel.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
struct Step {
    vertex: usize,
    pivot: f64,
    /// Neighbours eliminated later, with their fill-in weights at elimination time.
    later: Vec<(usize, f64)>,
}

/// Factorisation of a grounded Laplacian, reusable for any right-hand side.
#[derive(Debug, Clone)]
pub struct LaplacianFactor {
    size: usize,
    steps: Vec<Step>,
}

impl LaplacianFactor {
    /// `couplings` lists `(i, j, w)` with `i != j`; repeated pairs accumulate.
    /// `ground[i]` is the total weight from unknown `i` to fixed vertices.
    pub fn new(size: usize, couplings: &[(usize, usize, f64)], ground: &[f64]) -> Result<Self> {
        assert_eq!(ground.len(), size);
        let mut adj: Vec<BTreeMap<usize, f64>> = vec![BTreeMap::new(); size];
        for &(i, j, w) in couplings {
            debug_assert!(i != j);
            *adj[i].entry(j).or_insert(0.0) += w;
            *adj[j].entry(i).or_insert(0.0) += w;
        }
        let mut ground = ground.to_vec();
        let mut eliminated = vec![false; size];

        // Minimum-degree order, ties by lowest index.
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
            (0..size).map(|v| Reverse((adj[v].len(), v))).collect();
        let mut steps = Vec::with_capacity(size);
        while let Some(Reverse((deg, k))) = heap.pop() {
            if eliminated[k] || deg != adj[k].len() {
                continue;
            }
            eliminated[k] = true;
            let nbrs: Vec<(usize, f64)> = std::mem::take(&mut adj[k]).into_iter().collect();
            let pivot = ground[k] + nbrs.iter().map(|&(_, w)| w).sum::<f64>();
            if !(pivot > 0.0 && pivot.is_finite()) {
                return Err(Error::SingularSystem);
            }
            for (a, &(i, wi)) in nbrs.iter().enumerate() {
                adj[i].remove(&k);
                ground[i] += wi * ground[k] / pivot;
                for &(j, wj) in &nbrs[a + 1..] {
                    let fill = wi * wj / pivot;
                    *adj[i].entry(j).or_insert(0.0) += fill;
                    *adj[j].entry(i).or_insert(0.0) += fill;
                }
            }
            for &(i, _) in &nbrs {
                heap.push(Reverse((adj[i].len(), i)));
            }
            steps.push(Step {
                vertex: k,
                pivot,
                later: nbrs,
            });
        }
        Ok(Self { size, steps })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Solves for one right-hand side.
    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        assert_eq!(rhs.len(), self.size);
        let mut b = rhs.to_vec();
        for step in &self.steps {
            let share = b[step.vertex] / step.pivot;
            for &(i, w) in &step.later {
                b[i] += w * share;
            }
        }
        let mut x = vec![0.0; self.size];
        for step in self.steps.iter().rev() {
            let coupled: f64 = step.later.iter().map(|&(j, w)| w * x[j]).sum();
            x[step.vertex] = (b[step.vertex] + coupled) / step.pivot;
        }
        x
    }
}
