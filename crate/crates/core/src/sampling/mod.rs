//! Linear-time uniform samplers. Cayley trees are drawn with a
//! swap-based random walk that averages `3(n-1)/2` integer draws;
//! increasing 1,2-trees are the inverse bijection applied to a uniform
//! Cayley tree. A Prüfer-code sampler serves as an independent reference.

mod prufer;
mod rng;

use std::time::Instant;

use serde::Serialize;

use crate::bijection::tau_inverse;
use crate::par::Execution;
use crate::trees::{CayleyTree, IncTreeSeq};

pub use prufer::{prufer_decode, prufer_encode, sample_cayley_prufer, PruferError};
pub use rng::{ScriptError, ScriptedRng, SeededRng, UniformSource};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleStats {
    pub n: usize,
    pub draws: usize,
    pub elapsed_ns: u128,
}

/// Uniform Cayley tree on `n` vertices.
pub fn sample_cayley<R: UniformSource>(n: usize, rng: &mut R) -> (CayleyTree, SampleStats) {
    assert!(n >= 1, "tree size must be at least 1");
    let start = Instant::now();
    let mut draws = 0;
    // positions 1..=unvisited hold the unvisited vertices
    assert!(n < u32::MAX as usize, "tree too large");
    let mut vertices: Vec<u32> = (0..=n as u32).collect();
    // the walk grows a tree rooted at n; `order` is its visiting order
    // and `up[k]` the parent of `order[k]`
    let mut order: Vec<u32> = Vec::with_capacity(n);
    let mut up: Vec<u32> = Vec::with_capacity(n);
    order.push(n as u32);
    up.push(0);
    for unvisited in (1..n).rev() {
        let mut prev = unvisited + 1;
        let mut next = rng.next_int(n);
        draws += 1;
        if next > unvisited {
            prev = next;
            next = rng.next_int(unvisited);
            draws += 1;
        }
        let fresh = vertices[next];
        up.push(vertices[prev]);
        order.push(fresh);
        vertices.swap(next, unvisited);
    }
    let tree = reroot_at_one(&order, &up);
    let stats = SampleStats {
        n,
        draws,
        elapsed_ns: start.elapsed().as_nanos(),
    };
    (tree, stats)
}

/// Reverses the path from 1 to `order[0]` and computes subtree minima:
/// off the path, subtrees are the same for both roots, so the reversed
/// visiting order folds them; the path is folded last, towards 1.
fn reroot_at_one(order: &[u32], up: &[u32]) -> CayleyTree {
    let n = order.len();
    let top = order[0] as usize;
    let mut parent = vec![0usize; n + 1];
    for (&v, &p) in order.iter().zip(up) {
        parent[v as usize] = p as usize;
    }
    let mut on_path = vec![false; n + 1];
    let (mut below, mut v) = (0, 1);
    loop {
        on_path[v] = true;
        let up = parent[v];
        parent[v] = below;
        if v == top {
            break;
        }
        below = v;
        v = up;
    }
    let mut min: Vec<usize> = (0..=n).collect();
    for (&v, &p) in order.iter().zip(up).rev() {
        let (v, p) = (v as usize, p as usize);
        if !on_path[v] {
            min[p] = min[p].min(min[v]);
        }
    }
    let mut v = top;
    while v != 1 {
        let p = parent[v];
        min[p] = min[p].min(min[v]);
        v = p;
    }
    CayleyTree::from_parts(parent, min)
}

/// Uniform increasing 1,2-tree on `n` vertices.
pub fn sample_inc12<R: UniformSource>(n: usize, rng: &mut R) -> (IncTreeSeq, SampleStats) {
    let start = Instant::now();
    let (tree, mut stats) = sample_cayley(n, rng);
    let seq = tau_inverse(&tree).expect("inverse is total on Cayley trees");
    stats.elapsed_ns = start.elapsed().as_nanos();
    (seq, stats)
}

/// Runs `count` calls of `f` split over `workers` contiguous chunks; worker
/// `w` owns stream `w` of `seed`. The output depends only on
/// `(seed, workers)`, not on `exec`.
pub fn sample_batch<T, F>(count: usize, seed: u64, workers: usize, exec: Execution, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut SeededRng) -> T + Sync + Send,
{
    let workers = workers.max(1);
    exec.map_indexed(workers, |w| {
        let lo = count * w / workers;
        let hi = count * (w + 1) / workers;
        let mut rng = SeededRng::with_stream(seed, w as u64);
        (lo..hi).map(|_| f(&mut rng)).collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}
