use thiserror::Error;

use crate::trees::CayleyTree;

use super::rng::UniformSource;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PruferError {
    #[error("symbol {symbol} at position {position} is outside 1..={n}")]
    BadCode {
        position: usize,
        symbol: usize,
        n: usize,
    },
}

/// Prüfer code of `tree`: repeatedly remove the smallest leaf and record
/// its neighbour. Linear time. Empty for `n <= 2`.
pub fn prufer_encode(tree: &CayleyTree) -> Vec<usize> {
    let n = tree.n();
    if n <= 2 {
        return Vec::new();
    }
    // re-root at n so every removed leaf has a parent
    let mut adj_start = vec![0usize; n + 2];
    for (p, c) in tree.edges() {
        adj_start[p] += 1;
        adj_start[c] += 1;
    }
    let degree: Vec<usize> = adj_start.clone();
    let mut acc = 0;
    for s in adj_start.iter_mut() {
        let d = *s;
        *s = acc;
        acc += d;
    }
    let mut fill = adj_start.clone();
    let mut adj = vec![0usize; acc];
    for (p, c) in tree.edges() {
        adj[fill[p]] = c;
        fill[p] += 1;
        adj[fill[c]] = p;
        fill[c] += 1;
    }
    let mut parent = vec![0usize; n + 1];
    let mut stack = vec![n];
    let mut seen = vec![false; n + 1];
    seen[n] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[adj_start[v]..adj_start[v + 1]] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }

    let mut degree = degree;
    let mut code = Vec::with_capacity(n - 2);
    let mut ptr = (1..=n)
        .find(|&v| degree[v] == 1)
        .expect("a tree has leaves");
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        let next = parent[leaf];
        code.push(next);
        degree[next] -= 1;
        if degree[next] == 1 && next < ptr {
            leaf = next;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    code
}

/// Inverse of [`prufer_encode`] for trees on `code.len() + 2` vertices.
pub fn prufer_decode(code: &[usize]) -> Result<CayleyTree, PruferError> {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n + 1];
    for (position, &symbol) in code.iter().enumerate() {
        if !(1..=n).contains(&symbol) {
            return Err(PruferError::BadCode {
                position,
                symbol,
                n,
            });
        }
        degree[symbol] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (1..=n)
        .find(|&v| degree[v] == 1)
        .expect("some symbol is absent");
    let mut leaf = ptr;
    for &v in code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n));
    Ok(CayleyTree::from_edges(n, &edges).expect("decoded edges form a tree"))
}

/// Decodes `n − 2` uniform symbols; uniform over Cayley trees of size `n`.
pub fn sample_cayley_prufer<R: UniformSource>(n: usize, rng: &mut R) -> CayleyTree {
    assert!(n >= 1, "tree size must be at least 1");
    if n == 1 {
        return CayleyTree::singleton();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.next_int(n)).collect();
    prufer_decode(&code).expect("symbols drawn in range")
}
