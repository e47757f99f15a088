//! Exact counts `c(n, m)` of increasing 1,2-trees with `n` vertices and
//! `m` edges, equivalently of Cayley trees with `n` vertices and
//! `m - n + 1` twists.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Dense table of `c(n, m)` for `1 <= n <= n_max`. Row `n` is indexed by
/// the twist count `k = m - n + 1`, which ranges over `0..n-1` (a single
/// slot for `n = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    rows: Vec<Vec<BigUint>>,
}

/// Fills the table with `c(n,m) = (n-1) c(n-1,m-1) + (m-2) c(n-1,m-2)`.
pub fn build_count_table(n_max: usize) -> CountTable {
    assert!(n_max >= 1, "count table needs n_max >= 1");
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n_max + 1);
    rows.push(Vec::new());
    rows.push(vec![BigUint::one()]);
    for n in 2..=n_max {
        let prev = &rows[n - 1];
        let width = n - 1;
        let mut row = Vec::with_capacity(width);
        for k in 0..width {
            let m = k + n - 1;
            let mut c = BigUint::zero();
            // c(n-1, m-1) has the same twist count k
            if let Some(x) = prev.get(k) {
                c += x * BigUint::from(n - 1);
            }
            // c(n-1, m-2) has twist count k-1
            if k >= 1 && m >= 2 {
                if let Some(x) = prev.get(k - 1) {
                    c += x * BigUint::from(m - 2);
                }
            }
            row.push(c);
        }
        rows.push(row);
    }
    CountTable { rows }
}

impl CountTable {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// `c(n, m)`, zero outside the support.
    pub fn get(&self, n: usize, m: usize) -> BigUint {
        if n == 0 || n > self.n_max() || m + 1 < n {
            return BigUint::zero();
        }
        self.rows[n]
            .get(m + 1 - n)
            .cloned()
            .unwrap_or_else(BigUint::zero)
    }

    /// Row `n`, indexed by twist count.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    /// `(m, c(n, m))` over the support of row `n`.
    pub fn row_entries(&self, n: usize) -> impl Iterator<Item = (usize, &BigUint)> + '_ {
        self.rows[n]
            .iter()
            .enumerate()
            .map(move |(k, c)| (k + n - 1, c))
    }

    pub fn row_sum(&self, n: usize) -> BigUint {
        self.rows[n].iter().sum()
    }

    /// Overwrites one entry; meant for mutation tests of downstream checks.
    pub fn set(&mut self, n: usize, m: usize, value: BigUint) {
        self.rows[n][m + 1 - n] = value;
    }
}

/// `n^(n-2)`, with the single-vertex tree counted once.
pub fn cayley_number(n: usize) -> BigUint {
    assert!(n >= 1);
    if n == 1 {
        return BigUint::one();
    }
    BigUint::from(n).pow((n - 2) as u32)
}

/// Number of Cayley trees of size `n` by twist count.
pub fn twist_distribution(n: usize) -> Vec<BigUint> {
    build_count_table(n).row(n).to_vec()
}
