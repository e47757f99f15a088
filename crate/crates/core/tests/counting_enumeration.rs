use std::collections::HashSet;

use num_bigint::BigUint;
use twistree::counting::{build_count_table, cayley_number, twist_distribution};
use twistree::enumeration::*;
use twistree::trees::{CayleyTree, IncTreeSeq};

/// `S_2(x, y)` from `S(x+1, y) = (x+2) S(x, y) + (x+y) S(x, y-1)`.
fn meir(x_max: usize) -> Vec<Vec<BigUint>> {
    let mut s = vec![vec![BigUint::from(0u32); x_max + 1]; x_max + 1];
    s[0][0] = BigUint::from(1u32);
    for x in 0..x_max {
        for y in 0..=x + 1 {
            let mut v = BigUint::from(0u32);
            if y <= x {
                v += BigUint::from(x + 2) * &s[x][y];
            }
            if y >= 1 {
                v += BigUint::from(x + y) * &s[x][y - 1];
            }
            s[x + 1][y] = v;
        }
    }
    s
}

#[test]
fn recurrence_matches_meir_numbers() {
    let table = build_count_table(16);
    let s = meir(14);
    for n in 2..=16 {
        for (k, expect) in s[n - 2].iter().enumerate().take(n - 1) {
            assert_eq!(&table.get(n, k + n - 1), expect, "n={n} k={k}");
        }
    }
}

#[test]
fn row_sums_are_cayley_numbers() {
    let table = build_count_table(25);
    for n in 1..=25 {
        assert_eq!(table.row_sum(n), cayley_number(n));
    }
    assert_eq!(twist_distribution(5).len(), 4);
}

#[test]
fn enumeration_counts_and_histograms() {
    let table = build_count_table(6);
    for n in 1..=6 {
        let seqs: Vec<IncTreeSeq> = enumerate_inc12(n, DEFAULT_CAP).unwrap().collect();
        let trees: Vec<CayleyTree> = enumerate_cayley(n, DEFAULT_CAP).unwrap().collect();
        let expect = cayley_number(n);
        assert_eq!(BigUint::from(seqs.len()), expect);
        assert_eq!(BigUint::from(trees.len()), expect);
        assert_eq!(seqs.iter().collect::<HashSet<_>>().len(), seqs.len());
        assert_eq!(trees.iter().collect::<HashSet<_>>().len(), trees.len());
        let mut tri = vec![0usize; n.max(2) - 1];
        let mut tw = vec![0usize; n.max(2) - 1];
        for s in &seqs {
            tri[s.triangle_count()] += 1;
        }
        for t in &trees {
            tw[t.count_twists()] += 1;
        }
        assert_eq!(tri, tw);
        let row: Vec<usize> = table
            .row(n)
            .iter()
            .map(|c| c.to_string().parse().unwrap())
            .collect();
        assert_eq!(tri, row, "n = {n}");
    }
}

#[test]
fn enumeration_is_deterministic_and_capped() {
    let a: Vec<_> = enumerate_cayley(5, DEFAULT_CAP).unwrap().collect();
    let b: Vec<_> = enumerate_cayley(5, DEFAULT_CAP).unwrap().collect();
    assert_eq!(a, b);
    assert!(matches!(
        enumerate_inc12(10, DEFAULT_CAP),
        Err(EnumerationError::ResourceBound { n: 10, cap: 9 })
    ));
    assert!(enumerate_cayley(0, DEFAULT_CAP).is_err());
    assert_eq!(enumerate_inc12(1, DEFAULT_CAP).unwrap().count(), 1);
}

#[test]
fn successor_totals() {
    // (n-1) leaf moves plus, for each non-root k, one move per prefix of
    // its twist children sorted by minimum
    for n in 2..=6 {
        for t in enumerate_cayley(n, DEFAULT_CAP).unwrap() {
            let kids = t.children();
            let expect = n
                + (2..=n)
                    .map(|k| 1 + kids.of(k).iter().filter(|&&c| t.is_twist(c)).count())
                    .sum::<usize>();
            let succ = successors_cayley(&t);
            assert_eq!(succ.len(), expect, "{t}");
            for s in &succ {
                assert_eq!(cayley_predecessor(s).as_ref(), Some(&t));
            }
        }
        for s in enumerate_inc12(n, DEFAULT_CAP).unwrap() {
            assert_eq!(successors_inc12(&s).len(), n + s.edge_count());
        }
    }
}
