use std::collections::{BTreeSet, HashMap, HashSet};

use proptest::prelude::*;
use twistree::bijection::checks::*;
use twistree::bijection::*;
use twistree::enumeration::{enumerate_cayley, enumerate_inc12};
use twistree::sampling::{sample_cayley, SeededRng};
use twistree::trees::{Attachment, CayleyTree, IncTreeSeq};

fn all_inc12(n: usize) -> Vec<IncTreeSeq> {
    enumerate_inc12(n, n).unwrap().collect()
}

fn all_cayley(n: usize) -> Vec<CayleyTree> {
    enumerate_cayley(n, n).unwrap().collect()
}

#[test]
fn round_trips_and_statistic_small_sizes() {
    for n in 1..=6 {
        let seqs = all_inc12(n);
        let mut images = HashSet::new();
        for s in &seqs {
            let t = tau(s).unwrap();
            assert_eq!(t.count_twists(), s.triangle_count(), "{s}");
            assert_eq!(&tau_inverse(&t).unwrap(), s);
            images.insert(t);
        }
        let trees: HashSet<CayleyTree> = all_cayley(n).into_iter().collect();
        assert_eq!(images, trees, "n = {n}");
        for t in &trees {
            assert_eq!(&tau(&tau_inverse(t).unwrap()).unwrap(), t);
        }
    }
}

#[test]
fn express_agrees_with_three_steps() {
    for n in 1..=6 {
        for s in all_inc12(n) {
            assert_eq!(tau_express(&s).unwrap(), tau(&s).unwrap(), "{s}");
        }
    }
}

#[test]
fn forest_properties_during_and_after_construction() {
    for n in 2..=6 {
        for s in all_inc12(n) {
            let mut b = ForestBuilder::new(n);
            let mut seen: HashMap<_, _> = HashMap::new();
            for &att in s.attachments() {
                b.push(att).unwrap();
                let f = b.forest();
                check_label_ends(f).unwrap();
                check_root_edges(f).unwrap_or_else(|e| panic!("{s}: {e}"));
                check_eddy_below(f).unwrap_or_else(|e| panic!("{s}: {e}"));
                for (edge, labels) in eddy_labels(f) {
                    let prev = seen.entry(edge).or_insert(labels);
                    assert_eq!(*prev, labels, "{s}: eddy of {edge:?} changed");
                }
            }
            let f = tau_step2(b.finish());
            check_sibling_end_order(&f).unwrap_or_else(|e| panic!("{s}: {e}"));
            check_all_twists(&f).unwrap_or_else(|e| panic!("{s}: {e}"));
            check_min_at_leftmost_leaf(&f).unwrap_or_else(|e| panic!("{s}: {e}"));
            check_children_sorted_by_min(&f).unwrap_or_else(|e| panic!("{s}: {e}"));
        }
    }
}

#[test]
fn increasing_trees_are_fixed() {
    for n in 1..=7 {
        for s in all_inc12(n).into_iter().filter(|s| s.is_all_leaf()) {
            let t = tau(&s).unwrap();
            for (i, a) in s.attachments().iter().enumerate() {
                let Attachment::Leaf(x) = *a else {
                    unreachable!()
                };
                assert_eq!(t.parent(i + 2), Some(x));
            }
        }
    }
}

#[test]
fn increasing_two_trees_have_one_increasing_edge() {
    for n in 2..=7 {
        let two_trees = all_inc12(n)
            .into_iter()
            .filter(|s| s.attachments()[1..].iter().all(Attachment::is_triangle));
        let mut count = 0;
        for s in two_trees {
            count += 1;
            let t = tau(&s).unwrap();
            let increasing: Vec<_> = t.edges().filter(|&(_, c)| !t.is_twist(c)).collect();
            assert_eq!(increasing.len(), 1, "{s} -> {t}");
            assert_eq!(increasing[0].0, 1);
        }
        // vertex k picks one of the 2k-5 edges present before it
        let expect: usize = (3..=n).map(|k| 2 * k - 5).product();
        assert_eq!(count, expect);
    }
}

/// Blocks of a connected graph as edge sets, by the classical DFS with an
/// edge stack.
fn blocks(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<(usize, usize)>> {
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    struct Dfs<'a> {
        adj: &'a [Vec<usize>],
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<BTreeSet<(usize, usize)>>,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: usize) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for i in 0..self.adj[u].len() {
                let w = self.adj[u][i];
                if self.disc[w] == 0 {
                    self.stack.push((u, w));
                    self.visit(w, u);
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        let mut block = BTreeSet::new();
                        while let Some((a, b)) = self.stack.pop() {
                            block.insert((a.min(b), a.max(b)));
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        self.out.push(block);
                    }
                } else if w != parent && self.disc[w] < self.disc[u] {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }
    let mut d = Dfs {
        adj: &adj,
        disc: vec![0; n + 1],
        low: vec![0; n + 1],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    d.visit(1, 0);
    d.out
}

#[test]
fn forest_trees_are_the_blocks() {
    for n in 2..=7 {
        for s in all_inc12(n) {
            let mut expect = blocks(n, &s.edges());
            expect.sort();
            let f = tau_step1(&s).unwrap();
            let mut got: Vec<BTreeSet<(usize, usize)>> = f
                .roots()
                .iter()
                .map(|&r| {
                    f.subtree(r)
                        .into_iter()
                        .flat_map(|u| {
                            let node = f.node(u);
                            [node.left, node.right]
                        })
                        .flatten()
                        .filter_map(|l| l.pair())
                        .collect()
                })
                .collect();
            got.sort();
            assert_eq!(got, expect, "{s}");
        }
    }
}

/// Tree shapes with vertex and end labels only, sorted.
fn skeleton(f: &twistree::trees::LabeledPlaneForest) -> Vec<String> {
    fn go(f: &twistree::trees::LabeledPlaneForest, id: twistree::trees::NodeId, out: &mut String) {
        let node = f.node(id);
        out.push_str(&format!("{:?}:{:?}(", node.vertex, f.end_label(id)));
        for c in f.children(id) {
            go(f, c, out);
        }
        out.push(')');
    }
    f.roots()
        .iter()
        .map(|&r| {
            let mut s = String::new();
            go(f, r, &mut s);
            s
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[test]
fn inverse_steps_rebuild_forward_forests() {
    for n in 2..=6 {
        for s in all_inc12(n) {
            let forward = tau_step2(tau_step1(&s).unwrap());
            let t = tau_step3(&forward).unwrap();
            let back = tau_inv_step2(tau_inv_step3(&t));
            assert_eq!(skeleton(&back), skeleton(&forward), "{s}");
            assert_eq!(tau_inv_step1(back).unwrap(), s);
        }
    }
}

fn arb_inc12() -> impl Strategy<Value = IncTreeSeq> {
    (1usize..120, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = SeededRng::new(seed);
        tau_inverse(&sample_cayley(n, &mut rng).0).unwrap()
    })
}

fn arb_raw_inc12() -> impl Strategy<Value = IncTreeSeq> {
    prop::collection::vec((any::<bool>(), any::<prop::sample::Index>()), 0..80).prop_map(|steps| {
        let mut atts = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (i, (tri, pick)) in steps.into_iter().enumerate() {
            let v = i + 2;
            if tri && !edges.is_empty() {
                let (x, y) = edges[pick.index(edges.len())];
                atts.push(Attachment::Triangle(x, y));
                edges.push((x, v));
                edges.push((y, v));
            } else {
                let x = 1 + pick.index(v - 1);
                atts.push(Attachment::Leaf(x));
                edges.push((x, v));
            }
        }
        IncTreeSeq::new(atts).unwrap()
    })
}

proptest! {
    #[test]
    fn tau_inverse_of_tau(s in arb_raw_inc12()) {
        let t = tau(&s).unwrap();
        prop_assert_eq!(t.count_twists(), s.triangle_count());
        prop_assert_eq!(tau_inverse(&t).unwrap(), s.clone());
        prop_assert_eq!(tau_express(&s).unwrap(), t);
    }

    #[test]
    fn fused_inverse_matches_steps(n in 1usize..300, seed in any::<u64>()) {
        let (t, _) = sample_cayley(n, &mut SeededRng::new(seed));
        let stepwise = tau_inv_step1(tau_inv_step2(tau_inv_step3(&t))).unwrap();
        prop_assert_eq!(tau_inverse(&t).unwrap(), stepwise);
    }

    #[test]
    fn tau_of_sampled_inverse(s in arb_inc12()) {
        let t = tau(&s).unwrap();
        prop_assert_eq!(tau_inverse(&t).unwrap(), s);
    }
}
