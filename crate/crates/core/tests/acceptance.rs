//! Acceptance suite: one PASS/FAIL line per criterion. Runs under
//! `cargo test` and on its own with `cargo test --test acceptance`.

use std::collections::{HashMap, HashSet};
use std::hash::Hash;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_bigint::BigUint;
use num_rational::BigRational;
use twistree::bijection::checks::*;
use twistree::bijection::{tau, tau_express, tau_inverse, tau_step2, ForestBuilder};
use twistree::counting::{build_count_table, cayley_number, CountTable};
use twistree::enumeration::{enumerate_cayley, enumerate_inc12};
use twistree::par::Execution;
use twistree::sampling::*;
use twistree::series::*;
use twistree::trees::{Attachment, CayleyTree, IncTreeSeq};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_inc12(n: usize) -> Vec<IncTreeSeq> {
    enumerate_inc12(n, n).expect("within cap").collect()
}

fn all_cayley(n: usize) -> Vec<CayleyTree> {
    enumerate_cayley(n, n).expect("within cap").collect()
}

fn row_as_usize(table: &CountTable, n: usize) -> Vec<usize> {
    table
        .row(n)
        .iter()
        .map(|c| usize::try_from(c).expect("small count"))
        .collect()
}

fn ac1_counting() -> Outcome {
    let table = build_count_table(25);
    for n in 2..=25 {
        let expect = BigUint::from(n).pow(n as u32 - 2);
        ensure(table.row_sum(n) == expect, || {
            format!("row {n} sums to {}", table.row_sum(n))
        })?;
    }
    Ok(format!("row 25 sums to {}", table.row_sum(25)))
}

fn ac2_enumeration() -> Outcome {
    let table = build_count_table(7);
    let mut sizes = Vec::new();
    for n in 4..=7 {
        let seqs = all_inc12(n);
        let trees = all_cayley(n);
        let expect = n.pow(n as u32 - 2);
        ensure(seqs.len() == expect && trees.len() == expect, || {
            format!("n={n}: {} and {} objects", seqs.len(), trees.len())
        })?;
        ensure(seqs.iter().collect::<HashSet<_>>().len() == expect, || {
            format!("n={n}: duplicate sequence")
        })?;
        ensure(trees.iter().collect::<HashSet<_>>().len() == expect, || {
            format!("n={n}: duplicate tree")
        })?;
        let mut tri = vec![0; n - 1];
        let mut tw = vec![0; n - 1];
        seqs.iter().for_each(|s| tri[s.triangle_count()] += 1);
        trees.iter().for_each(|t| tw[t.count_twists()] += 1);
        let row = row_as_usize(&table, n);
        ensure(tri == row && tw == row, || {
            format!("n={n}: {tri:?} / {tw:?} vs {row:?}")
        })?;
        sizes.push(expect);
    }
    Ok(format!("sizes {sizes:?}, histograms match"))
}

fn ac3_round_trip() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        let mut images = HashSet::new();
        for s in all_inc12(n) {
            let t = tau(&s).map_err(|e| format!("{s}: {e}"))?;
            ensure(t.count_twists() == s.triangle_count(), || {
                format!("{s}: statistic")
            })?;
            let back = tau_inverse(&t).map_err(|e| format!("{t}: {e}"))?;
            ensure(back == s, || format!("{s} -> {t} -> {back}"))?;
            images.insert(t);
            checked += 1;
        }
        let trees: HashSet<CayleyTree> = all_cayley(n).into_iter().collect();
        ensure(images == trees, || format!("n={n}: image set differs"))?;
        for t in &trees {
            let s = tau_inverse(t).map_err(|e| format!("{t}: {e}"))?;
            ensure(s.triangle_count() == t.count_twists(), || {
                format!("{t}: statistic")
            })?;
            let again = tau(&s).map_err(|e| format!("{s}: {e}"))?;
            ensure(&again == t, || format!("{t} -> {s} -> {again}"))?;
        }
    }
    Ok(format!("{checked} sequences in both directions"))
}

fn ac4_express() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        for s in all_inc12(n) {
            let a = tau(&s).map_err(|e| e.to_string())?;
            let b = tau_express(&s).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("{s}: {a} vs {b}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} inputs agree"))
}

fn ac5_lemmas() -> Outcome {
    let mut states = 0;
    for n in 2..=6 {
        for s in all_inc12(n) {
            let mut b = ForestBuilder::new(n);
            let mut seen = HashMap::new();
            for &att in s.attachments() {
                b.push(att).map_err(|e| e.to_string())?;
                let f = b.forest();
                let ctx = |e: String| format!("{s}, after vertex {}: {e}", b.next_vertex() - 1);
                check_root_edges(f).map_err(ctx)?;
                check_eddy_below(f).map_err(ctx)?;
                for (edge, labels) in eddy_labels(f) {
                    let prev = seen.entry(edge).or_insert(labels);
                    ensure(*prev == labels, || ctx(format!("eddy of {edge:?} changed")))?;
                }
                states += 1;
            }
            let f = tau_step2(b.finish());
            let ctx = |e: String| format!("{s}: {e}");
            check_sibling_end_order(&f).map_err(ctx)?;
            check_all_twists(&f).map_err(ctx)?;
            check_min_at_leftmost_leaf(&f).map_err(ctx)?;
            check_children_sorted_by_min(&f).map_err(ctx)?;
        }
    }
    Ok(format!("{states} intermediate forests"))
}

fn ac6_fixed_points() -> Outcome {
    let (mut leafy, mut two_trees) = (0, 0);
    for n in 1..=7 {
        for s in all_inc12(n) {
            if s.is_all_leaf() {
                let t = tau(&s).map_err(|e| e.to_string())?;
                let same =
                    s.attachments().iter().enumerate().all(
                        |(i, a)| matches!(*a, Attachment::Leaf(x) if t.parent(i + 2) == Some(x)),
                    );
                ensure(same, || format!("{s} -> {t}"))?;
                leafy += 1;
            } else if n >= 2 && s.attachments()[1..].iter().all(Attachment::is_triangle) {
                let t = tau(&s).map_err(|e| e.to_string())?;
                let inc: Vec<_> = t.edges().filter(|&(_, c)| !t.is_twist(c)).collect();
                ensure(inc.len() == 1 && inc[0].0 == 1, || format!("{s} -> {t}"))?;
                two_trees += 1;
            }
        }
    }
    Ok(format!(
        "{leafy} increasing trees fixed, {two_trees} increasing 2-trees"
    ))
}

fn ac7_series() -> Outcome {
    let table = build_count_table(14);
    check_pde(&egf_from_counts(&table, 14)).map_err(|e| e.to_string())?;
    let t = cayley_series(30);
    let mut fact = BigRational::from_integer(BigInt::from(1));
    for n in 1..=30 {
        fact *= BigRational::from_integer(BigInt::from(n));
        let count = BigRational::from_integer(BigInt::from(cayley_number(n)));
        ensure(t.coeff(n) * &fact == count, || format!("coefficient {n}"))?;
    }
    let report = closed_form_check(10).map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.to_string())?;
    Ok(format!(
        "PDE through z^13, Cayley series to 30, closed form: {report}"
    ))
}

const CHI2_CRITICAL_15: f64 = 37.70;

fn chi_square<T: Eq + Hash>(classes: &HashMap<T, usize>, samples: &[T]) -> Result<f64, String> {
    let mut counts = vec![0usize; classes.len()];
    for s in samples {
        let &i = classes.get(s).ok_or("sample outside the class set")?;
        counts[i] += 1;
    }
    let e = samples.len() as f64 / classes.len() as f64;
    Ok(counts.iter().map(|&o| (o as f64 - e).powi(2) / e).sum())
}

fn uniformity<T, F>(label: &str, classes: &HashMap<T, usize>, f: F) -> Result<String, String>
where
    T: Eq + Hash + Send,
    F: Fn(&mut SeededRng) -> T + Sync + Send,
{
    let mut stats = Vec::new();
    for seed in [20_240_101u64, 7, 99_991] {
        let samples = sample_batch(160_000, seed, 8, Execution::Parallel, &f);
        stats.push(chi_square(classes, &samples)?);
    }
    let failures = stats.iter().filter(|&&x| x >= CHI2_CRITICAL_15).count();
    let shown: Vec<String> = stats.iter().map(|x| format!("{x:.2}")).collect();
    ensure(failures <= 1, || format!("{label} chi2 {shown:?}"))?;
    Ok(format!("{label} [{}]", shown.join(", ")))
}

fn ac8_uniformity() -> Outcome {
    let trees: HashMap<CayleyTree, usize> = all_cayley(4)
        .into_iter()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let seqs: HashMap<IncTreeSeq, usize> = all_inc12(4)
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let a = uniformity("cayley", &trees, |r| sample_cayley(4, r).0)?;
    let b = uniformity("inc12", &seqs, |r| sample_inc12(4, r).0)?;
    let c = uniformity("pruefer", &trees, |r| sample_cayley_prufer(4, r))?;
    Ok(format!("chi2 < {CHI2_CRITICAL_15}: {a}; {b}; {c}"))
}

fn ac9_draws() -> Outcome {
    let n = 1000;
    let draws = sample_batch(10_000, 1_000, 8, Execution::Parallel, |r| {
        sample_cayley(n, r).1.draws
    });
    let mean = draws.iter().sum::<usize>() as f64 / draws.len() as f64;
    let target = 1.5 * n as f64;
    ensure((mean - target).abs() <= 0.02 * target, || {
        format!("mean draws {mean}")
    })?;
    Ok(format!("mean draws {mean:.1} (target {target} ± 2%)"))
}

fn median_time(n: usize) -> Duration {
    let mut times: Vec<Duration> = (0..5)
        .map(|i| {
            let mut rng = SeededRng::new(42 + i);
            let start = Instant::now();
            let (s, _) = sample_inc12(n, &mut rng);
            let d = start.elapsed();
            assert_eq!(s.n(), n);
            d
        })
        .collect();
    times.sort();
    times[2]
}

/// Growth from 10^5 to 10^6 of a plain random gather, the floor for any
/// pass that permutes labels.
fn gather_ratio() -> f64 {
    let time = |n: usize| {
        let idx: Vec<usize> = (0..n).map(|i| i.wrapping_mul(2_654_435_761) % n).collect();
        let data: Vec<u64> = (0..n as u64).collect();
        (0..5)
            .map(|_| {
                let start = Instant::now();
                let acc = idx.iter().fold(0u64, |a, &i| a.wrapping_add(data[i]));
                std::hint::black_box(acc);
                start.elapsed().as_secs_f64()
            })
            .fold(f64::MAX, f64::min)
    };
    time(1_000_000) / time(100_000)
}

fn ac10_scaling() -> Outcome {
    let small = median_time(100_000);
    let large = median_time(1_000_000);
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    ensure(ratio <= 15.0, || {
        format!(
            "{small:?} -> {large:?}, ratio {ratio:.2} (random gather on this machine: {:.1})",
            gather_ratio()
        )
    })?;
    ensure(large < Duration::from_secs(10), || {
        format!("n=10^6 took {large:?}")
    })?;
    Ok(format!("{small:?} -> {large:?}, ratio {ratio:.2}"))
}

fn ac11_hand_traces() -> Outcome {
    let mut rng = ScriptedRng::new(vec![2, 3, 1]);
    let (t, _) = sample_cayley(3, &mut rng);
    ensure(rng.error().is_none(), || "script misuse".into())?;
    ensure(t.parents() == [0, 3, 1], || format!("sampler gave {t}"))?;
    let s = IncTreeSeq::new(vec![Attachment::Leaf(1), Attachment::Triangle(1, 2)])
        .map_err(|e| e.to_string())?;
    let u = tau(&s).map_err(|e| e.to_string())?;
    ensure(u == t, || format!("tau gave {u}"))?;
    Ok(format!("both give {t}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("AC1 counting row sums", ac1_counting),
        ("AC2 enumeration cardinality", ac2_enumeration),
        ("AC3 bijection round trip", ac3_round_trip),
        ("AC4 express equivalence", ac4_express),
        ("AC5 forest lemma suites", ac5_lemmas),
        ("AC6 fixed points", ac6_fixed_points),
        ("AC7 series identities", ac7_series),
        ("AC8 sampler uniformity", ac8_uniformity),
        ("AC9 draw count", ac9_draws),
        ("AC10 linear scaling", ac10_scaling),
        ("AC11 hand traces", ac11_hand_traces),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name} ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {name} ({secs:.2}s): {detail}");
            }
        }
    }
    println!("{} of {} criteria passed", 11 - failed, 11);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
