//! The verification corpus: a fixed set of canonical finite metric
//! systems plus seeded random line-metric systems, all reproducible from
//! one seed.

use expanselab_core::finite::FiniteMetricSystem;
use expanselab_core::{ratio, Rational};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format_rational;

/// Seed used when `EXPANSELAB_SEED` is unset.
pub const DEFAULT_SEED: u64 = 0x5EED;

/// Reads the sampling seed from `EXPANSELAB_SEED`, falling back to the
/// default. Malformed values are an error rather than a silent fallback.
pub fn seed_from_env() -> anyhow::Result<u64> {
    match std::env::var("EXPANSELAB_SEED") {
        Ok(text) => text.trim().parse::<u64>().map_err(|_| {
            anyhow::anyhow!("EXPANSELAB_SEED must be an unsigned integer, got {text:?}")
        }),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

/// A named corpus member.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub system: FiniteMetricSystem,
}

fn uniform_metric(n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::zero()
                    } else {
                        ratio(1, 1)
                    }
                })
                .collect()
        })
        .collect()
}

fn entry(
    name: &str,
    labels: Vec<String>,
    dist: Vec<Vec<Rational>>,
    map: Vec<usize>,
) -> CorpusEntry {
    CorpusEntry {
        name: name.into(),
        system: FiniteMetricSystem::new(labels, dist, map)
            .expect("canonical corpus entries are valid by construction"),
    }
}

/// The fixed members every suite can rely on: rotations, an identity, a
/// swap, a one-point space, and a non-invertible collapse.
pub fn canonical_corpus() -> Vec<CorpusEntry> {
    let mut entries = Vec::new();

    let labels4: Vec<String> = (0..4).map(|i| format!("p{i}")).collect();
    entries.push(entry(
        "cycle4-uniform",
        labels4.clone(),
        uniform_metric(4),
        vec![1, 2, 3, 0],
    ));

    // Graph metric on the 4-cycle: adjacent points at 1/2, opposite at 1.
    let graph_dist: Vec<Vec<Rational>> = (0..4usize)
        .map(|i| {
            (0..4usize)
                .map(|j| {
                    let hop = (i as i64 - j as i64)
                        .rem_euclid(4)
                        .min((j as i64 - i as i64).rem_euclid(4));
                    ratio(hop, 2)
                })
                .collect()
        })
        .collect();
    entries.push(entry("cycle4-graph", labels4, graph_dist, vec![1, 2, 3, 0]));

    entries.push(entry(
        "cycle3-uniform",
        (0..3).map(|i| format!("p{i}")).collect(),
        uniform_metric(3),
        vec![1, 2, 0],
    ));

    entries.push(entry(
        "identity2",
        vec!["u".into(), "v".into()],
        uniform_metric(2),
        vec![0, 1],
    ));

    entries.push(entry(
        "swap2",
        vec!["u".into(), "v".into()],
        uniform_metric(2),
        vec![1, 0],
    ));

    entries.push(entry(
        "singleton",
        vec!["p".into()],
        vec![vec![Rational::zero()]],
        vec![0],
    ));

    // Non-invertible: both endpoints collapse onto the fixed middle.
    entries.push(entry(
        "collapse3",
        vec!["0".into(), "1/2".into(), "1".into()],
        vec![
            vec![Rational::zero(), ratio(1, 2), ratio(1, 1)],
            vec![ratio(1, 2), Rational::zero(), ratio(1, 2)],
            vec![ratio(1, 1), ratio(1, 2), Rational::zero()],
        ],
        vec![1, 1, 1],
    ));

    entries
}

/// Seeded random systems on the line: distinct quarter-integer values
/// with the absolute-difference metric and either an arbitrary self-map
/// or a permutation.
pub fn seeded_corpus(
    seed: u64,
    count: usize,
    max_points: usize,
    invertible_only: bool,
) -> Vec<CorpusEntry> {
    assert!(max_points >= 2, "corpus systems need at least two points");
    // Separate streams for the two corpus flavors so that adding one kind
    // of request never perturbs the other.
    let stream = if invertible_only { 1 } else { 0 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(stream));
    let mut entries = Vec::with_capacity(count);
    for index in 0..count {
        let n = rng.gen_range(2..=max_points);
        let mut numerators: Vec<i64> = (0..(4 * max_points as i64)).collect();
        numerators.shuffle(&mut rng);
        let mut values: Vec<Rational> = numerators[..n].iter().map(|&k| ratio(k, 4)).collect();
        values.sort();
        let map: Vec<usize> = if invertible_only {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            perm
        } else {
            (0..n).map(|_| rng.gen_range(0..n)).collect()
        };
        let labels: Vec<String> = values.iter().map(format_rational).collect();
        let dist: Vec<Vec<Rational>> = values
            .iter()
            .map(|a| {
                values
                    .iter()
                    .map(|b| if a >= b { a - b } else { b - a })
                    .collect()
            })
            .collect();
        let kind = if invertible_only { "perm" } else { "map" };
        entries.push(CorpusEntry {
            name: format!("seeded-{kind}-{index}"),
            system: FiniteMetricSystem::new(labels, dist, map)
                .expect("line metrics with distinct values are valid"),
        });
    }
    entries
}
