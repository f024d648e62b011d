//! Seeded matrix generators shared by the integration tests.
#![allow(dead_code)]

use cluster_unfold::samples::rank4_acyclic;
use cluster_unfold::ExchangeMatrix;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x5eed_c0de;
pub const CORPUS_RANDOM: usize = 50;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sign-skew-symmetric, not necessarily acyclic: each pair is zero with
/// probability `1 - density`, otherwise gets opposite signs with magnitudes
/// in `1..=max`.
pub fn random_sign_skew(rng: &mut impl Rng, n: usize, max: i64, density: f64) -> ExchangeMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                rows[i][j] = sign * rng.gen_range(1..=max);
                rows[j][i] = -sign * rng.gen_range(1..=max);
            }
        }
    }
    ExchangeMatrix::from_rows(&rows).unwrap()
}

/// Acyclic sign-skew-symmetric: a random vertex order, every edge of Δ(B)
/// pointing forward along it.
pub fn random_acyclic(rng: &mut impl Rng, n: usize, max: i64, density: f64) -> ExchangeMatrix {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut rows = vec![vec![0i64; n]; n];
    for a in 0..n {
        for c in a + 1..n {
            if rng.gen_bool(density) {
                let (u, v) = (order[a], order[c]);
                // edge u → v in Δ(B) means b_uv < 0
                rows[u][v] = -rng.gen_range(1..=max);
                rows[v][u] = rng.gen_range(1..=max);
            }
        }
    }
    ExchangeMatrix::from_rows(&rows).unwrap()
}

/// 50 seeded acyclic matrices with `2 <= n <= 4` and entries in `[-2, 2]`, then
/// the 4x4 sample.
pub fn corpus() -> Vec<ExchangeMatrix> {
    let mut rng = rng(CORPUS_SEED);
    let mut out: Vec<ExchangeMatrix> = (0..CORPUS_RANDOM)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            random_acyclic(&mut rng, n, 2, 0.7)
        })
        .collect();
    out.push(rank4_acyclic());
    out
}

/// Every sequence over `1..=n` of length `1..=len` without immediate repeats.
pub fn sequences_up_to(n: usize, len: usize) -> Vec<cluster_unfold::MutationSequence> {
    (1..=len)
        .flat_map(|l| cluster_unfold::MutationSequence::all_without_repeats(n, l))
        .collect()
}
