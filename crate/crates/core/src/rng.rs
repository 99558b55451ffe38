//! Seeded random number plumbing.
//!
//! Every stochastic path in the crate flows through [`RngStream`], a thin
//! wrapper over the ChaCha12 stream cipher RNG: identical seeds give
//! identical streams on every platform and build configuration. Uniform
//! draws are mapped into the *open* interval (0,1) so they can feed the
//! inverse normal CDF directly, and sub-tasks (direction sampling,
//! subsampling, query generation) derive independent seeds from a parent
//! seed plus a string label so adding one consumer never perturbs another.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::quantile::std_normal_quantile;

/// Deterministic stream of uniform and standard-normal variates.
pub struct RngStream {
    rng: ChaCha12Rng,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha12Rng::seed_from_u64(seed),
        }
    }

    /// Uniform draw in the open interval (0,1): (k + ½)·2⁻⁵³ with k the top
    /// 53 bits of one 64-bit output, so 0.0 and 1.0 are unreachable and the
    /// value survives an inverse-CDF transform without domain errors.
    pub fn next_uniform(&mut self) -> f64 {
        ((self.rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Standard normal draw via the inverse-CDF transform of [`Self::next_uniform`].
    pub fn next_normal(&mut self) -> f64 {
        std_normal_quantile(self.next_uniform()).expect("open-interval uniform is a valid probability")
    }

    /// Uniform index in `0..n` (unbiased).
    pub fn next_index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}

/// Derive an independent child seed from a parent seed and a task label.
///
/// FNV-1a over the label bytes, keyed by the parent seed, then a SplitMix64
/// finalizer so structurally close inputs land far apart.
pub fn derive_seed(seed: u64, label: &str) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64 ^ seed.wrapping_mul(0x1_0000_0000_01b3);
    for &b in label.as_bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x1_0000_0000_01b3);
    }
    let mut z = h.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Choose `k` distinct row indices out of `0..n` (all of them when k ≥ n),
/// returned sorted ascending. Partial Fisher–Yates, deterministic in `seed`.
pub fn subsample_rows(n: usize, k: usize, seed: u64) -> Vec<usize> {
    if k >= n {
        return (0..n).collect();
    }
    let mut rng = RngStream::new(seed);
    let mut pool: Vec<usize> = (0..n).collect();
    for i in 0..k {
        let j = i + rng.next_index(n - i);
        pool.swap(i, j);
    }
    pool.truncate(k);
    pool.sort_unstable();
    pool
}

/// Sample `count` unit vectors in ℝ^d, uniform on the sphere (normalized
/// normal vectors). Drawn sequentially from one stream, so the first `m`
/// directions for a given seed are a prefix of any longer request.
pub fn unit_directions(seed: u64, d: usize, count: usize) -> Vec<Vec<f64>> {
    let mut rng = RngStream::new(seed);
    let mut dirs = Vec::with_capacity(count);
    while dirs.len() < count {
        let v: Vec<f64> = (0..d).map(|_| rng.next_normal()).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            dirs.push(v.into_iter().map(|x| x / norm).collect());
        }
    }
    dirs
}

// ======================================================================
// tests
// ======================================================================
