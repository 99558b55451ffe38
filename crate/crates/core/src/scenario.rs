//! Seeded data generators for the simulation scenarios.
//!
//! Stochastic scenarios draw from a single [`RngStream`](crate::rng::RngStream)
//! in a documented row-by-row order, so a (scenario, seed) pair always
//! produces the identical dataset. The deterministic 1-D designs are
//! quantile grids: no seed, reproducible by construction. Normal variates
//! everywhere come from the inverse-CDF transform, so the samplers and the
//! deterministic designs share one code path for Φ⁻¹.

use crate::error::{Error, Result};
use crate::geometry::DataSet;
use crate::quantile::std_normal_quantile;
use crate::rng::RngStream;

/// A named data-generating design.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// n iid rows of N₂(0, I₂).
    Gaussian { n: usize, seed: u64 },
    /// X₁ ~ N(0,1), X₂ = Exp(1) − 1 (centred shifted exponential).
    Skewed { n: usize, seed: u64 },
    /// ⌊n/2⌋ rows from N₂((−2,0), I) followed by the rest from N₂((2,0), I).
    Bimodal { n: usize, seed: u64 },
    /// n rows from N(−3, 0.5²) plus 5 contaminating rows from N(3, 0.5²).
    Contaminated1d { n: usize, seed: u64 },
    /// Deterministic: quantile grids of N(−2, 0.75²), N(0, 0.75²),
    /// N(3, 0.8²) concatenated, m points each (3m rows).
    Trimodal1d { m: usize },
    /// Deterministic: quantile grid of N(0,1), m rows.
    Normal1d { m: usize },
    /// n×d iid N(0,1) with d > n (covariance deliberately singular).
    HighDim { n: usize, d: usize, seed: u64 },
}

impl Scenario {
    pub fn tag(&self) -> &'static str {
        match self {
            Scenario::Gaussian { .. } => "gaussian",
            Scenario::Skewed { .. } => "skewed",
            Scenario::Bimodal { .. } => "bimodal",
            Scenario::Contaminated1d { .. } => "contaminated1d",
            Scenario::Trimodal1d { .. } => "trimodal1d",
            Scenario::Normal1d { .. } => "normal1d",
            Scenario::HighDim { .. } => "highdim",
        }
    }
}

fn require_size(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(format!("{what} must be ≥ 1")));
    }
    Ok(())
}

/// The p-grid p_i = i/(m+1), i = 1..m, used by the deterministic designs;
/// avoids the endpoints 0 and 1 where Φ⁻¹ diverges.
fn p_grid(m: usize) -> impl Iterator<Item = f64> {
    let denom = (m + 1) as f64;
    (1..=m).map(move |i| i as f64 / denom)
}

fn quantile_block(m: usize, mu: f64, sigma: f64) -> Result<Vec<Vec<f64>>> {
    p_grid(m)
        .map(|p| Ok(vec![mu + sigma * std_normal_quantile(p)?]))
        .collect()
}

/// Generate the dataset for a scenario. Pure in (scenario, seed).
pub fn generate_scenario(s: &Scenario) -> Result<DataSet> {
    match *s {
        Scenario::Gaussian { n, seed } => {
            require_size(n, "sample size")?;
            let mut rng = RngStream::new(seed);
            let rows = (0..n)
                .map(|_| vec![rng.next_normal(), rng.next_normal()])
                .collect();
            DataSet::from_rows(rows)
        }
        Scenario::Skewed { n, seed } => {
            require_size(n, "sample size")?;
            let mut rng = RngStream::new(seed);
            let rows = (0..n)
                .map(|_| {
                    let x1 = rng.next_normal();
                    // u ∈ (0,1) strictly, so ln(1−u) is finite
                    let x2 = -(1.0 - rng.next_uniform()).ln() - 1.0;
                    vec![x1, x2]
                })
                .collect();
            DataSet::from_rows(rows)
        }
        Scenario::Bimodal { n, seed } => {
            require_size(n, "sample size")?;
            let mut rng = RngStream::new(seed);
            let first = n / 2;
            let rows = (0..n)
                .map(|i| {
                    let shift = if i < first { -2.0 } else { 2.0 };
                    vec![shift + rng.next_normal(), rng.next_normal()]
                })
                .collect();
            DataSet::from_rows(rows)
        }
        Scenario::Contaminated1d { n, seed } => {
            require_size(n, "sample size")?;
            let mut rng = RngStream::new(seed);
            let mut rows: Vec<Vec<f64>> = (0..n)
                .map(|_| vec![-3.0 + 0.5 * rng.next_normal()])
                .collect();
            rows.extend((0..5).map(|_| vec![3.0 + 0.5 * rng.next_normal()]));
            DataSet::from_rows(rows)
        }
        Scenario::Trimodal1d { m } => {
            require_size(m, "grid size")?;
            let mut rows = Vec::with_capacity(3 * m);
            for (mu, sigma) in [(-2.0, 0.75), (0.0, 0.75), (3.0, 0.8)] {
                rows.extend(quantile_block(m, mu, sigma)?);
            }
            DataSet::from_rows(rows)
        }
        Scenario::Normal1d { m } => {
            require_size(m, "grid size")?;
            DataSet::from_rows(quantile_block(m, 0.0, 1.0)?)
        }
        Scenario::HighDim { n, d, seed } => {
            require_size(n, "sample size")?;
            if d <= n {
                return Err(Error::InvalidParameter(format!(
                    "highdim scenario requires d > n, got d = {d}, n = {n}"
                )));
            }
            let mut rng = RngStream::new(seed);
            let rows = (0..n)
                .map(|_| (0..d).map(|_| rng.next_normal()).collect())
                .collect();
            DataSet::from_rows(rows)
        }
    }
}

// ======================================================================
// tests
// ======================================================================
