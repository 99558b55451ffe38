//! Univariate median-radius functional and its boundary diagnostics.
//!
//! For a sample x₁…xₙ and a location v, `g_univariate` returns the smallest
//! radius r such that the closed interval [v−r, v+r] captures at least half
//! the sample — concretely the k-th smallest |xᵢ − v| with k = ⌈n/2⌉ (lower
//! median of the distances, so the radius is always an observed distance and
//! the quantile representation is exact). `h_univariate` standardizes by the
//! value at a reference center, and `subgradient`/`curvature` report the
//! one-sided derivative statistics of G at the interval boundary.
//!
//! The subgradient and curvature quantities are empirical proportions. They
//! satisfy an algebraic identity on the underlying counts,
//!
//! ```text
//! (#{x ≥ v−g} − #{x < v+g}) − (#{x > v+g} − #{x ≤ v−g})
//!     = #{x = v−g} + #{x = v+g}
//! ```
//!
//! and the implementation keeps that identity exact by computing every
//! returned proportion as one integer numerator divided once by n. (Dividing
//! each tail count separately and subtracting afterwards loses the identity:
//! already for n = 1000, fl(999/1000) − fl(998/1000) ≠ fl(1/1000).)

use crate::error::{Error, Result};

/// Validated univariate sample: finite values, sorted ascending, n ≥ 1.
/// The original observation order is not retained.
#[derive(Debug, Clone)]
pub struct Sample1D {
    values: Vec<f64>,
}

impl Sample1D {
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySample);
        }
        if let Some(bad) = values.iter().find(|x| !x.is_finite()) {
            return Err(Error::NonFiniteInput {
                context: format!("sample value {bad}"),
            });
        }
        values.sort_unstable_by(f64::total_cmp);
        Ok(Self { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false — emptiness is rejected at construction.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        *self.values.last().expect("nonempty by construction")
    }

    fn count_le(&self, t: f64) -> usize {
        self.values.partition_point(|&x| x <= t)
    }

    fn count_lt(&self, t: f64) -> usize {
        self.values.partition_point(|&x| x < t)
    }
}

fn require_finite(v: f64, what: &str) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFiniteInput {
            context: format!("{what} = {v}"),
        })
    }
}

/// Median radius G(v): the k-th smallest |xᵢ − v| with k = ⌈n/2⌉.
pub fn g_univariate(sample: &Sample1D, v: f64) -> Result<f64> {
    require_finite(v, "location v")?;
    let mut dist: Vec<f64> = sample.values().iter().map(|x| (x - v).abs()).collect();
    let k = sample.len().div_ceil(2);
    let (_, kth, _) = dist.select_nth_unstable_by(k - 1, f64::total_cmp);
    Ok(*kth)
}

/// Sample median with the averaged-middle convention for even n. This is the
/// reference *location* estimator; note it deliberately differs from the
/// lower-median convention used for the radius quantile.
pub fn median_univariate(sample: &Sample1D) -> f64 {
    let xs = sample.values();
    let n = xs.len();
    if n % 2 == 1 {
        xs[n / 2]
    } else {
        (xs[n / 2 - 1] + xs[n / 2]) / 2.0
    }
}

/// Standardized radius H(v) = G(v) / G(center).
pub fn h_univariate(sample: &Sample1D, v: f64, center: f64) -> Result<f64> {
    let scale = g_univariate(sample, center)?;
    if scale == 0.0 {
        return Err(Error::DegenerateScale);
    }
    Ok(g_univariate(sample, v)? / scale)
}

/// Raw integer tail counts at the interval boundary v ± g. All proportions
/// returned by this module derive from these counts with a single division,
/// which is what keeps the curvature identity exact.
struct BoundaryCounts {
    /// #{x ≤ v−g}
    le_lo: usize,
    /// #{x ≥ v−g}
    ge_lo: usize,
    /// #{x < v+g}
    lt_hi: usize,
    /// #{x > v+g}
    gt_hi: usize,
}

impl BoundaryCounts {
    fn at(sample: &Sample1D, v: f64, g: f64) -> Self {
        let n = sample.len();
        let lo = v - g;
        let hi = v + g;
        Self {
            le_lo: sample.count_le(lo),
            ge_lo: n - sample.count_lt(lo),
            lt_hi: sample.count_lt(hi),
            gt_hi: n - sample.count_le(hi),
        }
    }

    /// #{x = v−g} + #{x = v+g}, via the same counts the subgradients use.
    fn boundary_atoms(&self, n: usize) -> usize {
        let eq_lo = self.ge_lo + self.le_lo - n;
        let eq_hi = n - self.lt_hi - self.gt_hi;
        eq_lo + eq_hi
    }
}

/// One-sided derivative statistics of G at v, with g = G(v):
/// d₋ = P̂(X > v+g) − P̂(X ≤ v−g) and d₊ = P̂(X ≥ v−g) − P̂(X < v+g).
/// Both lie in [−1, 1] and d₋ ≤ d₊.
pub fn subgradient(sample: &Sample1D, v: f64) -> Result<(f64, f64)> {
    let g = g_univariate(sample, v)?;
    let c = BoundaryCounts::at(sample, v, g);
    let n = sample.len() as f64;
    let d_minus = (c.gt_hi as f64 - c.le_lo as f64) / n;
    let d_plus = (c.ge_lo as f64 - c.lt_hi as f64) / n;
    Ok((d_minus, d_plus))
}

/// Curvature A(v) = d₊ − d₋ = P̂(X = v−g) + P̂(X = v+g): the probability mass
/// sitting exactly on the interval boundary. Computed as a single integer
/// count divided by n, so it matches a direct count of boundary atoms bit
/// for bit.
pub fn curvature(sample: &Sample1D, v: f64) -> Result<f64> {
    let g = g_univariate(sample, v)?;
    let c = BoundaryCounts::at(sample, v, g);
    Ok(c.boundary_atoms(sample.len()) as f64 / sample.len() as f64)
}

/// One evaluated grid point of a radial profile.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileEntry {
    pub v: f64,
    pub g: f64,
    pub h: f64,
    pub d_minus: f64,
    pub d_plus: f64,
    pub a: f64,
}

/// G/H/subgradient/curvature evaluated over an explicit grid.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    pub entries: Vec<ProfileEntry>,
    pub center: f64,
    /// True when G(center) = 0; the h column then holds the +∞ convention
    /// (1 at points with G = 0, +∞ elsewhere) instead of a ratio.
    pub degenerate_scale: bool,
}

/// Evaluate the full profile over `grid` (strictly increasing, nonempty).
/// A zero central scale is mapped to the +∞ sentinel convention in the h
/// column and flagged on the profile rather than raised.
pub fn profile(sample: &Sample1D, grid: &[f64], center: f64) -> Result<RadialProfile> {
    if grid.is_empty() {
        return Err(Error::InvalidParameter("profile grid is empty".into()));
    }
    if grid.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidParameter(
            "profile grid must be strictly increasing".into(),
        ));
    }
    for &v in grid {
        require_finite(v, "grid point")?;
    }
    let scale = g_univariate(sample, center)?;
    let degenerate = scale == 0.0;

    #[cfg(feature = "parallel")]
    use rayon::iter::ParallelIterator;
    let entries: Vec<ProfileEntry> = crate::iter_maybe_parallel!(0..grid.len())
        .map(|i| {
            let v = grid[i];
            let g = g_univariate(sample, v).expect("grid point validated");
            let c = BoundaryCounts::at(sample, v, g);
            let n = sample.len() as f64;
            let h = if degenerate {
                if g == 0.0 {
                    1.0
                } else {
                    f64::INFINITY
                }
            } else {
                g / scale
            };
            ProfileEntry {
                v,
                g,
                h,
                d_minus: (c.gt_hi as f64 - c.le_lo as f64) / n,
                d_plus: (c.ge_lo as f64 - c.lt_hi as f64) / n,
                a: c.boundary_atoms(sample.len()) as f64 / n,
            }
        })
        .collect();

    Ok(RadialProfile {
        entries,
        center,
        degenerate_scale: degenerate,
    })
}

// ======================================================================
// tests
// ======================================================================
