//! Covariance-free robust centrality toolkit.
//!
//! The central object is the median-radius functional `G(v)`: the smallest
//! radius of a closed ball centred at `v` that captures at least half of the
//! sample. Everything else builds on it — the standardized ratio `H(v)`, the
//! one-sided derivative statistics at the ball boundary, the derived depth
//! `D = G(M)/G(v)` with `M` the argmin of `G`, a suite of reference depth
//! functions for comparison (Mahalanobis, spatial, halfspace, simplicial,
//! projection), and a seeded simulation harness that reproduces the
//! agreement tables and figure data sets.
//!
//! Depth evaluation over many query points is data-parallel; the `parallel`
//! feature (default) routes those loops through rayon, and builds with
//! `--no-default-features` fall back to identical sequential code. Results
//! are bit-identical either way: every loop writes one slot per query and no
//! floating-point reduction depends on evaluation order.

pub mod depth;
pub mod error;
pub mod geometry;
pub mod quantile;
pub mod radial;
pub mod report;
pub mod rng;
pub mod scenario;
pub mod stats;

pub use error::{Error, Result};
pub use geometry::{CenterEstimate, CenterMethod, DataSet};
pub use radial::Sample1D;

/// Iterate a range, in parallel when the `parallel` feature is enabled.
///
/// Expands to a rayon parallel iterator or a plain sequential iterator; the
/// caller must only rely on order-independent work per item (collect into a
/// position-indexed Vec, never reduce floats in visit order).
#[macro_export]
macro_rules! iter_maybe_parallel {
    ($iterable:expr) => {{
        #[cfg(feature = "parallel")]
        {
            ::rayon::iter::IntoParallelIterator::into_par_iter($iterable)
        }
        #[cfg(not(feature = "parallel"))]
        {
            ::std::iter::IntoIterator::into_iter($iterable)
        }
    }};
}
