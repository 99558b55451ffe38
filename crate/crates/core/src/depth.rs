//! Depth functions: the median-radius depth and its comparison suite.
//!
//! The headline notion is `mrd_depth`: D(v) = G(M)/G(v) where M is the
//! radial center (argmin of G). It is 1 exactly at the center, decays to 0
//! at infinity, and needs no covariance matrix, so it survives d > n where
//! Mahalanobis depth is undefined. The comparison methods implemented
//! alongside it are classical Mahalanobis depth, a one-step trimmed robust
//! Mahalanobis distance (a deliberate stand-in for heavy scatter estimators
//! like MCD — used for qualitative contour comparison only), spatial depth,
//! exact bivariate halfspace (Tukey) depth via an angular sweep, exact
//! bivariate simplicial depth via bit-parallel triangle counting, and
//! seeded projection depth.
//!
//! Batch evaluation over query sets and rectangular grids shares one
//! evaluator per method so per-dataset work (covariance inversion,
//! projection index building, central scale) happens once. Grid evaluation maps
//! method failures to NaN sentinel layers plus a note instead of failing:
//! the d > n singular-covariance layer is itself a result.

use crate::error::{Error, Result};
use crate::geometry::{central_scale, euclid, g_multivariate, CenterEstimate, DataSet};
use crate::radial::{g_univariate, median_univariate, Sample1D};
use crate::rng::unit_directions;
use nalgebra::{DMatrix, DVector};

/// Depth method selector with method-specific parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum DepthMethod {
    Mrd,
    Mahalanobis,
    RobustMahalanobis { trim: f64 },
    Spatial,
    Tukey2d,
    Simplicial2d,
    Projection { n_dirs: usize, seed: u64 },
}

impl DepthMethod {
    pub fn tag(&self) -> &'static str {
        match self {
            DepthMethod::Mrd => "mrd",
            DepthMethod::Mahalanobis => "mahalanobis",
            DepthMethod::RobustMahalanobis { .. } => "robust-mahalanobis",
            DepthMethod::Spatial => "spatial",
            DepthMethod::Tukey2d => "tukey2d",
            DepthMethod::Simplicial2d => "simplicial2d",
            DepthMethod::Projection { .. } => "projection",
        }
    }
}

// ----------------------------------------------------------------------
// median-radius depth
// ----------------------------------------------------------------------

/// Tolerance for the "center is the argmin" assumption: ratios exceeding 1
/// by less than this are attributed to optimizer tolerance and clamped.
const MRD_CLAMP: f64 = 1e-9;

fn mrd_from_scale(data: &DataSet, v: &[f64], scale: f64) -> Result<f64> {
    let g = g_multivariate(data, v)?;
    if g == 0.0 {
        // Half the mass sits on v itself, so v is a strictly better center.
        return Err(Error::CenterNotMinimal {
            ratio: f64::INFINITY,
        });
    }
    let ratio = scale / g;
    if ratio <= 1.0 {
        Ok(ratio)
    } else if ratio - 1.0 < MRD_CLAMP {
        Ok(1.0)
    } else {
        Err(Error::CenterNotMinimal { ratio })
    }
}

/// Median-radius depth D(v) = G(center)/G(v) ∈ (0, 1].
///
/// The center is expected to be the minimizer of G; a ratio above 1 + 1e-9
/// (i.e. a query point with a strictly smaller median radius than the
/// center) is reported as `center-not-minimal` rather than silently capped.
pub fn mrd_depth(data: &DataSet, v: &[f64], center: &CenterEstimate) -> Result<f64> {
    let scale = central_scale(data, center)?;
    if scale == 0.0 {
        return Err(Error::DegenerateScale);
    }
    mrd_from_scale(data, v, scale)
}

// ----------------------------------------------------------------------
// Mahalanobis depth, classical and one-step trimmed
// ----------------------------------------------------------------------

fn mean_and_cov(data: &DataSet, idx: &[usize]) -> (DVector<f64>, DMatrix<f64>) {
    let d = data.d();
    let m = idx.len();
    let mut mean = DVector::zeros(d);
    for &i in idx {
        for j in 0..d {
            mean[j] += data.row(i)[j];
        }
    }
    mean /= m as f64;
    let mut cov = DMatrix::zeros(d, d);
    for &i in idx {
        let row = data.row(i);
        for a in 0..d {
            let da = row[a] - mean[a];
            for b in a..d {
                cov[(a, b)] += da * (row[b] - mean[b]);
            }
        }
    }
    for a in 0..d {
        for b in a..d {
            let v = cov[(a, b)] / (m as f64 - 1.0);
            cov[(a, b)] = v;
            cov[(b, a)] = v;
        }
    }
    (mean, cov)
}

/// Invert a sample covariance matrix, reporting `singular-covariance` when
/// it is rank-deficient or has condition number above 1e12.
fn invert_covariance(cov: DMatrix<f64>) -> Result<DMatrix<f64>> {
    let eigen = nalgebra::linalg::SymmetricEigen::new(cov.clone());
    let lambda_max = eigen.eigenvalues.max();
    let lambda_min = eigen.eigenvalues.min();
    if !(lambda_min > 0.0) || lambda_max / lambda_min > 1e12 {
        return Err(Error::SingularCovariance);
    }
    let chol = nalgebra::linalg::Cholesky::new(cov).ok_or(Error::SingularCovariance)?;
    Ok(chol.inverse())
}

fn quadratic_form(mean: &DVector<f64>, inv: &DMatrix<f64>, v: &[f64]) -> f64 {
    let diff = DVector::from_iterator(mean.len(), v.iter().zip(mean.iter()).map(|(a, b)| a - b));
    (diff.dot(&(inv * &diff))).max(0.0)
}

/// Classical Mahalanobis machinery, fitted once per dataset.
pub struct MahalanobisModel {
    mean: DVector<f64>,
    inv_cov: DMatrix<f64>,
}

impl MahalanobisModel {
    pub fn fit(data: &DataSet) -> Result<Self> {
        if data.n() < 2 {
            return Err(Error::SingularCovariance);
        }
        let idx: Vec<usize> = (0..data.n()).collect();
        let (mean, cov) = mean_and_cov(data, &idx);
        let inv_cov = invert_covariance(cov)?;
        Ok(Self { mean, inv_cov })
    }

    pub fn depth(&self, v: &[f64]) -> f64 {
        1.0 / (1.0 + quadratic_form(&self.mean, &self.inv_cov, v))
    }

    pub fn distance(&self, v: &[f64]) -> f64 {
        quadratic_form(&self.mean, &self.inv_cov, v).sqrt()
    }

    pub fn mean(&self) -> Vec<f64> {
        self.mean.iter().copied().collect()
    }
}

/// Mahalanobis depth 1/(1 + (v−x̄)ᵀS⁻¹(v−x̄)) with the n−1 covariance divisor.
pub fn mahalanobis_depth(data: &DataSet, v: &[f64]) -> Result<f64> {
    if v.len() != data.d() {
        return Err(Error::DimensionMismatch {
            expected: data.d(),
            got: v.len(),
        });
    }
    Ok(MahalanobisModel::fit(data)?.depth(v))
}

/// One-step trimmed Mahalanobis machinery: standardize coordinates by
/// median/MAD, rank points by that initial distance, keep the closest
/// ⌈(1−trim)·n⌉, and use the retained points' mean and covariance.
pub struct RobustMahalanobisModel {
    mean: DVector<f64>,
    inv_cov: DMatrix<f64>,
}

impl RobustMahalanobisModel {
    pub fn fit(data: &DataSet, trim: f64) -> Result<Self> {
        if !(trim > 0.0 && trim <= 0.5) {
            return Err(Error::InvalidParameter(format!(
                "trim fraction must lie in (0, 0.5], got {trim}"
            )));
        }
        let n = data.n();
        let d = data.d();
        // Coordinatewise robust standardization. A MAD of zero (at least
        // half the column tied at the median) falls back to unit scale so
        // the ranking stays finite.
        let mut meds = Vec::with_capacity(d);
        let mut scales = Vec::with_capacity(d);
        for j in 0..d {
            let col = Sample1D::new(data.column(j)).expect("dataset columns are valid samples");
            let med = median_univariate(&col);
            let mad = g_univariate(&col, med)?;
            meds.push(med);
            scales.push(if mad == 0.0 { 1.0 } else { mad });
        }
        let initial: Vec<f64> = (0..n)
            .map(|i| {
                data.row(i)
                    .iter()
                    .zip(meds.iter().zip(&scales))
                    .map(|(x, (m, s))| {
                        let z = (x - m) / s;
                        z * z
                    })
                    .sum::<f64>()
                    .sqrt()
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        // stable sort: distance ties keep original row order
        order.sort_by(|&a, &b| initial[a].total_cmp(&initial[b]));
        let keep = ((1.0 - trim) * n as f64).ceil() as usize;
        let retained = &order[..keep.max(1)];
        if retained.len() < 2 {
            return Err(Error::SingularCovariance);
        }
        let (mean, cov) = mean_and_cov(data, retained);
        let inv_cov = invert_covariance(cov)?;
        Ok(Self { mean, inv_cov })
    }

    pub fn distance(&self, v: &[f64]) -> f64 {
        quadratic_form(&self.mean, &self.inv_cov, v).sqrt()
    }

    /// Depth-style transform of the distance, for reports and grid layers.
    pub fn depth(&self, v: &[f64]) -> f64 {
        1.0 / (1.0 + quadratic_form(&self.mean, &self.inv_cov, v))
    }

    /// The trimmed location estimate μ̂.
    pub fn location(&self) -> Vec<f64> {
        self.mean.iter().copied().collect()
    }
}

/// Robust Mahalanobis distance √((v−μ̂)ᵀΣ̂⁻¹(v−μ̂)) from the one-step
/// trimmed estimates.
pub fn robust_mahalanobis_distance(data: &DataSet, v: &[f64], trim: f64) -> Result<f64> {
    if v.len() != data.d() {
        return Err(Error::DimensionMismatch {
            expected: data.d(),
            got: v.len(),
        });
    }
    Ok(RobustMahalanobisModel::fit(data, trim)?.distance(v))
}

// ----------------------------------------------------------------------
// spatial depth
// ----------------------------------------------------------------------

/// Spatial depth 1 − ‖mean unit vector toward the data‖. Points coincident
/// with v are excluded from the average; if every point coincides the depth
/// is 1 by convention.
pub fn spatial_depth(data: &DataSet, v: &[f64]) -> Result<f64> {
    if v.len() != data.d() {
        return Err(Error::DimensionMismatch {
            expected: data.d(),
            got: v.len(),
        });
    }
    let d = data.d();
    let mut sum = vec![0.0; d];
    let mut distinct = 0usize;
    for row in data.rows() {
        let dist = euclid(row, v);
        if dist == 0.0 {
            continue;
        }
        distinct += 1;
        for j in 0..d {
            sum[j] += (row[j] - v[j]) / dist;
        }
    }
    if distinct == 0 {
        return Ok(1.0);
    }
    let norm = sum
        .iter()
        .map(|x| (x / distinct as f64).powi(2))
        .sum::<f64>()
        .sqrt();
    Ok((1.0 - norm).clamp(0.0, 1.0))
}

// ----------------------------------------------------------------------
// halfspace (Tukey) depth, exact in 2D
// ----------------------------------------------------------------------

fn wrap_angle(a: f64) -> f64 {
    if a > std::f64::consts::PI {
        a - std::f64::consts::TAU
    } else if a <= -std::f64::consts::PI {
        a + std::f64::consts::TAU
    } else {
        a
    }
}

/// Count sorted angles in the closed interval [lo, hi] (width π), wrapping
/// around ±π as needed. Angles live in (−π, π].
fn count_angles_in(sorted: &[f64], lo: f64, hi: f64) -> usize {
    let m = sorted.len();
    let lb = |t: f64| sorted.partition_point(|&x| x < t);
    let ub = |t: f64| sorted.partition_point(|&x| x <= t);
    if lo < -std::f64::consts::PI {
        (m - lb(lo + std::f64::consts::TAU)) + ub(hi)
    } else if hi > std::f64::consts::PI {
        (m - lb(lo)) + ub(hi - std::f64::consts::TAU)
    } else {
        ub(hi) - lb(lo)
    }
}

/// Exact bivariate halfspace depth: the minimum over closed halfplanes
/// through v of the fraction of points they contain, by an angular sweep.
/// Points coincident with v lie on every halfplane boundary and count
/// everywhere.
pub fn tukey_depth_2d(data: &DataSet, v: &[f64]) -> Result<f64> {
    if data.d() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: data.d(),
        });
    }
    if v.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: v.len(),
        });
    }
    let n = data.n();
    let mut angles = Vec::with_capacity(n);
    let mut coincident = 0usize;
    for row in data.rows() {
        let dx = row[0] - v[0];
        let dy = row[1] - v[1];
        if dx == 0.0 && dy == 0.0 {
            coincident += 1;
        } else {
            angles.push(dy.atan2(dx));
        }
    }
    if angles.is_empty() {
        return Ok(1.0);
    }
    angles.sort_unstable_by(f64::total_cmp);

    // The count of points inside the halfplane with outward normal at angle
    // φ is piecewise constant in φ, changing only where some point crosses
    // the boundary (φ = θᵢ ± π/2). On closed halfplanes the count at an
    // event is never below its neighbors, so the minimum is attained on an
    // open gap — evaluate at midpoints of consecutive distinct events.
    let half = std::f64::consts::FRAC_PI_2;
    let mut events: Vec<f64> = Vec::with_capacity(2 * angles.len());
    for &t in &angles {
        events.push(wrap_angle(t - half));
        events.push(wrap_angle(t + half));
    }
    events.sort_unstable_by(f64::total_cmp);

    let mut min_count = angles.len();
    let mut probe = |phi: f64| {
        let c = count_angles_in(&angles, phi - half, phi + half);
        min_count = min_count.min(c);
    };
    for w in events.windows(2) {
        if w[1] > w[0] {
            probe((w[0] + w[1]) / 2.0);
        }
    }
    let first = events[0];
    let last = *events.last().expect("nonempty events");
    let wrap_gap = first + std::f64::consts::TAU - last;
    if wrap_gap > 0.0 {
        probe(wrap_angle(last + wrap_gap / 2.0));
    }

    Ok((coincident + min_count) as f64 / n as f64)
}

// ----------------------------------------------------------------------
// simplicial depth, exact in 2D
// ----------------------------------------------------------------------

/// Row-per-point bit matrix over point indices.
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Self {
            words,
            bits: vec![0; words * n],
        }
    }

    #[inline]
    fn set(&mut self, i: usize, k: usize) {
        self.bits[i * self.words + k / 64] |= 1u64 << (k % 64);
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    fn get(&self, i: usize, k: usize) -> bool {
        self.row(i)[k / 64] >> (k % 64) & 1 == 1
    }
}

/// Popcount of `f(word_index)` over bit positions in [from, n).
#[inline]
fn count_bits_from(words: usize, n: usize, from: usize, f: impl Fn(usize) -> u64) -> u64 {
    if from >= n {
        return 0;
    }
    let start = from / 64;
    let mut total = 0u64;
    for w in start..words {
        let mut word = f(w);
        if w == start {
            word &= !0u64 << (from % 64);
        }
        let used = n - w * 64;
        if used < 64 {
            word &= (1u64 << used) - 1;
        }
        total += u64::from(word.count_ones());
    }
    total
}

/// Iterate set bits of `f(word_index)` over positions in [from, n).
#[inline]
fn for_each_bit_from(words: usize, n: usize, from: usize, f: impl Fn(usize) -> u64, mut visit: impl FnMut(usize)) {
    if from >= n {
        return;
    }
    let start = from / 64;
    for w in start..words {
        let mut word = f(w);
        if w == start {
            word &= !0u64 << (from % 64);
        }
        let used = n - w * 64;
        if used < 64 {
            word &= (1u64 << used) - 1;
        }
        while word != 0 {
            let bit = word.trailing_zeros() as usize;
            visit(w * 64 + bit);
            word &= word - 1;
        }
    }
}

/// Exact bivariate simplicial depth: the fraction of the C(n,3) data
/// triangles whose closed hull contains v.
///
/// Direct enumeration, organized as pairwise orientation-sign bit maps plus
/// popcounts over the third vertex, so it stays fast enough for the
/// a few hundred pool points per query that the harness uses. Degenerate
/// triangles (collinear points, duplicates) contain v exactly when v lies
/// in their closed segment hull.
pub fn simplicial_depth_2d(data: &DataSet, v: &[f64]) -> Result<f64> {
    if data.d() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: data.d(),
        });
    }
    if v.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: v.len(),
        });
    }
    let n = data.n();
    if n < 3 {
        return Err(Error::InsufficientPoints { need: 3, have: n });
    }

    let w: Vec<(f64, f64)> = data.rows().map(|r| (r[0] - v[0], r[1] - v[1])).collect();
    let cross = |a: usize, b: usize| w[a].0 * w[b].1 - w[a].1 * w[b].0;
    let dot = |a: usize, b: usize| w[a].0 * w[b].0 + w[a].1 * w[b].1;

    // pos[i] bit k: cross(wᵢ, wₖ) > 0; nonneg[i] bit k: cross ≥ 0.
    let mut pos = BitMatrix::new(n);
    let mut nonneg = BitMatrix::new(n);
    for i in 0..n {
        for k in 0..n {
            if i == k {
                continue;
            }
            let c = cross(i, k);
            if c > 0.0 {
                pos.set(i, k);
                nonneg.set(i, k);
            } else if c == 0.0 {
                nonneg.set(i, k);
            }
        }
    }

    // v lies in the closed triangle (i,j,k) iff the origin passes the three
    // edge orientation tests with a consistent sign:
    //   branch A: cross(i,j) ≥ 0 ∧ cross(j,k) ≥ 0 ∧ cross(i,k) ≤ 0
    //   branch B: cross(i,j) ≤ 0 ∧ cross(j,k) ≤ 0 ∧ cross(i,k) ≥ 0
    // Both branches pass simultaneously only in the fully degenerate case
    // (all three crosses zero: every vertex collinear with v), which is
    // decided separately by betweenness on the line.
    let words = pos.words;
    let mut contained = 0u64;
    for i in 0..n {
        let pos_i = pos.row(i);
        let nn_i = nonneg.row(i);
        for j in (i + 1)..n {
            let pos_j = pos.row(j);
            let nn_j = nonneg.row(j);
            let s_ij_pos = pos.get(i, j);
            let s_ij_zero = !s_ij_pos && nonneg.get(i, j);
            if s_ij_pos || s_ij_zero {
                contained += count_bits_from(words, n, j + 1, |w| nn_j[w] & !pos_i[w]);
            }
            if !s_ij_pos {
                contained += count_bits_from(words, n, j + 1, |w| !pos_j[w] & nn_i[w]);
            }
            if s_ij_zero {
                // Fully degenerate triples were counted by both branches;
                // remove both counts and decide them by betweenness.
                let zero_zero = |w: usize| (nn_i[w] & !pos_i[w]) & (nn_j[w] & !pos_j[w]);
                contained -= 2 * count_bits_from(words, n, j + 1, zero_zero);
                for_each_bit_from(words, n, j + 1, zero_zero, |k| {
                    if dot(i, j) <= 0.0 || dot(i, k) <= 0.0 || dot(j, k) <= 0.0 {
                        contained += 1;
                    }
                });
            }
        }
    }

    let total = (n as u64) * (n as u64 - 1) * (n as u64 - 2) / 6;
    Ok(contained as f64 / total as f64)
}

// ----------------------------------------------------------------------
// projection depth
// ----------------------------------------------------------------------

struct ProjectionEntry {
    dir: Vec<f64>,
    med: f64,
    mad: f64,
}

/// Projection-depth machinery: sampled unit directions with the projected
/// median and MAD per direction, fitted once per dataset.
///
/// Directions are drawn sequentially from the seed, so for a fixed seed the
/// directions used at `n_dirs = m` are a prefix of those at any larger
/// count — adding directions can only grow the max deviation, never shrink
/// it. Directions whose projected MAD is zero carry no scale information
/// and are skipped; if every direction degenerates the fit fails.
pub struct ProjectionIndex {
    entries: Vec<ProjectionEntry>,
    requested: usize,
}

impl ProjectionIndex {
    pub fn fit(data: &DataSet, n_dirs: usize, seed: u64) -> Result<Self> {
        if n_dirs == 0 {
            return Err(Error::InvalidParameter(
                "projection depth needs at least one direction".into(),
            ));
        }
        let dirs = unit_directions(seed, data.d(), n_dirs);
        #[cfg(feature = "parallel")]
        use rayon::iter::ParallelIterator;
        let entries: Vec<Option<ProjectionEntry>> = crate::iter_maybe_parallel!(0..dirs.len())
            .map(|di| {
                let dir = &dirs[di];
                let proj: Vec<f64> = data
                    .rows()
                    .map(|r| r.iter().zip(dir).map(|(x, u)| x * u).sum::<f64>())
                    .collect();
                let sample = Sample1D::new(proj).expect("projections of finite data are finite");
                let med = median_univariate(&sample);
                let mad = g_univariate(&sample, med).expect("median is finite");
                (mad > 0.0).then(|| ProjectionEntry {
                    dir: dir.clone(),
                    med,
                    mad,
                })
            })
            .collect();
        let entries: Vec<ProjectionEntry> = entries.into_iter().flatten().collect();
        if entries.is_empty() {
            return Err(Error::AllDirectionsDegenerate);
        }
        Ok(Self {
            entries,
            requested: n_dirs,
        })
    }

    /// Number of directions that survived the MAD > 0 filter.
    pub fn kept(&self) -> usize {
        self.entries.len()
    }

    pub fn requested(&self) -> usize {
        self.requested
    }

    pub fn depth(&self, v: &[f64]) -> Result<f64> {
        let d = self.entries[0].dir.len();
        if v.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: v.len(),
            });
        }
        let mut worst = 0.0f64;
        for e in &self.entries {
            let p: f64 = e.dir.iter().zip(v).map(|(u, x)| u * x).sum();
            worst = worst.max((p - e.med).abs() / e.mad);
        }
        Ok(1.0 / (1.0 + worst))
    }
}

/// Projection depth (1 + max standardized projected deviation)⁻¹ over
/// `n_dirs` seeded directions.
pub fn projection_depth(data: &DataSet, v: &[f64], n_dirs: usize, seed: u64) -> Result<f64> {
    ProjectionIndex::fit(data, n_dirs, seed)?.depth(v)
}

// ----------------------------------------------------------------------
// shared batch evaluation
// ----------------------------------------------------------------------

/// Per-method evaluator with the per-dataset work already done.
enum Evaluator<'a> {
    Mrd { data: &'a DataSet, scale: f64 },
    Mahalanobis(MahalanobisModel),
    RobustMahalanobis(RobustMahalanobisModel),
    Spatial(&'a DataSet),
    Tukey(&'a DataSet),
    Simplicial(&'a DataSet),
    Projection(ProjectionIndex),
}

impl Evaluator<'_> {
    fn build<'a>(
        data: &'a DataSet,
        method: &DepthMethod,
        center: &CenterEstimate,
    ) -> Result<Evaluator<'a>> {
        Ok(match method {
            DepthMethod::Mrd => {
                let scale = central_scale(data, center)?;
                if scale == 0.0 {
                    return Err(Error::DegenerateScale);
                }
                Evaluator::Mrd { data, scale }
            }
            DepthMethod::Mahalanobis => Evaluator::Mahalanobis(MahalanobisModel::fit(data)?),
            DepthMethod::RobustMahalanobis { trim } => {
                Evaluator::RobustMahalanobis(RobustMahalanobisModel::fit(data, *trim)?)
            }
            DepthMethod::Spatial => Evaluator::Spatial(data),
            DepthMethod::Tukey2d => Evaluator::Tukey(data),
            DepthMethod::Simplicial2d => {
                if data.n() < 3 {
                    return Err(Error::InsufficientPoints {
                        need: 3,
                        have: data.n(),
                    });
                }
                Evaluator::Simplicial(data)
            }
            DepthMethod::Projection { n_dirs, seed } => {
                Evaluator::Projection(ProjectionIndex::fit(data, *n_dirs, *seed)?)
            }
        })
    }

    fn eval(&self, v: &[f64]) -> Result<f64> {
        match self {
            Evaluator::Mrd { data, scale } => mrd_from_scale(data, v, *scale),
            Evaluator::Mahalanobis(m) => Ok(m.depth(v)),
            Evaluator::RobustMahalanobis(m) => Ok(m.depth(v)),
            Evaluator::Spatial(data) => spatial_depth(data, v),
            Evaluator::Tukey(data) => tukey_depth_2d(data, v),
            Evaluator::Simplicial(data) => simplicial_depth_2d(data, v),
            Evaluator::Projection(p) => p.depth(v),
        }
    }
}

/// Depths for a set of query points plus the per-method depth-weighted
/// centre of the observations.
pub struct DepthReport {
    pub methods: Vec<String>,
    /// depths[m][q]: method m evaluated at query q.
    pub depths: Vec<Vec<f64>>,
    /// centres[m]: Σ D(xᵢ)·xᵢ / Σ D(xᵢ) over the data rows.
    pub centres: Vec<Vec<f64>>,
}

/// Evaluate each method at every query point and compute the depth-weighted
/// centres over the data rows. Method errors are fatal here (the grid path,
/// `depth_field`, is the lenient one).
pub fn depth_report(
    data: &DataSet,
    queries: &DataSet,
    methods: &[DepthMethod],
    center: &CenterEstimate,
) -> Result<DepthReport> {
    if queries.d() != data.d() {
        return Err(Error::DimensionMismatch {
            expected: data.d(),
            got: queries.d(),
        });
    }
    let mut tags = Vec::with_capacity(methods.len());
    let mut depths = Vec::with_capacity(methods.len());
    let mut centres = Vec::with_capacity(methods.len());
    for method in methods {
        let evaluator = Evaluator::build(data, method, center)?;
        #[cfg(feature = "parallel")]
        use rayon::iter::ParallelIterator;
        let at_queries: Vec<Result<f64>> = crate::iter_maybe_parallel!(0..queries.n())
            .map(|q| evaluator.eval(queries.row(q)))
            .collect();
        let at_queries: Vec<f64> = at_queries.into_iter().collect::<Result<_>>()?;
        let at_data: Vec<f64> = if std::ptr::eq(data, queries) {
            at_queries.clone()
        } else {
            let vals: Vec<Result<f64>> = crate::iter_maybe_parallel!(0..data.n())
                .map(|q| evaluator.eval(data.row(q)))
                .collect();
            vals.into_iter().collect::<Result<_>>()?
        };
        centres.push(crate::stats::depth_weighted_centre(data, &at_data)?);
        depths.push(at_queries);
        tags.push(method.tag().to_string());
    }
    Ok(DepthReport {
        methods: tags,
        depths,
        centres,
    })
}

// ----------------------------------------------------------------------
// grid fields
// ----------------------------------------------------------------------

/// Rectangular evaluation grid. Axes are inclusive linear spacings; an axis
/// of resolution 1 degenerates to the interval midpoint.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub nx: usize,
    pub ny: usize,
}

fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![(lo + hi) / 2.0];
    }
    let last = (n - 1) as f64;
    (0..n)
        .map(|i| (lo * (last - i as f64) + hi * i as f64) / last)
        .collect()
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64, nx: usize, ny: usize) -> Result<Self> {
        if nx == 0 || ny == 0 {
            return Err(Error::InvalidParameter("grid resolution must be ≥ 1".into()));
        }
        if !(x_min <= x_max && y_min <= y_max)
            || !x_min.is_finite()
            || !x_max.is_finite()
            || !y_min.is_finite()
            || !y_max.is_finite()
        {
            return Err(Error::InvalidParameter(format!(
                "invalid grid extent [{x_min}, {x_max}] × [{y_min}, {y_max}]"
            )));
        }
        Ok(Self {
            x_min,
            x_max,
            y_min,
            y_max,
            nx,
            ny,
        })
    }

    /// Grid covering the bounding box of 2D data, padded by `margin` times
    /// the per-axis range (a degenerate axis gets unit padding).
    pub fn from_data(data: &DataSet, nx: usize, ny: usize, margin: f64) -> Result<Self> {
        if data.d() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: data.d(),
            });
        }
        if !(margin >= 0.0 && margin.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "grid margin must be ≥ 0, got {margin}"
            )));
        }
        let mut bounds = [(f64::INFINITY, f64::NEG_INFINITY); 2];
        for row in data.rows() {
            for j in 0..2 {
                bounds[j].0 = bounds[j].0.min(row[j]);
                bounds[j].1 = bounds[j].1.max(row[j]);
            }
        }
        let pad = |(lo, hi): (f64, f64)| {
            let range = hi - lo;
            let p = if range > 0.0 { margin * range } else { 1.0 };
            (lo - p, hi + p)
        };
        let (x_min, x_max) = pad(bounds[0]);
        let (y_min, y_max) = pad(bounds[1]);
        Self::new(x_min, x_max, y_min, y_max, nx, ny)
    }

    pub fn xs(&self) -> Vec<f64> {
        axis(self.x_min, self.x_max, self.nx)
    }

    pub fn ys(&self) -> Vec<f64> {
        axis(self.y_min, self.y_max, self.ny)
    }
}

/// One scalar field evaluated on a grid; values are row-major with y outer:
/// `values[iy * nx + ix]`. NaN marks nodes the method could not score.
#[derive(Debug, Clone)]
pub struct GridLayer {
    pub tag: String,
    pub values: Vec<f64>,
}

/// A stack of scalar fields over one grid, plus notes about any layers that
/// were replaced by sentinels.
#[derive(Debug, Clone)]
pub struct GridField {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub layers: Vec<GridLayer>,
    pub notes: Vec<String>,
}

impl GridField {
    pub fn layer(&self, tag: &str) -> Option<&[f64]> {
        self.layers
            .iter()
            .find(|l| l.tag == tag)
            .map(|l| l.values.as_slice())
    }
}

/// Evaluate the G and H fields plus every requested method over a grid.
///
/// Method failures never abort the field: a method that cannot be fitted
/// (singular covariance, degenerate directions) contributes an all-NaN
/// layer, a method that fails at individual nodes gets NaN at those nodes,
/// and each failure appends a note. A zero central scale switches the H
/// layer to the +∞ convention (1 where G = 0, +∞ elsewhere).
pub fn depth_field(
    data: &DataSet,
    methods: &[DepthMethod],
    spec: &GridSpec,
    center: &CenterEstimate,
) -> Result<GridField> {
    if data.d() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: data.d(),
        });
    }
    let xs = spec.xs();
    let ys = spec.ys();
    let nodes: Vec<[f64; 2]> = ys
        .iter()
        .flat_map(|&y| xs.iter().map(move |&x| [x, y]))
        .collect();
    let mut layers = Vec::new();
    let mut notes = Vec::new();

    #[cfg(feature = "parallel")]
    use rayon::iter::ParallelIterator;

    let g_values: Vec<f64> = crate::iter_maybe_parallel!(0..nodes.len())
        .map(|i| g_multivariate(data, &nodes[i]).expect("grid nodes are finite"))
        .collect();

    let scale = central_scale(data, center)?;
    let h_values: Vec<f64> = if scale == 0.0 {
        notes.push("h: degenerate-scale (using the +inf convention)".to_string());
        g_values
            .iter()
            .map(|&g| if g == 0.0 { 1.0 } else { f64::INFINITY })
            .collect()
    } else {
        g_values.iter().map(|&g| g / scale).collect()
    };
    layers.push(GridLayer {
        tag: "g".into(),
        values: g_values,
    });
    layers.push(GridLayer {
        tag: "h".into(),
        values: h_values,
    });

    for method in methods {
        let tag = method.tag().to_string();
        match Evaluator::build(data, method, center) {
            Err(err) => {
                notes.push(format!("{tag}: {err}"));
                layers.push(GridLayer {
                    tag,
                    values: vec![f64::NAN; nodes.len()],
                });
            }
            Ok(evaluator) => {
                let values: Vec<f64> = crate::iter_maybe_parallel!(0..nodes.len())
                    .map(|i| evaluator.eval(&nodes[i]).unwrap_or(f64::NAN))
                    .collect();
                let failed = values.iter().filter(|x| x.is_nan()).count();
                if failed > 0 {
                    notes.push(format!("{tag}: {failed} nodes unscored"));
                }
                layers.push(GridLayer { tag, values });
            }
        }
    }

    Ok(GridField {
        xs,
        ys,
        layers,
        notes,
    })
}

// ======================================================================
// tests
// ======================================================================

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{radial_center, CenterMethod};
    use crate::rng::RngStream;

    fn square_corners() -> DataSet {
        DataSet::from_rows(vec![
            vec![0.0, 0.0],
            vec![2.0, 0.0],
            vec![0.0, 2.0],
            vec![2.0, 2.0],
        ])
        .unwrap()
    }

    fn center_at(data: &DataSet, loc: &[f64]) -> CenterEstimate {
        CenterEstimate::evaluate_at(data, loc.to_vec(), CenterMethod::GeometricMedian).unwrap()
    }

    fn random_cloud(rng: &mut RngStream, n: usize, spread: f64) -> DataSet {
        DataSet::from_rows(
            (0..n)
                .map(|_| vec![rng.next_normal() * spread, rng.next_normal() * spread])
                .collect(),
        )
        .unwrap()
    }

    // ---- mrd ----

    #[test]
    fn mrd_is_one_at_the_center_and_ratio_elsewhere() {
        let sq = square_corners();
        let center = center_at(&sq, &[1.0, 1.0]);
        assert_eq!(mrd_depth(&sq, &[1.0, 1.0], &center).unwrap(), 1.0);
        let d = mrd_depth(&sq, &[0.0, 0.0], &center).unwrap();
        assert!((d - std::f64::consts::SQRT_2 / 2.0).abs() < 1e-15);
    }

    #[test]
    fn mrd_vanishes_at_distance() {
        let unit_box = DataSet::from_rows(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ])
        .unwrap();
        let center = radial_center(&unit_box, 1e-9).unwrap();
        let d = mrd_depth(&unit_box, &[1e8, 0.0], &center).unwrap();
        assert!(d < 1e-7, "depth {d} too large at distance 1e8");
    }

    #[test]
    fn mrd_clamps_tolerance_noise_but_rejects_real_violations() {
        let sq = square_corners();
        // (1,0) has G = 1 < √2 = G((1,1)): a genuinely better center exists.
        let bad_center = center_at(&sq, &[1.0, 1.0]);
        assert!(matches!(
            mrd_depth(&sq, &[1.0, 0.0], &bad_center),
            Err(Error::CenterNotMinimal { .. })
        ));
        // A center off the argmin by far less than the clamp tolerance
        // still scores 1.0 at the true argmin.
        let near = center_at(&sq, &[1.0 + 1e-13, 0.0]);
        assert_eq!(mrd_depth(&sq, &[1.0, 0.0], &near).unwrap(), 1.0);
    }

    #[test]
    fn mrd_requires_positive_scale() {
        let data = DataSet::from_rows(vec![vec![0.0, 0.0]; 4]).unwrap();
        let center = center_at(&data, &[0.0, 0.0]);
        assert!(matches!(
            mrd_depth(&data, &[1.0, 1.0], &center),
            Err(Error::DegenerateScale)
        ));
    }

    // ---- mahalanobis ----

    #[test]
    fn mahalanobis_is_one_at_the_mean() {
        let unit_sq = DataSet::from_rows(vec![
            vec![0.0, 0.0],
            vec![1.0, 0.0],
            vec![0.0, 1.0],
            vec![1.0, 1.0],
        ])
        .unwrap();
        assert_eq!(mahalanobis_depth(&unit_sq, &[0.5, 0.5]).unwrap(), 1.0);
        let model = MahalanobisModel::fit(&unit_sq).unwrap();
        assert_eq!(model.mean(), vec![0.5, 0.5]);
        assert!(model.depth(&[5.0, 0.5]) < model.depth(&[1.0, 0.5]));
    }

    #[test]
    fn mahalanobis_reports_singularity_when_d_exceeds_n() {
        let mut rng = RngStream::new(1);
        let rows: Vec<Vec<f64>> = (0..20)
            .map(|_| (0..50).map(|_| rng.next_normal()).collect())
            .collect();
        let data = DataSet::from_rows(rows).unwrap();
        assert!(matches!(
            mahalanobis_depth(&data, &vec![0.0; 50]),
            Err(Error::SingularCovariance)
        ));
    }

    #[test]
    fn mahalanobis_is_affine_invariant() {
        let mut rng = RngStream::new(9);
        let data = random_cloud(&mut rng, 60, 1.0);
        let v = [0.4, -0.7];
        let shear = |p: &[f64]| vec![1.0 * p[0] + 0.7 * p[1] + 3.0, 0.3 * p[0] + 1.2 * p[1] - 1.0];
        let sheared = DataSet::from_rows(data.rows().map(|r| shear(r)).collect()).unwrap();
        let d0 = mahalanobis_depth(&data, &v).unwrap();
        let d1 = mahalanobis_depth(&sheared, &shear(&v)).unwrap();
        assert!((d0 - d1).abs() < 1e-9, "{d0} vs {d1}");
    }

    // ---- robust mahalanobis ----

    #[test]
    fn robust_location_ignores_a_far_cluster() {
        let mut rng = RngStream::new(31);
        let mut rows: Vec<Vec<f64>> = (0..950)
            .map(|_| vec![rng.next_normal(), rng.next_normal()])
            .collect();
        rows.extend((0..50).map(|_| {
            vec![50.0 + 0.1 * rng.next_normal(), 50.0 + 0.1 * rng.next_normal()]
        }));
        let data = DataSet::from_rows(rows).unwrap();
        let model = RobustMahalanobisModel::fit(&data, 0.25).unwrap();
        let mu = model.location();
        assert!(
            (mu[0].powi(2) + mu[1].powi(2)).sqrt() < 0.5,
            "trimmed location {mu:?} dragged by contamination"
        );
        // at its own location the distance is zero
        assert!(model.distance(&mu) < 1e-12);
        // determinism: no RNG anywhere in the fit
        let again = robust_mahalanobis_distance(&data, &[3.0, -1.0], 0.25).unwrap();
        assert_eq!(
            robust_mahalanobis_distance(&data, &[3.0, -1.0], 0.25).unwrap(),
            again
        );
    }

    #[test]
    fn robust_fit_validates_trim() {
        let data = square_corners();
        assert!(matches!(
            RobustMahalanobisModel::fit(&data, 0.0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            RobustMahalanobisModel::fit(&data, 0.75),
            Err(Error::InvalidParameter(_))
        ));
    }

    // ---- spatial ----

    #[test]
    fn spatial_depth_matches_hand_values_on_the_square() {
        let sq = square_corners();
        assert_eq!(spatial_depth(&sq, &[1.0, 1.0]).unwrap(), 1.0);
        assert!(spatial_depth(&sq, &[100.0, 1.0]).unwrap() <= 0.01);
        // v on a data point: average of the three remaining unit vectors
        let s = std::f64::consts::SQRT_2 / 2.0;
        let expected = 1.0 - (2.0f64.sqrt() * (1.0 + s) / 3.0);
        let got = spatial_depth(&sq, &[0.0, 0.0]).unwrap();
        assert!((got - expected).abs() < 1e-12, "{got} vs {expected}");
    }

    #[test]
    fn spatial_depth_of_fully_coincident_data_is_one() {
        let data = DataSet::from_rows(vec![vec![2.0, 3.0]; 5]).unwrap();
        assert_eq!(spatial_depth(&data, &[2.0, 3.0]).unwrap(), 1.0);
    }

    // ---- tukey ----

    #[test]
    fn tukey_depth_matches_hand_values() {
        let sq = square_corners();
        assert_eq!(tukey_depth_2d(&sq, &[1.0, 1.0]).unwrap(), 0.5);
        assert_eq!(tukey_depth_2d(&sq, &[5.0, 5.0]).unwrap(), 0.0);
        assert_eq!(tukey_depth_2d(&sq, &[0.0, 0.0]).unwrap(), 0.25);
        // all points coincident with the query
        let point = DataSet::from_rows(vec![vec![1.0, 1.0]; 3]).unwrap();
        assert_eq!(tukey_depth_2d(&point, &[1.0, 1.0]).unwrap(), 1.0);
    }

    #[test]
    fn tukey_depth_equals_a_dense_angular_brute_force() {
        let mut rng = RngStream::new(17);
        for _ in 0..40 {
            let n = 3 + rng.next_index(8);
            let data = random_cloud(&mut rng, n, 1.0);
            let v = [rng.next_normal(), rng.next_normal()];
            let exact = tukey_depth_2d(&data, &v).unwrap();
            let mut min_count = n;
            for a in 0..3600 {
                let phi = -std::f64::consts::PI + (a as f64) * std::f64::consts::TAU / 3600.0;
                let (s, c) = phi.sin_cos();
                let count = data
                    .rows()
                    .filter(|r| (r[0] - v[0]) * c + (r[1] - v[1]) * s >= 0.0)
                    .count();
                min_count = min_count.min(count);
            }
            assert_eq!(exact, min_count as f64 / n as f64);
        }
    }

    #[test]
    fn tukey_depth_counts_coincident_points_everywhere() {
        // two copies of the query plus two points far to one side
        let data = DataSet::from_rows(vec![
            vec![0.0, 0.0],
            vec![0.0, 0.0],
            vec![5.0, 0.0],
            vec![6.0, 1.0],
        ])
        .unwrap();
        // the halfplane looking away from the cluster contains only the copies
        assert_eq!(tukey_depth_2d(&data, &[0.0, 0.0]).unwrap(), 0.5);
    }

    // ---- simplicial ----

    #[test]
    fn simplicial_depth_matches_hand_values() {
        let sq = square_corners();
        // every triangle of the square contains the center on its diagonal
        assert_eq!(simplicial_depth_2d(&sq, &[1.0, 1.0]).unwrap(), 1.0);
        assert_eq!(simplicial_depth_2d(&sq, &[50.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn simplicial_depth_handles_degenerate_triangles() {
        let line =
            DataSet::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]]).unwrap();
        // off the line no degenerate triangle contains the query
        assert_eq!(simplicial_depth_2d(&line, &[0.5, 0.1]).unwrap(), 0.0);
        // on the segment the (degenerate) hull contains it
        assert_eq!(simplicial_depth_2d(&line, &[0.5, 0.0]).unwrap(), 1.0);
        // on the line but outside the segment hull
        assert_eq!(simplicial_depth_2d(&line, &[9.0, 0.0]).unwrap(), 0.0);
        // querying a vertex: closed convention counts the triangle
        assert_eq!(simplicial_depth_2d(&line, &[1.0, 0.0]).unwrap(), 1.0);
    }

    #[test]
    fn simplicial_depth_needs_three_points() {
        let two = DataSet::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        assert!(matches!(
            simplicial_depth_2d(&two, &[0.0, 0.0]),
            Err(Error::InsufficientPoints { .. })
        ));
    }

    #[test]
    fn simplicial_depth_lies_in_unit_interval_with_duplicates() {
        let mut rng = RngStream::new(23);
        for _ in 0..30 {
            let n = 3 + rng.next_index(10);
            let mut rows: Vec<Vec<f64>> = (0..n)
                .map(|_| vec![rng.next_normal(), rng.next_normal()])
                .collect();
            // duplicate a row and drop a query onto a data point sometimes
            let dup = rng.next_index(n);
            rows.push(rows[dup].clone());
            let data = DataSet::from_rows(rows).unwrap();
            let v = if rng.next_uniform() < 0.5 {
                data.row(rng.next_index(data.n())).to_vec()
            } else {
                vec![rng.next_normal(), rng.next_normal()]
            };
            let d = simplicial_depth_2d(&data, &v).unwrap();
            assert!((0.0..=1.0).contains(&d));
        }
    }

    // ---- projection ----

    #[test]
    fn projection_depth_is_one_at_the_symmetric_center() {
        let sq = square_corners();
        for seed in [1, 42, 999] {
            assert_eq!(projection_depth(&sq, &[1.0, 1.0], 200, seed).unwrap(), 1.0);
        }
    }

    #[test]
    fn projection_depth_is_deterministic_and_prefix_monotone() {
        let mut rng = RngStream::new(3);
        let data = random_cloud(&mut rng, 80, 1.0);
        let v = [0.8, -0.3];
        let a = projection_depth(&data, &v, 300, 7).unwrap();
        let b = projection_depth(&data, &v, 300, 7).unwrap();
        assert_eq!(a, b);
        // same seed, more directions: the max deviation can only grow
        let c = projection_depth(&data, &v, 1000, 7).unwrap();
        assert!(c <= a);
    }

    #[test]
    fn projection_depth_near_one_at_projected_median_of_a_line() {
        let mut rng = RngStream::new(5);
        let ts: Vec<f64> = (0..41).map(|_| rng.next_normal() * 2.0).collect();
        let data = DataSet::from_rows(ts.iter().map(|&t| vec![t, 0.0]).collect()).unwrap();
        let med = median_univariate(&Sample1D::new(ts).unwrap());
        let d = projection_depth(&data, &[med, 0.0], 500, 11).unwrap();
        assert!(d > 1.0 - 1e-12 && d <= 1.0, "depth {d}");
    }

    #[test]
    fn projection_depth_flags_fully_degenerate_data() {
        let data = DataSet::from_rows(vec![vec![1.0, 2.0]; 6]).unwrap();
        assert!(matches!(
            projection_depth(&data, &[1.0, 2.0], 100, 1),
            Err(Error::AllDirectionsDegenerate)
        ));
    }

    // ---- rigid-motion invariance across the suite ----

    #[test]
    fn depths_are_invariant_under_rigid_motions() {
        let mut rng = RngStream::new(1234);
        let data = random_cloud(&mut rng, 30, 1.5);
        let v = [0.3, 0.6];
        let theta = 0.83f64;
        let shift = [2.5, -4.0];
        let (s, c) = theta.sin_cos();
        let mv = |p: &[f64]| vec![c * p[0] - s * p[1] + shift[0], s * p[0] + c * p[1] + shift[1]];
        let moved = DataSet::from_rows(data.rows().map(|r| mv(r)).collect()).unwrap();
        let vm = mv(&v);

        assert!((spatial_depth(&data, &v).unwrap() - spatial_depth(&moved, &vm).unwrap()).abs() < 1e-9);
        assert!((tukey_depth_2d(&data, &v).unwrap() - tukey_depth_2d(&moved, &vm).unwrap()).abs() < 1e-9);
        assert!(
            (simplicial_depth_2d(&data, &v).unwrap() - simplicial_depth_2d(&moved, &vm).unwrap())
                .abs()
                < 1e-9
        );
    }

    // ---- reports and fields ----

    #[test]
    fn depth_report_scores_queries_and_weighted_centres() {
        let sq = square_corners();
        let center = center_at(&sq, &[1.0, 1.0]);
        let queries =
            DataSet::from_rows(vec![vec![1.0, 1.0], vec![0.0, 0.0], vec![4.0, 4.0]]).unwrap();
        let report = depth_report(
            &sq,
            &queries,
            &[DepthMethod::Mrd, DepthMethod::Spatial],
            &center,
        )
        .unwrap();
        assert_eq!(report.methods, vec!["mrd", "spatial"]);
        assert_eq!(report.depths[0][0], 1.0);
        assert!(report.depths[0][1] < 1.0);
        // corner depths are all equal, so the weighted centre is the mean
        assert!(euclid(&report.centres[0], &[1.0, 1.0]) < 1e-12);
    }

    #[test]
    fn grid_axes_handle_degenerate_resolutions() {
        let spec = GridSpec::new(0.0, 4.0, -1.0, 1.0, 1, 1).unwrap();
        assert_eq!(spec.xs(), vec![2.0]);
        assert_eq!(spec.ys(), vec![0.0]);
        let spec = GridSpec::new(0.0, 3.0, 0.0, 3.0, 4, 2).unwrap();
        assert_eq!(spec.xs(), vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(spec.ys(), vec![0.0, 3.0]);
        assert!(GridSpec::new(0.0, 1.0, 0.0, 1.0, 0, 3).is_err());
        assert!(GridSpec::new(2.0, 1.0, 0.0, 1.0, 3, 3).is_err());
    }

    #[test]
    fn depth_field_evaluates_all_layers_on_a_single_node() {
        let sq = square_corners();
        let center = center_at(&sq, &[1.0, 1.0]);
        let spec = GridSpec::new(1.0, 1.0, 1.0, 1.0, 1, 1).unwrap();
        let field = depth_field(
            &sq,
            &[DepthMethod::Mrd, DepthMethod::Tukey2d],
            &spec,
            &center,
        )
        .unwrap();
        assert_eq!(field.xs.len(), 1);
        assert_eq!(field.layer("g").unwrap()[0], std::f64::consts::SQRT_2);
        assert_eq!(field.layer("h").unwrap()[0], 1.0);
        assert_eq!(field.layer("mrd").unwrap()[0], 1.0);
        assert_eq!(field.layer("tukey2d").unwrap()[0], 0.5);
        assert!(field.notes.is_empty());
    }

    #[test]
    fn depth_field_turns_method_failures_into_sentinel_layers() {
        // perfectly collinear data: covariance is singular, projection MAD
        // vanishes off-line, yet g/h and the other methods still score
        let line = DataSet::from_rows((0..9).map(|i| vec![i as f64, 0.0]).collect()).unwrap();
        let center = radial_center(&line, 1e-9).unwrap();
        let spec = GridSpec::from_data(&line, 5, 3, 0.1).unwrap();
        let field = depth_field(
            &line,
            &[
                DepthMethod::Mahalanobis,
                DepthMethod::Spatial,
                DepthMethod::Projection { n_dirs: 50, seed: 4 },
            ],
            &spec,
            &center,
        )
        .unwrap();
        assert!(field.layer("mahalanobis").unwrap().iter().all(|x| x.is_nan()));
        assert!(field.notes.iter().any(|n| n.contains("singular-covariance")));
        assert!(field.layer("spatial").unwrap().iter().all(|x| x.is_finite()));
        // projection survives: directions with a component along the line
        // have positive MAD, so the fit keeps them
        assert!(field.layer("projection").unwrap().iter().all(|x| x.is_finite()));
        let g = field.layer("g").unwrap();
        assert_eq!(g.len(), 15);
        assert!(g.iter().all(|x| x.is_finite()));
    }

    #[test]
    fn depth_field_row_major_layout_matches_node_order() {
        let sq = square_corners();
        let center = center_at(&sq, &[1.0, 1.0]);
        let spec = GridSpec::new(0.0, 2.0, 0.0, 2.0, 3, 2).unwrap();
        let field = depth_field(&sq, &[], &spec, &center).unwrap();
        let g = field.layer("g").unwrap();
        assert_eq!(g.len(), 6);
        // node (ix=1, iy=0) is the bottom edge midpoint (1,0): distances
        // {1,1,√5,√5} so G = 1
        assert_eq!(g[1], 1.0);
        // node (ix=1, iy=1) is (1,2), top edge midpoint, also G = 1
        assert_eq!(g[3 + 1], 1.0);
    }
}
