//! Multivariate median radius, geometric median, and the radial center.
//!
//! `g_multivariate` generalizes the univariate median radius: the k-th
//! smallest Euclidean distance from v to the rows, k = ⌈n/2⌉. Two reference
//! centers are first-class and deliberately distinct: the geometric median
//! (minimizer of the *sum* of distances, computed by a damped Weiszfeld
//! iteration) and the radial center (minimizer of G itself, computed by a
//! multi-start candidate search plus coordinate descent). They coincide for
//! symmetric clouds but not in general, and the depth layer defaults to the
//! radial center because only the argmin of G makes the depth maximal at its
//! own reference point.
//!
//! Empirical G need not be convex (separated clusters), so the radial center
//! is a heuristic minimizer. What *is* guaranteed — and what downstream code
//! relies on — is dominance: the returned g_at_center never exceeds G at any
//! data row, the coordinate median, or the geometric median.

use crate::error::{Error, Result};
use crate::radial::{median_univariate, Sample1D};

/// Immutable n×d observation matrix (row-major), all entries finite.
#[derive(Debug, Clone)]
pub struct DataSet {
    data: Vec<f64>,
    n: usize,
    d: usize,
}

impl DataSet {
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptySample);
        }
        let d = rows[0].len();
        if d == 0 {
            return Err(Error::InvalidParameter("rows must have dimension ≥ 1".into()));
        }
        let mut data = Vec::with_capacity(rows.len() * d);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: row.len(),
                });
            }
            if let Some(bad) = row.iter().find(|x| !x.is_finite()) {
                return Err(Error::NonFiniteInput {
                    context: format!("row {i} contains {bad}"),
                });
            }
            data.extend_from_slice(row);
        }
        let n = rows.len();
        Ok(Self { data, n, d })
    }

    pub fn from_flat(data: Vec<f64>, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParameter("dimension must be ≥ 1".into()));
        }
        if data.is_empty() {
            return Err(Error::EmptySample);
        }
        if data.len() % d != 0 {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: data.len() % d,
            });
        }
        if let Some(bad) = data.iter().find(|x| !x.is_finite()) {
            return Err(Error::NonFiniteInput {
                context: format!("entry {bad}"),
            });
        }
        let n = data.len() / d;
        Ok(Self { data, n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks_exact(self.d)
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.data[i * self.d + j]).collect()
    }
}

/// Euclidean distance between two points of equal dimension.
pub(crate) fn euclid(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn check_query(data: &DataSet, v: &[f64]) -> Result<()> {
    if v.len() != data.d() {
        return Err(Error::DimensionMismatch {
            expected: data.d(),
            got: v.len(),
        });
    }
    if let Some(bad) = v.iter().find(|x| !x.is_finite()) {
        return Err(Error::NonFiniteInput {
            context: format!("query point contains {bad}"),
        });
    }
    Ok(())
}

/// Median radius G(v): k-th smallest Euclidean distance ‖xᵢ − v‖, k = ⌈n/2⌉.
pub fn g_multivariate(data: &DataSet, v: &[f64]) -> Result<f64> {
    check_query(data, v)?;
    let mut dist: Vec<f64> = data.rows().map(|row| euclid(row, v)).collect();
    let k = data.n().div_ceil(2);
    let (_, kth, _) = dist.select_nth_unstable_by(k - 1, f64::total_cmp);
    Ok(*kth)
}

/// How a [`CenterEstimate`] was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CenterMethod {
    CoordinateMedian,
    GeometricMedian,
    RadialArgmin,
}

impl CenterMethod {
    pub fn tag(self) -> &'static str {
        match self {
            CenterMethod::CoordinateMedian => "coordinate-median",
            CenterMethod::GeometricMedian => "geometric-median",
            CenterMethod::RadialArgmin => "radial-argmin",
        }
    }
}

/// A location estimate together with its provenance and achieved G value.
#[derive(Debug, Clone)]
pub struct CenterEstimate {
    pub location: Vec<f64>,
    pub method: CenterMethod,
    pub g_at_center: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl CenterEstimate {
    /// Wrap an explicit location, evaluating G there. Used when a caller
    /// supplies its own center (tests, CLI overrides).
    pub fn evaluate_at(data: &DataSet, location: Vec<f64>, method: CenterMethod) -> Result<Self> {
        let g_at_center = g_multivariate(data, &location)?;
        Ok(Self {
            location,
            method,
            g_at_center,
            iterations: 0,
            converged: true,
        })
    }
}

/// Per-coordinate univariate median (averaged-middle convention).
pub fn coordinate_median(data: &DataSet) -> Vec<f64> {
    (0..data.d())
        .map(|j| {
            let col = Sample1D::new(data.column(j)).expect("DataSet rows are finite and nonempty");
            median_univariate(&col)
        })
        .collect()
}

/// Geometric median by damped Weiszfeld iteration (Vardi–Zhang step).
///
/// Starts at the coordinate median. Points within `tol` of the current
/// iterate are treated as coincident: their unit pulls are removed from the
/// weighted average and the iterate only moves if the resultant pull of the
/// remaining points exceeds the coincident mass (the standard optimality
/// condition at a data point). Stops when the step length drops below `tol`
/// or after `max_iter` iterations; `converged` records which.
pub fn geometric_median(data: &DataSet, tol: f64, max_iter: usize) -> Result<CenterEstimate> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "geometric median tolerance must be positive, got {tol}"
        )));
    }
    let d = data.d();
    let mut v = coordinate_median(data);
    let mut iterations = 0;
    let mut converged = false;

    while iterations < max_iter {
        iterations += 1;
        // Weighted average and resultant pull over non-coincident points.
        let mut weight_sum = 0.0;
        let mut weighted = vec![0.0; d];
        let mut pull = vec![0.0; d];
        let mut coincident = 0usize;
        for row in data.rows() {
            let dist = euclid(row, &v);
            if dist < tol {
                coincident += 1;
                continue;
            }
            let w = 1.0 / dist;
            weight_sum += w;
            for j in 0..d {
                weighted[j] += row[j] * w;
                pull[j] += (row[j] - v[j]) * w;
            }
        }
        if coincident == data.n() {
            // All mass at the iterate: it is the geometric median.
            converged = true;
            break;
        }
        let t: Vec<f64> = weighted.iter().map(|x| x / weight_sum).collect();
        let next = if coincident == 0 {
            t
        } else {
            let r = pull.iter().map(|x| x * x).sum::<f64>().sqrt();
            let eta = coincident as f64;
            if r <= eta {
                // The coincident mass outweighs the resultant pull: the
                // current iterate is optimal.
                converged = true;
                break;
            }
            let gamma = (eta / r).min(1.0);
            (0..d).map(|j| (1.0 - gamma) * t[j] + gamma * v[j]).collect()
        };
        let step = euclid(&next, &v);
        v = next;
        if step < tol {
            converged = true;
            break;
        }
    }

    let g_at_center = g_multivariate(data, &v)?;
    Ok(CenterEstimate {
        location: v,
        method: CenterMethod::GeometricMedian,
        g_at_center,
        iterations,
        converged,
    })
}

/// Per-axis data range, used to size the initial descent step.
fn max_axis_range(data: &DataSet) -> f64 {
    (0..data.d())
        .map(|j| {
            let col = data.column(j);
            let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
            for x in col {
                lo = lo.min(x);
                hi = hi.max(x);
            }
            hi - lo
        })
        .fold(0.0, f64::max)
}

/// Derivative-free coordinate descent on v ↦ G(v) with per-axis step
/// halving. Only strict improvements are accepted, so the result never
/// exceeds G(start). Returns (location, g, evaluations).
fn coordinate_descent(
    data: &DataSet,
    start: &[f64],
    start_g: f64,
    initial_step: f64,
    tol: f64,
    max_evals: usize,
) -> (Vec<f64>, f64, usize) {
    let d = data.d();
    let mut v = start.to_vec();
    let mut g = start_g;
    let mut evals = 0usize;
    let mut step = initial_step;
    while step >= tol && evals < max_evals {
        let mut improved = true;
        while improved && evals < max_evals {
            improved = false;
            for axis in 0..d {
                for dir in [1.0, -1.0] {
                    let mut w = v.clone();
                    w[axis] += dir * step;
                    let gw = g_multivariate(data, &w).expect("perturbed point stays finite");
                    evals += 1;
                    if gw < g {
                        v = w;
                        g = gw;
                        improved = true;
                    }
                    if evals >= max_evals {
                        break;
                    }
                }
            }
        }
        step *= 0.5;
    }
    (v, g, evals)
}

/// Heuristic minimizer of v ↦ G(v).
///
/// Evaluates G at every data row, the coordinate median, and the geometric
/// median; runs coordinate descent from the best data row, the coordinate
/// median, and the geometric median; returns the best point found. Ties are
/// broken by candidate order (rows by index, then coordinate median, then
/// geometric median), so the result does not depend on evaluation order.
pub fn radial_center(data: &DataSet, tol: f64) -> Result<CenterEstimate> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "radial center tolerance must be positive, got {tol}"
        )));
    }
    let cm = coordinate_median(data);
    let gm = geometric_median(data, 1e-10, 1000)?;

    #[cfg(feature = "parallel")]
    use rayon::iter::ParallelIterator;
    let row_g: Vec<f64> = crate::iter_maybe_parallel!(0..data.n())
        .map(|i| g_multivariate(data, data.row(i)).expect("data rows are valid queries"))
        .collect();
    let mut best_row = 0usize;
    for (i, &g) in row_g.iter().enumerate() {
        if g < row_g[best_row] {
            best_row = i;
        }
    }

    let initial_step = max_axis_range(data) / 4.0;
    let starts: [(Vec<f64>, f64); 3] = [
        (data.row(best_row).to_vec(), row_g[best_row]),
        (cm.clone(), g_multivariate(data, &cm)?),
        (gm.location.clone(), gm.g_at_center),
    ];

    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut total_evals = 0usize;
    let max_evals_per_start = 20_000usize;
    let mut hit_cap = false;
    for (start, start_g) in &starts {
        if initial_step == 0.0 {
            // All points identical along every axis: any candidate is optimal.
            if best.is_none() || *start_g < best.as_ref().unwrap().1 {
                best = Some((start.clone(), *start_g));
            }
            continue;
        }
        let (loc, g, evals) =
            coordinate_descent(data, start, *start_g, initial_step, tol, max_evals_per_start);
        total_evals += evals;
        hit_cap |= evals >= max_evals_per_start;
        if best.is_none() || g < best.as_ref().unwrap().1 {
            best = Some((loc, g));
        }
    }
    let (location, g_at_center) = best.expect("at least one start");

    Ok(CenterEstimate {
        location,
        method: CenterMethod::RadialArgmin,
        g_at_center,
        iterations: total_evals,
        converged: !hit_cap,
    })
}

/// Central scale: G evaluated at the given center. This is the multivariate
/// analogue of the median absolute deviation.
pub fn central_scale(data: &DataSet, center: &CenterEstimate) -> Result<f64> {
    g_multivariate(data, &center.location)
}

/// Standardized radius H(v) = G(v) / G(center).
pub fn h_multivariate(data: &DataSet, v: &[f64], center: &CenterEstimate) -> Result<f64> {
    let scale = central_scale(data, center)?;
    if scale == 0.0 {
        return Err(Error::DegenerateScale);
    }
    Ok(g_multivariate(data, v)? / scale)
}

// ======================================================================
// tests
// ======================================================================

#[cfg(test)]
mod tests {
    use super::*;
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

    fn random_cloud(rng: &mut RngStream, n: usize, d: usize, spread: f64) -> DataSet {
        DataSet::from_rows(
            (0..n)
                .map(|_| (0..d).map(|_| rng.next_normal() * spread).collect())
                .collect(),
        )
        .unwrap()
    }

    /// Apply a random 2D rotation + translation to every row.
    fn rigid_motion_2d(rng: &mut RngStream) -> (f64, [f64; 2]) {
        let theta = rng.next_uniform() * std::f64::consts::TAU;
        let shift = [rng.next_normal() * 3.0, rng.next_normal() * 3.0];
        (theta, shift)
    }

    fn apply_2d(theta: f64, shift: &[f64; 2], p: &[f64]) -> Vec<f64> {
        let (s, c) = theta.sin_cos();
        vec![
            c * p[0] - s * p[1] + shift[0],
            s * p[0] + c * p[1] + shift[1],
        ]
    }

    #[test]
    fn dataset_construction_validates() {
        assert!(matches!(DataSet::from_rows(vec![]), Err(Error::EmptySample)));
        assert!(matches!(
            DataSet::from_rows(vec![vec![1.0, 2.0], vec![3.0]]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            DataSet::from_rows(vec![vec![f64::NAN]]),
            Err(Error::NonFiniteInput { .. })
        ));
        assert!(DataSet::from_flat(vec![1.0, 2.0, 3.0], 2).is_err());
        let ds = DataSet::from_flat(vec![1.0, 2.0, 3.0, 4.0], 2).unwrap();
        assert_eq!(ds.n(), 2);
        assert_eq!(ds.row(1), &[3.0, 4.0]);
        assert_eq!(ds.column(1), vec![2.0, 4.0]);
    }

    #[test]
    fn g_multivariate_matches_hand_values() {
        let sq = square_corners();
        // all four distances from the center equal √2; second smallest
        let g_center = g_multivariate(&sq, &[1.0, 1.0]).unwrap();
        assert!((g_center - std::f64::consts::SQRT_2).abs() < 1e-15);
        // distances from a corner: {0, 2, 2, 2√2}; second smallest
        assert_eq!(g_multivariate(&sq, &[0.0, 0.0]).unwrap(), 2.0);
        let single = DataSet::from_rows(vec![vec![4.0, -1.0]]).unwrap();
        assert_eq!(g_multivariate(&single, &[4.0, -1.0]).unwrap(), 0.0);
    }

    #[test]
    fn g_multivariate_rejects_bad_queries() {
        let sq = square_corners();
        assert!(matches!(
            g_multivariate(&sq, &[1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            g_multivariate(&sq, &[f64::NAN, 0.0]),
            Err(Error::NonFiniteInput { .. })
        ));
    }

    #[test]
    fn coordinate_median_matches_hand_values() {
        assert_eq!(coordinate_median(&square_corners()), vec![1.0, 1.0]);
        let single = DataSet::from_rows(vec![vec![3.0, -2.0]]).unwrap();
        assert_eq!(coordinate_median(&single), vec![3.0, -2.0]);
        let tri =
            DataSet::from_rows(vec![vec![0.0, 0.0], vec![10.0, 0.0], vec![0.0, 10.0]]).unwrap();
        assert_eq!(coordinate_median(&tri), vec![0.0, 0.0]);
    }

    #[test]
    fn geometric_median_finds_symmetric_and_majority_points() {
        let gm = geometric_median(&square_corners(), 1e-10, 1000).unwrap();
        assert!(gm.converged);
        assert!(euclid(&gm.location, &[1.0, 1.0]) < 1e-9);

        // Majority mass at a point dominates the sum of unit pulls.
        let heavy = DataSet::from_rows(vec![
            vec![0.0, 0.0],
            vec![0.0, 0.0],
            vec![0.0, 0.0],
            vec![9.0, 9.0],
        ])
        .unwrap();
        let gm = geometric_median(&heavy, 1e-10, 1000).unwrap();
        assert!(gm.converged);
        assert!(euclid(&gm.location, &[0.0, 0.0]) < 1e-9);

        let line =
            DataSet::from_rows(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![2.0, 0.0]]).unwrap();
        let gm = geometric_median(&line, 1e-10, 1000).unwrap();
        assert!(euclid(&gm.location, &[1.0, 0.0]) < 1e-9);
    }

    #[test]
    fn geometric_median_is_locally_optimal_on_a_probe_grid() {
        let mut rng = RngStream::new(7);
        let data = random_cloud(&mut rng, 60, 2, 1.5);
        let gm = geometric_median(&data, 1e-10, 1000).unwrap();
        let objective = |v: &[f64]| data.rows().map(|r| euclid(r, v)).sum::<f64>();
        let at_gm = objective(&gm.location);
        for dx in -2i32..=2 {
            for dy in -2i32..=2 {
                let probe = vec![
                    gm.location[0] + f64::from(dx) * 1e-3,
                    gm.location[1] + f64::from(dy) * 1e-3,
                ];
                assert!(objective(&probe) >= at_gm - 1e-9);
            }
        }
    }

    #[test]
    fn radial_center_dominates_every_candidate() {
        // The square is a case where the G-minimizer is NOT the symmetric
        // center: with k = ⌈4/2⌉ = 2, an edge midpoint achieves G = 1 while
        // (1,1) gives √2. The contract is dominance, not a specific point.
        let sq = square_corners();
        let rc = radial_center(&sq, 1e-8).unwrap();
        let g_cm = g_multivariate(&sq, &coordinate_median(&sq)).unwrap();
        assert!(rc.g_at_center <= g_cm + 1e-15);
        for row in sq.rows() {
            assert!(rc.g_at_center <= g_multivariate(&sq, row).unwrap());
        }
        assert!(rc.g_at_center <= 1.0 + 1e-9, "g = {}", rc.g_at_center);
    }

    #[test]
    fn radial_center_finds_a_zero_radius_majority_point() {
        let mut rows = vec![vec![0.0, 0.0]; 5];
        rows.extend(vec![vec![100.0, 0.0]; 4]);
        let data = DataSet::from_rows(rows).unwrap();
        let rc = radial_center(&data, 1e-8).unwrap();
        // ⌈9/2⌉ = 5 points sit at the origin, so G((0,0)) = 0 is global.
        assert_eq!(rc.g_at_center, 0.0);
        assert_eq!(rc.location, vec![0.0, 0.0]);
    }

    #[test]
    fn radial_center_beats_the_coordinate_median_on_skewed_data() {
        let mut rng = RngStream::new(40);
        // 1D-embedded exponential-like sample
        let rows: Vec<Vec<f64>> = (0..151)
            .map(|_| vec![-(1.0 - rng.next_uniform()).ln(), 0.0])
            .collect();
        let data = DataSet::from_rows(rows).unwrap();
        let rc = radial_center(&data, 1e-8).unwrap();
        let g_cm = g_multivariate(&data, &coordinate_median(&data)).unwrap();
        assert!(rc.g_at_center <= g_cm + 1e-15);
    }

    #[test]
    fn central_scale_and_h_compose() {
        let sq = square_corners();
        let center =
            CenterEstimate::evaluate_at(&sq, vec![1.0, 1.0], CenterMethod::GeometricMedian)
                .unwrap();
        let scale = central_scale(&sq, &center).unwrap();
        assert!((scale - std::f64::consts::SQRT_2).abs() < 1e-15);
        let h = h_multivariate(&sq, &[0.0, 0.0], &center).unwrap();
        assert!((h - std::f64::consts::SQRT_2).abs() < 1e-15);
        assert_eq!(h_multivariate(&sq, &[1.0, 1.0], &center).unwrap(), 1.0);
    }

    #[test]
    fn h_raises_on_zero_central_scale() {
        let data = DataSet::from_rows(vec![vec![0.0, 0.0]; 3]).unwrap();
        let center =
            CenterEstimate::evaluate_at(&data, vec![0.0, 0.0], CenterMethod::RadialArgmin)
                .unwrap();
        assert!(matches!(
            h_multivariate(&data, &[1.0, 1.0], &center),
            Err(Error::DegenerateScale)
        ));
    }

    #[test]
    fn h_at_radial_center_is_minimal_up_to_tolerance() {
        let mut rng = RngStream::new(88);
        let data = random_cloud(&mut rng, 200, 2, 1.0);
        let rc = radial_center(&data, 1e-8).unwrap();
        for row in data.rows() {
            let h = h_multivariate(&data, row, &rc).unwrap();
            assert!(h >= 1.0 - 1e-9, "h = {h} below 1 at a data point");
        }
    }

    #[test]
    fn g_is_invariant_under_rigid_motions() {
        let mut rng = RngStream::new(123);
        for _ in 0..20 {
            let data = random_cloud(&mut rng, 40, 2, 2.0);
            let v: Vec<f64> = vec![rng.next_normal(), rng.next_normal()];
            let (theta, shift) = rigid_motion_2d(&mut rng);
            let moved = DataSet::from_rows(
                data.rows().map(|r| apply_2d(theta, &shift, r)).collect(),
            )
            .unwrap();
            let g0 = g_multivariate(&data, &v).unwrap();
            let g1 = g_multivariate(&moved, &apply_2d(theta, &shift, &v)).unwrap();
            assert!((g0 - g1).abs() < 1e-9, "{g0} vs {g1}");
        }
    }

    #[test]
    fn g_is_one_lipschitz_in_the_query() {
        let mut rng = RngStream::new(321);
        let data = random_cloud(&mut rng, 80, 3, 1.0);
        for _ in 0..200 {
            let v: Vec<f64> = (0..3).map(|_| rng.next_normal() * 2.0).collect();
            let w: Vec<f64> = (0..3).map(|_| rng.next_normal() * 2.0).collect();
            let gv = g_multivariate(&data, &v).unwrap();
            let gw = g_multivariate(&data, &w).unwrap();
            assert!((gv - gw).abs() <= euclid(&v, &w) + 1e-12);
        }
    }

    #[test]
    fn g_grows_at_infinity_by_the_triangle_bound() {
        let mut rng = RngStream::new(55);
        let data = random_cloud(&mut rng, 50, 2, 1.0);
        let max_norm = data
            .rows()
            .map(|r| euclid(r, &[0.0, 0.0]))
            .fold(0.0, f64::max);
        for scale in [10.0, 1e3, 1e6] {
            let v = vec![scale, scale];
            let norm_v = euclid(&v, &[0.0, 0.0]);
            let g = g_multivariate(&data, &v).unwrap();
            assert!(g >= norm_v - max_norm - 1e-9);
        }
    }

    #[test]
    fn radial_center_survives_half_contamination() {
        let mut rng = RngStream::new(77);
        let clean = random_cloud(&mut rng, 41, 2, 1.0);
        let diameter = {
            let mut best = 0.0f64;
            for i in 0..clean.n() {
                for j in (i + 1)..clean.n() {
                    best = best.max(euclid(clean.row(i), clean.row(j)));
                }
            }
            best
        };
        let clean_center = radial_center(&clean, 1e-8).unwrap();

        // Replace ⌊(n−1)/2⌋ points with far-away junk at distance ~1e6.
        let mut rows: Vec<Vec<f64>> = clean.rows().map(|r| r.to_vec()).collect();
        let corrupt = (clean.n() - 1) / 2;
        for (i, row) in rows.iter_mut().enumerate().take(corrupt) {
            let angle = i as f64;
            *row = vec![1e6 * angle.cos(), 1e6 * angle.sin()];
        }
        let dirty = DataSet::from_rows(rows).unwrap();
        let dirty_center = radial_center(&dirty, 1e-8).unwrap();
        assert!(
            (dirty_center.g_at_center - clean_center.g_at_center).abs() <= diameter,
            "contaminated g {} vs clean g {} (diameter {diameter})",
            dirty_center.g_at_center,
            clean_center.g_at_center
        );
    }
}
