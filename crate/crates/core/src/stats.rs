//! Rank correlation and depth-weighted summaries for the simulation reports.

use crate::error::{Error, Result};
use crate::geometry::DataSet;

/// Ranks 1..n with ties sharing their average rank.
pub fn average_ranks(values: &[f64]) -> Result<Vec<f64>> {
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFiniteInput {
            context: "ranked values".into(),
        });
    }
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        while j < n && values[order[j]] == values[order[i]] {
            j += 1;
        }
        // positions i..j (0-based) share the average of ranks i+1..j
        let shared = (i + 1 + j) as f64 / 2.0;
        for &idx in &order[i..j] {
            ranks[idx] = shared;
        }
        i = j;
    }
    Ok(ranks)
}

/// Spearman rank correlation: Pearson correlation of average ranks.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(Error::InsufficientPoints {
            need: 2,
            have: x.len(),
        });
    }
    let rx = average_ranks(x)?;
    let ry = average_ranks(y)?;
    let n = rx.len() as f64;
    let mx = rx.iter().sum::<f64>() / n;
    let my = ry.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (a, b) in rx.iter().zip(&ry) {
        let da = a - mx;
        let db = b - my;
        sxy += da * db;
        sxx += da * da;
        syy += db * db;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(Error::ConstantInput);
    }
    Ok(sxy / (sxx * syy).sqrt())
}

/// Depth-weighted centre Σ D(xᵢ)·xᵢ / Σ D(xᵢ) over the data rows.
pub fn depth_weighted_centre(data: &DataSet, depths: &[f64]) -> Result<Vec<f64>> {
    if depths.len() != data.n() {
        return Err(Error::LengthMismatch {
            left: data.n(),
            right: depths.len(),
        });
    }
    let mut total = 0.0;
    let mut centre = vec![0.0; data.d()];
    for (row, &w) in data.rows().zip(depths) {
        if !w.is_finite() || w < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "depth weights must be finite and ≥ 0, got {w}"
            )));
        }
        total += w;
        for (c, x) in centre.iter_mut().zip(row) {
            *c += w * x;
        }
    }
    if total == 0.0 {
        return Err(Error::ZeroTotalWeight);
    }
    for c in &mut centre {
        *c /= total;
    }
    Ok(centre)
}

/// Moment-based sample skewness g₁ = m₃ / m₂^{3/2}.
pub fn sample_skewness(values: &[f64]) -> Result<f64> {
    if values.len() < 2 {
        return Err(Error::InsufficientPoints {
            need: 2,
            have: values.len(),
        });
    }
    if values.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFiniteInput {
            context: "skewness input".into(),
        });
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let m2 = values.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    let m3 = values.iter().map(|x| (x - mean).powi(3)).sum::<f64>() / n;
    if m2 == 0.0 {
        return Err(Error::ConstantInput);
    }
    Ok(m3 / m2.powf(1.5))
}

// ======================================================================
// tests
// ======================================================================
