use serde::Serialize;

use super::layout::Layout;
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::{self, convex_hull, polygon_area, principal_extents, SpreadExtents};

/// What a tape measure and the convex hull say about one simulated spread.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimResult {
    pub hull_area: f64,
    pub extents: SpreadExtents,
    pub ellipse_area: f64,
    pub spread_ratio_hull: f64,
    pub spread_ratio_ellipse: f64,
    pub pieces: usize,
    pub seed: u64,
}

/// Measures a layout against the assembled area it came from. Uses piece
/// corners throughout, so no padding is added to the extents.
pub fn measure_layout(layout: &Layout, assembled_area: f64) -> Result<SimResult> {
    ensure_positive("assembled area", assembled_area)?;
    if layout.is_empty() {
        return Err(Error::domain("cannot measure an empty layout"));
    }
    let corners = layout.corners();
    let hull_area = polygon_area(&convex_hull(&corners)?)?;
    let extents = principal_extents(&corners, 0.0)?;
    let ellipse_area = geometry::ellipse_area(extents.major, extents.minor)?;
    Ok(SimResult {
        hull_area,
        extents,
        ellipse_area,
        spread_ratio_hull: hull_area / assembled_area,
        spread_ratio_ellipse: ellipse_area / assembled_area,
        pieces: layout.len(),
        seed: layout.provenance().seed,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub mean: f64,
    /// Sample standard deviation (n - 1); zero for a single value.
    pub stddev: f64,
    pub min: f64,
    pub max: f64,
}

impl Summary {
    pub fn of(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("no values to summarize"));
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let stddev = if values.len() > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        } else {
            0.0
        };
        let min = values.iter().copied().fold(f64::INFINITY, f64::min);
        let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Ok(Self {
            mean,
            stddev,
            min,
            max,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RatioStatistics {
    pub runs: usize,
    pub ellipse: Summary,
    pub hull: Summary,
}

pub fn ratio_statistics(results: &[SimResult]) -> Result<RatioStatistics> {
    if results.is_empty() {
        return Err(Error::domain("ratio statistics need at least one result"));
    }
    let ellipse: Vec<f64> = results.iter().map(|r| r.spread_ratio_ellipse).collect();
    let hull: Vec<f64> = results.iter().map(|r| r.spread_ratio_hull).collect();
    Ok(RatioStatistics {
        runs: results.len(),
        ellipse: Summary::of(&ellipse)?,
        hull: Summary::of(&hull)?,
    })
}
