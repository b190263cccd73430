//! Long/short axis measurement of a point cloud.
//!
//! Emulates someone running a tape measure along the long and short axis of
//! an oval blob of pieces. The axes are the principal components of the
//! points, not the coordinate axes.

use serde::Serialize;

use super::Point2;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpreadExtents {
    pub major: f64,
    pub minor: f64,
    /// Unit vector along the major axis.
    pub major_axis_direction: Point2,
}

/// Peak-to-peak extents along the principal axes, each widened by `2 * pad`.
pub fn principal_extents(points: &[Point2], pad: f64) -> Result<SpreadExtents> {
    if points.len() < 2 {
        return Err(Error::degenerate(
            "need at least two points to measure extents",
        ));
    }
    if !(pad.is_finite() && pad >= 0.0) {
        return Err(Error::domain(format!(
            "pad must be non-negative, got {pad}"
        )));
    }
    let n = points.len() as f64;
    let mean = points
        .iter()
        .fold(Point2::ORIGIN, |acc, p| acc + *p)
        .scale(1.0 / n);
    let (mut sxx, mut syy, mut sxy) = (0.0, 0.0, 0.0);
    for p in points {
        let d = *p - mean;
        sxx += d.x * d.x;
        syy += d.y * d.y;
        sxy += d.x * d.y;
    }
    // Eigenvector angle of the 2x2 covariance; atan2(0, 0) = 0 picks the
    // x axis for isotropic clouds.
    let theta = 0.5 * (2.0 * sxy).atan2(sxx - syy);
    let u = Point2::from_polar(1.0, theta);
    let v = Point2::new(-u.y, u.x);

    let span = |axis: Point2| {
        let (lo, hi) = points
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                let t = (*p - mean).dot(axis);
                (lo.min(t), hi.max(t))
            });
        hi - lo
    };
    let (su, sv) = (span(u), span(v));
    if su.max(sv) <= 0.0 {
        return Err(Error::degenerate("all points coincide"));
    }
    let (major, minor, dir) = if su >= sv { (su, sv, u) } else { (sv, su, v) };
    // spans below this fraction of the major span are rounding noise
    let minor = if minor <= 1e-12 * major { 0.0 } else { minor };
    let (major, minor) = (major + 2.0 * pad, minor + 2.0 * pad);
    if minor <= 0.0 {
        return Err(Error::degenerate("points are collinear and pad is zero"));
    }
    Ok(SpreadExtents {
        major,
        minor,
        major_axis_direction: dir,
    })
}
