//! Separating-axis overlap test for oriented squares.

use super::{OrientedSquare, Point2};

/// Projected interpenetration (cm) below which two squares count as touching.
pub const OVERLAP_TOLERANCE: f64 = 1e-9;

/// Smallest projected interpenetration over the four edge normals.
///
/// Positive means the squares overlap by that much on every axis; zero or
/// negative means some axis separates them (negative is the gap width).
pub fn overlap_margin(a: &OrientedSquare, b: &OrientedSquare) -> f64 {
    let ca = a.corners();
    let cb = b.corners();
    let [a0, a1] = a.axes();
    let [b0, b1] = b.axes();
    [a0, a1, b0, b1]
        .into_iter()
        .map(|axis| {
            let (amin, amax) = project(&ca, axis);
            let (bmin, bmax) = project(&cb, axis);
            (amax - bmin).min(bmax - amin)
        })
        .fold(f64::INFINITY, f64::min)
}

/// True when the two squares share a region of positive area.
///
/// Contact along an edge or at a corner is not an overlap.
pub fn squares_overlap(a: &OrientedSquare, b: &OrientedSquare) -> bool {
    let d = a.center() - b.center();
    let reach = a.circumradius() + b.circumradius();
    if d.dot(d) >= reach * reach {
        return false;
    }
    overlap_margin(a, b) > OVERLAP_TOLERANCE
}

fn project(corners: &[Point2; 4], axis: Point2) -> (f64, f64) {
    corners
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), c| {
            let p = c.dot(axis);
            (lo.min(p), hi.max(p))
        })
}
