//! Monotone-chain convex hull and shoelace area.

use std::cmp::Ordering;

use serde::Serialize;

use super::Point2;
use crate::error::{Error, Result};

/// Simple polygon with vertices in counter-clockwise order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Polygon {
    vertices: Vec<Point2>,
}

impl Polygon {
    /// Wraps an ordered vertex list. Clockwise input is reversed.
    pub fn new(mut vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::degenerate(format!(
                "polygon needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::domain("polygon vertex is not finite"));
        }
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Point-in-polygon for convex polygons: `p` is inside when it lies on the
    /// left of (or within `tol` of) every edge.
    pub fn contains_convex(&self, p: Point2, tol: f64) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let e = b - a;
            e.cross(p - a) >= -tol * e.norm()
        })
    }
}

fn signed_area(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    0.5 * (0..n)
        .map(|i| vertices[i].cross(vertices[(i + 1) % n]))
        .sum::<f64>()
}

/// Shoelace area of a simple polygon.
pub fn polygon_area(p: &Polygon) -> Result<f64> {
    let area = signed_area(p.vertices()).abs();
    if area > 0.0 {
        Ok(area)
    } else {
        Err(Error::domain("polygon has zero area"))
    }
}

fn turn(o: Point2, a: Point2, b: Point2) -> f64 {
    (a - o).cross(b - o)
}

/// Convex hull in O(n log n). Output is counter-clockwise with collinear
/// points removed.
pub fn convex_hull(points: &[Point2]) -> Result<Polygon> {
    if points.len() < 3 {
        return Err(Error::degenerate(format!(
            "convex hull needs at least 3 points, got {}",
            points.len()
        )));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::domain("hull input point is not finite"));
    }
    let mut pts = points.to_vec();
    pts.sort_unstable_by(|a, b| {
        a.x.partial_cmp(&b.x)
            .unwrap_or(Ordering::Equal)
            .then(a.y.partial_cmp(&b.y).unwrap_or(Ordering::Equal))
    });
    pts.dedup();

    let mut hull: Vec<Point2> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && turn(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();

    if hull.len() < 3 {
        return Err(Error::degenerate("all points are collinear"));
    }
    Ok(Polygon { vertices: hull })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::{FRAC_PI_3, PI};

    fn p(x: f64, y: f64) -> Point2 {
        Point2::new(x, y)
    }

    fn hexagon(edge: f64) -> Vec<Point2> {
        (0..6)
            .map(|k| Point2::from_polar(edge, k as f64 * FRAC_PI_3))
            .collect()
    }

    #[test]
    fn interior_point_dropped() {
        let h = convex_hull(&[p(0., 0.), p(1., 0.), p(1., 1.), p(0., 1.), p(0.5, 0.5)]).unwrap();
        assert_eq!(h.len(), 4);
        assert!((polygon_area(&h).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn convex_input_kept() {
        let hex = hexagon(1.0);
        let h = convex_hull(&hex).unwrap();
        assert_eq!(h.len(), 6);
        for v in &hex {
            assert!(h.vertices().iter().any(|w| (*w - *v).norm() < 1e-12));
        }
    }

    #[test]
    fn collinear_points_removed_from_output() {
        let pts = [
            p(0., 0.),
            p(1., 0.),
            p(2., 0.),
            p(2., 2.),
            p(1., 2.),
            p(0., 2.),
            p(0., 1.),
        ];
        let h = convex_hull(&pts).unwrap();
        assert_eq!(h.len(), 4);
    }

    #[test]
    fn output_is_ccw() {
        let h = convex_hull(&hexagon(2.0)).unwrap();
        assert!(signed_area(h.vertices()) > 0.0);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            convex_hull(&[p(0., 0.), p(1., 1.)]),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            convex_hull(&[p(0., 0.), p(1., 1.), p(2., 2.), p(3., 3.)]),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(
            convex_hull(&[p(1., 1.), p(1., 1.), p(1., 1.)]),
            Err(Error::Degenerate(_))
        ));
        assert!(Polygon::new(vec![p(0., 0.), p(1., 0.)]).is_err());
        let flat = Polygon::new(vec![p(0., 0.), p(1., 0.), p(2., 0.)]).unwrap();
        assert!(polygon_area(&flat).is_err());
    }

    #[test]
    fn shoelace_examples() {
        let unit = Polygon::new(vec![p(0., 0.), p(1., 0.), p(1., 1.), p(0., 1.)]).unwrap();
        assert_eq!(polygon_area(&unit).unwrap(), 1.0);
        let hex = Polygon::new(hexagon(1.0)).unwrap();
        assert!((polygon_area(&hex).unwrap() - 2.598_076_2).abs() < 1e-7);
        assert!(
            (polygon_area(&hex).unwrap() - crate::model::hexagon_area(1.0).unwrap()).abs() < 1e-12
        );
        let tri = Polygon::new(vec![p(0., 0.), p(4., 0.), p(0., 3.)]).unwrap();
        assert_eq!(polygon_area(&tri).unwrap(), 6.0);
        let cw = Polygon::new(vec![p(0., 3.), p(4., 0.), p(0., 0.)]).unwrap();
        assert_eq!(polygon_area(&cw).unwrap(), 6.0);
    }

    #[test]
    fn random_disk_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pts: Vec<Point2> = (0..1000)
            .map(|_| {
                let r = rng.random::<f64>().sqrt();
                Point2::from_polar(r, rng.random_range(0.0..2.0 * PI))
            })
            .collect();
        let h = convex_hull(&pts).unwrap();
        let area = polygon_area(&h).unwrap();
        assert!(area < PI && area > 0.95 * PI, "hull area {area}");
        assert!(pts.iter().all(|q| h.contains_convex(*q, 1e-9)));
    }

    #[test]
    fn large_input() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let pts: Vec<Point2> = (0..100_000)
            .map(|_| p(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .collect();
        let area = polygon_area(&convex_hull(&pts).unwrap()).unwrap();
        assert!(area > 3.99 && area <= 4.0);
    }

    fn points() -> impl Strategy<Value = Vec<Point2>> {
        prop::collection::vec((-100f64..100.0, -100f64..100.0), 3..60)
            .prop_map(|v| v.into_iter().map(|(x, y)| p(x, y)).collect())
    }

    proptest! {
        #[test]
        fn hull_contains_inputs(pts in points()) {
            if let Ok(h) = convex_hull(&pts) {
                for q in &pts {
                    prop_assert!(h.contains_convex(*q, 1e-9));
                }
                let n = h.len();
                for i in 0..n {
                    let t = turn(h.vertices()[i], h.vertices()[(i + 1) % n], h.vertices()[(i + 2) % n]);
                    prop_assert!(t > 0.0);
                }
            }
        }

        #[test]
        fn superset_hull_is_not_smaller(pts in points(), extra in points()) {
            if let Ok(small) = convex_hull(&pts) {
                let mut all = pts.clone();
                all.extend(extra);
                let big = convex_hull(&all).unwrap();
                let (a_small, a_big) = (polygon_area(&small).unwrap(), polygon_area(&big).unwrap());
                prop_assert!(a_big >= a_small * (1.0 - 1e-12));
            }
        }
    }
}
