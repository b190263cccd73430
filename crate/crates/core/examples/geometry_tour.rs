//! The geometric building blocks: square overlap, hulls, and measuring a
//! blob along its own long and short axes.

use std::f64::consts::FRAC_PI_4;

use jigsaw_spread::geometry::{
    convex_hull, ellipse_area, overlap_margin, polygon_area, principal_extents, squares_overlap,
    OrientedSquare, Point2,
};

fn main() -> jigsaw_spread::Result<()> {
    let a = OrientedSquare::axis_aligned(Point2::ORIGIN, 1.0)?;
    for (x, rot) in [(1.0, 0.0), (0.9, 0.0), (1.2, FRAC_PI_4), (1.3, FRAC_PI_4)] {
        let b = OrientedSquare::new(Point2::new(x, 0.0), 1.0, rot)?;
        println!(
            "unit square vs one at x = {x} rotated {:.0} deg: overlap {} (margin {:+.4})",
            rot.to_degrees(),
            squares_overlap(&a, &b),
            overlap_margin(&a, &b)
        );
    }

    // A tilted oval of points: hull area and tape-measure estimate.
    let tilt = 0.6;
    let points: Vec<Point2> = (0..400)
        .map(|i| {
            let t = i as f64 * 0.157;
            let r = (i % 7) as f64 / 6.0;
            Point2::new(40.0 * r * t.cos(), 25.0 * r * t.sin()).rotate(tilt)
        })
        .collect();
    let hull = convex_hull(&points)?;
    let e = principal_extents(&points, 0.0)?;
    println!(
        "oval: hull {} vertices, {:.1} cm2; axes {:.1} x {:.1} cm at {:.2} rad; ellipse {:.1} cm2",
        hull.len(),
        polygon_area(&hull)?,
        e.major,
        e.minor,
        e.major_axis_direction.y.atan2(e.major_axis_direction.x),
        ellipse_area(e.major, e.minor)?
    );
    Ok(())
}
