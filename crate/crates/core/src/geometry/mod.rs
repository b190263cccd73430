//! Planar primitives: points, oriented squares, convex hulls and the two
//! area formulas used when measuring a spread of pieces by hand.

mod extents;
mod hull;
mod sat;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::ops::{Add, Sub};

use serde::Serialize;

use crate::error::{ensure_positive, Error, Result};

pub use extents::{principal_extents, SpreadExtents};
pub use hull::{convex_hull, polygon_area, Polygon};
pub use sat::{overlap_margin, squares_overlap, OVERLAP_TOLERANCE};

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(radius * c, radius * s)
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn scale(self, k: f64) -> Self {
        Self::new(self.x * k, self.y * k)
    }

    /// Counter-clockwise rotation about the origin.
    pub fn rotate(self, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Point2) -> Point2 {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Point2) -> Point2 {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

/// A square piece placed on the table.
///
/// Rotation is stored modulo a quarter turn, in `[0, pi/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OrientedSquare {
    center: Point2,
    edge: f64,
    rotation: f64,
}

impl OrientedSquare {
    pub fn new(center: Point2, edge: f64, rotation: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::domain("square center must be finite"));
        }
        ensure_positive("square edge", edge)?;
        if !rotation.is_finite() {
            return Err(Error::domain("square rotation must be finite"));
        }
        Ok(Self {
            center,
            edge,
            rotation: normalize_rotation(rotation),
        })
    }

    pub fn axis_aligned(center: Point2, edge: f64) -> Result<Self> {
        Self::new(center, edge, 0.0)
    }

    pub fn center(&self) -> Point2 {
        self.center
    }

    pub fn edge(&self) -> f64 {
        self.edge
    }

    pub fn rotation(&self) -> f64 {
        self.rotation
    }

    pub fn area(&self) -> f64 {
        self.edge * self.edge
    }

    /// Half the diagonal; radius of the circumscribed circle.
    pub fn circumradius(&self) -> f64 {
        self.edge * FRAC_PI_4.cos()
    }

    /// Unit vectors along the two edge directions.
    pub fn axes(&self) -> [Point2; 2] {
        let (s, c) = self.rotation.sin_cos();
        [Point2::new(c, s), Point2::new(-s, c)]
    }

    /// Corners in counter-clockwise order.
    pub fn corners(&self) -> [Point2; 4] {
        let h = 0.5 * self.edge;
        let [u, v] = self.axes();
        let (u, v) = (u.scale(h), v.scale(h));
        let c = self.center;
        [c - u - v, c + u - v, c + u + v, c - u + v]
    }

    pub fn with_center(&self, center: Point2) -> Self {
        Self { center, ..*self }
    }
}

/// Maps any angle onto `[0, pi/2)`.
pub fn normalize_rotation(angle: f64) -> f64 {
    let r = angle.rem_euclid(FRAC_PI_2);
    // rem_euclid can round up to exactly pi/2 for tiny negative inputs
    if r >= FRAC_PI_2 {
        0.0
    } else {
        r
    }
}

/// Area of the ellipse with axes `x` and `y` (full lengths, not semi-axes).
pub fn ellipse_area(x: f64, y: f64) -> Result<f64> {
    ensure_positive("ellipse axis", x)?;
    ensure_positive("ellipse axis", y)?;
    Ok(FRAC_PI_4 * x * y)
}

pub fn rectangle_area(x: f64, y: f64) -> Result<f64> {
    ensure_positive("rectangle side", x)?;
    ensure_positive("rectangle side", y)?;
    Ok(x * y)
}
