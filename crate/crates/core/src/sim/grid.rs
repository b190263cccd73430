//! Axis-aligned square grid: the tidy arrangement loose spreads are compared against.

use super::layout::{Layout, Provenance, Strategy};
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::{OrientedSquare, Point2};

/// Smallest `c` with `c * c >= n`.
fn ceil_sqrt(n: usize) -> usize {
    let mut c = (n as f64).sqrt() as usize;
    while c * c < n {
        c += 1;
    }
    while c > 1 && (c - 1) * (c - 1) >= n {
        c -= 1;
    }
    c
}

/// `pieces` unrotated squares, row-major on a `ceil(sqrt(N))`-column grid
/// with pitch `edge + gap`.
pub fn pack_grid(pieces: usize, edge: f64, gap: f64) -> Result<Layout> {
    if pieces == 0 {
        return Err(Error::domain("piece count must be at least 1"));
    }
    ensure_positive("edge", edge)?;
    if !(gap.is_finite() && gap >= 0.0) {
        return Err(Error::domain(format!(
            "gap must be non-negative, got {gap}"
        )));
    }
    let cols = ceil_sqrt(pieces);
    let pitch = edge + gap;
    let squares = (0..pieces)
        .map(|i| {
            let (col, row) = (i % cols, i / cols);
            OrientedSquare::axis_aligned(Point2::new(col as f64 * pitch, row as f64 * pitch), edge)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Layout::from_parts(
        squares,
        edge,
        Provenance {
            strategy: Strategy::Grid,
            seed: 0,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::layout::find_overlap;

    #[test]
    fn ceil_sqrt_values() {
        let expect = [
            (1, 1),
            (2, 2),
            (4, 2),
            (5, 3),
            (9, 3),
            (10, 4),
            (1_000_000, 1000),
        ];
        for (n, c) in expect {
            assert_eq!(ceil_sqrt(n), c, "n = {n}");
        }
    }

    #[test]
    fn shape_of_grid() {
        let l = pack_grid(10, 1.0, 0.5).unwrap();
        assert_eq!(l.len(), 10);
        let c = l.centers();
        assert_eq!(c[3], Point2::new(4.5, 0.0));
        assert_eq!(c[4], Point2::new(0.0, 1.5));
        assert_eq!(c[9], Point2::new(1.5, 3.0));
        assert!(l.pieces().iter().all(|p| p.rotation() == 0.0));
        assert_eq!(find_overlap(l.pieces()), None);
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(pack_grid(0, 1.0, 0.0).is_err());
        assert!(pack_grid(3, 0.0, 0.0).is_err());
        assert!(pack_grid(3, 1.0, -1.0).is_err());
    }
}
