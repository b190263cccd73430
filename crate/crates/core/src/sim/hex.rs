//! Pieces on a hexagonal lattice, filled ring by ring.

use std::f64::consts::{FRAC_PI_2, SQRT_2};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::layout::{Layout, Provenance, Strategy};
use super::spatial::SpatialHash;
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::{squares_overlap, OrientedSquare, Point2};

/// Axial steps for the six lattice directions, counter-clockwise from +x.
const DIRECTIONS: [(i64, i64); 6] = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)];

/// Attempts per piece when a jitter displacement collides: the draw is
/// halved this many times before the piece stays on its site.
const JITTER_HALVINGS: u32 = 8;

/// Number of sites in `rings` complete rings around the origin, counting the
/// origin itself: `1 + 3k(k+1)`.
pub fn centered_hexagonal_number(rings: u64) -> u64 {
    1 + 3 * rings * (rings + 1)
}

/// Axial coordinates of the first `count` lattice sites in spiral order.
pub fn spiral_sites(count: usize) -> Vec<(i64, i64)> {
    let mut sites = Vec::with_capacity(count);
    if count == 0 {
        return sites;
    }
    sites.push((0, 0));
    let mut k = 1i64;
    while sites.len() < count {
        // Ring k starts at corner k * dir[4] and walks each side k steps.
        let (mut a, mut b) = (DIRECTIONS[4].0 * k, DIRECTIONS[4].1 * k);
        'ring: for &(da, db) in &DIRECTIONS {
            for _ in 0..k {
                sites.push((a, b));
                if sites.len() == count {
                    break 'ring;
                }
                a += da;
                b += db;
            }
        }
        k += 1;
    }
    sites
}

fn site_position((a, b): (i64, i64), spacing: f64) -> Point2 {
    let (a, b) = (a as f64, b as f64);
    Point2::new(spacing * (a + 0.5 * b), spacing * b * 0.75f64.sqrt())
}

/// Lays `pieces` squares of diagonal `diameter` on the first lattice sites.
///
/// Rotations are drawn first, one per piece in site order. With `jitter > 0`
/// each piece then gets a uniform displacement within radius
/// `jitter * diameter * (1 - sqrt(2)/2)`; a displacement that would collide
/// with a neighbour is halved until it fits, falling back to the lattice site.
pub fn hex_layout(pieces: usize, diameter: f64, jitter: f64, seed: u64) -> Result<Layout> {
    if pieces == 0 {
        return Err(Error::domain("piece count must be at least 1"));
    }
    ensure_positive("diameter", diameter)?;
    if !(0.0..1.0).contains(&jitter) {
        return Err(Error::domain(format!(
            "jitter must be in [0, 1), got {jitter}"
        )));
    }
    let edge = diameter / SQRT_2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut squares: Vec<OrientedSquare> = spiral_sites(pieces)
        .into_iter()
        .map(|site| {
            let rotation = rng.random_range(0.0..FRAC_PI_2);
            OrientedSquare::new(site_position(site, diameter), edge, rotation)
        })
        .collect::<Result<_>>()?;

    if jitter > 0.0 {
        apply_jitter(
            &mut squares,
            diameter,
            jitter * diameter * (1.0 - 0.5 * SQRT_2),
            &mut rng,
        );
    }

    Ok(Layout::from_parts(
        squares,
        edge,
        Provenance {
            strategy: Strategy::Hex,
            seed,
        },
    ))
}

fn apply_jitter(squares: &mut [OrientedSquare], diameter: f64, radius: f64, rng: &mut ChaCha8Rng) {
    let mut grid = SpatialHash::new(diameter);
    for (i, s) in squares.iter().enumerate() {
        grid.insert(s.center(), i);
    }
    for i in 0..squares.len() {
        let r = radius * rng.random::<f64>().sqrt();
        let angle = rng.random_range(0.0..std::f64::consts::TAU);
        let mut offset = Point2::from_polar(r, angle);
        let home = squares[i].center();
        for _ in 0..=JITTER_HALVINGS {
            let moved = squares[i].with_center(home + offset);
            let collides = grid.any_near(moved.center(), diameter, |j| {
                j != i && squares_overlap(&moved, &squares[j])
            });
            if !collides {
                grid.remove(home, i);
                grid.insert(moved.center(), i);
                squares[i] = moved;
                break;
            }
            offset = offset.scale(0.5);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::layout::find_overlap;

    #[test]
    fn single_piece_at_origin() {
        let l = hex_layout(1, 1.0, 0.0, 0).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.pieces()[0].center(), Point2::ORIGIN);
        assert!((l.piece_edge() - 1.0 / SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn first_ring() {
        let l = hex_layout(7, 1.0, 0.0, 0).unwrap();
        assert_eq!(l.pieces()[0].center(), Point2::ORIGIN);
        for p in &l.pieces()[1..] {
            assert!((p.center().norm() - 1.0).abs() < 1e-12);
        }
        // all six neighbours are distinct and 60 degrees apart
        let mut angles: Vec<f64> = l.pieces()[1..]
            .iter()
            .map(|p| p.center().y.atan2(p.center().x))
            .collect();
        angles.sort_by(f64::total_cmp);
        for w in angles.windows(2) {
            assert!((w[1] - w[0] - std::f64::consts::FRAC_PI_3).abs() < 1e-12);
        }
    }

    #[test]
    fn ring_count_matches_centered_hex_numbers() {
        assert_eq!(centered_hexagonal_number(18), 1027);
        let sites = spiral_sites(1027);
        let ring = |(a, b): (i64, i64)| a.abs().max(b.abs()).max((a + b).abs());
        assert_eq!(sites.iter().map(|&s| ring(s)).max(), Some(18));
        for k in 0..=18u64 {
            let n = centered_hexagonal_number(k) as usize;
            assert!(sites[..n].iter().all(|&s| ring(s) as u64 <= k));
        }
        let mut dedup = sites.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), 1027);
    }

    #[test]
    fn nearest_neighbour_spacing_is_diameter() {
        let l = hex_layout(61, 2.5, 0.0, 3).unwrap();
        let c = l.centers();
        for (i, p) in c.iter().enumerate() {
            let nearest = c
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, q)| (*q - *p).norm())
                .fold(f64::INFINITY, f64::min);
            assert!((nearest - 2.5).abs() < 1e-12);
        }
    }

    #[test]
    fn jittered_layouts_do_not_overlap() {
        for seed in 0..5 {
            let l = hex_layout(300, 1.0, 0.9, seed).unwrap();
            assert_eq!(find_overlap(l.pieces()), None);
            let moved = l
                .centers()
                .iter()
                .zip(hex_layout(300, 1.0, 0.0, seed).unwrap().centers())
                .filter(|(a, b)| (**a - *b).norm() > 0.0)
                .count();
            assert!(moved > 150, "only {moved} pieces moved");
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(hex_layout(0, 1.0, 0.0, 0).is_err());
        assert!(hex_layout(5, 0.0, 0.0, 0).is_err());
        assert!(hex_layout(5, 1.0, 1.0, 0).is_err());
        assert!(hex_layout(5, 1.0, -0.1, 0).is_err());
    }
}
