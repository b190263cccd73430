//! Greedy radial insertion.
//!
//! Pieces are dropped one at a time. Each gets a random rotation and a fan of
//! random directions; along every direction the piece slides outward from
//! the origin in fixed steps until it no longer overlaps anything, and the
//! closest of those stopping points wins.

use std::f64::consts::{FRAC_PI_2, SQRT_2, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::layout::{Layout, Provenance, Strategy};
use super::spatial::SpatialHash;
use super::SimParams;
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::{squares_overlap, OrientedSquare, Point2};

/// Inscribed circles closer than `edge - DEEP_SLACK` overlap by more than the
/// SAT tolerance, so those march steps can be skipped without testing.
const DEEP_SLACK: f64 = 1e-7;

struct Packer {
    edge: f64,
    diagonal: f64,
    step: f64,
    placed: Vec<OrientedSquare>,
    grid: SpatialHash,
}

enum Probe {
    Free,
    /// Overlaps; the next step index that could possibly be free.
    Blocked {
        resume_at: u64,
    },
}

impl Packer {
    fn probe(&self, candidate: &OrientedSquare, dir: Point2, step_index: u64) -> Probe {
        let c = candidate.center();
        let deep = self.edge - DEEP_SLACK;
        let mut blocked = false;
        let mut resume_at = step_index + 1;
        self.grid.for_each_near(c, self.diagonal, |j| {
            let other = &self.placed[j];
            let rel = c - other.center();
            let dist2 = rel.dot(rel);
            if dist2 < deep * deep {
                blocked = true;
                // Exit of the ray from the disc of radius `deep` around `other`:
                // solve |c + s*dir - o|^2 = deep^2 for the larger root s.
                let b = rel.dot(dir);
                let disc = (b * b - (dist2 - deep * deep)).max(0.0);
                let exit = -b + disc.sqrt();
                let r_exit = step_index as f64 * self.step + exit;
                // Steps strictly before r_exit lie inside the disc.
                let k = (r_exit / self.step).ceil() as u64;
                resume_at = resume_at.max(k.saturating_sub(1)).max(step_index + 1);
            } else if !blocked && squares_overlap(candidate, other) {
                blocked = true;
            }
        });
        if blocked {
            Probe::Blocked { resume_at }
        } else {
            Probe::Free
        }
    }

    /// First free step index along `dir`, or `None` once `limit` is reached.
    fn march(&self, square: &OrientedSquare, dir: Point2, limit: u64) -> Option<u64> {
        let mut k = 0u64;
        while k < limit {
            let candidate = square.with_center(dir.scale(k as f64 * self.step));
            match self.probe(&candidate, dir, k) {
                Probe::Free => return Some(k),
                Probe::Blocked { resume_at } => k = resume_at,
            }
        }
        None
    }

    fn commit(&mut self, square: OrientedSquare) {
        self.grid.insert(square.center(), self.placed.len());
        self.placed.push(square);
    }
}

/// Packs `pieces` squares of side `edge` by greedy radial insertion.
///
/// Random draws per piece, in order: one rotation, then
/// `params.candidate_angles` directions. The first piece also draws (and
/// lands at the origin). Ties between directions go to the earlier draw.
pub fn pack_random(pieces: usize, edge: f64, params: &SimParams) -> Result<Layout> {
    if pieces == 0 {
        return Err(Error::domain("piece count must be at least 1"));
    }
    ensure_positive("edge", edge)?;
    ensure_positive("radial step", params.radial_step)?;
    if params.candidate_angles == 0 {
        return Err(Error::domain("need at least one candidate angle"));
    }
    let diagonal = edge * SQRT_2;
    let mut packer = Packer {
        edge,
        diagonal,
        step: params.radial_step * diagonal,
        placed: Vec::with_capacity(pieces),
        grid: SpatialHash::new(diagonal),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut dirs = Vec::with_capacity(params.candidate_angles);

    for _ in 0..pieces {
        let rotation = rng.random_range(0.0..FRAC_PI_2);
        let square = OrientedSquare::new(Point2::ORIGIN, edge, rotation)?;
        dirs.clear();
        dirs.extend(
            (0..params.candidate_angles)
                .map(|_| Point2::from_polar(1.0, rng.random_range(0.0..TAU))),
        );

        let mut best: Option<(u64, Point2)> = None;
        for &dir in &dirs {
            let limit = best.map_or(u64::MAX, |(k, _)| k);
            if let Some(k) = packer.march(&square, dir, limit) {
                best = Some((k, dir));
                if k == 0 {
                    break;
                }
            }
        }
        let (k, dir) = best.expect("a direction with an unbounded march always finds space");
        packer.commit(square.with_center(dir.scale(k as f64 * packer.step)));
    }

    Ok(Layout::from_parts(
        packer.placed,
        edge,
        Provenance {
            strategy: Strategy::GreedyRadial,
            seed: params.seed,
        },
    ))
}
