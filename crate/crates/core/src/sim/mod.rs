//! Layout generators that put the model's packing assumptions to work, and
//! the measurements taken on their output.

mod greedy;
mod grid;
mod hex;
mod layout;
mod measure;
mod spatial;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{ensure_positive, Error, Result};
use crate::model;

pub use greedy::pack_random;
pub use grid::pack_grid;
pub use hex::{centered_hexagonal_number, hex_layout, spiral_sites};
pub use layout::{find_overlap, Layout, Provenance, Strategy, LAYOUT_CSV_HEADER};
pub use measure::{measure_layout, ratio_statistics, RatioStatistics, SimResult, Summary};
pub use spatial::SpatialHash;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SimParams {
    pub strategy: Strategy,
    pub seed: u64,
    /// Directions tried per piece by the greedy packer.
    pub candidate_angles: usize,
    /// March step as a fraction of the piece diagonal.
    pub radial_step: f64,
    /// Hex only: displacement scale in `[0, 1)`.
    pub jitter: f64,
    /// Grid only: spacing between neighbouring pieces, in cm.
    pub grid_gap: f64,
}

impl SimParams {
    pub fn new(strategy: Strategy) -> Self {
        Self {
            strategy,
            seed: 0,
            candidate_angles: 64,
            radial_step: 0.05,
            jitter: 0.0,
            grid_gap: 0.0,
        }
    }
}

/// Generates one layout for a puzzle of `pieces` pieces and `assembled_area`
/// cm², using the piece size the model assigns (`edge = sqrt(A_a / N)`).
pub fn generate(pieces: usize, assembled_area: f64, params: &SimParams) -> Result<Layout> {
    ensure_positive("assembled area", assembled_area)?;
    if pieces == 0 {
        return Err(Error::domain("piece count must be at least 1"));
    }
    let n = pieces as u64;
    match params.strategy {
        Strategy::Hex => hex_layout(
            pieces,
            model::circumscribed_diameter(assembled_area, n)?,
            params.jitter,
            params.seed,
        ),
        Strategy::GreedyRadial => {
            pack_random(pieces, model::piece_area(assembled_area, n)?.sqrt(), params)
        }
        Strategy::Grid => pack_grid(
            pieces,
            model::piece_area(assembled_area, n)?.sqrt(),
            params.grid_gap,
        ),
    }
}

/// Runs seeds `params.seed, params.seed + 1, ...` in parallel and returns
/// results ordered by seed. Identical to running them one after another.
pub fn run_batch(
    pieces: usize,
    assembled_area: f64,
    params: &SimParams,
    runs: usize,
) -> Result<Vec<SimResult>> {
    if runs == 0 {
        return Err(Error::domain("need at least one run"));
    }
    (0..runs as u64)
        .into_par_iter()
        .map(|i| {
            let p = SimParams {
                seed: params.seed.wrapping_add(i),
                ..*params
            };
            measure_layout(&generate(pieces, assembled_area, &p)?, assembled_area)
        })
        .collect()
}
