//! How much table does an unassembled jigsaw puzzle need?
//!
//! Treating each piece as a square whose random orientation makes it behave
//! like its circumscribed circle, and packing those circles hexagonally,
//! gives a spread area of `sqrt(3)` times the assembled area regardless of
//! the piece count.
//!
//! - [`model`]: the closed-form prediction and every intermediate quantity.
//! - [`geometry`]: oriented squares, SAT overlap, convex hulls, axis extents.
//! - [`sim`]: hexagonal, greedy-radial and grid layouts and their measurement.
//! - [`empirical`]: measured puzzles, uncertainty propagation, comparison report.
//! - [`plot`]: SVG scatter of measured against predicted areas.
//! - [`cli`]: the `jigsaw` command.

pub mod cli;
pub mod empirical;
pub mod error;
pub mod geometry;
pub mod model;
pub mod plot;
pub mod sim;

pub use error::{Error, Result};
pub use model::{model_breakdown, unassembled_area, ModelBreakdown, PuzzleSpec, SQRT_3};
