//! Same puzzle, three ways of laying out the pieces: a tidy grid (no gaps),
//! the hexagonal circle packing the model assumes, and a loose greedy pile.

use jigsaw_spread::sim::{generate, measure_layout, SimParams, Strategy};
use jigsaw_spread::SQRT_3;

fn main() -> jigsaw_spread::Result<()> {
    let (pieces, area) = (1024, 3300.0);
    println!("{pieces} pieces, assembled area {area} cm2, model ratio {SQRT_3:.4}");
    for strategy in [Strategy::Grid, Strategy::Hex, Strategy::GreedyRadial] {
        let params = SimParams {
            seed: 1,
            ..SimParams::new(strategy)
        };
        let r = measure_layout(&generate(pieces, area, &params)?, area)?;
        println!(
            "  {:<13} hull {:>7.1} cm2 (ratio {:.4})  oval {:>5.1} x {:>5.1} cm (ratio {:.4})",
            strategy.as_str(),
            r.hull_area,
            r.spread_ratio_hull,
            r.extents.major,
            r.extents.minor,
            r.spread_ratio_ellipse
        );
    }
    Ok(())
}
