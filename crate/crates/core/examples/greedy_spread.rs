//! Loose greedy packing of a 1008-piece puzzle over several seeds, with an
//! SVG of the last layout.
//!
//!     cargo run --release --example greedy_spread -- target/spread.svg

use jigsaw_spread::sim::{generate, ratio_statistics, run_batch, SimParams, Strategy};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (pieces, area) = (1008, 50.2 * 69.0);
    let params = SimParams {
        seed: 7,
        ..SimParams::new(Strategy::GreedyRadial)
    };
    let results = run_batch(pieces, area, &params, 10)?;
    for r in &results {
        println!(
            "seed {:>2}: {:.1} x {:.1} cm oval, ellipse ratio {:.4}, hull ratio {:.4}",
            r.seed, r.extents.major, r.extents.minor, r.spread_ratio_ellipse, r.spread_ratio_hull
        );
    }
    let stats = ratio_statistics(&results)?;
    println!(
        "ellipse ratio {:.4} +/- {:.4}; measured on the real puzzle: {:.4}",
        stats.ellipse.mean,
        stats.ellipse.stddev,
        std::f64::consts::FRAC_PI_4 * 83.0 * 85.0 / area
    );

    if let Some(path) = std::env::args().nth(1) {
        let last = SimParams {
            seed: results.last().unwrap().seed,
            ..params
        };
        std::fs::write(&path, generate(pieces, area, &last)?.to_svg())?;
        println!("wrote {path}");
    }
    Ok(())
}
