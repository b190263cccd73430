//! Will a puzzle's loose pieces fit on a given table?
//!
//!     cargo run --example predict -- 1000 50.8 68.5 90 70

use jigsaw_spread::model::{model_breakdown, table_fits, PuzzleSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let [pieces, width, height, table_w, table_h] = match args[..] {
        [] => [1000.0, 50.8, 68.5, 90.0, 70.0],
        [a, b, c, d, e] => [a, b, c, d, e],
        _ => return Err("usage: predict PIECES WIDTH HEIGHT TABLE_W TABLE_H".into()),
    };

    let spec = PuzzleSpec::from_dims(pieces as u64, width, height)?;
    let b = model_breakdown(&spec)?;
    println!("{} pieces, {width} x {height} cm", spec.pieces());
    println!(
        "  piece          {:.2} cm square, {:.2} cm diagonal",
        b.piece_edge, b.circle_diameter
    );
    println!(
        "  floor per piece {:.2} cm2 (one third of a {:.2} cm2 hexagon)",
        b.per_piece_spread_area, b.hexagon_area
    );
    println!(
        "  loose pieces   {:.1} cm2 vs {:.1} cm2 assembled",
        b.unassembled_area,
        spec.assembled_area()
    );

    let fit = table_fits(&spec, table_w, table_h)?;
    let verdict = if fit.fits { "fits" } else { "does not fit" };
    println!(
        "  {table_w} x {table_h} cm table: {verdict} (margin {:.1} cm2)",
        fit.margin
    );

    // Same assembled area, different piece counts: the answer does not move.
    for n in [9, 100, 1000, 10_000] {
        let s = PuzzleSpec::from_area(n, spec.assembled_area())?;
        let b = model_breakdown(&s)?;
        println!(
            "  N = {n:>5}: piece {:>6.2} cm, spread {:.1} cm2",
            b.piece_edge, b.unassembled_area
        );
    }
    Ok(())
}
