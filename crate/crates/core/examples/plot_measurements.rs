//! Writes the measured-vs-predicted scatter plot.
//!
//!     cargo run --example plot_measurements -- target/areas.svg

use jigsaw_spread::empirical::{builtin_dataset, validate};
use jigsaw_spread::plot::PlotSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "areas.svg".into());
    let spec = PlotSpec::from_report(&validate(&builtin_dataset())?);
    std::fs::write(&path, spec.render_svg()?)?;
    println!("wrote {path} ({} points)", spec.points.len());
    Ok(())
}
