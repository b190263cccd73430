//! Circumscribed circles on a hexagonal lattice approach the ideal packing
//! density as the cluster grows, and the spread ratio approaches sqrt(3).

use std::f64::consts::PI;

use jigsaw_spread::sim::{centered_hexagonal_number, hex_layout, measure_layout};

fn main() -> jigsaw_spread::Result<()> {
    let limit = PI / (2.0 * 3f64.sqrt());
    println!(
        "{:>6} {:>7} {:>10} {:>10}",
        "rings", "pieces", "density", "hull/A_a"
    );
    for rings in [2u64, 5, 10, 20, 40, 60] {
        let n = centered_hexagonal_number(rings) as usize;
        // d = 1 means each square piece has area 1/2.
        let layout = hex_layout(n, 1.0, 0.0, rings)?;
        let r = measure_layout(&layout, 0.5 * n as f64)?;
        let density = n as f64 * PI / 4.0 / r.hull_area;
        println!(
            "{rings:>6} {n:>7} {density:>10.4} {:>10.4}",
            r.spread_ratio_hull
        );
    }
    println!("limit: density {limit:.4}, ratio {:.4}", 3f64.sqrt());

    println!("\njittered lattice, 1027 pieces:");
    for jitter in [0.0, 0.25, 0.5, 0.9] {
        let layout = hex_layout(1027, 1.0, jitter, 7)?;
        let r = measure_layout(&layout, 513.5)?;
        println!(
            "  jitter {jitter:.2}: hull ratio {:.4}, ellipse ratio {:.4}",
            r.spread_ratio_hull, r.spread_ratio_ellipse
        );
    }
    Ok(())
}
