//! The nine measured puzzles compared with the prediction, as a text table
//! and as JSON.

use jigsaw_spread::empirical::{builtin_dataset, validate};

fn main() -> jigsaw_spread::Result<()> {
    let report = validate(&builtin_dataset())?;
    print!("{}", report.to_text());
    if std::env::args().any(|a| a == "--json") {
        print!("{}", report.to_json());
    }
    Ok(())
}
