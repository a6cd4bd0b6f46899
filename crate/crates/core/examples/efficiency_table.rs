//! Runs the three clippers over random segment batches on tessellated spheres
//! and prints the timing table for the all-miss and all-hit cases.
//!
//! ```text
//! cargo run --release --example efficiency_table -- [lines]
//! ```

use hullclip::bench::{emit_table, run_benchmark, HitMode, TableFormat};

fn main() -> hullclip::error::Result<()> {
    let lines = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let n_facets = [10, 50, 100, 200, 500, 1000, 2000, 4000];
    for mode in [HitMode::AllMiss, HitMode::AllHit] {
        let rows = run_benchmark(&n_facets, lines, mode, 0)?;
        println!("## {mode} ({lines} segments per column)\n");
        print!("{}", emit_table(&rows, TableFormat::Markdown)?);
        let fallbacks: usize = rows.iter().map(|r| r.sqrt_fallbacks).sum();
        println!("\nwalk fallbacks: {fallbacks}\n");
    }
    Ok(())
}
