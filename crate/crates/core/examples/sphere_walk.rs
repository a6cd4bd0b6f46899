//! Builds tessellated spheres of growing size and shows how many facets the
//! adjacency walk visits compared with the full half-space scan.
//!
//! ```text
//! cargo run --release --example sphere_walk -- [segments]
//! ```

use hullclip::bench::{generate_line_dataset, HitMode};
use hullclip::clip::{clip_cb, clip_sqrt_with_fallback, Counters};
use hullclip::mesh::generate_inscribed_polyhedron;

fn main() -> hullclip::error::Result<()> {
    let count = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2000);
    println!("{:>6} {:>8} {:>12} {:>10} {:>10}", "N", "sqrt(N)", "walk_visits", "cb_scan", "fallbacks");
    for n in [16, 64, 256, 1024, 4096] {
        let mesh = generate_inscribed_polyhedron(n, 0.5, 1)?;
        let data = generate_line_dataset(&mesh, count, HitMode::AllHit, 1.0, 7)?;
        let (mut walk, mut scan) = (Counters::default(), Counters::default());
        for s in &data.segments {
            let r = clip_sqrt_with_fallback(&mesh, s);
            assert!(r.agrees_with(&clip_cb(&mesh, s), s, 1e-9 * mesh.scale()));
            walk += r.counters;
            scan += clip_cb(&mesh, s).counters;
        }
        let per = |c: usize| c as f64 / count as f64;
        println!(
            "{n:>6} {:>8.1} {:>12.1} {:>10.1} {:>10}",
            (n as f64).sqrt(),
            per(walk.walk_visits),
            per(scan.facets_examined),
            walk.fallbacks
        );
    }
    Ok(())
}
