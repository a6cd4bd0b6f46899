//! Clips grazing, parallel, coplanar and interior segments against a cube,
//! in both segment and infinite-line mode, and compares each clipper with the
//! brute-force oracle.
//!
//! ```text
//! cargo run --example degenerate_cases
//! ```

use hullclip::clip::{clip_oracle, Algorithm};
use hullclip::geometry::{ClipMode, Segment, Vec3};
use hullclip::mesh::cube;

fn main() -> hullclip::error::Result<()> {
    let mesh = cube(1.0);
    let h = 1.0;
    let cases = [
        ("vertex graze", Vec3::new(h - 1.0, h + 1.0, h), Vec3::new(h + 1.0, h - 1.0, h)),
        ("edge graze", Vec3::new(h - 1.0, h + 1.0, 0.3), Vec3::new(h + 1.0, h - 1.0, 0.3)),
        ("along an edge", Vec3::new(h, h, -2.0), Vec3::new(h, h, 2.0)),
        ("in a face plane", Vec3::new(h, -2.0, 0.1), Vec3::new(h, 2.0, 0.1)),
        ("parallel outside", Vec3::new(h + 0.01, -2.0, 0.1), Vec3::new(h + 0.01, 2.0, 0.1)),
        ("interior", Vec3::new(-0.1, 0.2, 0.0), Vec3::new(0.3, -0.2, 0.1)),
        ("short, ends outside", Vec3::new(1.2, 0.0, 0.0), Vec3::new(1.5, 0.0, 0.0)),
    ];
    let tol = 1e-9 * mesh.scale();
    for mode in [ClipMode::Segment, ClipMode::Line] {
        println!("{mode:?} mode");
        for (label, a, b) in cases {
            let seg = Segment::with_mode(a, b, mode)?;
            let oracle = clip_oracle(&mesh, &seg);
            let agree = Algorithm::ALL.iter().all(|alg| alg.clip(&mesh, &seg).agrees_with(&oracle, &seg, tol));
            println!("  {label:<20} {oracle:<60} all agree: {agree}");
        }
    }
    Ok(())
}
