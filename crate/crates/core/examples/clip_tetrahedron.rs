//! Clips one segment against the unit tetrahedron with every algorithm and
//! prints the interval, the clipped endpoints and the work counters.
//!
//! ```text
//! cargo run --example clip_tetrahedron
//! ```

use hullclip::clip::Algorithm;
use hullclip::geometry::{Segment, Vec3};
use hullclip::mesh::unit_tetrahedron;

fn main() -> hullclip::error::Result<()> {
    let mesh = unit_tetrahedron();
    let seg = Segment::new(Vec3::new(-1.0, 0.25, 0.25), Vec3::new(1.0, 0.25, 0.25))?;
    println!("segment {seg}");
    for alg in Algorithm::ALL {
        let r = alg.clip(&mesh, &seg);
        println!("{:>7}: {r}", alg.name());
        println!("         {}", r.counters);
    }
    Ok(())
}
