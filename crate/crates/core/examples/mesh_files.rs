//! Writes a generated mesh and a batch of segments to disk, reads them back,
//! validates the mesh and checks that all four clippers agree on the batch.
//!
//! ```text
//! cargo run --example mesh_files -- [dir]
//! ```

use std::path::PathBuf;

use hullclip::bench::{generate_line_dataset, load_lines, save_lines, HitMode};
use hullclip::cli::first_disagreement;
use hullclip::mesh::{generate_inscribed_polyhedron, load_mesh, save_mesh};

fn main() -> hullclip::error::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let mesh_path = dir.join("hullclip_sphere.txt");
    let lines_path = dir.join("hullclip_lines.txt");

    let mesh = generate_inscribed_polyhedron(300, 0.5, 42)?;
    save_mesh(&mesh, &mesh_path)?;
    let data = generate_line_dataset(&mesh, 500, HitMode::AllHit, 1.0, 42)?;
    save_lines(&data.segments, &lines_path)?;
    println!("wrote {} and {}", mesh_path.display(), lines_path.display());

    let mesh = load_mesh(&mesh_path)?;
    mesh.check_convexity()?;
    println!(
        "loaded V={} E={} F={} scale={:.4}",
        mesh.num_vertices(),
        mesh.num_edges(),
        mesh.num_facets(),
        mesh.scale()
    );
    let segments = load_lines(&lines_path)?;
    match first_disagreement(&mesh, &segments) {
        None => println!("all four clippers agree on {} segments", segments.len()),
        Some((i, results)) => {
            println!("segment {i} disagrees:");
            for r in results {
                println!("  {r}");
            }
        }
    }
    Ok(())
}
