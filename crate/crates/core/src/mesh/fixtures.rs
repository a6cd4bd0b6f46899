//! Small hand-built meshes used by tests and examples.

use super::{build_mesh, ConvexMesh};
use crate::geometry::Vec3;

fn build(vertices: Vec<Vec3>, facets: Vec<[usize; 3]>) -> ConvexMesh {
    build_mesh(vertices, facets).expect("fixture is a valid convex mesh")
}

/// Tetrahedron with corners at the origin and the three unit points.
pub fn unit_tetrahedron() -> ConvexMesh {
    build(
        vec![
            Vec3::new(0.0, 0.0, 0.0),
            Vec3::new(1.0, 0.0, 0.0),
            Vec3::new(0.0, 1.0, 0.0),
            Vec3::new(0.0, 0.0, 1.0),
        ],
        vec![[0, 2, 1], [0, 1, 3], [0, 3, 2], [1, 2, 3]],
    )
}

/// Axis-aligned cube `[-h, h]^3`, each square face split into two triangles.
pub fn cube(h: f64) -> ConvexMesh {
    let mut vertices = Vec::with_capacity(8);
    for i in 0..8 {
        let c = |bit: usize| if i & bit != 0 { h } else { -h };
        vertices.push(Vec3::new(c(1), c(2), c(4)));
    }
    // vertex index bits: 1 -> x, 2 -> y, 4 -> z
    let quads = [
        [0, 2, 3, 1], // z = -h
        [4, 5, 7, 6], // z = +h
        [0, 1, 5, 4], // y = -h
        [2, 6, 7, 3], // y = +h
        [0, 4, 6, 2], // x = -h
        [1, 3, 7, 5], // x = +h
    ];
    let facets = quads
        .iter()
        .flat_map(|q| [[q[0], q[1], q[2]], [q[0], q[2], q[3]]])
        .collect();
    build(vertices, facets)
}

/// Regular octahedron with vertices on the coordinate axes at distance `r`.
pub fn octahedron(r: f64) -> ConvexMesh {
    let vertices = vec![
        Vec3::new(r, 0.0, 0.0),
        Vec3::new(-r, 0.0, 0.0),
        Vec3::new(0.0, r, 0.0),
        Vec3::new(0.0, -r, 0.0),
        Vec3::new(0.0, 0.0, r),
        Vec3::new(0.0, 0.0, -r),
    ];
    let facets = vec![
        [0, 2, 4],
        [2, 1, 4],
        [1, 3, 4],
        [3, 0, 4],
        [2, 0, 5],
        [1, 2, 5],
        [3, 1, 5],
        [0, 3, 5],
    ];
    build(vertices, facets)
}

/// Regular icosahedron inscribed in the sphere of radius `r`.
pub fn icosahedron(r: f64) -> ConvexMesh {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let raw = [
        (-1.0, phi, 0.0),
        (1.0, phi, 0.0),
        (-1.0, -phi, 0.0),
        (1.0, -phi, 0.0),
        (0.0, -1.0, phi),
        (0.0, 1.0, phi),
        (0.0, -1.0, -phi),
        (0.0, 1.0, -phi),
        (phi, 0.0, -1.0),
        (phi, 0.0, 1.0),
        (-phi, 0.0, -1.0),
        (-phi, 0.0, 1.0),
    ];
    let k = r / (1.0 + phi * phi).sqrt();
    let vertices = raw.iter().map(|&(x, y, z)| Vec3::new(x * k, y * k, z * k)).collect();
    let facets = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    build(vertices, facets)
}
