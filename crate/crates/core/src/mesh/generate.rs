//! Sphere-inscribed test polyhedra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{build_mesh, convex_hull, ConvexMesh};
use crate::error::{Error, Result};
use crate::geometry::{Tolerance, Vec3};

/// `count` points on the sphere of radius `radius` along a Fibonacci spiral,
/// ordered from the north pole down.
pub fn fibonacci_sphere(count: usize, radius: f64) -> Vec<Vec3> {
    let golden_angle = std::f64::consts::PI * (3.0 - 5f64.sqrt());
    (0..count)
        .map(|i| {
            let z = 1.0 - (2 * i + 1) as f64 / count as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let phi = i as f64 * golden_angle;
            Vec3::new(r * phi.cos(), r * phi.sin(), z) * radius
        })
        .collect()
}

/// Uniformly distributed rotation (Shoemake's quaternion construction).
fn random_rotation(rng: &mut impl Rng) -> [[f64; 3]; 3] {
    let tau = std::f64::consts::TAU;
    let (u1, u2, u3): (f64, f64, f64) = (rng.gen(), rng.gen(), rng.gen());
    let (a, b) = ((1.0 - u1).sqrt(), u1.sqrt());
    let (x, y, z, w) = (a * (tau * u2).sin(), a * (tau * u2).cos(), b * (tau * u3).sin(), b * (tau * u3).cos());
    [
        [1.0 - 2.0 * (y * y + z * z), 2.0 * (x * y - z * w), 2.0 * (x * z + y * w)],
        [2.0 * (x * y + z * w), 1.0 - 2.0 * (x * x + z * z), 2.0 * (y * z - x * w)],
        [2.0 * (x * z - y * w), 2.0 * (y * z + x * w), 1.0 - 2.0 * (x * x + y * y)],
    ]
}

/// Convex polyhedron with exactly `n_facets` triangular facets whose
/// `n_facets / 2 + 2` vertices lie on the sphere of radius `radius` about
/// the origin. The seed selects a random orientation of the spiral.
pub fn generate_inscribed_polyhedron(n_facets: usize, radius: f64, seed: u64) -> Result<ConvexMesh> {
    if n_facets < 4 || n_facets % 2 != 0 {
        return Err(Error::InvalidFacetCount(n_facets));
    }
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidRadius(format!("{radius}")));
    }
    let n_vertices = n_facets / 2 + 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rot = random_rotation(&mut rng);
    let points: Vec<Vec3> = fibonacci_sphere(n_vertices, 1.0)
        .into_iter()
        .map(|p| {
            let q = Vec3::new(
                rot[0][0] * p.x + rot[0][1] * p.y + rot[0][2] * p.z,
                rot[1][0] * p.x + rot[1][1] * p.y + rot[1][2] * p.z,
                rot[2][0] * p.x + rot[2][1] * p.y + rot[2][2] * p.z,
            );
            q * (radius / q.norm())
        })
        .collect();

    let tris = convex_hull(&points, &Tolerance::new(1e-12, radius))?;
    if tris.len() != n_facets {
        return Err(Error::HullFailed("hull facet count differs from the requested count"));
    }
    build_mesh(points, tris)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_facet_counts() {
        assert_eq!(generate_inscribed_polyhedron(7, 1.0, 0).unwrap_err(), Error::InvalidFacetCount(7));
        assert_eq!(generate_inscribed_polyhedron(2, 1.0, 0).unwrap_err(), Error::InvalidFacetCount(2));
        assert!(matches!(generate_inscribed_polyhedron(8, -1.0, 0), Err(Error::InvalidRadius(_))));
    }

    #[test]
    fn four_facets_give_a_tetrahedron() {
        let m = generate_inscribed_polyhedron(4, 1.0, 1).unwrap();
        assert_eq!((m.num_vertices(), m.num_facets(), m.num_edges()), (4, 4, 6));
        for v in m.vertices() {
            assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn five_hundred_facets() {
        let m = generate_inscribed_polyhedron(500, 1.0, 9).unwrap();
        assert_eq!((m.num_vertices(), m.num_edges(), m.num_facets()), (252, 750, 500));
        assert_eq!(m.num_vertices() + m.num_facets(), m.num_edges() + 2);
        for v in m.vertices() {
            assert!((v.norm() - 1.0).abs() <= 1e-9);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = generate_inscribed_polyhedron(200, 0.5, 42).unwrap();
        let b = generate_inscribed_polyhedron(200, 0.5, 42).unwrap();
        let c = generate_inscribed_polyhedron(200, 0.5, 43).unwrap();
        let bits = |m: &ConvexMesh| m.vertices().iter().map(|v| [v.x.to_bits(), v.y.to_bits(), v.z.to_bits()]).collect::<Vec<_>>();
        assert_eq!(bits(&a), bits(&b));
        assert_eq!(a.facet_vertex_ids(), b.facet_vertex_ids());
        assert_ne!(bits(&a), bits(&c));
    }

    #[test]
    fn spiral_points_sit_on_the_sphere() {
        for p in fibonacci_sphere(101, 2.5) {
            assert!((p.norm() - 2.5).abs() < 1e-12);
        }
    }
}
