//! Incremental convex hull (quickhull point selection with outside sets).

use crate::error::{Error, Result};
use crate::geometry::{Tolerance, Vec3};

struct Face {
    v: [usize; 3],
    normal: Vec3,
    offset: f64,
    nb: [usize; 3],
    alive: bool,
    outside: Vec<usize>,
    mark: u32,
}

impl Face {
    fn new(points: &[Vec3], v: [usize; 3]) -> Face {
        let [a, b, c] = v.map(|i| points[i]);
        let normal = (b - a).cross(c - a).normalized().unwrap_or(Vec3::ZERO);
        Face {
            v,
            normal,
            offset: -normal.dot(a),
            nb: [usize::MAX; 3],
            alive: true,
            outside: Vec::new(),
            mark: 0,
        }
    }

    #[inline]
    fn dist(&self, p: Vec3) -> f64 {
        self.normal.dot(p) + self.offset
    }
}

/// Outward-oriented triangles of the convex hull of `points`, as index
/// triples into `points`. A point counts as outside a face only when it is
/// more than `tol.abs()` above it; points that never are do not become
/// hull vertices.
pub fn convex_hull(points: &[Vec3], tol: &Tolerance) -> Result<Vec<[usize; 3]>> {
    if points.len() < 4 {
        return Err(Error::HullFailed("fewer than four points"));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::NonFinite);
    }
    let band = tol.abs();
    let simplex = initial_simplex(points, band)?;
    let mut faces = simplex_faces(points, simplex);

    for (i, &p) in points.iter().enumerate() {
        if simplex.contains(&i) {
            continue;
        }
        if let Some(f) = best_face(&faces, 0..faces.len(), p, band) {
            faces[f].outside.push(i);
        }
    }

    let mut stack: Vec<usize> = (0..faces.len()).collect();
    let mut stamp = 0u32;
    let mut visible = Vec::new();
    let mut horizon: Vec<(usize, usize, usize)> = Vec::new();
    let mut orphans = Vec::new();

    while let Some(fi) = stack.pop() {
        if !faces[fi].alive || faces[fi].outside.is_empty() {
            continue;
        }
        let apex = *faces[fi]
            .outside
            .iter()
            .max_by(|&&i, &&j| faces[fi].dist(points[i]).total_cmp(&faces[fi].dist(points[j])))
            .expect("outside set is non-empty");
        let ap = points[apex];

        stamp += 1;
        visible.clear();
        horizon.clear();
        faces[fi].mark = stamp;
        visible.push(fi);
        let mut cursor = 0;
        while cursor < visible.len() {
            let f = visible[cursor];
            cursor += 1;
            for e in 0..3 {
                let g = faces[f].nb[e];
                if faces[g].mark == stamp {
                    continue;
                }
                if faces[g].dist(ap) > band {
                    faces[g].mark = stamp;
                    visible.push(g);
                } else {
                    horizon.push((faces[f].v[e], faces[f].v[(e + 1) % 3], g));
                }
            }
        }

        orphans.clear();
        for &f in &visible {
            faces[f].alive = false;
            orphans.extend(faces[f].outside.drain(..).filter(|&i| i != apex));
        }

        let first_new = faces.len();
        for &(a, b, outer) in &horizon {
            let id = faces.len();
            let mut face = Face::new(points, [a, b, apex]);
            face.nb[0] = outer;
            let back = faces[outer]
                .nb
                .iter()
                .position(|&n| faces[n].mark == stamp && !faces[n].alive && faces[n].v.contains(&a) && faces[n].v.contains(&b))
                .ok_or(Error::HullFailed("horizon face lost its neighbour"))?;
            faces[outer].nb[back] = id;
            faces.push(face);
        }
        let new_ids = first_new..faces.len();
        for id in new_ids.clone() {
            let [a, b, _] = faces[id].v;
            let next = new_ids
                .clone()
                .find(|&j| faces[j].v[0] == b)
                .ok_or(Error::HullFailed("horizon is not a closed loop"))?;
            let prev = new_ids
                .clone()
                .find(|&j| faces[j].v[1] == a)
                .ok_or(Error::HullFailed("horizon is not a closed loop"))?;
            faces[id].nb[1] = next;
            faces[id].nb[2] = prev;
        }

        for &q in &orphans {
            if let Some(f) = best_face(&faces, new_ids.clone(), points[q], band) {
                faces[f].outside.push(q);
            }
        }
        stack.extend(new_ids.filter(|&j| !faces[j].outside.is_empty()));
    }

    Ok(faces.iter().filter(|f| f.alive).map(|f| f.v).collect())
}

fn best_face(faces: &[Face], ids: impl Iterator<Item = usize>, p: Vec3, band: f64) -> Option<usize> {
    let mut best = None;
    let mut best_dist = band;
    for f in ids {
        let d = faces[f].dist(p);
        if d > best_dist {
            best_dist = d;
            best = Some(f);
        }
    }
    best
}

fn initial_simplex(points: &[Vec3], band: f64) -> Result<[usize; 4]> {
    let argmax = |score: &dyn Fn(Vec3) -> f64| {
        points
            .iter()
            .enumerate()
            .map(|(i, &p)| (i, score(p)))
            .fold((0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best })
    };
    let (i0, _) = argmax(&|p| -p.x);
    let p0 = points[i0];
    let (i1, d1) = argmax(&|p| (p - p0).norm());
    if d1 <= band {
        return Err(Error::HullFailed("points coincide"));
    }
    let p1 = points[i1];
    let axis = (p1 - p0) / d1;
    let (i2, d2) = argmax(&|p| axis.cross(p - p0).norm());
    if d2 <= band {
        return Err(Error::HullFailed("points are collinear"));
    }
    let n = axis.cross(points[i2] - p0).normalized().expect("non-collinear");
    let (i3, d3) = argmax(&|p| n.dot(p - p0).abs());
    if d3 <= band {
        return Err(Error::HullFailed("points are coplanar"));
    }
    Ok([i0, i1, i2, i3])
}

fn simplex_faces(points: &[Vec3], s: [usize; 4]) -> Vec<Face> {
    let tris = [
        ([s[0], s[1], s[2]], s[3]),
        ([s[0], s[3], s[1]], s[2]),
        ([s[1], s[3], s[2]], s[0]),
        ([s[2], s[3], s[0]], s[1]),
    ];
    let mut faces: Vec<Face> = tris
        .iter()
        .map(|&(mut v, opposite)| {
            if Face::new(points, v).dist(points[opposite]) > 0.0 {
                v.swap(1, 2);
            }
            Face::new(points, v)
        })
        .collect();
    for f in 0..4 {
        for e in 0..3 {
            let a = faces[f].v[e];
            let b = faces[f].v[(e + 1) % 3];
            let g = (0..4)
                .find(|&g| g != f && faces[g].v.contains(&a) && faces[g].v.contains(&b))
                .expect("tetrahedron faces share every edge");
            faces[f].nb[e] = g;
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mesh::build_mesh;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cube_corners_plus_interior_points() {
        let mut pts = Vec::new();
        for i in 0..8 {
            let c = |bit: usize| if i & bit != 0 { 1.0 } else { -1.0 };
            pts.push(Vec3::new(c(1) * 1.1, c(2) * 0.9, c(4)));
        }
        pts.push(Vec3::new(0.1, 0.2, -0.3));
        pts.push(Vec3::ZERO);
        let tris = convex_hull(&pts, &Tolerance::new(1e-12, 1.0)).unwrap();
        assert_eq!(tris.len(), 12);
        assert!(tris.iter().all(|t| t.iter().all(|&i| i < 8)));
    }

    #[test]
    fn random_points_hull_is_valid_and_encloses_all() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let pts: Vec<Vec3> = (0..400)
            .map(|_| Vec3::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let tris = convex_hull(&pts, &Tolerance::new(1e-12, 1.0)).unwrap();
        let mut used: Vec<usize> = tris.iter().flatten().copied().collect();
        used.sort();
        used.dedup();
        let remap = |i: usize| used.binary_search(&i).unwrap();
        let verts: Vec<Vec3> = used.iter().map(|&i| pts[i]).collect();
        let mesh = build_mesh(verts, tris.iter().map(|t| t.map(remap)).collect()).unwrap();
        for &p in &pts {
            assert!(mesh.contains(p));
        }
    }

    #[test]
    fn coplanar_input_is_rejected() {
        let pts: Vec<Vec3> = (0..10).map(|i| Vec3::new(i as f64, (i * i) as f64, 0.0)).collect();
        assert!(matches!(convex_hull(&pts, &Tolerance::default()), Err(Error::HullFailed(_))));
    }
}
