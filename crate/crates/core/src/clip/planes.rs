use super::{cb_step, finish, projected_triangle_touches_origin, signs_straddle, ClipResult, Counters, Interval};
use crate::geometry::{diagonal_planes, sign_classify, Plane, Segment, SignClass};
use crate::mesh::ConvexMesh;

/// True when `plane` separates the vertices of facet `k` or passes through
/// one of them. `sign_cache`, when given, holds the sign class of every mesh
/// vertex and replaces the three evaluations.
pub fn facet_crossed_by(mesh: &ConvexMesh, k: usize, plane: &Plane, sign_cache: Option<&[SignClass]>) -> bool {
    let ids = mesh.facet(k).vertex_ids;
    let signs = match sign_cache {
        Some(cache) => ids.map(|i| cache[i]),
        None => {
            let tol = mesh.tolerance();
            ids.map(|i| plane.classify(mesh.vertex(i), &tol))
        }
    };
    signs_straddle(signs)
}

/// Clips with the two coordinate-aligned planes through the line as a
/// prefilter: only facets cut by both receive a half-space step.
pub fn clip_two_planes(mesh: &ConvexMesh, seg: &Segment) -> ClipResult {
    let tol = mesh.tolerance();
    let pair = diagonal_planes(seg, &tol);
    let (first, second) = (pair.first, pair.second);

    // bands are distances, scaled by the (non-unit) normal lengths
    let band1 = tol.abs() * first.normal().norm();
    let band2 = tol.abs() * second.normal().norm();
    let q: Vec<SignClass> = mesh
        .vertices()
        .iter()
        .map(|&v| sign_classify(first.eval(v), band1, 1.0))
        .collect();
    let mut counters = Counters {
        plane_tests: q.len(),
        ..Counters::default()
    };

    // Orthonormal frame across the line, for the touch test.
    let s_hat = seg.direction().normalized().expect("segment has nonzero length");
    let u = first.normal().normalized().expect("plane normal is nonzero");
    let w = s_hat.cross(u);

    let vertices = mesh.vertices();
    let mut interval = Interval::initial(seg.mode);
    let mut touched = false;
    for facet in mesh.facets() {
        let ids = facet.vertex_ids;
        counters.plane_tests += 3;
        if !signs_straddle(ids.map(|i| q[i])) {
            continue;
        }
        counters.plane_tests += 3;
        let corners = ids.map(|i| vertices[i]);
        if !signs_straddle(corners.map(|v| sign_classify(second.eval(v), band2, 1.0))) {
            continue;
        }
        counters.cb_steps += 1;
        interval = cb_step(facet, seg, interval, &tol);
        if !touched {
            let projected = corners.map(|v| {
                let d = v - seg.a;
                (u.dot(d), w.dot(d))
            });
            touched = projected_triangle_touches_origin(projected, tol.abs());
        }
    }
    counters.facets_examined = mesh.num_facets();
    if !touched {
        return ClipResult::miss(counters);
    }
    finish(seg, interval, &tol, counters)
}
