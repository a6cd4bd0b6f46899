use super::{cb_step, clip_cb, finish, projected_triangle_touches_origin, ClipResult, Counters, Interval};
use crate::error::{Error, Result};
use crate::geometry::{orthogonal_plane_through_line, plane_through_line_and_point, Plane, Segment};
use crate::mesh::ConvexMesh;

const PLUS1: [usize; 3] = [1, 2, 0];
const PLUS2: [usize; 3] = [2, 0, 1];

/// Lowest-index facet whose plane does not contain the line and whose
/// centroid is off the line.
pub fn start_facet(mesh: &ConvexMesh, seg: &Segment) -> Option<usize> {
    start_and_plane(mesh, seg).map(|(k, _)| k)
}

/// The start facet with the plane through the line and its centroid.
fn start_and_plane(mesh: &ConvexMesh, seg: &Segment) -> Option<(usize, Plane)> {
    let tol = mesh.tolerance();
    let band = tol.abs();
    (0..mesh.num_facets()).find_map(|k| {
        let f = mesh.facet(k);
        if f.eval(seg.a).abs() <= band && f.eval(seg.b).abs() <= band {
            return None;
        }
        plane_through_line_and_point(seg, mesh.facet_centroid(k), &tol)
            .ok()
            .map(|rho1| (k, rho1))
    })
}

/// Clips by walking the ring of facets cut by a plane `rho1` through the line
/// and the centroid of a start facet. Facets on the ring that are also cut by
/// the perpendicular plane `rho2` through the line receive a half-space step.
///
/// Vertices lying on `rho1` count as positive when choosing the edge to cross,
/// so both facets sharing an edge agree on whether it is crossed. A facet
/// entered across a crossed edge then has exactly one other crossed edge,
/// decided by the sign of its third vertex.
pub fn clip_sqrt(mesh: &ConvexMesh, seg: &Segment) -> Result<ClipResult> {
    let tol = mesh.tolerance();
    let band = tol.abs();
    let (start, rho1) = start_and_plane(mesh, seg).ok_or(Error::WalkStalled { facet: 0 })?;
    let rho2 = orthogonal_plane_through_line(seg, &rho1, &tol)?;
    let (n1, d1) = (rho1.normal(), rho1.offset());
    let (n2, d2) = (rho2.normal(), rho2.offset());
    let vertices = mesh.vertices();
    let facets = mesh.facets();
    let eval = |i: usize| {
        let v = vertices[i];
        (n1.dot(v) + d1, n2.dot(v) + d2)
    };

    let n = facets.len();
    let mut counters = Counters::default();
    let mut interval = Interval::initial(seg.mode);
    let mut touched = false;

    let ids = facets[start].vertex_ids;
    let f = ids.map(eval);
    counters.plane_tests += 6;
    let e = (0..3)
        .find(|&e| (f[e].0 >= -band) != (f[PLUS1[e]].0 >= -band))
        .ok_or(Error::WalkStalled { facet: start })?;
    // the crossed edge (u, w) as oriented in the facet just left
    let (mut u, mut w) = (f[e], f[PLUS1[e]]);
    let mut k = start;
    let mut corners = f;
    let mut next = e;
    loop {
        counters.walk_visits += 1;
        // rho2 cuts the facet unless its three values are beyond the band on one side
        let [(_, a), (_, b), (_, c)] = corners;
        if !((a > band) & (b > band) & (c > band)) && !((a < -band) & (b < -band) & (c < -band)) {
            counters.cb_steps += 1;
            interval = cb_step(&facets[k], seg, interval, &tol);
            if !touched {
                touched = projected_triangle_touches_origin(corners, band);
            }
        }

        let link = mesh.edge_links(k)[next];
        k = link.facet;
        if k == start {
            break;
        }
        if counters.walk_visits >= n {
            return Err(Error::WalkUnclosed);
        }
        let fx = eval(link.apex);
        counters.plane_tests += 2;
        // the new facet lists the shared edge as (w, u), followed by the apex
        corners = [w, u, fx];
        let same = (fx.0 >= -band) == (u.0 >= -band);
        next = if same { PLUS2[link.edge] } else { PLUS1[link.edge] };
        u = if same { fx } else { u };
        w = if same { w } else { fx };
    }
    counters.facets_examined = counters.walk_visits;
    if !touched {
        return Ok(ClipResult::miss(counters));
    }
    Ok(finish(seg, interval, &tol, counters))
}

/// [`clip_sqrt`], replaced by [`clip_cb`] when the walk fails. The fallback
/// is recorded in `counters.fallbacks`.
pub fn clip_sqrt_with_fallback(mesh: &ConvexMesh, seg: &Segment) -> ClipResult {
    match clip_sqrt(mesh, seg) {
        Ok(r) => r,
        Err(_) => {
            let mut r = clip_cb(mesh, seg);
            r.counters.fallbacks = 1;
            r
        }
    }
}
