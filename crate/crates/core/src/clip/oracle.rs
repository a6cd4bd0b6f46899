use super::{finish, ClipResult, Counters, Interval};
use crate::geometry::{solve_line_triangle, ClipMode, Segment};
use crate::mesh::ConvexMesh;

/// Brute-force ground truth: intersects the line with every facet triangle
/// and takes the extreme hit parameters.
pub fn clip_oracle(mesh: &ConvexMesh, seg: &Segment) -> ClipResult {
    let tol = mesh.tolerance();
    let n = mesh.num_facets();
    let counters = Counters {
        facets_examined: n,
        ..Counters::default()
    };

    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for k in 0..n {
        let [v0, v1, v2] = mesh.facet_vertices(k);
        if let Ok(Some(hit)) = solve_line_triangle(seg, v0, v1, v2, &tol) {
            lo = lo.min(hit.t);
            hi = hi.max(hit.t);
        }
    }

    let interval = if lo > hi {
        if seg.mode == ClipMode::Segment && mesh.contains(seg.a) {
            Interval::initial(ClipMode::Segment)
        } else {
            return ClipResult::miss(counters);
        }
    } else {
        match seg.mode {
            ClipMode::Line => Interval { t_min: lo, t_max: hi },
            ClipMode::Segment => Interval {
                t_min: lo.max(0.0),
                t_max: hi.min(1.0),
            },
        }
    };
    finish(seg, interval, &tol, counters)
}
