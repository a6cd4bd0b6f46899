use super::{cb_step, finish, ClipResult, Counters, Interval};
use crate::geometry::Segment;
use crate::mesh::ConvexMesh;

/// Clips against every facet in turn.
pub fn clip_cb(mesh: &ConvexMesh, seg: &Segment) -> ClipResult {
    let tol = mesh.tolerance();
    let mut interval = Interval::initial(seg.mode);
    for facet in mesh.facets() {
        interval = cb_step(facet, seg, interval, &tol);
    }
    let n = mesh.num_facets();
    let counters = Counters {
        facets_examined: n,
        cb_steps: n,
        ..Counters::default()
    };
    finish(seg, interval, &tol, counters)
}
