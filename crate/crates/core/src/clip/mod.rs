//! Clipping of segments and lines against a [`ConvexMesh`].
//!
//! Four interchangeable clippers produce the same [`ClipResult`]:
//!
//! - [`clip_cb`] runs a parametric half-space step against every facet.
//! - [`clip_two_planes`] prefilters facets with two coordinate-aligned planes
//!   through the line.
//! - [`clip_sqrt`] walks the ring of facets cut by one plane through the
//!   line, visiting about `sqrt(N)` facets on tessellated spheres.
//! - [`clip_oracle`] solves a line-triangle system per facet and serves as
//!   ground truth.

mod cb;
mod oracle;
mod planes;
mod walk;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::geometry::{ClipMode, Segment, SignClass, Tolerance, Vec3};
use crate::mesh::{ConvexMesh, Facet};

pub use cb::clip_cb;
pub use oracle::clip_oracle;
pub use planes::{clip_two_planes, facet_crossed_by};
pub use walk::{clip_sqrt, clip_sqrt_with_fallback, start_facet};

/// Parameter range `[t_min, t_max]` on `x(t) = a + s*t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub t_min: f64,
    pub t_max: f64,
}

impl Interval {
    /// The initial range for `mode`: `[0, 1]` or the whole line.
    pub fn initial(mode: ClipMode) -> Self {
        match mode {
            ClipMode::Segment => Interval { t_min: 0.0, t_max: 1.0 },
            ClipMode::Line => Interval {
                t_min: f64::NEG_INFINITY,
                t_max: f64::INFINITY,
            },
        }
    }

    pub fn empty() -> Self {
        Interval {
            t_min: f64::INFINITY,
            t_max: f64::NEG_INFINITY,
        }
    }

    pub fn is_empty(&self) -> bool {
        !(self.t_min <= self.t_max)
    }
}

/// Operation counts recorded by a single clip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Counters {
    pub facets_examined: usize,
    pub cb_steps: usize,
    /// Sign lookups and plane evaluations at vertices.
    pub plane_tests: usize,
    pub walk_visits: usize,
    /// 1 when the walk gave up and the result came from [`clip_cb`].
    pub fallbacks: usize,
}

impl std::ops::AddAssign for Counters {
    fn add_assign(&mut self, o: Counters) {
        self.facets_examined += o.facets_examined;
        self.cb_steps += o.cb_steps;
        self.plane_tests += o.plane_tests;
        self.walk_visits += o.walk_visits;
        self.fallbacks += o.fallbacks;
    }
}

impl fmt::Display for Counters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "facets_examined={} cb_steps={} plane_tests={} walk_visits={} fallbacks={}",
            self.facets_examined, self.cb_steps, self.plane_tests, self.walk_visits, self.fallbacks
        )
    }
}

/// Outcome of clipping one segment or line. `interval` is `None` on a miss.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClipResult {
    pub interval: Option<Interval>,
    pub clipped_a: Option<Vec3>,
    pub clipped_b: Option<Vec3>,
    pub counters: Counters,
}

impl ClipResult {
    pub fn miss(counters: Counters) -> Self {
        ClipResult {
            interval: None,
            clipped_a: None,
            clipped_b: None,
            counters,
        }
    }

    pub fn is_hit(&self) -> bool {
        self.interval.is_some()
    }

    /// True when both results miss, or both hit with endpoints whose
    /// positions along the line differ by at most `tol` (a length).
    pub fn agrees_with(&self, other: &ClipResult, seg: &Segment, tol: f64) -> bool {
        match (self.interval, other.interval) {
            (None, None) => true,
            (Some(x), Some(y)) => {
                let len = seg.direction().norm();
                (x.t_min - y.t_min).abs() * len <= tol && (x.t_max - y.t_max).abs() * len <= tol
            }
            _ => false,
        }
    }
}

impl fmt::Display for ClipResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.interval, self.clipped_a, self.clipped_b) {
            (Some(i), Some(a), Some(b)) => write!(f, "HIT {} {} {} {}", i.t_min, i.t_max, a, b),
            _ => write!(f, "MISS"),
        }
    }
}

/// Selects one of the four clippers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Cb,
    TwoPlanes,
    Sqrt,
    Oracle,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Cb, Algorithm::TwoPlanes, Algorithm::Sqrt, Algorithm::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Cb => "cb",
            Algorithm::TwoPlanes => "planes",
            Algorithm::Sqrt => "sqrt",
            Algorithm::Oracle => "oracle",
        }
    }

    /// Runs the clipper. The walk falls back to [`clip_cb`] when it stalls.
    pub fn clip(self, mesh: &ConvexMesh, seg: &Segment) -> ClipResult {
        match self {
            Algorithm::Cb => clip_cb(mesh, seg),
            Algorithm::TwoPlanes => clip_two_planes(mesh, seg),
            Algorithm::Sqrt => clip_sqrt_with_fallback(mesh, seg),
            Algorithm::Oracle => clip_oracle(mesh, seg),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "cb" => Ok(Algorithm::Cb),
            "planes" | "rho" => Ok(Algorithm::TwoPlanes),
            "sqrt" => Ok(Algorithm::Sqrt),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(Error::InvalidArgument(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// One parametric half-space step against `facet`.
///
/// With `xi = s . n`, a non-parallel facet cuts the interval at
/// `t = -(n . a + d) / xi`, bounding it from above when the line leaves
/// through the facet (`xi > 0`) and from below otherwise. A facet parallel to
/// the line (`|xi| <= eps * scale`) empties the interval when `a` lies
/// outside its plane by more than the tolerance.
#[inline]
pub fn cb_step(facet: &Facet, seg: &Segment, interval: Interval, tol: &Tolerance) -> Interval {
    let s = seg.direction();
    let xi = s.dot(facet.normal);
    let num = -facet.eval(seg.a);
    let band = tol.abs();
    if xi.abs() > band {
        let t = num / xi;
        if xi > 0.0 {
            Interval {
                t_max: t.min(interval.t_max),
                ..interval
            }
        } else {
            Interval {
                t_min: t.max(interval.t_min),
                ..interval
            }
        }
    } else if num < -band {
        Interval::empty()
    } else {
        interval
    }
}

/// Turns an accumulated interval into a [`ClipResult`].
///
/// An interval inverted by no more than `eps * scale` along the line is a
/// tangential touch and collapses to its midpoint.
pub(crate) fn finish(seg: &Segment, interval: Interval, tol: &Tolerance, counters: Counters) -> ClipResult {
    let Interval { mut t_min, mut t_max } = interval;
    if t_min.is_nan() || t_max.is_nan() {
        return ClipResult::miss(counters);
    }
    if t_min > t_max {
        let tol_t = tol.abs() / seg.direction().norm();
        if t_min - t_max > tol_t {
            return ClipResult::miss(counters);
        }
        let mid = 0.5 * (t_min + t_max);
        t_min = mid;
        t_max = mid;
    }
    if !t_min.is_finite() || !t_max.is_finite() {
        return ClipResult::miss(counters);
    }
    let endpoint = |t: f64, exact: f64, p: Vec3| {
        if seg.mode == ClipMode::Segment && t == exact {
            p
        } else {
            seg.point_at(t)
        }
    };
    ClipResult {
        interval: Some(Interval { t_min, t_max }),
        clipped_a: Some(endpoint(t_min, 0.0, seg.a)),
        clipped_b: Some(endpoint(t_max, 1.0, seg.b)),
        counters,
    }
}

/// Whether the origin lies in the closed 2-D triangle `p`, or within `band`
/// of its boundary.
///
/// The triangle is a facet projected along the line direction onto an
/// orthonormal frame of the plane perpendicular to it, with the line itself
/// at the origin. A facet touched by the line is exactly one that passes this
/// test, so a line that touches none of the candidate facets misses.
pub(crate) fn projected_triangle_touches_origin(p: [(f64, f64); 3], band: f64) -> bool {
    let cross = |a: (f64, f64), b: (f64, f64)| a.0 * b.1 - a.1 * b.0;
    let sub = |a: (f64, f64), b: (f64, f64)| (a.0 - b.0, a.1 - b.1);

    let area2 = cross(sub(p[1], p[0]), sub(p[2], p[0]));
    if area2 != 0.0 {
        let sides = [0, 1, 2].map(|i| cross(p[i], p[(i + 1) % 3]) * area2.signum());
        if sides.iter().all(|&c| c >= 0.0) {
            return true;
        }
    }
    (0..3).any(|i| point_segment_distance_sq(p[i], p[(i + 1) % 3]) <= band * band)
}

/// Squared distance from the origin to the segment `u -> v`.
fn point_segment_distance_sq(u: (f64, f64), v: (f64, f64)) -> f64 {
    let d = (v.0 - u.0, v.1 - u.1);
    let len_sq = d.0 * d.0 + d.1 * d.1;
    let t = if len_sq > 0.0 {
        (-(u.0 * d.0 + u.1 * d.1) / len_sq).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let x = u.0 + d.0 * t;
    let y = u.1 + d.1 * t;
    x * x + y * y
}

/// True unless all three classes are equal and off the plane.
#[inline]
pub(crate) fn signs_straddle(s: [SignClass; 3]) -> bool {
    s.contains(&SignClass::OnPlane) || s[0] != s[1] || s[1] != s[2]
}
