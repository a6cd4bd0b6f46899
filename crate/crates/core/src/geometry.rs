//! Vector, plane and segment primitives shared by every clipper.
//!
//! All tolerance decisions go through [`Tolerance`]: a relative epsilon
//! multiplied by a length scale (normally the bounding-sphere radius of the
//! mesh being clipped).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Relative tolerance used throughout the crate.
pub const DEFAULT_EPS: f64 = 1e-9;

/// A point or vector in E³.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Vec3 {
    pub const ZERO: Vec3 = Vec3::new(0.0, 0.0, 0.0);

    #[inline]
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Vec3 { x, y, z }
    }

    /// Checked constructor; rejects NaN and infinities.
    pub fn try_new(x: f64, y: f64, z: f64) -> Result<Self> {
        let v = Vec3::new(x, y, z);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite)
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    #[inline]
    pub fn dot(self, o: Vec3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    #[inline]
    pub fn cross(self, o: Vec3) -> Vec3 {
        Vec3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    #[inline]
    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Unit vector in the same direction, or `None` for the zero vector.
    pub fn normalized(self) -> Option<Vec3> {
        let n = self.norm();
        if n > 0.0 && n.is_finite() {
            Some(self / n)
        } else {
            None
        }
    }

    pub fn max_abs(self) -> f64 {
        self.x.abs().max(self.y.abs()).max(self.z.abs())
    }
}

impl Add for Vec3 {
    type Output = Vec3;
    #[inline]
    fn add(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Vec3 {
    #[inline]
    fn add_assign(&mut self, o: Vec3) {
        *self = *self + o;
    }
}

impl Sub for Vec3 {
    type Output = Vec3;
    #[inline]
    fn sub(self, o: Vec3) -> Vec3 {
        Vec3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn mul(self, k: f64) -> Vec3 {
        Vec3::new(self.x * k, self.y * k, self.z * k)
    }
}

impl Div<f64> for Vec3 {
    type Output = Vec3;
    #[inline]
    fn div(self, k: f64) -> Vec3 {
        Vec3::new(self.x / k, self.y / k, self.z / k)
    }
}

impl Neg for Vec3 {
    type Output = Vec3;
    #[inline]
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.x, self.y, self.z)
    }
}

/// Relative epsilon together with the length scale it applies to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub eps: f64,
    pub scale: f64,
}

impl Tolerance {
    pub const fn new(eps: f64, scale: f64) -> Self {
        Tolerance { eps, scale }
    }

    /// Absolute length tolerance, `eps * scale`.
    #[inline]
    pub fn abs(&self) -> f64 {
        self.eps * self.scale
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::new(DEFAULT_EPS, 1.0)
    }
}

/// Three-valued sign of a plane evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignClass {
    Negative,
    OnPlane,
    Positive,
}

impl Neg for SignClass {
    type Output = SignClass;
    fn neg(self) -> SignClass {
        match self {
            SignClass::Negative => SignClass::Positive,
            SignClass::OnPlane => SignClass::OnPlane,
            SignClass::Positive => SignClass::Negative,
        }
    }
}

/// Classifies `v` against the band `[-eps*scale, eps*scale]`.
#[inline]
pub fn sign_classify(v: f64, scale: f64, eps: f64) -> SignClass {
    let band = eps * scale;
    if v > band {
        SignClass::Positive
    } else if v < -band {
        SignClass::Negative
    } else {
        SignClass::OnPlane
    }
}

/// Implicit plane `a*x + b*y + c*z + d = 0`.
///
/// The normal is not required to be unit length; planes built by the
/// constructions in this module are either unit-normal or carry a leading
/// coefficient of one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Plane {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite() && d.is_finite()) {
            return Err(Error::NonFinite);
        }
        if a == 0.0 && b == 0.0 && c == 0.0 {
            return Err(Error::DegeneratePlane);
        }
        Ok(Plane { a, b, c, d })
    }

    /// Plane with the given normal passing through `point`.
    pub fn from_normal_and_point(normal: Vec3, point: Vec3) -> Result<Self> {
        Plane::new(normal.x, normal.y, normal.z, -normal.dot(point))
    }

    pub fn coefficients(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    #[inline]
    pub fn normal(&self) -> Vec3 {
        Vec3::new(self.a, self.b, self.c)
    }

    #[inline]
    pub fn offset(&self) -> f64 {
        self.d
    }

    #[inline]
    pub fn eval(&self, x: Vec3) -> f64 {
        plane_eval(self, x)
    }

    /// Classifies `x` with a band scaled by the normal length, so the band is
    /// a geometric distance whatever the normalization of the plane.
    #[inline]
    pub fn classify(&self, x: Vec3, tol: &Tolerance) -> SignClass {
        sign_classify(self.eval(x), tol.scale * self.normal().norm(), tol.eps)
    }

    /// Signed distance from `x` to the plane.
    pub fn distance(&self, x: Vec3) -> f64 {
        self.eval(x) / self.normal().norm()
    }

    pub fn flipped(&self) -> Plane {
        Plane {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }

    fn scaled_by(&self, k: f64) -> Plane {
        Plane {
            a: self.a * k,
            b: self.b * k,
            c: self.c * k,
            d: self.d * k,
        }
    }
}

#[inline]
pub fn plane_eval(p: &Plane, x: Vec3) -> f64 {
    p.a * x.x + p.b * x.y + p.c * x.z + p.d
}

/// Whether a [`Segment`] is clipped as a bounded segment or as the infinite
/// line through its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClipMode {
    #[default]
    Segment,
    Line,
}

/// Directed segment `a -> b`, parametrized as `x(t) = a + s*t` with `s = b - a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Vec3,
    pub b: Vec3,
    pub mode: ClipMode,
}

impl Segment {
    pub fn new(a: Vec3, b: Vec3) -> Result<Self> {
        Segment::with_mode(a, b, ClipMode::Segment)
    }

    /// The infinite line through `a` and `b`.
    pub fn line(a: Vec3, b: Vec3) -> Result<Self> {
        Segment::with_mode(a, b, ClipMode::Line)
    }

    pub fn with_mode(a: Vec3, b: Vec3, mode: ClipMode) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::NonFinite);
        }
        if a == b {
            return Err(Error::DegenerateSegment);
        }
        Ok(Segment { a, b, mode })
    }

    pub fn in_mode(self, mode: ClipMode) -> Self {
        Segment { mode, ..self }
    }

    #[inline]
    pub fn direction(&self) -> Vec3 {
        self.b - self.a
    }

    #[inline]
    pub fn point_at(&self, t: f64) -> Vec3 {
        self.a + self.direction() * t
    }

    /// Distance from `p` to the infinite line through the segment.
    pub fn distance_to_line(&self, p: Vec3) -> f64 {
        let s = self.direction();
        s.cross(p - self.a).norm() / s.norm()
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.a, self.b)
    }
}

/// Unit-normal plane containing the line of `seg` and the point `p`.
pub fn plane_through_line_and_point(seg: &Segment, p: Vec3, tol: &Tolerance) -> Result<Plane> {
    let s = seg.direction();
    let n = s.cross(p - seg.a);
    let n_len = n.norm();
    // |s x (p - a)| / |s| is the distance from p to the line.
    if !(n_len > tol.abs() * s.norm()) {
        return Err(Error::DegeneratePlane);
    }
    Plane::from_normal_and_point(n / n_len, seg.a)
}

/// Unit-normal plane containing the line of `seg` and perpendicular to `rho1`,
/// which must itself contain the line.
pub fn orthogonal_plane_through_line(seg: &Segment, rho1: &Plane, tol: &Tolerance) -> Result<Plane> {
    let s = seg.direction();
    let n1 = rho1.normal();
    let n1_len = n1.norm();
    let band = tol.abs() * n1_len;
    if rho1.eval(seg.a).abs() > band || rho1.eval(seg.b).abs() > band {
        return Err(Error::DegeneratePlane);
    }
    let n = s.cross(n1);
    let n_len = n.norm();
    if !(n_len > tol.eps * s.norm() * n1_len) {
        return Err(Error::DegeneratePlane);
    }
    Plane::from_normal_and_point(n / n_len, seg.a)
}

/// Pair of planes whose intersection is the line of a segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePair {
    pub first: Plane,
    pub second: Plane,
    /// True when the coordinate-aligned form could not be used for the second
    /// plane and it was replaced by the orthogonal construction.
    pub fallback: bool,
}

/// Two planes through the line of `seg` that are each parallel to a coordinate
/// axis: the first has no `y` term (`A x + C z + D`), the second no `x` term
/// (`B y + C z + D`). Each is scaled so its leading nonzero coefficient is 1.
///
/// A line parallel to the `y` axis gives the first plane the form `x = const`.
/// When the second plane cannot take its form (line parallel to the `x` axis)
/// or would coincide with the first (horizontal lines), it is replaced by the
/// unit-normal plane orthogonal to the first and `fallback` is set.
pub fn diagonal_planes(seg: &Segment, tol: &Tolerance) -> PlanePair {
    let s = seg.direction();
    let s_len = s.norm();
    let tiny = tol.eps * s_len;

    let mut n1 = Vec3::new(s.z, 0.0, -s.x);
    if n1.norm() <= tiny {
        n1 = Vec3::new(1.0, 0.0, 0.0);
    }
    let first = leading_one(Plane::from_normal_and_point(n1, seg.a).expect("nonzero normal"));

    let n2 = Vec3::new(0.0, s.z, -s.y);
    let n1 = first.normal();
    let independent = n2.norm() > tiny && n1.cross(n2).norm() > tol.eps * n1.norm() * n2.norm();
    if independent {
        let second = leading_one(Plane::from_normal_and_point(n2, seg.a).expect("nonzero normal"));
        PlanePair {
            first,
            second,
            fallback: false,
        }
    } else {
        let second = orthogonal_plane_through_line(seg, &first, tol)
            .expect("first diagonal plane contains the line by construction");
        PlanePair {
            first,
            second,
            fallback: true,
        }
    }
}

fn leading_one(p: Plane) -> Plane {
    let lead = [p.a, p.b, p.c]
        .into_iter()
        .find(|c| *c != 0.0)
        .expect("plane normal is nonzero");
    p.scaled_by(1.0 / lead)
}

/// Barycentric/parametric solution of a line-triangle intersection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleHit {
    pub p: f64,
    pub q: f64,
    pub t: f64,
}

/// Intersects the infinite line of `seg` with triangle `(v0, v1, v2)` by
/// solving `[s1 | s2 | -s] (p, q, t)^T = a - v0` with partial pivoting.
///
/// Returns `Ok(None)` when the line misses the triangle or is parallel to its
/// plane. The barycentric bounds are relaxed by `tol.eps`.
pub fn solve_line_triangle(
    seg: &Segment,
    v0: Vec3,
    v1: Vec3,
    v2: Vec3,
    tol: &Tolerance,
) -> Result<Option<TriangleHit>> {
    let s1 = v1 - v0;
    let s2 = v2 - v0;
    if 0.5 * s1.cross(s2).norm() <= tol.eps * tol.scale * tol.scale {
        return Err(Error::DegenerateTriangle);
    }
    let s = seg.direction();
    let r = seg.a - v0;
    let mut m = [
        [s1.x, s2.x, -s.x, r.x],
        [s1.y, s2.y, -s.y, r.y],
        [s1.z, s2.z, -s.z, r.z],
    ];
    let pivot_floor = tol.abs();
    for col in 0..3 {
        let pivot_row = (col..3)
            .max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))
            .unwrap_or(col);
        if m[pivot_row][col].abs() < pivot_floor {
            return Ok(None);
        }
        m.swap(col, pivot_row);
        for row in col + 1..3 {
            let f = m[row][col] / m[col][col];
            for k in col..4 {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    let t = m[2][3] / m[2][2];
    let q = (m[1][3] - m[1][2] * t) / m[1][1];
    let p = (m[0][3] - m[0][1] * q - m[0][2] * t) / m[0][0];

    let eps = tol.eps;
    if p >= -eps && q >= -eps && p + q <= 1.0 + eps {
        Ok(Some(TriangleHit { p, q, t }))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: Tolerance = Tolerance::new(DEFAULT_EPS, 1.0);

    fn v(x: f64, y: f64, z: f64) -> Vec3 {
        Vec3::new(x, y, z)
    }

    fn seg(a: Vec3, b: Vec3) -> Segment {
        Segment::new(a, b).unwrap()
    }

    /// True when `p` is `expected` up to a nonzero factor.
    fn same_plane(p: &Plane, expected: [f64; 4]) -> bool {
        let c = p.coefficients();
        let (i, _) = expected
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.abs().total_cmp(&b.1.abs()))
            .unwrap();
        let k = c[i] / expected[i];
        c.iter().zip(expected).all(|(a, b)| (a - k * b).abs() < 1e-12)
    }

    #[test]
    fn plane_eval_examples() {
        let p = Plane::new(1.0, 1.0, 1.0, -1.0).unwrap();
        assert_eq!(plane_eval(&p, Vec3::ZERO), -1.0);
        assert!(plane_eval(&p, v(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)).abs() < 1e-15);
        let x0 = Plane::new(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(plane_eval(&x0, v(-1.0, 0.25, 0.25)), -1.0);
    }

    #[test]
    fn constructors_reject_bad_input() {
        assert_eq!(Plane::new(0.0, 0.0, 0.0, 1.0), Err(Error::DegeneratePlane));
        assert_eq!(Plane::new(f64::NAN, 0.0, 1.0, 1.0), Err(Error::NonFinite));
        assert_eq!(Vec3::try_new(f64::INFINITY, 0.0, 0.0), Err(Error::NonFinite));
        assert_eq!(Segment::new(Vec3::ZERO, Vec3::ZERO), Err(Error::DegenerateSegment));
    }

    #[test]
    fn sign_classify_examples() {
        assert_eq!(sign_classify(0.0, 1.0, 1e-12), SignClass::OnPlane);
        assert_eq!(sign_classify(5.0, 1.0, 1e-12), SignClass::Positive);
        assert_eq!(sign_classify(-3e-13, 1.0, 1e-12), SignClass::OnPlane);
        assert_eq!(sign_classify(-3e-12, 1.0, 1e-12), SignClass::Negative);
    }

    #[test]
    fn plane_through_line_and_point_examples() {
        let p = plane_through_line_and_point(&seg(Vec3::ZERO, v(1.0, 0.0, 0.0)), v(0.0, 1.0, 0.0), &TOL).unwrap();
        assert!(same_plane(&p, [0.0, 0.0, 1.0, 0.0]));
        let p = plane_through_line_and_point(&seg(Vec3::ZERO, v(0.0, 0.0, 1.0)), v(1.0, 0.0, 0.0), &TOL).unwrap();
        assert!(same_plane(&p, [0.0, 1.0, 0.0, 0.0]));
        assert_eq!(
            plane_through_line_and_point(&seg(Vec3::ZERO, v(1.0, 0.0, 0.0)), v(2.0, 0.0, 0.0), &TOL),
            Err(Error::DegeneratePlane)
        );
    }

    #[test]
    fn orthogonal_plane_examples() {
        let x_axis = seg(Vec3::ZERO, v(1.0, 0.0, 0.0));
        let z0 = Plane::new(0.0, 0.0, 1.0, 0.0).unwrap();
        let y0 = Plane::new(0.0, 1.0, 0.0, 0.0).unwrap();
        assert!(same_plane(&orthogonal_plane_through_line(&x_axis, &z0, &TOL).unwrap(), [0.0, 1.0, 0.0, 0.0]));
        assert!(same_plane(&orthogonal_plane_through_line(&x_axis, &y0, &TOL).unwrap(), [0.0, 0.0, 1.0, 0.0]));
        // (1,1,0) x (0,0,1) = (1,-1,0)
        let diag = seg(Vec3::ZERO, v(1.0, 1.0, 0.0));
        let p = orthogonal_plane_through_line(&diag, &z0, &TOL).unwrap();
        assert!(same_plane(&p, [1.0, -1.0, 0.0, 0.0]));
        assert!((p.normal().norm() - 1.0).abs() < 1e-15);
        // rho1 not containing the line
        let z1 = Plane::new(0.0, 0.0, 1.0, -1.0).unwrap();
        assert_eq!(orthogonal_plane_through_line(&x_axis, &z1, &TOL), Err(Error::DegeneratePlane));
    }

    #[test]
    fn diagonal_planes_general_direction() {
        let s = seg(Vec3::ZERO, v(1.0, 1.0, 1.0));
        let pair = diagonal_planes(&s, &TOL);
        assert!(!pair.fallback);
        assert_eq!(pair.first.coefficients(), [1.0, 0.0, -1.0, 0.0]);
        assert_eq!(pair.second.coefficients(), [0.0, 1.0, -1.0, 0.0]);
        for p in [pair.first, pair.second] {
            assert_eq!(p.eval(s.a), 0.0);
            assert_eq!(p.eval(s.b), 0.0);
        }
    }

    #[test]
    fn diagonal_planes_line_along_y() {
        let s = seg(Vec3::ZERO, v(0.0, 1.0, 0.0));
        let pair = diagonal_planes(&s, &TOL);
        assert!(!pair.fallback);
        assert_eq!(pair.first.coefficients(), [1.0, 0.0, 0.0, 0.0]);
        assert!(same_plane(&pair.second, [0.0, 0.0, 1.0, 0.0]));
        assert_eq!(pair.second.coefficients()[2], 1.0);
    }

    #[test]
    fn diagonal_planes_line_along_x_falls_back() {
        let s = seg(Vec3::ZERO, v(1.0, 0.0, 0.0));
        let pair = diagonal_planes(&s, &TOL);
        assert!(pair.fallback);
        assert_eq!(pair.first.coefficients(), [0.0, 0.0, 1.0, 0.0]);
        assert!(same_plane(&pair.second, [0.0, 1.0, 0.0, 0.0]));
    }

    #[test]
    fn diagonal_planes_horizontal_line_falls_back() {
        // both coordinate forms collapse to z = const
        let s = seg(v(0.0, 0.0, 2.0), v(1.0, 3.0, 2.0));
        let pair = diagonal_planes(&s, &TOL);
        assert!(pair.fallback);
        let n1 = pair.first.normal();
        let n2 = pair.second.normal();
        assert!(n1.cross(n2).norm() > 0.5);
        for p in [pair.first, pair.second] {
            assert!(p.eval(s.a).abs() < 1e-12 && p.eval(s.b).abs() < 1e-12);
        }
    }

    #[test]
    fn solve_line_triangle_examples() {
        let s = seg(v(-1.0, 0.25, 0.25), v(1.0, 0.25, 0.25));
        let hit = solve_line_triangle(&s, Vec3::ZERO, v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0), &TOL)
            .unwrap()
            .unwrap();
        assert!((hit.p - 0.25).abs() < 1e-15 && (hit.q - 0.25).abs() < 1e-15 && (hit.t - 0.5).abs() < 1e-15);

        let hit = solve_line_triangle(&s, v(1.0, 0.0, 0.0), v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0), &TOL)
            .unwrap()
            .unwrap();
        assert!((hit.t - 0.75).abs() < 1e-15);

        let miss = seg(v(-1.0, 2.0, 2.0), v(1.0, 2.0, 2.0));
        assert_eq!(
            solve_line_triangle(&miss, Vec3::ZERO, v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0), &TOL).unwrap(),
            None
        );
    }

    #[test]
    fn solve_line_triangle_parallel_and_degenerate() {
        let s = seg(v(-1.0, 0.25, 0.25), v(-1.0, 0.75, 0.25));
        assert_eq!(
            solve_line_triangle(&s, Vec3::ZERO, v(0.0, 1.0, 0.0), v(0.0, 0.0, 1.0), &TOL).unwrap(),
            None
        );
        assert_eq!(
            solve_line_triangle(&s, Vec3::ZERO, v(1.0, 1.0, 1.0), v(2.0, 2.0, 2.0), &TOL),
            Err(Error::DegenerateTriangle)
        );
    }
}
