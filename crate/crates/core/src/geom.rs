//! Plane points, angle conventions and segment predicates.
//!
//! Angles follow the "line of angle θ" convention: the line
//! `x sinθ − y cosθ = c` has direction `(cosθ, sinθ)`. The *normal
//! coordinate* of a point is `x sinθ − y cosθ` and its *tangential
//! coordinate* is `x cosθ + y sinθ`.

use core::f64::consts::{FRAC_PI_2, PI};
use core::ops::{Add, Div, Mul, Neg, Sub};

pub(crate) mod math {
    #[inline]
    pub fn sin(x: f64) -> f64 {
        libm::sin(x)
    }
    #[inline]
    pub fn cos(x: f64) -> f64 {
        libm::cos(x)
    }
    #[inline]
    pub fn tan(x: f64) -> f64 {
        libm::tan(x)
    }
    #[inline]
    pub fn atan(x: f64) -> f64 {
        libm::atan(x)
    }
    #[inline]
    pub fn atan2(y: f64, x: f64) -> f64 {
        libm::atan2(y, x)
    }
    #[inline]
    pub fn hypot(x: f64, y: f64) -> f64 {
        libm::hypot(x, y)
    }
    #[inline]
    pub fn floor(x: f64) -> f64 {
        libm::floor(x)
    }
    #[inline]
    pub fn ceil(x: f64) -> f64 {
        libm::ceil(x)
    }
    #[inline]
    pub fn pow(x: f64, y: f64) -> f64 {
        libm::pow(x, y)
    }
    #[inline]
    pub fn fmod(x: f64, y: f64) -> f64 {
        libm::fmod(x, y)
    }
}

use math::{atan2, cos, hypot, sin};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn norm(self) -> f64 {
        hypot(self.x, self.y)
    }

    #[inline]
    pub fn dist(self, o: Point) -> f64 {
        (self - o).norm()
    }

    #[inline]
    pub fn midpoint(self, o: Point) -> Point {
        Point::new(0.5 * (self.x + o.x), 0.5 * (self.y + o.y))
    }

    /// `self + t (o − self)`.
    #[inline]
    pub fn lerp(self, o: Point, t: f64) -> Point {
        Point::new(self.x + t * (o.x - self.x), self.y + t * (o.y - self.y))
    }

    /// Direction angle of the vector in `(−π, π]`.
    #[inline]
    pub fn angle(self) -> f64 {
        atan2(self.y, self.x)
    }

    pub fn rotate(self, phi: f64) -> Point {
        let (s, c) = (sin(phi), cos(phi));
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, k: f64) -> Point {
        Point::new(self.x * k, self.y * k)
    }
}

impl Div<f64> for Point {
    type Output = Point;
    #[inline]
    fn div(self, k: f64) -> Point {
        Point::new(self.x / k, self.y / k)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl From<[f64; 2]> for Point {
    fn from(a: [f64; 2]) -> Self {
        Point::new(a[0], a[1])
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// Normal coordinate `x sinθ − y cosθ`; constant along lines of angle `θ`.
#[inline]
pub fn project(theta: f64, p: Point) -> f64 {
    p.x * sin(theta) - p.y * cos(theta)
}

/// Precomputed `sin`/`cos` of one angle, for the hot loops.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub theta: f64,
    pub sin: f64,
    pub cos: f64,
}

impl Direction {
    pub fn new(theta: f64) -> Self {
        Direction { theta, sin: sin(theta), cos: cos(theta) }
    }

    /// Normal coordinate, identical to [`project`].
    #[inline]
    pub fn normal(&self, p: Point) -> f64 {
        p.x * self.sin - p.y * self.cos
    }

    /// Position along the line, `x cosθ + y sinθ`.
    #[inline]
    pub fn tangential(&self, p: Point) -> f64 {
        p.x * self.cos + p.y * self.sin
    }

    #[inline]
    pub fn unit(&self) -> Point {
        Point::new(self.cos, self.sin)
    }
}

/// Reduces an angle to `[0, π)`: lines of angle `θ` and `θ + π` coincide.
pub fn reduce_line_angle(theta: f64) -> f64 {
    reduce_mod(theta, PI)
}

/// Reduces an angle to its rhombus class in `[0, π/2)`.
pub fn rhombus_class(theta: f64) -> f64 {
    reduce_mod(theta, FRAC_PI_2)
}

pub(crate) fn reduce_mod(theta: f64, period: f64) -> f64 {
    let mut r = math::fmod(theta, period);
    if r < 0.0 {
        r += period;
    }
    if r >= period {
        r -= period;
    }
    // fmod is exact, but the negative branch can round up to `period`.
    if r >= period {
        0.0
    } else {
        r
    }
}

/// Signed difference `a − b` wrapped into `(−period/2, period/2]`.
pub fn wrapped_difference(a: f64, b: f64, period: f64) -> f64 {
    let d = reduce_mod(a - b, period);
    if d > 0.5 * period {
        d - period
    } else {
        d
    }
}

/// Shortest distance from `p` to the closed segment `a b`.
pub fn point_segment_distance(p: Point, a: Point, b: Point) -> f64 {
    let d = b - a;
    let len2 = d.dot(d);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = ((p - a).dot(d) / len2).clamp(0.0, 1.0);
    p.dist(a.lerp(b, t))
}

/// How two closed segments meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Contact {
    Disjoint,
    /// A single common point at parameter `s` on the first and `t` on the second.
    Point { s: f64, t: f64 },
    /// A collinear overlap from `s0` to `s1` on the first segment, with the
    /// matching parameters `t0`, `t1` on the second.
    Overlap { s0: f64, s1: f64, t0: f64, t1: f64 },
}

/// Intersects the closed segments `a b` and `c d`, treating points within
/// `tol` (absolute length) of each other as touching.
pub fn segment_contact(a: Point, b: Point, c: Point, d: Point, tol: f64) -> Contact {
    let d1 = b - a;
    let d2 = d - c;
    let l1 = d1.norm();
    let l2 = d2.norm();

    if l1 <= tol && l2 <= tol {
        return if a.dist(c) <= tol { Contact::Point { s: 0.0, t: 0.0 } } else { Contact::Disjoint };
    }
    if l1 <= tol {
        return match project_onto(a, c, d, tol) {
            Some(t) => Contact::Point { s: 0.0, t },
            None => Contact::Disjoint,
        };
    }
    if l2 <= tol {
        return match project_onto(c, a, b, tol) {
            Some(s) => Contact::Point { s, t: 0.0 },
            None => Contact::Disjoint,
        };
    }

    let denom = d1.cross(d2);
    let w = c - a;
    // Distance of c and d from the carrier line of a b.
    let off_c = d1.cross(w) / l1;
    let off_d = d1.cross(d - a) / l1;
    if off_c.abs() <= tol && off_d.abs() <= tol {
        // Collinear: overlap of projections.
        let tc = w.dot(d1) / (l1 * l1);
        let td = (d - a).dot(d1) / (l1 * l1);
        let (lo, hi) = if tc <= td { (tc, td) } else { (td, tc) };
        let eta = tol / l1;
        let s0 = lo.max(0.0);
        let s1 = hi.min(1.0);
        if s0 > s1 + eta {
            return Contact::Disjoint;
        }
        let s0c = s0.min(1.0);
        let s1c = s1.max(0.0);
        let to_t = |s: f64| {
            let p = a.lerp(b, s);
            ((p - c).dot(d2) / (l2 * l2)).clamp(0.0, 1.0)
        };
        if (s1c - s0c) * l1 <= tol {
            let s = 0.5 * (s0c + s1c);
            return Contact::Point { s, t: to_t(s) };
        }
        return Contact::Overlap { s0: s0c, s1: s1c, t0: to_t(s0c), t1: to_t(s1c) };
    }
    if denom == 0.0 {
        return Contact::Disjoint;
    }
    let s = w.cross(d2) / denom;
    let t = w.cross(d1) / denom;
    let es = tol / l1;
    let et = tol / l2;
    if s < -es || s > 1.0 + es || t < -et || t > 1.0 + et {
        // Near-parallel segments whose endpoints touch are caught below.
        return endpoint_touch(a, b, c, d, tol);
    }
    Contact::Point { s: s.clamp(0.0, 1.0), t: t.clamp(0.0, 1.0) }
}

fn endpoint_touch(a: Point, b: Point, c: Point, d: Point, tol: f64) -> Contact {
    for (p, on_first, end) in [(c, true, 0.0), (d, true, 1.0), (a, false, 0.0), (b, false, 1.0)] {
        if on_first {
            if let Some(s) = project_onto(p, a, b, tol) {
                return Contact::Point { s, t: end };
            }
        } else if let Some(t) = project_onto(p, c, d, tol) {
            return Contact::Point { s: end, t };
        }
    }
    Contact::Disjoint
}

/// Parameter of the closest point of segment `a b` to `p`, when within `tol`.
fn project_onto(p: Point, a: Point, b: Point, tol: f64) -> Option<f64> {
    let d = b - a;
    let len2 = d.dot(d);
    let t = if len2 == 0.0 { 0.0 } else { ((p - a).dot(d) / len2).clamp(0.0, 1.0) };
    if p.dist(a.lerp(b, t)) <= tol {
        Some(t)
    } else {
        None
    }
}

/// Exact-sign orientation test used by the simplicity checker.
#[inline]
pub(crate) fn orient(a: Point, b: Point, c: Point) -> f64 {
    (b - a).cross(c - a)
}

/// Closed-segment intersection without tolerance, for simplicity checks.
pub(crate) fn segments_touch(a: Point, b: Point, c: Point, d: Point) -> bool {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if ((o1 > 0.0 && o2 < 0.0) || (o1 < 0.0 && o2 > 0.0))
        && ((o3 > 0.0 && o4 < 0.0) || (o3 < 0.0 && o4 > 0.0))
    {
        return true;
    }
    (o1 == 0.0 && in_box(a, b, c))
        || (o2 == 0.0 && in_box(a, b, d))
        || (o3 == 0.0 && in_box(c, d, a))
        || (o4 == 0.0 && in_box(c, d, b))
}

#[inline]
fn in_box(a: Point, b: Point, p: Point) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// A rigid motion (optionally followed by a reflection across the x-axis)
/// mapping original coordinates to posed ones:
/// `posed = reflect(rotate(p − origin, −angle))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    pub origin: Point,
    pub angle: f64,
    pub reflect: bool,
}

impl Pose {
    pub fn apply(&self, p: Point) -> Point {
        let q = (p - self.origin).rotate(-self.angle);
        if self.reflect {
            Point::new(q.x, -q.y)
        } else {
            q
        }
    }

    pub fn invert(&self, p: Point) -> Point {
        let q = if self.reflect { Point::new(p.x, -p.y) } else { p };
        q.rotate(self.angle) + self.origin
    }

    /// Original line angle of a posed line angle.
    pub fn unpose_angle(&self, posed: f64) -> f64 {
        if self.reflect {
            self.angle - posed
        } else {
            self.angle + posed
        }
    }

    /// Posed line angle of an original line angle.
    pub fn pose_angle(&self, original: f64) -> f64 {
        if self.reflect {
            self.angle - original
        } else {
            original - self.angle
        }
    }
}
