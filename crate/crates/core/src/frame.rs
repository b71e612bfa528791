//! Support data for one angle: extrema of the normal coordinate, the six
//! extremal points, the bounding rectangle and the three arcs.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::curve::{CurvePos, JordanCurve};
use crate::error::Error;
use crate::geom::{reduce_line_angle, Direction, Point};
use crate::SUPPORT_TOL;

/// A curve point together with its position on the curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremal {
    pub point: Point,
    pub pos: CurvePos,
}

/// The two extreme points (by tangential coordinate) of the curve on one
/// line of angle `θ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinePair {
    /// Smallest tangential coordinate.
    pub lo: Extremal,
    /// Largest tangential coordinate.
    pub hi: Extremal,
}

/// Support data of a curve at one angle.
///
/// Naming of the extremal points: `on_max.hi` is `MM`, `on_max.lo` is `mM`,
/// `on_min.hi` is `Mm`, `on_min.lo` is `mm`, `on_mid.hi` is `Mμ` and
/// `on_mid.lo` is `mμ`.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportFrame {
    /// The angle reduced to `[0, π)`.
    pub theta: f64,
    pub dir: Direction,
    pub max: f64,
    pub min: f64,
    pub mid: f64,
    pub on_max: LinePair,
    pub on_min: LinePair,
    pub on_mid: LinePair,
    pub t_min: f64,
    pub t_max: f64,
    /// Midpoint of the two extremal points on the minimum line.
    pub a: Point,
    /// Midpoint of the two extremal points on the maximum line.
    pub b: Point,
}

impl SupportFrame {
    pub fn mm(&self) -> Point {
        self.on_min.lo.point
    }
    pub fn big_mm(&self) -> Point {
        self.on_max.hi.point
    }
    pub fn m_big_m(&self) -> Point {
        self.on_max.lo.point
    }
    pub fn big_m_m(&self) -> Point {
        self.on_min.hi.point
    }

    /// The strip `min ≤ π_θ ≤ max`.
    pub fn strip(&self) -> (f64, f64) {
        (self.min, self.max)
    }
}

/// Computes the support frame of `curve` at angle `theta`.
///
/// Flat edges on a support line contribute their endpoints; the extremal
/// points are the ones of smallest and largest tangential coordinate.
pub fn support_frame(curve: &JordanCurve, theta: f64) -> Result<SupportFrame, Error> {
    let theta = reduce_line_angle(theta);
    let dir = Direction::new(theta);
    let verts = curve.vertices();
    let proj: Vec<f64> = verts.iter().map(|&p| dir.normal(p)).collect();
    let max = proj.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = proj.iter().copied().fold(f64::INFINITY, f64::min);
    let tol = SUPPORT_TOL * curve.diameter();
    if max - min <= tol {
        return Err(Error::DegenerateFrame { theta });
    }
    let mid = 0.5 * (max + min);

    let on_line = |level: f64| -> LinePair {
        let mut lo: Option<(f64, Extremal)> = None;
        let mut hi: Option<(f64, Extremal)> = None;
        for (i, &p) in verts.iter().enumerate() {
            if (proj[i] - level).abs() > tol {
                continue;
            }
            let tau = dir.tangential(p);
            let e = Extremal { point: p, pos: CurvePos::vertex(i) };
            if lo.is_none_or(|(t, _)| tau < t) {
                lo = Some((tau, e));
            }
            if hi.is_none_or(|(t, _)| tau > t) {
                hi = Some((tau, e));
            }
        }
        LinePair { lo: lo.expect("extremum is a vertex").1, hi: hi.expect("extremum is a vertex").1 }
    };
    let on_max = on_line(max);
    let on_min = on_line(min);
    let on_mid = mid_line_pair(curve, &dir, &proj, mid);

    Ok(SupportFrame {
        theta,
        dir,
        max,
        min,
        mid,
        on_max,
        on_min,
        t_min: dir.tangential(on_mid.lo.point),
        t_max: dir.tangential(on_mid.hi.point),
        on_mid,
        a: on_min.hi.point.midpoint(on_min.lo.point),
        b: on_max.hi.point.midpoint(on_max.lo.point),
    })
}

/// Extreme crossings of the curve with the line `π_θ = level`, which lies
/// strictly between the support lines.
fn mid_line_pair(curve: &JordanCurve, dir: &Direction, proj: &[f64], level: f64) -> LinePair {
    let n = curve.len();
    let mut lo: Option<(f64, Extremal)> = None;
    let mut hi: Option<(f64, Extremal)> = None;
    let mut consider = |pos: CurvePos, point: Point| {
        let tau = dir.tangential(point);
        let e = Extremal { point, pos };
        if lo.is_none_or(|(t, _)| tau < t) {
            lo = Some((tau, e));
        }
        if hi.is_none_or(|(t, _)| tau > t) {
            hi = Some((tau, e));
        }
    };
    for i in 0..n {
        let (a, b) = curve.edge(i);
        let (pa, pb) = (proj[i], proj[(i + 1) % n]);
        if pa == level {
            consider(CurvePos::vertex(i), a);
        }
        if (pa < level && pb > level) || (pa > level && pb < level) {
            let frac = (level - pa) / (pb - pa);
            consider(CurvePos { edge: i, frac }, a.lerp(b, frac));
        }
    }
    LinePair { lo: lo.expect("closed curve crosses its mid line").1, hi: hi.expect("closed curve crosses its mid line").1 }
}

/// The rectangle cut out by the support lines of `θ` and `θ + π/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecRegion {
    pub theta: f64,
    pub min: f64,
    pub max: f64,
    pub min_perp: f64,
    pub max_perp: f64,
}

impl RecRegion {
    pub fn new(curve: &JordanCurve, theta: f64) -> Self {
        let d = Direction::new(theta);
        let e = Direction::new(theta + FRAC_PI_2);
        let mut r = RecRegion {
            theta,
            min: f64::INFINITY,
            max: f64::NEG_INFINITY,
            min_perp: f64::INFINITY,
            max_perp: f64::NEG_INFINITY,
        };
        for &p in curve.vertices() {
            let (s, t) = (d.normal(p), e.normal(p));
            r.min = r.min.min(s);
            r.max = r.max.max(s);
            r.min_perp = r.min_perp.min(t);
            r.max_perp = r.max_perp.max(t);
        }
        r
    }

    /// Normalized coordinates `(s, t) ∈ [0, 1]²` of a plane point.
    pub fn normalize(&self, p: Point) -> (f64, f64) {
        let d = Direction::new(self.theta);
        let e = Direction::new(self.theta + FRAC_PI_2);
        (
            (d.normal(p) - self.min) / (self.max - self.min),
            (e.normal(p) - self.min_perp) / (self.max_perp - self.min_perp),
        )
    }

    pub fn contains(&self, p: Point, tol: f64) -> bool {
        let s = Direction::new(self.theta).normal(p);
        let t = Direction::new(self.theta + FRAC_PI_2).normal(p);
        s >= self.min - tol && s <= self.max + tol && t >= self.min_perp - tol && t <= self.max_perp + tol
    }

    /// Distance from `p` to the rectangle boundary, for points inside.
    pub fn boundary_distance(&self, p: Point) -> f64 {
        let s = Direction::new(self.theta).normal(p);
        let t = Direction::new(self.theta + FRAC_PI_2).normal(p);
        (s - self.min).min(self.max - s).min(t - self.min_perp).min(self.max_perp - t)
    }

    /// The four corners, counter-clockwise from `(min, min_perp)` in
    /// normal coordinates.
    pub fn corners(&self) -> [Point; 4] {
        // A point with normal coordinates (s, t) for angles θ and θ + π/2 is
        // s (sinθ, −cosθ) + t (cosθ, sinθ).
        let d = Direction::new(self.theta);
        let at = |s: f64, t: f64| Point::new(s * d.sin + t * d.cos, -s * d.cos + t * d.sin);
        [
            at(self.min, self.min_perp),
            at(self.max, self.min_perp),
            at(self.max, self.max_perp),
            at(self.min, self.max_perp),
        ]
    }
}

/// A sub-path of a curve between two vertices, parametrized on `[0, 1]`
/// proportionally to arc length.
#[derive(Debug, Clone, PartialEq)]
pub struct Arc {
    /// Curve vertex indices in path order.
    pub indices: Vec<usize>,
    /// Whether the path follows increasing vertex indices.
    pub forward: bool,
    pub points: Vec<Point>,
    /// Normalized arc length at each vertex; first 0, last 1.
    pub params: Vec<f64>,
}

impl Arc {
    fn build(curve: &JordanCurve, start: usize, end: usize, forward: bool) -> Arc {
        let n = curve.len();
        let mut indices = Vec::new();
        let mut i = start;
        loop {
            indices.push(i);
            if i == end {
                break;
            }
            i = if forward { (i + 1) % n } else { (i + n - 1) % n };
        }
        let points: Vec<Point> = indices.iter().map(|&k| curve.vertex(k)).collect();
        let mut params = Vec::with_capacity(points.len());
        let mut acc = 0.0;
        params.push(0.0);
        for w in points.windows(2) {
            acc += w[0].dist(w[1]);
            params.push(acc);
        }
        if acc > 0.0 {
            for p in &mut params {
                *p /= acc;
            }
        }
        if let Some(last) = params.last_mut() {
            *last = 1.0;
        }
        Arc { indices, forward, points, params }
    }

    pub fn edge_count(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    pub fn start(&self) -> Point {
        self.points[0]
    }

    pub fn end(&self) -> Point {
        self.points[self.points.len() - 1]
    }

    /// Curve position of local parameter `u` on arc edge `k`.
    pub fn pos_on_edge(&self, k: usize, u: f64) -> CurvePos {
        if self.forward {
            CurvePos { edge: self.indices[k], frac: u }
        } else {
            CurvePos { edge: self.indices[k + 1], frac: 1.0 - u }
        }
    }

    pub fn point_on_edge(&self, k: usize, u: f64) -> Point {
        if u == 0.0 {
            self.points[k]
        } else if u == 1.0 {
            self.points[k + 1]
        } else {
            self.points[k].lerp(self.points[k + 1], u)
        }
    }

    /// Arc edge and local parameter of the arc parameter `r`.
    pub fn locate(&self, r: f64) -> (usize, f64) {
        let r = r.clamp(0.0, 1.0);
        let last = self.edge_count() - 1;
        let k = match self.params.binary_search_by(|p| p.total_cmp(&r)) {
            Ok(i) => i.min(last),
            Err(i) => (i - 1).min(last),
        };
        let len = self.params[k + 1] - self.params[k];
        let u = if len > 0.0 { ((r - self.params[k]) / len).clamp(0.0, 1.0) } else { 0.0 };
        (k, u)
    }

    pub fn point(&self, r: f64) -> Point {
        let (k, u) = self.locate(r);
        self.point_on_edge(k, u)
    }

    /// Global arc parameter of local parameter `u` on edge `k`.
    pub fn param(&self, k: usize, u: f64) -> f64 {
        self.params[k] + u * (self.params[k + 1] - self.params[k])
    }

    /// Arc parameter of a curve position, when the position lies on the arc.
    pub fn param_of(&self, pos: CurvePos, n: usize) -> Option<f64> {
        let pos = if pos.frac >= 1.0 { CurvePos { edge: (pos.edge + 1) % n, frac: 0.0 } } else { pos };
        if pos.frac <= 0.0 {
            return self.indices.iter().position(|&i| i == pos.edge).map(|k| self.params[k]);
        }
        for k in 0..self.edge_count() {
            let (edge, u) = if self.forward {
                (self.indices[k], pos.frac)
            } else {
                (self.indices[k + 1], 1.0 - pos.frac)
            };
            if edge == pos.edge {
                return Some(self.param(k, u));
            }
        }
        None
    }

    /// Start and end curve parameters (the arc runs from the first to the
    /// second in its own direction).
    pub fn curve_interval(&self, curve: &JordanCurve) -> (f64, f64) {
        (
            curve.param_of(CurvePos::vertex(self.indices[0])),
            curve.param_of(CurvePos::vertex(self.indices[self.indices.len() - 1])),
        )
    }
}

/// The arc from `mm` to `mM` through `mμ`, its complement, and the arc from
/// `Mm` to `MM` through `Mμ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcSplit {
    pub gamma: Arc,
    /// The complement of `gamma`, also run from `mm` to `mM`.
    pub gamma_o: Arc,
    pub big_gamma: Arc,
}

/// Splits the curve into arcs according to a support frame.
pub fn split_arcs(curve: &JordanCurve, frame: &SupportFrame) -> Result<ArcSplit, Error> {
    let n = curve.len();
    let mm = frame.on_min.lo.pos.edge;
    let m_big_m = frame.on_max.lo.pos.edge;
    let big_m_m = frame.on_min.hi.pos.edge;
    let big_mm = frame.on_max.hi.pos.edge;
    if mm == m_big_m || big_m_m == big_mm {
        return Err(Error::InvariantViolation(alloc::format!(
            "support lines share an extremal vertex at angle {}",
            frame.theta
        )));
    }
    let gamma_forward = forward_contains(n, mm, m_big_m, frame.on_mid.lo.pos);
    let big_forward = forward_contains(n, big_m_m, big_mm, frame.on_mid.hi.pos);
    Ok(ArcSplit {
        gamma: Arc::build(curve, mm, m_big_m, gamma_forward),
        gamma_o: Arc::build(curve, mm, m_big_m, !gamma_forward),
        big_gamma: Arc::build(curve, big_m_m, big_mm, big_forward),
    })
}

/// Whether walking forward from vertex `from` to vertex `to` passes `pos`.
fn forward_contains(n: usize, from: usize, to: usize, pos: CurvePos) -> bool {
    let total = (to + n - from) % n;
    let offset = (pos.edge + n - from) % n;
    (offset as f64 + pos.frac) < total as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{circle, unit_square};
    use crate::geom::project;
    use core::f64::consts::PI;

    fn close(a: Point, b: Point, tol: f64) -> bool {
        a.dist(b) <= tol
    }

    #[test]
    fn circle_frame_at_zero() {
        let c = circle(1.0, 720);
        let f = support_frame(&c, 0.0).unwrap();
        assert!((f.max - 1.0).abs() < 1e-12 && (f.min + 1.0).abs() < 1e-12);
        assert!(close(f.a, Point::new(0.0, 1.0), 1e-4));
        assert!(close(f.b, Point::new(0.0, -1.0), 1e-4));
        assert!(close(f.on_mid.lo.point, Point::new(-1.0, 0.0), 1e-4));
        assert!(close(f.on_mid.hi.point, Point::new(1.0, 0.0), 1e-4));
    }

    #[test]
    fn square_frame_flat_edges() {
        let f = support_frame(&unit_square(), 0.0).unwrap();
        assert_eq!((f.max, f.min), (0.0, -1.0));
        assert_eq!(f.on_max.hi.point, Point::new(1.0, 0.0));
        assert_eq!(f.on_max.lo.point, Point::new(0.0, 0.0));
        assert_eq!(f.on_min.hi.point, Point::new(1.0, 1.0));
        assert_eq!(f.on_min.lo.point, Point::new(0.0, 1.0));
        assert_eq!(f.a, Point::new(0.5, 1.0));
        assert_eq!(f.b, Point::new(0.5, 0.0));
    }

    #[test]
    fn angle_is_reduced_first() {
        let c = circle(1.0, 50);
        for theta in [0.3, 1.2, 2.9] {
            let f = support_frame(&c, theta).unwrap();
            let g = support_frame(&c, theta + PI).unwrap();
            assert_eq!(f.on_max, g.on_max);
            assert_eq!(f.on_min, g.on_min);
            assert!((f.max - g.max).abs() < 1e-12);
        }
    }

    #[test]
    fn circle_arcs() {
        let c = circle(1.0, 720);
        let f = support_frame(&c, 0.0).unwrap();
        let arcs = split_arcs(&c, &f).unwrap();
        assert!(arcs.gamma.points.iter().all(|p| p.x <= 1e-12));
        assert!(arcs.big_gamma.points.iter().all(|p| p.x >= -1e-12));
        assert_eq!(arcs.gamma.start(), f.mm());
        assert_eq!(arcs.gamma.end(), f.m_big_m());
        assert_eq!(arcs.big_gamma.start(), f.big_m_m());
        assert_eq!(arcs.big_gamma.end(), f.big_mm());
    }

    #[test]
    fn square_arcs() {
        let c = unit_square();
        let f = support_frame(&c, 0.0).unwrap();
        let arcs = split_arcs(&c, &f).unwrap();
        assert_eq!(arcs.gamma.points, [Point::new(0.0, 1.0), Point::new(0.0, 0.0)]);
        assert_eq!(arcs.big_gamma.points, [Point::new(1.0, 1.0), Point::new(1.0, 0.0)]);
        assert_eq!(arcs.gamma_o.points.len(), 4);
    }

    #[test]
    fn arc_parameters_round_trip() {
        let c = circle(1.0, 64);
        let f = support_frame(&c, 0.4).unwrap();
        let arcs = split_arcs(&c, &f).unwrap();
        let arc = &arcs.big_gamma;
        for r in [0.0, 0.1, 0.37, 0.5, 0.99, 1.0] {
            let (k, u) = arc.locate(r);
            assert!((arc.param(k, u) - r).abs() < 1e-12);
            let pos = arc.pos_on_edge(k, u);
            assert!(c.point_at(pos).dist(arc.point(r)) < 1e-12);
            let back = arc.param_of(pos, c.len()).unwrap();
            assert!((back - r).abs() < 1e-12, "{r} {back}");
        }
    }

    #[test]
    fn rec_region_contains_curve() {
        let c = circle(1.0, 100);
        let rec = RecRegion::new(&c, 0.3);
        for &p in c.vertices() {
            assert!(rec.contains(p, 1e-12));
        }
        let swapped = RecRegion::new(&c, 0.3 + FRAC_PI_2);
        for corner in swapped.corners() {
            assert!(rec.corners().iter().any(|k| k.dist(corner) < 1e-12));
        }
        for corner in rec.corners() {
            let s = project(0.3, corner);
            assert!((s - rec.min).abs() < 1e-12 || (s - rec.max).abs() < 1e-12);
        }
    }
}
