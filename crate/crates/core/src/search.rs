//! Rhombus search: intersect the medians of `θ` and `θ + π/2`, lift each
//! meeting point to its two chords, and check the result.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::corners::{find_special_corners, CornerRecord};
use crate::curve::{CurvePos, JordanCurve};
use crate::error::Error;
use crate::geom::math::atan2;
use crate::geom::{rhombus_class, segment_contact, wrapped_difference, Contact, Point};
use crate::median::{Median, MedianSegment, ZERO_TOL};
use crate::DEGENERACY_FLOOR;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Metrics {
    /// Longest side over shortest side, minus one.
    pub side_dispersion: f64,
    /// Largest distance from a vertex to the curve.
    pub on_curve_residual: f64,
    pub min_vertex_separation: f64,
}

impl Metrics {
    pub fn of(vertices: &[Point; 4], curve: &JordanCurve) -> Metrics {
        let sides: [f64; 4] = core::array::from_fn(|k| vertices[k].dist(vertices[(k + 1) % 4]));
        let longest = sides.iter().copied().fold(0.0, f64::max);
        let shortest = sides.iter().copied().fold(f64::INFINITY, f64::min);
        let mut sep = f64::INFINITY;
        for i in 0..4 {
            for j in (i + 1)..4 {
                sep = sep.min(vertices[i].dist(vertices[j]));
            }
        }
        Metrics {
            side_dispersion: if shortest > 0.0 { longest / shortest - 1.0 } else { f64::INFINITY },
            on_curve_residual: vertices.iter().map(|&v| curve.distance_to(v)).fold(0.0, f64::max),
            min_vertex_separation: sep,
        }
    }
}

/// An inscribed rhombus with diagonals of angles `θ` and `θ + π/2`.
///
/// Vertices are in polygon order `[p₁, q₁, p₂, q₂]`: `p₁ p₂` is the diagonal
/// of angle `θ` and `q₁ q₂` the other one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhombusCandidate {
    /// Angle class in `[0, π/2)`.
    pub theta: f64,
    pub center: Point,
    pub vertices: [Point; 4],
    /// Curve parameters of the vertices.
    pub preimages: [f64; 4],
    pub metrics: Metrics,
}

impl RhombusCandidate {
    /// Builds a candidate from the curve positions `[p₁, q₁, p₂, q₂]`.
    pub fn from_positions(curve: &JordanCurve, theta: f64, pos: [CurvePos; 4]) -> Self {
        let vertices = pos.map(|p| curve.point_at(p));
        Self::from_vertices(curve, theta, vertices, pos.map(|p| curve.param_of(p)))
    }

    pub fn from_vertices(curve: &JordanCurve, theta: f64, vertices: [Point; 4], preimages: [f64; 4]) -> Self {
        let m1 = vertices[0].midpoint(vertices[2]);
        let m2 = vertices[1].midpoint(vertices[3]);
        RhombusCandidate {
            theta: rhombus_class(theta),
            center: m1.midpoint(m2),
            vertices,
            preimages,
            metrics: Metrics::of(&vertices, curve),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    /// Angle class in `[0, π/2)`.
    pub theta: f64,
    pub candidates: Vec<RhombusCandidate>,
    /// A median had a positive-area piece.
    pub thick_median: bool,
    /// A special corner of this angle exists, so existence is not guaranteed.
    pub not_guaranteed: bool,
    /// Empty result where existence is guaranteed.
    pub finding: bool,
}

/// Finds inscribed rhombi of angle `theta`.
pub fn find_rhombi(curve: &JordanCurve, theta: f64) -> Result<SearchOutcome, Error> {
    find_rhombi_with_corners(curve, theta, &find_special_corners(curve))
}

/// [`find_rhombi`] with precomputed special corners.
pub fn find_rhombi_with_corners(
    curve: &JordanCurve,
    theta: f64,
    corners: &[CornerRecord],
) -> Result<SearchOutcome, Error> {
    let theta = rhombus_class(theta);
    let first = Median::build(curve, theta)?;
    let second = Median::build(curve, theta + FRAC_PI_2)?;
    let tol = ZERO_TOL * curve.diameter();
    let mut candidates = Vec::new();
    for hit in crossings(&first.set.segments, &second.set.segments, tol) {
        let (p1, p2) = first.set.segments[hit.first].chord_at(&first.arcs, hit.s);
        let (q1, q2) = second.set.segments[hit.second].chord_at(&second.arcs, hit.t);
        candidates.push(RhombusCandidate::from_positions(curve, theta, [p1, q1, p2, q2]));
    }
    let candidates = finalize(candidates, curve.diameter());
    let not_guaranteed = corners.iter().any(|c| c.special_angles.contains(theta));
    Ok(SearchOutcome {
        theta,
        finding: candidates.is_empty() && !not_guaranteed,
        candidates,
        thick_median: first.set.thick || second.set.thick,
        not_guaranteed,
    })
}

/// A meeting point of segment `first` (at fraction `s`) with segment
/// `second` (at fraction `t`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Crossing {
    pub first: usize,
    pub s: f64,
    pub second: usize,
    pub t: f64,
}

/// All meeting points of two segment families. Collinear overlaps yield
/// both ends and the middle of the overlap.
pub(crate) fn crossings(a: &[MedianSegment], b: &[MedianSegment], tol: f64) -> Vec<Crossing> {
    let boxes = |segs: &[MedianSegment]| -> Vec<[f64; 4]> {
        segs.iter()
            .map(|s| {
                [
                    s.start.x.min(s.end.x) - tol,
                    s.start.x.max(s.end.x) + tol,
                    s.start.y.min(s.end.y) - tol,
                    s.start.y.max(s.end.y) + tol,
                ]
            })
            .collect()
    };
    let ba = boxes(a);
    let bb = boxes(b);
    let mut order: Vec<usize> = (0..b.len()).collect();
    order.sort_by(|&i, &j| bb[i][0].total_cmp(&bb[j][0]));
    let mut out = Vec::new();
    for (i, sa) in a.iter().enumerate() {
        let x_hi = ba[i][1];
        for &j in &order {
            let boxb = bb[j];
            if boxb[0] > x_hi {
                break;
            }
            if boxb[1] < ba[i][0] || boxb[3] < ba[i][2] || boxb[2] > ba[i][3] {
                continue;
            }
            let sb = &b[j];
            match segment_contact(sa.start, sa.end, sb.start, sb.end, tol) {
                Contact::Disjoint => {}
                Contact::Point { s, t } => out.push(Crossing { first: i, s, second: j, t }),
                Contact::Overlap { s0, s1, t0, t1 } => {
                    out.push(Crossing { first: i, s: s0, second: j, t: t0 });
                    out.push(Crossing { first: i, s: 0.5 * (s0 + s1), second: j, t: 0.5 * (t0 + t1) });
                    out.push(Crossing { first: i, s: s1, second: j, t: t1 });
                }
            }
        }
    }
    out.sort_by(|x, y| (x.first, x.second).cmp(&(y.first, y.second)).then(x.s.total_cmp(&y.s)));
    out
}

/// Drops degenerate candidates, merges centers closer than the degeneracy
/// floor, and sorts by center.
pub(crate) fn finalize(mut candidates: Vec<RhombusCandidate>, diameter: f64) -> Vec<RhombusCandidate> {
    let delta = DEGENERACY_FLOOR * diameter;
    candidates.retain(|c| c.metrics.min_vertex_separation >= delta);
    candidates.sort_by(|a, b| {
        a.center
            .x
            .total_cmp(&b.center.x)
            .then(a.center.y.total_cmp(&b.center.y))
            .then(a.metrics.side_dispersion.total_cmp(&b.metrics.side_dispersion))
    });
    let mut kept: Vec<RhombusCandidate> = Vec::new();
    for c in candidates {
        if !kept.iter().any(|k| k.center.dist(c.center) < delta) {
            kept.push(c);
        }
    }
    kept
}

/// Outcome of [`validate_rhombus`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhombusCheck {
    pub metrics: Metrics,
    /// Deviation of the diagonals from perpendicular, in radians.
    pub perpendicularity: f64,
    /// Deviation of the diagonal directions from the candidate angle, in radians.
    pub direction_error: f64,
    /// Distance between the two diagonal midpoints.
    pub midpoint_gap: f64,
    pub pass: bool,
}

/// Recomputes all metrics of a candidate and judges it at relative
/// tolerance `tol`.
pub fn validate_rhombus(candidate: &RhombusCandidate, curve: &JordanCurve, tol: f64) -> RhombusCheck {
    let v = &candidate.vertices;
    let metrics = Metrics::of(v, curve);
    let d1 = v[2] - v[0];
    let d2 = v[3] - v[1];
    let perpendicularity = atan2(d1.dot(d2).abs(), d1.cross(d2).abs());
    let direction_error = if d1.norm() > 0.0 {
        wrapped_difference(d1.angle(), candidate.theta, FRAC_PI_2).abs()
    } else {
        FRAC_PI_2
    };
    let midpoint_gap = v[0].midpoint(v[2]).dist(v[1].midpoint(v[3]));
    let diam = curve.diameter();
    let pass = metrics.side_dispersion <= tol
        && perpendicularity <= tol
        && direction_error <= tol
        && metrics.on_curve_residual <= tol * diam
        && midpoint_gap <= tol * diam
        && metrics.min_vertex_separation > DEGENERACY_FLOOR * diam;
    RhombusCheck { metrics, perpendicularity, direction_error, midpoint_gap, pass }
}
