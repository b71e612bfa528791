//! Rhombi near the direction of a pair of special corners.
//!
//! The curve is posed so that the corner `p` sits at the origin, the corner
//! `q` at `(w, 0)`, and the midpoint `A₀` of the top support points lies
//! strictly above the x-axis. Posed angles `θ` are measured from the x-axis.
//!
//! If part of the curve lies below the axis, the plain search already works
//! for all `|θ| < ε`. Otherwise the curve is clipped along the line
//! `y = x tanθ` and the clipped median of `θ` is intersected with the median
//! of `θ + π/2` inside the region `R`.
//!
//! Negative posed angles use the mirror image `x ↦ w − x`, which swaps the two
//! corners, keeps the curve above the axis and turns `−θ` into `θ`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::corners::{special_corner_angles, CornerRecord};
use crate::curve::{CurvePos, JordanCurve};
use crate::error::Error;
use crate::frame::{split_arcs, support_frame, Arc};
use crate::geom::math::{atan, atan2, cos, sin, tan};
use crate::geom::{reduce_mod, rhombus_class, segment_contact, wrapped_difference, Contact, Point, Pose};
use crate::median::{Median, MedianSegment, ZERO_TOL};
use crate::search::{crossings, find_rhombi, finalize, RhombusCandidate, SearchOutcome};
use crate::SUPPORT_TOL;

/// Safety factor applied under the strict inequalities defining `ε`.
pub const EPS_SAFETY: f64 = 0.99;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    /// Part of the curve lies strictly below the posed x-axis.
    One,
    /// The whole curve lies on or above the posed x-axis.
    Two,
}

/// The quantities of one posed configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SideFrame {
    /// The posed curve; it shares vertex indexing with the original.
    pub curve: JordanCurve,
    /// Vertex at the origin.
    pub p_index: usize,
    /// Vertex at `(w, 0)`.
    pub q_index: usize,
    pub theta_p: f64,
    pub theta_q: f64,
    pub eps_a: f64,
    pub eps_b: f64,
    /// Height of `A₀` above the axis.
    pub h: f64,
    /// Upper arc from `p` to `q` (the arc through the top of the curve at
    /// angle `π/2`); only used in the second case.
    pub upper: Option<Arc>,
    pub eps_l: f64,
    pub eps_r: f64,
    pub eps_y: f64,
    pub eps: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoCornerFrame {
    pub p_index: usize,
    pub q_index: usize,
    pub p: Point,
    pub q: Point,
    pub pose: Pose,
    pub w: f64,
    pub case: Case,
    /// Configuration for posed angles `θ ≥ 0`.
    pub side: SideFrame,
    /// Mirror configuration for posed angles `θ < 0`.
    pub mirror: SideFrame,
    /// Half-width of the guaranteed interval of posed angles.
    pub eps: f64,
}

impl TwoCornerFrame {
    pub fn theta_p(&self) -> f64 {
        self.side.theta_p
    }
    pub fn theta_q(&self) -> f64 {
        self.side.theta_q
    }
    pub fn eps_a(&self) -> f64 {
        self.side.eps_a
    }
    pub fn eps_b(&self) -> f64 {
        self.side.eps_b
    }
    pub fn h(&self) -> f64 {
        self.side.h
    }
    pub fn eps_l(&self) -> f64 {
        self.side.eps_l
    }
    pub fn eps_r(&self) -> f64 {
        self.side.eps_r
    }
    pub fn eps_y(&self) -> f64 {
        self.side.eps_y
    }

    /// Original angle of the posed angle `theta`.
    pub fn original_angle(&self, theta: f64) -> f64 {
        self.pose.unpose_angle(theta)
    }

    /// Posed angle in `(−π/4, π/4]` equivalent to an original angle.
    pub fn posed_angle(&self, original: f64) -> f64 {
        let d = wrapped_difference(original, self.pose.angle, FRAC_PI_2);
        if self.pose.reflect {
            -d
        } else {
            d
        }
    }

    /// Maps a point of the mirror configuration back to original coordinates.
    pub fn unmirror(&self, p: Point) -> Point {
        self.pose.invert(Point::new(self.w - p.x, p.y))
    }
}

/// Poses the curve on the pair `(p, q)` and computes the guarantee data.
pub fn compute_frame(curve: &JordanCurve, p: &CornerRecord, q: &CornerRecord) -> Result<TwoCornerFrame, Error> {
    if p.vertex_index == q.vertex_index {
        return Err(Error::IncompatibleCorners("the two corners coincide".to_string()));
    }
    let tol = SUPPORT_TOL * curve.diameter();
    let (pi, qi) = (p.vertex_index, q.vertex_index);
    let (pp, qq) = (curve.vertex(pi), curve.vertex(qi));
    let w = pp.dist(qq);
    let pose_curve = |pose: &Pose| -> Result<JordanCurve, Error> {
        let mut v: Vec<Point> = curve.vertices().iter().map(|&x| pose.apply(x)).collect();
        v[pi] = Point::new(0.0, 0.0);
        v[qi] = Point::new(w, 0.0);
        JordanCurve::new_unchecked(v)
    };
    let mut pose = Pose { origin: pp, angle: (qq - pp).angle(), reflect: false };
    let mut posed = pose_curve(&pose)?;
    if support_frame(&posed, 0.0)?.a.y <= tol {
        pose.reflect = true;
        posed = pose_curve(&pose)?;
        if support_frame(&posed, 0.0)?.a.y <= tol {
            return Err(Error::IncompatibleCorners("curve lies on the line through both corners".to_string()));
        }
    }
    let y_min = posed.vertices().iter().map(|v| v.y).fold(f64::INFINITY, f64::min);
    let case = if y_min < -tol { Case::One } else { Case::Two };
    let mirrored = posed.map(|v| Point::new(w - v.x, v.y))?;
    let side = side_frame(posed, pi, qi, w, case)?;
    let mirror = side_frame(mirrored, qi, pi, w, case)?;
    let eps = side.eps.min(mirror.eps);
    Ok(TwoCornerFrame { p_index: pi, q_index: qi, p: pp, q: qq, pose, w, case, side, mirror, eps })
}

fn side_frame(curve: JordanCurve, p_index: usize, q_index: usize, w: f64, case: Case) -> Result<SideFrame, Error> {
    let f0 = support_frame(&curve, 0.0)?;
    let (a0, b0) = (f0.a, f0.b);
    let h = a0.y;
    let eps_a = atan2(a0.y, a0.x);
    let eps_b = match case {
        Case::One => atan2(-b0.y, w - b0.x),
        Case::Two => 0.0,
    };
    let theta_p = corner_supremum(&curve, p_index)?;
    let theta_q = corner_supremum(&curve, q_index)?;
    let mut side = SideFrame {
        curve,
        p_index,
        q_index,
        theta_p,
        theta_q,
        eps_a,
        eps_b,
        h,
        upper: None,
        eps_l: 0.0,
        eps_r: 0.0,
        eps_y: 0.0,
        eps: 0.0,
    };
    match case {
        Case::One => side.eps = eps_a.min(eps_b),
        Case::Two => {
            let f90 = support_frame(&side.curve, FRAC_PI_2)?;
            let upper = split_arcs(&side.curve, &f90)?.big_gamma;
            if upper.indices[0] != p_index || upper.indices[upper.indices.len() - 1] != q_index {
                return Err(Error::IncompatibleCorners("corners are not the extreme points across the pair".to_string()));
            }
            let n = side.curve.len();
            let fa = support_frame(&side.curve, eps_a)?;
            let not_on_arc = || Error::InvariantViolation("support point off the upper arc".to_string());
            let r_a = upper.param_of(fa.on_min.hi.pos, n).ok_or_else(not_on_arc)?;
            let r_0 = upper.param_of(f0.on_min.lo.pos, n).ok_or_else(not_on_arc)?;
            let ks = 0..upper.points.len();
            side.eps_l = ks
                .clone()
                .filter(|&k| upper.params[k] >= r_a)
                .map(|k| upper.points[k].x)
                .fold(f64::INFINITY, f64::min);
            side.eps_r = ks
                .filter(|&k| upper.params[k] <= r_0)
                .map(|k| w - upper.points[k].x)
                .fold(f64::INFINITY, f64::min);
            side.eps_y = min_height_in_window(&upper, side.eps_l / 8.0, w - side.eps_r / 8.0);
            let slope = (side.eps_l / (8.0 * h)).min(side.eps_r / (8.0 * h)).min(side.eps_y / (2.0 * w));
            side.eps = EPS_SAFETY * atan(slope).min(eps_a).min(theta_p).min(theta_q);
            side.upper = Some(upper);
        }
    }
    if side.eps.is_nan() || side.eps <= 0.0 {
        return Err(Error::IncompatibleCorners(alloc::format!("no positive guarantee (eps = {})", side.eps)));
    }
    Ok(side)
}

/// Largest special angle of a posed corner: the supremum of its single arc,
/// folded into `(0, π/2]`.
fn corner_supremum(curve: &JordanCurve, index: usize) -> Result<f64, Error> {
    let set = special_corner_angles(curve, index);
    match set.arcs() {
        [(_, hi)] => {
            let t = reduce_mod(*hi, FRAC_PI_2);
            Ok(if t == 0.0 { FRAC_PI_2 } else { t })
        }
        [] => Err(Error::IncompatibleCorners(alloc::format!("vertex {index} is not a special corner"))),
        _ => Err(Error::IncompatibleCorners(alloc::format!("vertex {index} has a split special set"))),
    }
}

/// Smallest `y` over the part of the arc with `lo ≤ x ≤ hi`.
fn min_height_in_window(arc: &Arc, lo: f64, hi: f64) -> f64 {
    let mut best = f64::INFINITY;
    for k in 0..arc.edge_count() {
        let (a, b) = (arc.points[k], arc.points[k + 1]);
        if let Some((s0, s1)) = window_fractions(a.x, b.x, lo, hi) {
            best = best.min(a.lerp(b, s0).y).min(a.lerp(b, s1).y);
        }
    }
    best
}

/// Fractions along a segment from `x0` to `x1` where `lo ≤ x ≤ hi`.
fn window_fractions(x0: f64, x1: f64, lo: f64, hi: f64) -> Option<(f64, f64)> {
    if x0 == x1 {
        return (lo <= x0 && x0 <= hi).then_some((0.0, 1.0));
    }
    let sa = (lo - x0) / (x1 - x0);
    let sb = (hi - x0) / (x1 - x0);
    let s0 = sa.min(sb).max(0.0);
    let s1 = sa.max(sb).min(1.0);
    (s0 <= s1).then_some((s0, s1))
}

/// The clipped curve: the upper arc between `t_l` and `t_r`, closed by a
/// straight edge along `y = x tanθ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClippedCurve {
    pub curve: JordanCurve,
    pub t_l: f64,
    pub t_r: f64,
    /// For each edge of `curve`: the posed-curve edge it lies on and the
    /// fractions of its two ends; `None` for the closing edge.
    pub sources: Vec<Option<(usize, f64, f64)>>,
}

impl ClippedCurve {
    /// Position on the posed curve of a clipped-curve position.
    pub fn lift(&self, pos: CurvePos) -> Option<CurvePos> {
        let (edge, f0, f1) = self.sources[pos.edge]?;
        Some(CurvePos { edge, frac: f0 + pos.frac * (f1 - f0) })
    }
}

/// The clipped curve for posed angle `0 < theta < eps`.
pub fn clip_curve(frame: &TwoCornerFrame, theta: f64) -> Result<ClippedCurve, Error> {
    check_case_two(frame, theta)?;
    clip_side(&frame.side, frame.w, theta)
}

fn check_case_two(frame: &TwoCornerFrame, theta: f64) -> Result<(), Error> {
    if frame.case != Case::Two {
        return Err(Error::InvalidSpec("clipping applies to the second case only".to_string()));
    }
    if !(theta > 0.0 && theta < frame.eps) {
        return Err(Error::OutsideGuarantee { theta, eps: frame.eps });
    }
    Ok(())
}

fn clip_side(side: &SideFrame, w: f64, theta: f64) -> Result<ClippedCurve, Error> {
    let upper = side.upper.as_ref().expect("second case has an upper arc");
    let tol = ZERO_TOL * side.curve.diameter();
    let slope = tan(theta);
    let on_line = |x: f64| Point::new(x, x * slope);
    let left = (on_line(0.0), on_line(side.eps_l / 8.0));
    let right = (on_line(w - side.eps_r / 8.0), on_line(w));

    let mut hits_left = Vec::new();
    let mut hits_right = Vec::new();
    for k in 0..upper.edge_count() {
        let (a, b) = (upper.points[k], upper.points[k + 1]);
        for (seg, hits) in [(left, &mut hits_left), (right, &mut hits_right)] {
            match segment_contact(a, b, seg.0, seg.1, tol) {
                Contact::Disjoint => {}
                Contact::Point { s, .. } => hits.push(upper.param(k, s)),
                Contact::Overlap { s0, s1, .. } => {
                    hits.push(upper.param(k, s0));
                    hits.push(upper.param(k, s1));
                }
            }
        }
    }
    let t_l = hits_left.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let t_r = hits_right.iter().copied().filter(|&t| t > t_l).fold(f64::INFINITY, f64::min);
    if !t_l.is_finite() || !t_r.is_finite() {
        return Err(Error::InvariantViolation(alloc::format!("upper arc does not reach the clip line at {theta}")));
    }

    let (mut kl, mut ul) = upper.locate(t_l);
    if ul >= 1.0 {
        kl += 1;
        ul = 0.0;
    }
    let (mut kr, mut ur) = upper.locate(t_r);
    if ur <= 0.0 && kr > 0 {
        kr -= 1;
        ur = 1.0;
    }
    if kr < kl || (kr == kl && ur <= ul) {
        return Err(Error::InvariantViolation("empty clipped arc".to_string()));
    }
    let mut vertices = Vec::new();
    let mut sources = Vec::new();
    let source = |k: usize, u0: f64, u1: f64| {
        let a = upper.pos_on_edge(k, u0);
        let b = upper.pos_on_edge(k, u1);
        Some((a.edge, a.frac, b.frac))
    };
    vertices.push(upper.point_on_edge(kl, ul));
    if kl == kr {
        sources.push(source(kl, ul, ur));
    } else {
        sources.push(source(kl, ul, 1.0));
        for k in (kl + 1)..kr {
            vertices.push(upper.points[k]);
            sources.push(source(k, 0.0, 1.0));
        }
        vertices.push(upper.points[kr]);
        sources.push(source(kr, 0.0, ur));
    }
    vertices.push(upper.point_on_edge(kr, ur));
    sources.push(None);
    let curve = JordanCurve::new(vertices)?;

    // Both support points of the minimum line at θ must sit strictly inside
    // the clipped range of the upper arc.
    let f = support_frame(&side.curve, theta)?;
    let n = side.curve.len();
    let r_mm = upper.param_of(f.on_min.lo.pos, n);
    let r_big = upper.param_of(f.on_min.hi.pos, n);
    match (r_mm, r_big) {
        (Some(a), Some(b)) if t_l < a && a <= b && b < t_r => {}
        _ => {
            return Err(Error::InvariantViolation(alloc::format!(
                "clip order t_l < r(mm) <= r(Mm) < t_r fails at {theta}"
            )))
        }
    }
    Ok(ClippedCurve { curve, t_l, t_r, sources })
}

/// The parallelogram `R` for a posed angle `θ > 0`, in posed coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionR {
    pub theta: f64,
    pub x_lo: f64,
    pub x_hi: f64,
    /// Minimum support value at `θ`.
    pub m_theta: f64,
    pub z_sw: Point,
    pub z_se: Point,
    pub z_nw: Point,
    pub z_ne: Point,
    /// Bottom end of the clipped median.
    pub z_s: Point,
    /// Top end of the clipped median.
    pub z_n: Point,
}

impl RegionR {
    /// Vertical edge `Z_W` as a segment.
    pub fn west(&self) -> (Point, Point) {
        (self.z_sw, self.z_nw)
    }

    /// Vertical edge `Z_E` as a segment.
    pub fn east(&self) -> (Point, Point) {
        (self.z_se, self.z_ne)
    }

    /// Normal coordinate of a point; `R` spans `[m_theta, 0]`.
    pub fn level(&self, p: Point) -> f64 {
        p.x * sin(self.theta) - p.y * cos(self.theta)
    }

    pub fn corners(&self) -> [Point; 4] {
        [self.z_sw, self.z_se, self.z_ne, self.z_nw]
    }
}

/// Everything the refined search builds for one posed angle `θ > 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinedView {
    pub clipped: ClippedCurve,
    /// Median of the clipped curve at `θ`.
    pub clipped_median: Median,
    /// Median of the posed curve at `θ + π/2`.
    pub perpendicular: Median,
    /// `perpendicular` cut to `x_lo ≤ x ≤ x_hi`.
    pub restricted: Vec<MedianSegment>,
    pub region: RegionR,
}

/// Builds the refined view for the side configuration (`θ > 0`).
pub fn refined_view(frame: &TwoCornerFrame, theta: f64) -> Result<RefinedView, Error> {
    check_case_two(frame, theta)?;
    view_of_side(&frame.side, frame.w, theta)
}

/// The refined view of the mirror configuration, for posed angle `−theta`.
pub fn mirrored_view(frame: &TwoCornerFrame, theta: f64) -> Result<RefinedView, Error> {
    check_case_two(frame, theta)?;
    view_of_side(&frame.mirror, frame.w, theta)
}

fn view_of_side(side: &SideFrame, w: f64, theta: f64) -> Result<RefinedView, Error> {
    let clipped = clip_side(side, w, theta)?;
    let clipped_median = Median::build(&clipped.curve, theta)?;
    let perpendicular = Median::build(&side.curve, theta + FRAC_PI_2)?;
    let x_lo = side.eps_l / 4.0;
    let x_hi = w - side.eps_r / 4.0;
    let restricted = perpendicular
        .set
        .segments
        .iter()
        .filter_map(|s| window_fractions(s.start.x, s.end.x, x_lo, x_hi).map(|(a, b)| s.sub(a, b)))
        .collect();
    let m_theta = support_frame(&side.curve, theta)?.min;
    let (sn, cs) = (sin(theta), cos(theta));
    let slope = tan(theta);
    let top = |x: f64| Point::new(x, (x * sn - m_theta) / cs);
    let region = RegionR {
        theta,
        x_lo,
        x_hi,
        m_theta,
        z_sw: Point::new(x_lo, x_lo * slope),
        z_se: Point::new(x_hi, x_hi * slope),
        z_nw: top(x_lo),
        z_ne: top(x_hi),
        z_s: clipped_median.frame.b,
        z_n: clipped_median.frame.a,
    };
    Ok(RefinedView { clipped, clipped_median, perpendicular, restricted, region })
}

/// Searches for rhombi at posed angle `theta`, `|theta| < eps`.
///
/// Candidates are reported on the original curve, at original angles.
pub fn two_corner_search(curve: &JordanCurve, frame: &TwoCornerFrame, theta: f64) -> Result<SearchOutcome, Error> {
    if theta.is_nan() || theta.abs() >= frame.eps {
        return Err(Error::OutsideGuarantee { theta, eps: frame.eps });
    }
    let original = frame.original_angle(theta);
    if frame.case == Case::One || theta == 0.0 {
        let mut out = find_rhombi(curve, original)?;
        out.not_guaranteed = false;
        out.finding = out.candidates.is_empty();
        return Ok(out);
    }
    let side = if theta > 0.0 { &frame.side } else { &frame.mirror };
    let view = view_of_side(side, frame.w, theta.abs())?;
    let tol = SUPPORT_TOL * curve.diameter();
    let bar = &view.clipped_median;
    let mut candidates = Vec::new();
    for hit in crossings(&bar.set.segments, &view.restricted, ZERO_TOL * curve.diameter()) {
        let z = bar.set.segments[hit.first].point_at(hit.s);
        let level = view.region.level(z);
        if !(level < -tol && level > view.region.m_theta + tol) {
            continue;
        }
        let (a1, a2) = bar.set.segments[hit.first].chord_at(&bar.arcs, hit.s);
        let (Some(p1), Some(p2)) = (view.clipped.lift(a1), view.clipped.lift(a2)) else { continue };
        let (q1, q2) = view.restricted[hit.second].chord_at(&view.perpendicular.arcs, hit.t);
        candidates.push(RhombusCandidate::from_positions(curve, original, [p1, q1, p2, q2]));
    }
    let candidates = finalize(candidates, curve.diameter());
    Ok(SearchOutcome {
        theta: rhombus_class(original),
        finding: candidates.is_empty(),
        candidates,
        thick_median: bar.set.thick || view.perpendicular.set.thick,
        not_guaranteed: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corners::find_special_corners;
    use crate::curve::{generate, CurveSpec, Shape};
    use crate::search::validate_rhombus;
    use core::f64::consts::FRAC_PI_4;

    fn frame_of(curve: &JordanCurve) -> TwoCornerFrame {
        let corners = find_special_corners(curve);
        assert_eq!(corners.len(), 2);
        compute_frame(curve, &corners[0], &corners[1]).unwrap()
    }

    fn flat_lens() -> JordanCurve {
        generate(&CurveSpec::new(Shape::Lens, 800).with("a", 1.0).with("b", 2.0)).unwrap()
    }

    #[test]
    fn symmetric_lens_is_first_case() {
        let c = generate(&CurveSpec::new(Shape::Lens, 800)).unwrap();
        let f = frame_of(&c);
        assert!((f.pose.angle - FRAC_PI_4).abs() < 1e-15);
        assert!((f.w - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(f.case, Case::One);
        assert!(f.eps > 0.0);
        assert_eq!(f.side.eps, f.eps_a().min(f.eps_b()));
        assert!(f.theta_p() > 0.0 && f.theta_p() < FRAC_PI_2);
        assert!(f.theta_q() > 0.0 && f.theta_q() < FRAC_PI_2);
    }

    #[test]
    fn flat_lens_is_second_case() {
        let c = flat_lens();
        let f = frame_of(&c);
        assert_eq!(f.case, Case::Two);
        assert_eq!(f.eps_b(), 0.0);
        assert!(f.eps_l() > 0.0 && f.eps_r() > 0.0 && f.eps_y() > 0.0);
        let bound = (f.eps_l() / (8.0 * f.h())).min(f.eps_r() / (8.0 * f.h())).min(f.eps_y() / (2.0 * f.w));
        assert!(tan(f.eps) < bound);
        assert!(f.eps < f.eps_a().min(f.theta_p()).min(f.theta_q()));
        assert!(f.theta_p() < FRAC_PI_2 && f.theta_q() < FRAC_PI_2);
    }

    #[test]
    fn clipped_curve_is_simple_and_closes_on_the_line() {
        let c = flat_lens();
        let f = frame_of(&c);
        let theta = 0.5 * f.eps;
        let clipped = clip_curve(&f, theta).unwrap();
        assert!(crate::curve::validate_simple(&clipped.curve).is_simple());
        let n = clipped.curve.len();
        let (a, b) = clipped.curve.edge(n - 1);
        for p in [a, b] {
            assert!((p.y - p.x * tan(theta)).abs() < 1e-12);
        }
        assert!(clipped.t_l < clipped.t_r);
    }

    #[test]
    fn clip_ends_approach_corners() {
        let c = flat_lens();
        let f = frame_of(&c);
        let mut last = (f64::INFINITY, f64::NEG_INFINITY);
        for k in [0.9, 0.1, 0.01] {
            let cl = clip_curve(&f, k * f.eps).unwrap();
            assert!(cl.t_l <= last.0 && cl.t_r >= last.1);
            last = (cl.t_l, cl.t_r);
        }
    }

    #[test]
    fn flat_lens_search_inside_guarantee() {
        let c = flat_lens();
        let f = frame_of(&c);
        for k in [0.0, 0.25, 0.5, 0.75, 0.9, -0.5] {
            let out = two_corner_search(&c, &f, k * f.eps).unwrap();
            assert!(!out.candidates.is_empty(), "no rhombus at {k}·eps");
            for cand in &out.candidates {
                assert!(validate_rhombus(cand, &c, 1e-3).pass, "invalid at {k}·eps: {cand:?}");
            }
        }
    }

    #[test]
    fn center_is_inside_region() {
        let c = flat_lens();
        let f = frame_of(&c);
        let theta = 0.5 * f.eps;
        let out = two_corner_search(&c, &f, theta).unwrap();
        let view = refined_view(&f, theta).unwrap();
        for cand in &out.candidates {
            let z = f.pose.apply(cand.center);
            assert!(z.x > view.region.x_lo && z.x < view.region.x_hi);
            let level = view.region.level(z);
            assert!(level < 0.0 && level > view.region.m_theta);
        }
    }

    #[test]
    fn outside_guarantee_is_rejected() {
        let c = flat_lens();
        let f = frame_of(&c);
        assert!(matches!(two_corner_search(&c, &f, f.eps), Err(Error::OutsideGuarantee { .. })));
    }

    #[test]
    fn posed_angle_round_trip() {
        let c = flat_lens();
        let f = frame_of(&c);
        for t in [-0.004, 0.0, 0.003] {
            assert!((f.posed_angle(f.original_angle(t)) - t).abs() < 1e-12);
        }
    }
}
