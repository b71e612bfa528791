//! Exact medians on polygons.
//!
//! For arcs `γ` and `Γ` of a support frame, `f(r₁, r₂) = π(γ(r₁)) − π(Γ(r₂))`
//! is, on the parameter rectangle of one edge pair, a function
//! `c + a·u − b·v` of the local parameters. Its zero set there is a segment
//! (or the whole rectangle), and the midpoint map is affine, so the median is
//! a finite union of plane segments.

use alloc::vec::Vec;

use crate::curve::{CurvePos, JordanCurve};
use crate::error::Error;
use crate::frame::{split_arcs, support_frame, ArcSplit, RecRegion, SupportFrame};
use crate::geom::math::{ceil, floor};
use crate::geom::Point;

/// Relative tolerance (times the diameter) for treating `f` as zero.
pub const ZERO_TOL: f64 = 1e-12;

/// One straight piece of a median with its parameter preimage.
///
/// Every point of the segment is `mid(γ_i(u), Γ_j(v))` for `(u, v)` on the
/// straight segment from `uv[0]` to `uv[1]` in the rectangle of edge pair
/// `(gamma_edge, big_edge)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MedianSegment {
    pub start: Point,
    pub end: Point,
    pub gamma_edge: usize,
    pub big_edge: usize,
    pub uv: [(f64, f64); 2],
    /// Part of the boundary of a positive-area piece of the median.
    pub thick: bool,
}

impl MedianSegment {
    /// Local edge parameters at fraction `s` along the segment.
    pub fn uv_at(&self, s: f64) -> (f64, f64) {
        let (u0, v0) = self.uv[0];
        let (u1, v1) = self.uv[1];
        (u0 + s * (u1 - u0), v0 + s * (v1 - v0))
    }

    pub fn point_at(&self, s: f64) -> Point {
        self.start.lerp(self.end, s)
    }

    /// Global arc parameters `(r₁, r₂)` at fraction `s`.
    pub fn params_at(&self, arcs: &ArcSplit, s: f64) -> (f64, f64) {
        let (u, v) = self.uv_at(s);
        (arcs.gamma.param(self.gamma_edge, u), arcs.big_gamma.param(self.big_edge, v))
    }

    /// Curve positions of the two chord ends at fraction `s`.
    pub fn chord_at(&self, arcs: &ArcSplit, s: f64) -> (CurvePos, CurvePos) {
        let (u, v) = self.uv_at(s);
        (arcs.gamma.pos_on_edge(self.gamma_edge, u), arcs.big_gamma.pos_on_edge(self.big_edge, v))
    }

    /// The chord ends as plane points at fraction `s`.
    pub fn chord_points(&self, arcs: &ArcSplit, s: f64) -> (Point, Point) {
        let (u, v) = self.uv_at(s);
        (arcs.gamma.point_on_edge(self.gamma_edge, u), arcs.big_gamma.point_on_edge(self.big_edge, v))
    }

    /// The sub-segment between fractions `s0` and `s1`.
    pub fn sub(&self, s0: f64, s1: f64) -> MedianSegment {
        MedianSegment {
            start: self.point_at(s0),
            end: self.point_at(s1),
            uv: [self.uv_at(s0), self.uv_at(s1)],
            ..*self
        }
    }
}

/// The median of one angle as a union of segments.
#[derive(Debug, Clone, PartialEq)]
pub struct MedianSet {
    pub theta: f64,
    pub segments: Vec<MedianSegment>,
    /// Midpoint of the extremal points on the minimum support line.
    pub a: Point,
    /// Midpoint of the extremal points on the maximum support line.
    pub b: Point,
    /// Some edge pair produced a positive-area zero set.
    pub thick: bool,
}

/// Builds the median of the arcs of `frame`.
pub fn median_set(arcs: &ArcSplit, frame: &SupportFrame, diameter: f64) -> MedianSet {
    let g = &arcs.gamma;
    let big = &arcs.big_gamma;
    let pg = arc_projections(&g.points, frame);
    let pb = arc_projections(&big.points, frame);
    let tol = ZERO_TOL * diameter;

    let mut segments = Vec::new();
    let mut thick = false;
    for i in 0..g.edge_count() {
        let (glo, ghi) = minmax(pg[i], pg[i + 1]);
        for j in 0..big.edge_count() {
            let (blo, bhi) = minmax(pb[j], pb[j + 1]);
            if glo > bhi + tol || blo > ghi + tol {
                continue;
            }
            let c = pg[i] - pb[j];
            let a = pg[i + 1] - pg[i];
            let b = pb[j + 1] - pb[j];
            let image = |(u, v): (f64, f64)| g.point_on_edge(i, u).midpoint(big.point_on_edge(j, v));
            let mut push = |p: (f64, f64), q: (f64, f64), thick: bool| {
                segments.push(MedianSegment {
                    start: image(p),
                    end: image(q),
                    gamma_edge: i,
                    big_edge: j,
                    uv: [p, q],
                    thick,
                });
            };
            match rectangle_zero_set(c, a, b, tol) {
                RectZeros::Empty => {}
                RectZeros::Segment(p, q) => push(p, q, false),
                RectZeros::Full => {
                    thick = true;
                    push((0.0, 0.0), (1.0, 0.0), true);
                    push((1.0, 0.0), (1.0, 1.0), true);
                    push((1.0, 1.0), (0.0, 1.0), true);
                    push((0.0, 1.0), (0.0, 0.0), true);
                }
            }
        }
    }
    MedianSet { theta: frame.theta, segments, a: frame.a, b: frame.b, thick }
}

/// Normal coordinates along an arc with the ends pinned to the support
/// values: every arc runs from the minimum line to the maximum line.
fn arc_projections(points: &[Point], frame: &SupportFrame) -> Vec<f64> {
    let mut p: Vec<f64> = points.iter().map(|&q| frame.dir.normal(q)).collect();
    p[0] = frame.min;
    let last = p.len() - 1;
    p[last] = frame.max;
    p
}

fn minmax(a: f64, b: f64) -> (f64, f64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum RectZeros {
    Empty,
    Segment((f64, f64), (f64, f64)),
    Full,
}

/// Zero set of `c + a·u − b·v` on the unit square.
fn rectangle_zero_set(c: f64, a: f64, b: f64, tol: f64) -> RectZeros {
    let snap = |x: f64| if x.abs() <= tol { 0.0 } else { x };
    let f00 = snap(c);
    let f10 = snap(c + a);
    let f01 = snap(c - b);
    let f11 = snap(c + a - b);
    let corners = [((0.0, 0.0), f00), ((1.0, 0.0), f10), ((0.0, 1.0), f01), ((1.0, 1.0), f11)];
    let zero_corners = corners.iter().filter(|(_, f)| *f == 0.0).count();
    if zero_corners >= 3 {
        return RectZeros::Full;
    }
    let mut pts: Vec<(f64, f64)> = corners.iter().filter(|(_, f)| *f == 0.0).map(|(p, _)| *p).collect();
    let opposite = |x: f64, y: f64| (x < 0.0 && y > 0.0) || (x > 0.0 && y < 0.0);
    if opposite(f00, f10) {
        pts.push(((-c / a).clamp(0.0, 1.0), 0.0));
    }
    if opposite(f01, f11) {
        pts.push((((b - c) / a).clamp(0.0, 1.0), 1.0));
    }
    if opposite(f00, f01) {
        pts.push((0.0, (c / b).clamp(0.0, 1.0)));
    }
    if opposite(f10, f11) {
        pts.push((1.0, ((c + a) / b).clamp(0.0, 1.0)));
    }
    match pts.len() {
        0 => RectZeros::Empty,
        1 => RectZeros::Segment(pts[0], pts[0]),
        _ => {
            let mut best = (0, 1, -1.0);
            for x in 0..pts.len() {
                for y in (x + 1)..pts.len() {
                    let (dx, dy) = (pts[x].0 - pts[y].0, pts[x].1 - pts[y].1);
                    let d = dx * dx + dy * dy;
                    if d > best.2 {
                        best = (x, y, d);
                    }
                }
            }
            RectZeros::Segment(pts[best.0], pts[best.1])
        }
    }
}

/// Support frame, arcs and median of one curve at one angle.
#[derive(Debug, Clone, PartialEq)]
pub struct Median {
    pub frame: SupportFrame,
    pub arcs: ArcSplit,
    pub set: MedianSet,
}

impl Median {
    pub fn build(curve: &JordanCurve, theta: f64) -> Result<Median, Error> {
        let frame = support_frame(curve, theta)?;
        let arcs = split_arcs(curve, &frame)?;
        let set = median_set(&arcs, &frame, curve.diameter());
        Ok(Median { frame, arcs, set })
    }
}

/// A `G × G` grid of closed cells over `[0, 1]²`.
///
/// Cell `(i, j)` is `[i/G, (i+1)/G] × [j/G, (j+1)/G]`; in parameter masks
/// `i` indexes `r₁` and `j` indexes `r₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroMask {
    resolution: usize,
    cells: Vec<bool>,
}

impl ZeroMask {
    pub fn new(resolution: usize) -> Self {
        ZeroMask { resolution, cells: alloc::vec![false; resolution * resolution] }
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.resolution + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.cells[i * self.resolution + j] = true;
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn marked(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let g = self.resolution;
        self.cells.iter().enumerate().filter(|(_, &c)| c).map(move |(k, _)| (k / g, k % g))
    }

    /// Index range of closed cells meeting `[lo, hi]` along one axis.
    fn span(&self, lo: f64, hi: f64) -> Option<(usize, usize)> {
        const SLACK: f64 = 1e-12;
        let g = self.resolution as f64;
        if hi < -SLACK || lo > 1.0 + SLACK {
            return None;
        }
        let first = (ceil(lo * g - SLACK) - 1.0).max(0.0);
        let last = floor(hi * g + SLACK).min(g - 1.0);
        if first > last {
            return None;
        }
        Some((first as usize, last as usize))
    }

    /// Marks every cell meeting the closed segment `p q` (coordinates in `[0, 1]²`).
    pub fn mark_segment(&mut self, p: (f64, f64), q: (f64, f64)) {
        let ((x0, y0), (x1, y1)) = if p.0 <= q.0 { (p, q) } else { (q, p) };
        let Some((c0, c1)) = self.span(x0, x1) else { return };
        let g = self.resolution as f64;
        for col in c0..=c1 {
            let (ylo, yhi) = if x1 == x0 {
                minmax(y0, y1)
            } else {
                let xa = (col as f64 / g).max(x0);
                let xb = ((col + 1) as f64 / g).min(x1);
                let ya = y0 + (y1 - y0) * ((xa - x0) / (x1 - x0)).clamp(0.0, 1.0);
                let yb = y0 + (y1 - y0) * ((xb - x0) / (x1 - x0)).clamp(0.0, 1.0);
                minmax(ya, yb)
            };
            if let Some((r0, r1)) = self.span(ylo, yhi) {
                for row in r0..=r1 {
                    self.set(col, row);
                }
            }
        }
    }

    /// Marks every cell meeting the closed rectangle `[x0, x1] × [y0, y1]`.
    pub fn fill_rect(&mut self, x0: f64, x1: f64, y0: f64, y1: f64) {
        let (Some((c0, c1)), Some((r0, r1))) = (self.span(x0, x1), self.span(y0, y1)) else { return };
        for col in c0..=c1 {
            for row in r0..=r1 {
                self.set(col, row);
            }
        }
    }
}

/// Mask of the zero set of `f` in arc-parameter space.
pub fn median_mask(arcs: &ArcSplit, set: &MedianSet, resolution: usize) -> ZeroMask {
    let mut mask = ZeroMask::new(resolution);
    for seg in &set.segments {
        if seg.thick {
            let g = &arcs.gamma.params;
            let b = &arcs.big_gamma.params;
            mask.fill_rect(g[seg.gamma_edge], g[seg.gamma_edge + 1], b[seg.big_edge], b[seg.big_edge + 1]);
        } else {
            mask.mark_segment(seg.params_at(arcs, 0.0), seg.params_at(arcs, 1.0));
        }
    }
    mask.set(0, 0);
    mask.set(resolution - 1, resolution - 1);
    mask
}

/// Mask of the plane median over `rec`, in the rectangle's normalized
/// coordinates.
pub fn plane_mask(set: &MedianSet, rec: &RecRegion, resolution: usize) -> ZeroMask {
    let mut mask = ZeroMask::new(resolution);
    for seg in &set.segments {
        mask.mark_segment(rec.normalize(seg.start), rec.normalize(seg.end));
    }
    mask
}
