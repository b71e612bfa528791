//! Special corners and sweep planning.
//!
//! A vertex `p` is a special corner of angle `θ` when the lines of angles
//! `θ` and `θ + π/2` through `p` meet the curve only at `p`. For polygons
//! only vertices can qualify, and only those whose incident edges meet at
//! an acute angle.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::curve::JordanCurve;
use crate::geom::math::atan2;
use crate::geom::{reduce_mod, rhombus_class, wrapped_difference, Point};
use crate::two_corner::{compute_frame, TwoCornerFrame};

/// Angular guard that keeps grazing directions out of the special sets.
pub const ANGLE_GUARD: f64 = 1e-12;

const PERIOD: f64 = FRAC_PI_2;

/// A finite union of open arcs on the circle of angle classes `[0, π/2)`.
///
/// Each arc `(lo, hi)` has `lo ∈ [0, π/2)` and `lo < hi ≤ lo + π/2`; arcs with
/// `hi > π/2` wrap around through `0`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AngleSet {
    arcs: Vec<(f64, f64)>,
}

impl AngleSet {
    pub fn empty() -> Self {
        AngleSet::default()
    }

    /// The complement of a union of closed arcs `[start, start + width]`
    /// (taken modulo `π/2`), each widened by `guard`.
    pub fn complement_of(closed: &[(f64, f64)], guard: f64) -> Self {
        if closed.is_empty() {
            return AngleSet { arcs: alloc::vec![(0.0, PERIOD)] };
        }
        if closed.iter().any(|&(_, w)| w + 2.0 * guard >= PERIOD) {
            return AngleSet::empty();
        }
        let mut spans: Vec<(f64, f64)> = Vec::with_capacity(3 * closed.len());
        for &(start, width) in closed {
            let s = reduce_mod(start, PERIOD) - guard;
            let e = s + width + 2.0 * guard;
            for k in [-1.0, 0.0, 1.0] {
                spans.push((s + k * PERIOD, e + k * PERIOD));
            }
        }
        spans.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::new();
        for (s, e) in spans {
            match merged.last_mut() {
                Some(last) if s <= last.1 => last.1 = last.1.max(e),
                _ => merged.push((s, e)),
            }
        }
        let arcs = merged
            .windows(2)
            .map(|w| (w[0].1, w[1].0))
            .filter(|&(lo, _)| (0.0..PERIOD).contains(&lo))
            .collect();
        AngleSet { arcs }
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn arcs(&self) -> &[(f64, f64)] {
        &self.arcs
    }

    pub fn contains(&self, theta: f64) -> bool {
        let c = rhombus_class(theta);
        self.arcs.iter().any(|&(lo, hi)| (lo < c && c < hi) || (lo < c + PERIOD && c + PERIOD < hi))
    }

    /// The set as sorted intervals inside `[0, π/2]`, splitting wrapped arcs.
    pub fn pieces(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        for &(lo, hi) in &self.arcs {
            if hi <= PERIOD {
                out.push((lo, hi));
            } else {
                out.push((lo, PERIOD));
                out.push((0.0, hi - PERIOD));
            }
        }
        out.sort_by(|a, b| a.0.total_cmp(&b.0));
        out
    }

    /// Total angular measure.
    pub fn measure(&self) -> f64 {
        self.arcs.iter().map(|&(lo, hi)| hi - lo).sum()
    }
}

/// Angle classes for which vertex `index` is a special corner.
pub fn special_corner_angles(curve: &JordanCurve, index: usize) -> AngleSet {
    let n = curve.len();
    let p = curve.vertex(index);
    let prev = curve.vertex(index + n - 1);
    let next = curve.vertex(index + 1);
    // Closed arcs of occupied line directions from p, as (start, width) mod π.
    let mut occupied: Vec<(f64, f64)> = Vec::with_capacity(n);
    occupied.push(((prev - p).angle(), 0.0));
    occupied.push(((next - p).angle(), 0.0));
    for k in 0..n {
        if k == index || (k + 1) % n == index {
            continue;
        }
        let (a, b) = curve.edge(k);
        let (u, v) = (a - p, b - p);
        let sweep = atan2(u.cross(v), u.dot(v));
        let start = if sweep >= 0.0 { u.angle() } else { v.angle() };
        occupied.push((reduce_mod(start, PI), sweep.abs()));
    }
    AngleSet::complement_of(&occupied, ANGLE_GUARD)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CornerRecord {
    pub vertex_index: usize,
    pub point: Point,
    pub special_angles: AngleSet,
}

/// All special corners of the curve.
pub fn find_special_corners(curve: &JordanCurve) -> Vec<CornerRecord> {
    let n = curve.len();
    (0..n)
        .filter(|&i| {
            let p = curve.vertex(i);
            (curve.vertex(i + n - 1) - p).dot(curve.vertex(i + 1) - p) > 0.0
        })
        .filter_map(|i| {
            let set = special_corner_angles(curve, i);
            (!set.is_empty()).then(|| CornerRecord { vertex_index: i, point: curve.vertex(i), special_angles: set })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// No special corner of this angle exists.
    CornerFree,
    /// Inside the guaranteed interval of a pair of special corners.
    TwoCorner,
    /// A special corner of this angle exists and no pair covers it.
    Uncovered,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::CornerFree => "corner_free",
            Mode::TwoCorner => "two_corner",
            Mode::Uncovered => "uncovered",
        }
    }
}

/// The guaranteed interval `θ₀ ± eps` of one corner pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Guarantee {
    pub frame: TwoCornerFrame,
}

impl Guarantee {
    pub fn theta0(&self) -> f64 {
        rhombus_class(self.frame.pose.angle)
    }

    pub fn eps(&self) -> f64 {
        self.frame.eps
    }

    pub fn covers(&self, theta: f64) -> bool {
        wrapped_difference(theta, self.frame.pose.angle, PERIOD).abs() < self.frame.eps
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlanEntry {
    pub theta: f64,
    pub mode: Mode,
    /// Index into [`SweepPlan::guarantees`] for two-corner entries.
    pub guarantee: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepPlan {
    pub entries: Vec<PlanEntry>,
    pub corners: Vec<CornerRecord>,
    pub guarantees: Vec<Guarantee>,
}

/// Classifies each requested angle.
///
/// Two-corner intervals take precedence so that angles near the direction of
/// a corner pair use the refined search even where the plain one also applies.
pub fn plan_sweep(curve: &JordanCurve, angles: &[f64]) -> SweepPlan {
    let corners = find_special_corners(curve);
    plan_with_corners(curve, angles, corners)
}

pub fn plan_with_corners(curve: &JordanCurve, angles: &[f64], corners: Vec<CornerRecord>) -> SweepPlan {
    let mut guarantees = Vec::new();
    for i in 0..corners.len() {
        for j in (i + 1)..corners.len() {
            let frame = compute_frame(curve, &corners[i], &corners[j])
                .or_else(|_| compute_frame(curve, &corners[j], &corners[i]));
            if let Ok(frame) = frame {
                guarantees.push(Guarantee { frame });
            }
        }
    }
    let entries = angles
        .iter()
        .map(|&theta| {
            let covering = guarantees
                .iter()
                .enumerate()
                .filter(|(_, g)| g.covers(theta))
                .min_by(|a, b| {
                    let da = wrapped_difference(theta, a.1.frame.pose.angle, PERIOD).abs() / a.1.eps();
                    let db = wrapped_difference(theta, b.1.frame.pose.angle, PERIOD).abs() / b.1.eps();
                    da.total_cmp(&db)
                })
                .map(|(k, _)| k);
            let mode = if covering.is_some() {
                Mode::TwoCorner
            } else if corners.iter().any(|c| c.special_angles.contains(theta)) {
                Mode::Uncovered
            } else {
                Mode::CornerFree
            };
            PlanEntry { theta, mode, guarantee: covering }
        })
        .collect();
    SweepPlan { entries, corners, guarantees }
}
