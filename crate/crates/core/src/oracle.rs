//! Brute-force rhombus finder used to cross-check the median pipeline.
//!
//! The curve is sampled at `M` points spaced evenly by arc length. From every
//! sample a line of angle `θ` (and one of angle `θ + π/2`) is cast against the
//! curve, which yields chords of exactly those directions. Chords of the two
//! families whose midpoints nearly coincide seed a Newton solve for the four
//! arc-length parameters of an exact inscribed rhombus.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::curve::JordanCurve;
use crate::error::Error;
use crate::geom::math::floor;
use crate::geom::{rhombus_class, Direction, Point};
use crate::search::RhombusCandidate;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    /// Number of arc-length samples `M`.
    pub samples: usize,
    /// Chord direction tolerance in radians. Cast chords are exact, so this
    /// only bounds the direction error accepted after refinement.
    pub angle_tol: f64,
    /// Midpoint matching radius, in units of the curve diameter.
    pub midpoint_tol: f64,
}

impl OracleConfig {
    /// `M` samples with the matching radius set to two sample spacings.
    pub fn with_samples(curve: &JordanCurve, samples: usize) -> Self {
        OracleConfig {
            samples,
            angle_tol: 2e-3,
            midpoint_tol: 2.0 * curve.perimeter() / (samples as f64 * curve.diameter()),
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.samples < 100 {
            return Err(Error::InvalidSpec("oracle needs at least 100 samples".to_string()));
        }
        if [self.angle_tol, self.midpoint_tol].iter().any(|t| t.is_nan() || *t <= 0.0) {
            return Err(Error::InvalidSpec("oracle tolerances must be positive".to_string()));
        }
        Ok(())
    }
}

/// A chord between arc-length positions `s1` and `s2`.
#[derive(Debug, Clone, Copy)]
struct Chord {
    s1: f64,
    s2: f64,
    mid: Point,
}

/// Arc-length view of a curve: position and unit tangent at `s`.
struct Walker<'a> {
    curve: &'a JordanCurve,
    length: f64,
}

impl Walker<'_> {
    fn locate(&self, s: f64) -> (usize, f64) {
        let cum = self.curve.cumulative_length();
        let n = self.curve.len();
        let s = s - self.length * floor(s / self.length);
        let k = match cum[..n].binary_search_by(|c| c.total_cmp(&s)) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        (k, s - cum[k])
    }

    fn point(&self, s: f64) -> Point {
        let (k, off) = self.locate(s);
        let (a, b) = self.curve.edge(k);
        a.lerp(b, off / self.curve.edge_length(k))
    }

    fn tangent(&self, s: f64) -> Point {
        let (k, _) = self.locate(s);
        let (a, b) = self.curve.edge(k);
        (b - a) / self.curve.edge_length(k)
    }
}

/// Chords of direction `dir` through each sample.
fn cast_chords(curve: &JordanCurve, samples: &[(f64, Point)], dir: &Direction) -> Vec<Chord> {
    let u = dir.unit();
    let cum = curve.cumulative_length();
    let min_len = 1e-9 * curve.diameter();
    let mut out = Vec::new();
    for &(s, p) in samples {
        for (k, &start) in cum[..curve.len()].iter().enumerate() {
            let (a, b) = curve.edge(k);
            // Solve p + λ u = a + μ (b − a) for μ ∈ [0, 1).
            let e = b - a;
            let denom = u.cross(e);
            if denom == 0.0 {
                continue;
            }
            let w = a - p;
            let mu = u.cross(w) / -denom;
            if !(0.0..1.0).contains(&mu) {
                continue;
            }
            let lambda = w.cross(e) / -denom;
            if lambda.abs() <= min_len {
                continue;
            }
            let x = a.lerp(b, mu);
            out.push(Chord { s1: s, s2: start + mu * curve.edge_length(k), mid: p.midpoint(x) });
        }
    }
    out
}

/// Dense solve of a 4×4 linear system by partial pivoting.
fn solve4(mut m: [[f64; 4]; 4], mut r: [f64; 4]) -> Option<[f64; 4]> {
    for col in 0..4 {
        let pivot = (col..4).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[pivot][col].abs() < 1e-14 {
            return None;
        }
        m.swap(col, pivot);
        r.swap(col, pivot);
        for row in (col + 1)..4 {
            let f = m[row][col] / m[col][col];
            let pivot_row = m[col];
            for (x, p) in m[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * p;
            }
            r[row] -= f * r[col];
        }
    }
    let mut x = [0.0; 4];
    for row in (0..4).rev() {
        let mut acc = r[row];
        for k in (row + 1)..4 {
            acc -= m[row][k] * x[k];
        }
        x[row] = acc / m[row][row];
    }
    Some(x)
}

/// Newton refinement of `[s1, s2, s3, s4]` so that `s1 s2` has direction
/// `d`, `s3 s4` direction `e`, and both chords share their midpoint.
fn refine(walk: &Walker<'_>, d: &Direction, e: &Direction, start: [f64; 4], max_step: f64) -> Option<[f64; 4]> {
    let tol = 1e-13 * walk.curve.diameter();
    let (du, eu) = (d.unit(), e.unit());
    let mut s = start;
    for _ in 0..30 {
        let p: [Point; 4] = core::array::from_fn(|k| walk.point(s[k]));
        let t: [Point; 4] = core::array::from_fn(|k| walk.tangent(s[k]));
        let mid = p[0] + p[1] - p[2] - p[3];
        let f = [(p[1] - p[0]).cross(du), (p[3] - p[2]).cross(eu), mid.x, mid.y];
        if f.iter().all(|v| v.abs() <= tol) {
            return Some(s);
        }
        let jac = [
            [-t[0].cross(du), t[1].cross(du), 0.0, 0.0],
            [0.0, 0.0, -t[2].cross(eu), t[3].cross(eu)],
            [t[0].x, t[1].x, -t[2].x, -t[3].x],
            [t[0].y, t[1].y, -t[2].y, -t[3].y],
        ];
        let step = solve4(jac, f.map(|v| -v))?;
        let largest = step.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let scale = if largest > max_step { max_step / largest } else { 1.0 };
        for k in 0..4 {
            s[k] += scale * step[k];
        }
        if (0..4).any(|k| (s[k] - start[k]).abs() > 8.0 * max_step) {
            return None;
        }
    }
    None
}

/// Finds inscribed rhombi of angle `theta` by chord enumeration.
pub fn brute_force_rhombi(curve: &JordanCurve, theta: f64, config: &OracleConfig) -> Result<Vec<RhombusCandidate>, Error> {
    config.validate()?;
    let theta = rhombus_class(theta);
    let length = curve.perimeter();
    let diam = curve.diameter();
    let spacing = length / config.samples as f64;
    let walk = Walker { curve, length };
    let samples: Vec<(f64, Point)> = (0..config.samples)
        .map(|k| {
            let s = k as f64 * spacing;
            (s, walk.point(s))
        })
        .collect();
    let d = Direction::new(theta);
    let e = Direction::new(theta + FRAC_PI_2);
    let along = cast_chords(curve, &samples, &d);
    let across = cast_chords(curve, &samples, &e);

    let cell = config.midpoint_tol * diam;
    let key = |p: Point| (floor(p.x / cell) as i64, floor(p.y / cell) as i64);
    let mut grid: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
    for (i, c) in across.iter().enumerate() {
        grid.entry(key(c.mid)).or_default().push(i);
    }

    let floor_sep = 2.0 * spacing;
    let dedup = 1e-6 * diam;
    let mut found: Vec<RhombusCandidate> = Vec::new();
    for a in &along {
        let (kx, ky) = key(a.mid);
        for gx in (kx - 1)..=(kx + 1) {
            for gy in (ky - 1)..=(ky + 1) {
                let Some(bucket) = grid.get(&(gx, gy)) else { continue };
                for &j in bucket {
                    let b = &across[j];
                    if a.mid.dist(b.mid) > cell {
                        continue;
                    }
                    let Some(s) = refine(&walk, &d, &e, [a.s1, a.s2, b.s1, b.s2], spacing) else { continue };
                    let vertices = [walk.point(s[0]), walk.point(s[2]), walk.point(s[1]), walk.point(s[3])];
                    let preimages = [s[0], s[2], s[1], s[3]].map(|x| {
                        let t = (x - length * floor(x / length)) / length;
                        if t >= 1.0 {
                            0.0
                        } else {
                            t
                        }
                    });
                    let cand = RhombusCandidate::from_vertices(curve, theta, vertices, preimages);
                    if cand.metrics.min_vertex_separation < floor_sep {
                        continue;
                    }
                    let d1 = vertices[2] - vertices[0];
                    let err = crate::geom::wrapped_difference(d1.angle(), theta, FRAC_PI_2).abs();
                    if err > config.angle_tol {
                        continue;
                    }
                    if !found.iter().any(|f| f.center.dist(cand.center) < dedup) {
                        found.push(cand);
                    }
                }
            }
        }
    }
    found.sort_by(|a, b| a.center.x.total_cmp(&b.center.x).then(a.center.y.total_cmp(&b.center.y)));
    Ok(found)
}

/// Outcome of [`compare_with_oracle`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MatchReport {
    /// `(found index, oracle index, center distance)`.
    pub matched: Vec<(usize, usize, f64)>,
    pub found_only: Vec<usize>,
    pub oracle_only: Vec<usize>,
}

/// Greedy one-to-one matching of candidate centers within `radius`; closer
/// pairs first, ties going to the smaller on-curve residual.
pub fn compare_with_oracle(found: &[RhombusCandidate], oracle: &[RhombusCandidate], radius: f64) -> MatchReport {
    let mut pairs: Vec<(f64, f64, usize, usize)> = Vec::new();
    for (i, f) in found.iter().enumerate() {
        for (j, o) in oracle.iter().enumerate() {
            let d = f.center.dist(o.center);
            if d <= radius {
                pairs.push((d, f.metrics.on_curve_residual + o.metrics.on_curve_residual, i, j));
            }
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)).then((a.2, a.3).cmp(&(b.2, b.3))));
    let mut used_f = alloc::vec![false; found.len()];
    let mut used_o = alloc::vec![false; oracle.len()];
    let mut report = MatchReport::default();
    for (d, _, i, j) in pairs {
        if !used_f[i] && !used_o[j] {
            used_f[i] = true;
            used_o[j] = true;
            report.matched.push((i, j, d));
        }
    }
    report.matched.sort_by_key(|&(i, _, _)| i);
    report.found_only = (0..found.len()).filter(|&i| !used_f[i]).collect();
    report.oracle_only = (0..oracle.len()).filter(|&j| !used_o[j]).collect();
    report
}
