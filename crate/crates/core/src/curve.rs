//! Polygonal Jordan curves.
//!
//! A [`JordanCurve`] is a closed simple polyline. Edge `i` joins vertex `i`
//! to vertex `i + 1` (cyclically). The curve parameter `t ∈ [0, 1)` is
//! proportional to arc length, with `t = 0` at vertex 0.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::geom::math::{cos, pow, sin};
use crate::geom::{point_segment_distance, segments_touch, Point};

/// A position on the curve: edge index and fraction along it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePos {
    pub edge: usize,
    pub frac: f64,
}

impl CurvePos {
    pub const fn vertex(index: usize) -> Self {
        CurvePos { edge: index, frac: 0.0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct JordanCurve {
    vertices: Vec<Point>,
    /// `cumulative[i]` is the arc length from vertex 0 to vertex `i`;
    /// the last entry is the perimeter.
    cumulative: Vec<f64>,
    diameter: f64,
}

impl JordanCurve {
    /// Builds and validates a curve. A closing vertex equal to the first one
    /// is dropped.
    pub fn new(mut vertices: Vec<Point>) -> Result<Self, Error> {
        if vertices.len() > 1 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        let curve = Self::new_unchecked(vertices)?;
        let report = validate_simple(&curve);
        if !report.is_simple() {
            return Err(Error::SelfIntersection { pairs: report.crossings });
        }
        Ok(curve)
    }

    /// Builds a curve checking only the cheap invariants (vertex count,
    /// finiteness, no repeated consecutive vertices). Simplicity is not checked.
    pub fn new_unchecked(vertices: Vec<Point>) -> Result<Self, Error> {
        let n = vertices.len();
        if let Some(index) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        if n < 3 {
            return Err(Error::TooFewVertices { found: n });
        }
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::RepeatedVertex { index: (i + 1) % n });
            }
        }
        let mut cumulative = Vec::with_capacity(n + 1);
        let mut acc = 0.0;
        cumulative.push(0.0);
        for i in 0..n {
            acc += vertices[i].dist(vertices[(i + 1) % n]);
            cumulative.push(acc);
        }
        let mut diameter: f64 = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                diameter = diameter.max(vertices[i].dist(vertices[j]));
            }
        }
        Ok(JordanCurve { vertices, cumulative, diameter })
    }

    #[inline]
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    #[inline]
    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i % self.vertices.len()]
    }

    /// Endpoints of edge `i`.
    #[inline]
    pub fn edge(&self, i: usize) -> (Point, Point) {
        let n = self.vertices.len();
        (self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        (0..self.len()).map(move |i| self.edge(i))
    }

    pub fn perimeter(&self) -> f64 {
        self.cumulative[self.vertices.len()]
    }

    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn cumulative_length(&self) -> &[f64] {
        &self.cumulative
    }

    pub fn edge_length(&self, i: usize) -> f64 {
        self.cumulative[i + 1] - self.cumulative[i]
    }

    /// Point at curve parameter `t` (taken modulo 1).
    pub fn point(&self, t: f64) -> Point {
        self.point_at(self.pos_at(t))
    }

    /// Position at curve parameter `t` (taken modulo 1).
    pub fn pos_at(&self, t: f64) -> CurvePos {
        let n = self.vertices.len();
        let t = crate::geom::reduce_mod(t, 1.0);
        let s = t * self.perimeter();
        // Largest i with cumulative[i] <= s.
        let i = match self.cumulative[..n].binary_search_by(|c| c.total_cmp(&s)) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let len = self.edge_length(i);
        let frac = if len > 0.0 { ((s - self.cumulative[i]) / len).clamp(0.0, 1.0) } else { 0.0 };
        CurvePos { edge: i, frac }
    }

    pub fn point_at(&self, pos: CurvePos) -> Point {
        let (a, b) = self.edge(pos.edge);
        if pos.frac == 0.0 {
            a
        } else if pos.frac == 1.0 {
            b
        } else {
            a.lerp(b, pos.frac)
        }
    }

    /// Curve parameter in `[0, 1)` of a position.
    pub fn param_of(&self, pos: CurvePos) -> f64 {
        let s = self.cumulative[pos.edge] + pos.frac * self.edge_length(pos.edge);
        let t = s / self.perimeter();
        if t >= 1.0 {
            0.0
        } else {
            t
        }
    }

    /// Distance from `p` to the closest point of the curve.
    pub fn distance_to(&self, p: Point) -> f64 {
        self.edges().map(|(a, b)| point_segment_distance(p, a, b)).fold(f64::INFINITY, f64::min)
    }

    /// A new curve with every vertex mapped by `f`. Combinatorics are kept,
    /// so the result is simple whenever `f` is injective and affine.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<Self, Error> {
        Self::new_unchecked(self.vertices.iter().map(|&p| f(p)).collect())
    }
}

/// Outcome of [`validate_simple`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SimplicityReport {
    /// Pairs `(i, j)`, `i < j`, of edges that meet illegally.
    pub crossings: Vec<(usize, usize)>,
}

impl SimplicityReport {
    pub fn is_simple(&self) -> bool {
        self.crossings.is_empty()
    }
}

/// Brute-force simplicity check over all edge pairs.
///
/// Non-adjacent edges must be disjoint; adjacent edges may only share their
/// common vertex (no fold-back overlap).
pub fn validate_simple(curve: &JordanCurve) -> SimplicityReport {
    let n = curve.len();
    let mut crossings = Vec::new();
    for i in 0..n {
        let (a, b) = curve.edge(i);
        for j in (i + 1)..n {
            let (c, d) = curve.edge(j);
            let adjacent_next = j == i + 1;
            let adjacent_wrap = i == 0 && j == n - 1;
            let bad = if adjacent_next || adjacent_wrap {
                // The free endpoints must stay off the other edge.
                let (free_i, free_j) = if adjacent_next { (a, d) } else { (b, c) };
                on_segment(free_j, a, b) || on_segment(free_i, c, d)
            } else {
                segments_touch(a, b, c, d)
            };
            if bad {
                crossings.push((i, j));
            }
        }
    }
    crossings.sort_unstable();
    crossings.dedup();
    SimplicityReport { crossings }
}

fn on_segment(p: Point, a: Point, b: Point) -> bool {
    crate::geom::orient(a, b, p) == 0.0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Fixture shapes understood by [`generate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Circle,
    Ellipse,
    RoundedPolygon,
    RandomStar,
    Lens,
    Square,
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::Circle => "circle",
            Shape::Ellipse => "ellipse",
            Shape::RoundedPolygon => "rounded_polygon",
            Shape::RandomStar => "random_star",
            Shape::Lens => "lens",
            Shape::Square => "square",
        }
    }

    pub fn from_name(s: &str) -> Option<Shape> {
        Some(match s {
            "circle" => Shape::Circle,
            "ellipse" => Shape::Ellipse,
            "rounded_polygon" => Shape::RoundedPolygon,
            "random_star" => Shape::RandomStar,
            "lens" => Shape::Lens,
            "square" => Shape::Square,
            _ => return None,
        })
    }
}

/// Parameters of a generated fixture curve.
///
/// Unset parameters fall back to shape defaults:
///
/// | shape | parameters |
/// |---|---|
/// | circle | `radius = 1` |
/// | ellipse | `a = 2`, `b = 1` (semi-axes) |
/// | square | `side = 1` (lower-left corner at the origin) |
/// | rounded_polygon | `sides = 5`, `radius = 1`, `corner = 0.25` |
/// | random_star | `seed = 0`, `amplitude = 0.5`, `modes = 6` |
/// | lens | `a = 2` (lower branch `y = x^a`), `b = a` (upper branch `y = x^(1/b)`) |
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec {
    pub shape: Shape,
    pub resolution: usize,
    pub params: Vec<(&'static str, f64)>,
}

impl CurveSpec {
    pub fn new(shape: Shape, resolution: usize) -> Self {
        CurveSpec { shape, resolution, params: Vec::new() }
    }

    pub fn with(mut self, key: &'static str, value: f64) -> Self {
        self.params.retain(|(k, _)| *k != key);
        self.params.push((key, value));
        self
    }

    pub fn param(&self, key: &str) -> Option<f64> {
        self.params.iter().rev().find(|(k, _)| *k == key).map(|&(_, v)| v)
    }

    fn param_or(&self, key: &str, default: f64) -> f64 {
        self.param(key).unwrap_or(default)
    }

    /// Parameter names accepted by a shape.
    pub fn known_params(shape: Shape) -> &'static [&'static str] {
        match shape {
            Shape::Circle => &["radius"],
            Shape::Ellipse => &["a", "b"],
            Shape::Square => &["side"],
            Shape::RoundedPolygon => &["sides", "radius", "corner"],
            Shape::RandomStar => &["seed", "amplitude", "modes"],
            Shape::Lens => &["a", "b"],
        }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.resolution < 3 {
            return Err(Error::InvalidSpec("resolution must be at least 3".to_string()));
        }
        for (k, v) in &self.params {
            if !Self::known_params(self.shape).contains(k) {
                return Err(Error::InvalidSpec(alloc::format!(
                    "unknown parameter `{k}` for {}",
                    self.shape.name()
                )));
            }
            if !v.is_finite() {
                return Err(Error::InvalidSpec(alloc::format!("parameter `{k}` is not finite")));
            }
            let must_be_positive = !matches!(*k, "seed" | "amplitude");
            if must_be_positive && *v <= 0.0 {
                return Err(Error::InvalidSpec(alloc::format!("parameter `{k}` must be positive")));
            }
        }
        match self.shape {
            Shape::RandomStar => {
                let amp = self.param_or("amplitude", 0.5);
                if !(0.0..1.0).contains(&amp) {
                    return Err(Error::InvalidSpec("amplitude must lie in [0, 1)".to_string()));
                }
            }
            Shape::RoundedPolygon => {
                let sides = self.param_or("sides", 5.0);
                if sides < 3.0 || sides != (sides as usize) as f64 {
                    return Err(Error::InvalidSpec("sides must be an integer >= 3".to_string()));
                }
                if self.param_or("corner", 0.25) >= self.param_or("radius", 1.0) {
                    return Err(Error::InvalidSpec("corner must be smaller than radius".to_string()));
                }
            }
            Shape::Lens => {
                let a = self.param_or("a", 2.0);
                let b = self.param_or("b", a);
                if a < 1.0 || b < 1.0 || (a == 1.0 && b == 1.0) {
                    return Err(Error::InvalidSpec(
                        "lens exponents must be >= 1 and not both 1".to_string(),
                    ));
                }
                if self.resolution < 4 {
                    return Err(Error::InvalidSpec("lens needs resolution >= 4".to_string()));
                }
            }
            _ => {}
        }
        Ok(())
    }
}

/// Generates a deterministic fixture curve.
pub fn generate(spec: &CurveSpec) -> Result<JordanCurve, Error> {
    spec.validate()?;
    let n = spec.resolution;
    let vertices = match spec.shape {
        Shape::Circle => {
            let r = spec.param_or("radius", 1.0);
            ellipse_points(r, r, n)
        }
        Shape::Ellipse => ellipse_points(spec.param_or("a", 2.0), spec.param_or("b", 1.0), n),
        Shape::Square => square_points(spec.param_or("side", 1.0), n),
        Shape::RoundedPolygon => rounded_polygon_points(
            spec.param_or("sides", 5.0) as usize,
            spec.param_or("radius", 1.0),
            spec.param_or("corner", 0.25),
            n,
        ),
        Shape::RandomStar => star_points(
            spec.param_or("seed", 0.0),
            spec.param_or("amplitude", 0.5),
            spec.param_or("modes", 6.0) as usize,
            n,
        ),
        Shape::Lens => {
            let a = spec.param_or("a", 2.0);
            lens_points(a, spec.param_or("b", a), n)
        }
    };
    JordanCurve::new(vertices)
}

fn ellipse_points(a: f64, b: f64, n: usize) -> Vec<Point> {
    (0..n)
        .map(|k| {
            let phi = TAU * k as f64 / n as f64;
            Point::new(a * cos(phi), b * sin(phi))
        })
        .collect()
}

/// Counter-clockwise square with its corners always present; remaining
/// vertices are spread evenly along the sides.
fn square_points(side: f64, n: usize) -> Vec<Point> {
    let per_side = n.div_ceil(4).max(1);
    let corners = [
        Point::new(0.0, 0.0),
        Point::new(side, 0.0),
        Point::new(side, side),
        Point::new(0.0, side),
    ];
    let mut out = Vec::with_capacity(4 * per_side);
    for c in 0..4 {
        let (a, b) = (corners[c], corners[(c + 1) % 4]);
        for k in 0..per_side {
            out.push(if k == 0 { a } else { a.lerp(b, k as f64 / per_side as f64) });
        }
    }
    out
}

fn rounded_polygon_points(sides: usize, radius: f64, corner: f64, n: usize) -> Vec<Point> {
    // Corner arcs of radius `corner` centred on a shrunken polygon; their
    // tangents join along the straight sides.
    let per_corner = n.div_ceil(sides).max(2);
    let inner = radius - corner;
    let step = TAU / sides as f64;
    let mut out = Vec::with_capacity(sides * per_corner);
    for c in 0..sides {
        let centre_angle = step * c as f64;
        let centre = Point::new(inner * cos(centre_angle), inner * sin(centre_angle));
        for k in 0..per_corner {
            let phi = centre_angle - 0.5 * step + step * k as f64 / (per_corner - 1) as f64;
            // The last sample of one arc and the first of the next are joined
            // by a straight side.
            out.push(centre + Point::new(corner * cos(phi), corner * sin(phi)));
        }
    }
    out
}

fn star_points(seed: f64, amplitude: f64, modes: usize, n: usize) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.to_bits());
    let modes = modes.max(1);
    let mut coeffs = Vec::with_capacity(modes);
    for k in 0..modes {
        let c: f64 = rng.random_range(-1.0..1.0) / (k + 1) as f64;
        let phase: f64 = rng.random_range(0.0..TAU);
        coeffs.push((k + 2, c, phase));
    }
    let total: f64 = coeffs.iter().map(|(_, c, _)| c.abs()).sum();
    let scale = if total > 0.0 { amplitude / total } else { 0.0 };
    (0..n)
        .map(|i| {
            let phi = TAU * i as f64 / n as f64;
            let r = 1.0
                + coeffs
                    .iter()
                    .map(|&(k, c, phase)| scale * c * cos(k as f64 * phi + phase))
                    .sum::<f64>();
            Point::new(r * cos(phi), r * sin(phi))
        })
        .collect()
}

/// Lower branch `y = x^a` from (0,0) to (1,1), then the upper branch
/// `y = x^(1/b)` back, with both tips shared.
fn lens_points(a: f64, b: f64, n: usize) -> Vec<Point> {
    let half = n / 2;
    let upper = n - half;
    let mut out = Vec::with_capacity(n);
    for k in 0..=half {
        let x = k as f64 / half as f64;
        out.push(Point::new(x, pow(x, a)));
    }
    for k in 1..upper {
        let x = 1.0 - k as f64 / upper as f64;
        out.push(Point::new(x, pow(x, 1.0 / b)));
    }
    out
}

/// The unit square boundary with just its four corners.
pub fn unit_square() -> JordanCurve {
    JordanCurve::new(square_points(1.0, 4)).expect("unit square is simple")
}

/// Regular polygon approximating a circle, handy in tests.
pub fn circle(radius: f64, n: usize) -> JordanCurve {
    JordanCurve::new(ellipse_points(radius, radius, n)).expect("circle is simple")
}
