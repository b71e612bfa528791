//! One SVG picture per sweep entry: the curve, the two medians, region `R`
//! for refined two-corner entries, and every rhombus.

use std::fmt::Write;

use rhombic_core::curve::JordanCurve;
use rhombic_core::median::{Median, MedianSegment};
use rhombic_core::two_corner::{refined_view, RefinedView};
use rhombic_core::Point;

use crate::report::SweepEntry;

pub const VIEWPORT: f64 = 1000.0;
const MARGIN: f64 = 50.0;

/// Maps plane coordinates into the viewport, keeping the aspect ratio and
/// flipping `y` so that up is up.
#[derive(Debug, Clone, Copy)]
struct View {
    min: Point,
    max_y: f64,
    scale: f64,
}

impl View {
    fn fit(curve: &JordanCurve) -> View {
        let v = curve.vertices();
        let fold = |f: fn(f64, f64) -> f64, init: f64, get: fn(&Point) -> f64| v.iter().map(get).fold(init, f);
        let (x0, x1) = (fold(f64::min, f64::INFINITY, |p| p.x), fold(f64::max, f64::NEG_INFINITY, |p| p.x));
        let (y0, y1) = (fold(f64::min, f64::INFINITY, |p| p.y), fold(f64::max, f64::NEG_INFINITY, |p| p.y));
        let span = (x1 - x0).max(y1 - y0).max(f64::MIN_POSITIVE);
        View { min: Point::new(x0, y0), max_y: y1, scale: (VIEWPORT - 2.0 * MARGIN) / span }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (MARGIN + (p.x - self.min.x) * self.scale, MARGIN + (self.max_y - p.y) * self.scale)
    }

    fn points(&self, pts: impl IntoIterator<Item = Point>) -> String {
        let mut s = String::new();
        for (k, p) in pts.into_iter().enumerate() {
            let (x, y) = self.map(p);
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{x:.3},{y:.3}");
        }
        s
    }
}

fn segments(out: &mut String, view: &View, class: &str, segs: &[MedianSegment], map: impl Fn(Point) -> Point) {
    let _ = writeln!(out, "<g class=\"{class}\">");
    for s in segs {
        let (x1, y1) = view.map(map(s.start));
        let (x2, y2) = view.map(map(s.end));
        let _ = writeln!(out, "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\"/>");
    }
    out.push_str("</g>\n");
}

type Unpose = Box<dyn Fn(Point) -> Point>;

/// The refined view of a two-corner entry with a nonzero posed angle, and
/// the map from its coordinates back to the curve's.
fn refined(curve: &JordanCurve, entry: &SweepEntry) -> Option<(RefinedView, Unpose)> {
    let g = entry.guarantee?;
    if g.posed_theta == 0.0 {
        return None;
    }
    let corners = rhombic_core::corners::find_special_corners(curve);
    let p = corners.iter().find(|c| c.vertex_index == g.corners.0)?;
    let q = corners.iter().find(|c| c.vertex_index == g.corners.1)?;
    let frame = rhombic_core::two_corner::compute_frame(curve, p, q).ok()?;
    if g.posed_theta > 0.0 {
        let view = refined_view(&frame, g.posed_theta).ok()?;
        Some((view, Box::new(move |x| frame.pose.invert(x))))
    } else {
        let view = rhombic_core::two_corner::mirrored_view(&frame, -g.posed_theta).ok()?;
        Some((view, Box::new(move |x| frame.unmirror(x))))
    }
}

pub fn render_entry(curve: &JordanCurve, entry: &SweepEntry) -> String {
    let view = View::fit(curve);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{VIEWPORT}\" height=\"{VIEWPORT}\" viewBox=\"0 0 {VIEWPORT} {VIEWPORT}\">"
    );
    out.push_str(
        "<style>.curve{fill:none;stroke:#222;stroke-width:1.5}.median-a line{stroke:#1f77b4}\
         .median-b line{stroke:#d62728}.region{fill:#2ca02c;fill-opacity:0.12;stroke:#2ca02c}\
         .rhombus{fill:#ff7f0e;fill-opacity:0.25;stroke:#ff7f0e;stroke-width:2}</style>\n",
    );
    let _ = writeln!(
        out,
        "<title>theta {} mode {} candidates {}</title>",
        entry.theta,
        entry.mode.name(),
        entry.candidates.len()
    );
    let _ = writeln!(out, "<polygon class=\"curve\" points=\"{}\"/>", view.points(curve.vertices().iter().copied()));

    if let Some((r, unpose)) = refined(curve, entry) {
        let region = r.region.corners();
        let _ = writeln!(out, "<polygon class=\"region\" points=\"{}\"/>", view.points(region.map(&unpose)));
        segments(&mut out, &view, "median-a", &r.clipped_median.set.segments, &unpose);
        segments(&mut out, &view, "median-b", &r.restricted, &unpose);
    } else {
        let theta = entry.candidates.first().map_or(entry.theta, |c| c.theta);
        for (class, angle) in [("median-a", theta), ("median-b", theta + std::f64::consts::FRAC_PI_2)] {
            if let Ok(m) = Median::build(curve, angle) {
                segments(&mut out, &view, class, &m.set.segments, |p| p);
            }
        }
    }
    for c in &entry.candidates {
        let _ = writeln!(out, "<polygon class=\"rhombus\" points=\"{}\"/>", view.points(c.vertices));
    }
    out.push_str("</svg>\n");
    out
}
