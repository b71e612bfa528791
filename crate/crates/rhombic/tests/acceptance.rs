//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

mod common;

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::Command;
use std::time::Instant;

use common::{angles, corpus, ellipse, flat_lens, lens, star};
use rhombic::report::{run_sweep, uniform_angles};
use rhombic_core::corners::find_special_corners;
use rhombic_core::curve::{circle, unit_square, JordanCurve};
use rhombic_core::frame::{split_arcs, support_frame, RecRegion};
use rhombic_core::geom::{segment_contact, Contact};
use rhombic_core::median::{median_mask, plane_mask, Median};
use rhombic_core::oracle::{brute_force_rhombi, compare_with_oracle, OracleConfig};
use rhombic_core::search::{find_rhombi, validate_rhombus, RhombusCandidate};
use rhombic_core::separation::{masks_intersect, separates, CornerPair};
use rhombic_core::two_corner::{clip_curve, compute_frame, mirrored_view, refined_view, two_corner_search, Case};
use rhombic_core::Point;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Largest distance from a target vertex to the nearest candidate vertex.
fn vertex_error(c: &RhombusCandidate, targets: &[Point]) -> f64 {
    targets
        .iter()
        .map(|t| c.vertices.iter().map(|v| v.dist(*t)).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

fn circle_fixture() -> Outcome {
    let curve = circle(1.0, 720);
    let angles = uniform_angles(90, 0.0, FRAC_PI_2);
    let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().map_err(|e| e.to_string())?;
    let start = Instant::now();
    let report = pool.install(|| run_sweep(&curve, &angles, 1e-3)).map_err(|e| e.to_string())?;
    let seconds = start.elapsed().as_secs_f64();
    let mut worst = 0.0f64;
    for e in &report.entries {
        ensure(!e.candidates.is_empty(), || format!("no candidate at {}", e.theta))?;
        let t = e.theta;
        let square: Vec<Point> = (0..4).map(|k| Point::new((t + k as f64 * FRAC_PI_2).cos(), (t + k as f64 * FRAC_PI_2).sin())).collect();
        for c in &e.candidates {
            ensure(c.metrics.side_dispersion <= 1e-3, || format!("side dispersion {} at {t}", c.metrics.side_dispersion))?;
            ensure(c.center.norm() <= 1e-3, || format!("center {:?} at {t}", c.center))?;
            let err = vertex_error(c, &square);
            worst = worst.max(err);
            ensure(err <= 2e-3, || format!("vertex error {err} at {t}"))?;
        }
    }
    ensure(seconds <= 60.0, || format!("took {seconds:.1} s"))?;
    Ok(format!("90 angles, worst vertex error {worst:.2e}, {seconds:.2} s single-threaded"))
}

fn ellipse_fixture() -> Outcome {
    let curve = ellipse();
    let mut count = 0;
    for theta in uniform_angles(32, 0.0, FRAC_PI_2) {
        let found = find_rhombi(&curve, theta).map_err(|e| e.to_string())?.candidates;
        ensure(!found.is_empty(), || format!("no candidate at {theta}"))?;
        for c in &found {
            ensure(c.center.norm() <= 1e-3, || format!("center {:?} at {theta}", c.center))?;
        }
        count += found.len();
    }
    let at_zero = find_rhombi(&curve, 0.0).map_err(|e| e.to_string())?.candidates;
    let axes = [Point::new(2.0, 0.0), Point::new(-2.0, 0.0), Point::new(0.0, 1.0), Point::new(0.0, -1.0)];
    let c = at_zero.first().ok_or("no candidate at 0")?;
    let err = vertex_error(c, &axes);
    ensure(err <= 2e-3, || format!("axis vertex error {err}"))?;
    let side = c.vertices[0].dist(c.vertices[1]);
    ensure((side - 5f64.sqrt()).abs() <= 2e-3, || format!("side {side}"))?;
    Ok(format!("{count} candidates over 32 angles, side at 0 = {side:.6}"))
}

fn square_fixture() -> Outcome {
    let curve = unit_square();
    let found = find_rhombi(&curve, 0.0).map_err(|e| e.to_string())?.candidates;
    let want = [Point::new(0.0, 0.5), Point::new(0.5, 0.0), Point::new(1.0, 0.5), Point::new(0.5, 1.0)];
    let hit = found
        .iter()
        .find(|c| c.center.dist(Point::new(0.5, 0.5)) <= 1e-9 && vertex_error(c, &want) <= 1e-9)
        .ok_or_else(|| format!("no exact square among {} candidates", found.len()))?;
    let corners = find_special_corners(&curve);
    ensure(corners.is_empty(), || format!("{} special corners", corners.len()))?;
    Ok(format!("vertex error {:.1e}, no special corners", vertex_error(hit, &want)))
}

fn lens_fixture() -> Outcome {
    let curve = lens();
    let corners = find_special_corners(&curve);
    ensure(corners.len() == 2, || format!("{} corners", corners.len()))?;
    ensure(corners[0].point == Point::new(0.0, 0.0) && corners[1].point == Point::new(1.0, 1.0), || {
        format!("corners at {:?}, {:?}", corners[0].point, corners[1].point)
    })?;
    ensure(corners.iter().all(|c| c.special_angles.contains(0.0)), || "0 missing from a corner set".into())?;
    let frame = compute_frame(&curve, &corners[0], &corners[1]).map_err(|e| e.to_string())?;
    ensure(frame.eps > 0.0, || "eps is not positive".into())?;
    for k in [0.0, 0.25, 0.5, 0.75, 0.9] {
        let out = two_corner_search(&curve, &frame, k * frame.eps).map_err(|e| e.to_string())?;
        let valid = out.candidates.iter().filter(|c| validate_rhombus(c, &curve, 1e-3).pass).count();
        ensure(valid >= 1, || format!("no validated rhombus at {k}·eps"))?;
    }
    Ok(format!("eps = {:.6}, rhombi at 0, .25, .5, .75, .9 of eps", frame.eps))
}

/// Arc and median properties over the corpus, plus the two-corner
/// properties on the lens whose corner pair takes the clipped-curve path.
fn claim_suite() -> Outcome {
    let mut checks = 0usize;
    for (name, curve) in corpus() {
        let tol = 1e-9 * curve.diameter();
        for theta in angles(16) {
            let f = support_frame(&curve, theta).map_err(|e| e.to_string())?;
            let arcs = split_arcs(&curve, &f).map_err(|e| e.to_string())?;
            for arc in [&arcs.gamma, &arcs.big_gamma] {
                let last = arc.points.len() - 1;
                for (k, &p) in arc.points.iter().enumerate() {
                    let v = f.dir.normal(p);
                    ensure(k == 0 || v > f.min + tol, || format!("{name} at {theta}: arc meets min line inside"))?;
                    ensure(k == last || v < f.max - tol, || format!("{name} at {theta}: arc meets max line inside"))?;
                    checks += 1;
                }
            }
            let ends = [arcs.gamma.start(), arcs.gamma.end(), arcs.big_gamma.start(), arcs.big_gamma.end()];
            let (g, b) = (&arcs.gamma.points, &arcs.big_gamma.points);
            for i in 0..g.len() - 1 {
                for j in 0..b.len() - 1 {
                    let pts = match segment_contact(g[i], g[i + 1], b[j], b[j + 1], tol) {
                        Contact::Disjoint => continue,
                        Contact::Point { s, .. } => vec![g[i].lerp(g[i + 1], s)],
                        Contact::Overlap { s0, s1, .. } => vec![g[i].lerp(g[i + 1], s0), g[i].lerp(g[i + 1], s1)],
                    };
                    for p in pts {
                        ensure(ends.iter().any(|e| e.dist(p) <= tol), || format!("{name} at {theta}: arcs meet at {p:?}"))?;
                    }
                }
            }
            checks += 1;
        }
    }

    let curve = flat_lens();
    let corners = find_special_corners(&curve);
    let frame = compute_frame(&curve, &corners[0], &corners[1]).map_err(|e| e.to_string())?;
    ensure(frame.case == Case::Two, || "flat lens is not in the clipped-curve case".into())?;
    let side = &frame.side;
    let upper = side.upper.as_ref().ok_or("no upper arc")?;
    let n = side.curve.len();
    let thetas: Vec<f64> = (1..=16).map(|k| frame.eps * k as f64 / 17.0).collect();
    let contacts = |theta: f64| -> Result<(f64, f64), String> {
        let f = support_frame(&side.curve, theta).map_err(|e| e.to_string())?;
        let lo = upper.param_of(f.on_min.lo.pos, n).ok_or("contact off the upper arc")?;
        let hi = upper.param_of(f.on_min.hi.pos, n).ok_or("contact off the upper arc")?;
        Ok((lo, hi))
    };
    let mut ordered = vec![0.0];
    ordered.extend(&thetas);
    for w in ordered.windows(2) {
        let ((lo1, hi1), (lo2, hi2)) = (contacts(w[0])?, contacts(w[1])?);
        ensure(lo2 <= hi2 && hi2 <= lo1 && lo1 <= hi1, || format!("contact order fails between {} and {}", w[0], w[1]))?;
        checks += 1;
    }
    for &theta in &thetas {
        clip_curve(&frame, theta).map_err(|e| e.to_string())?;
        for view in [refined_view(&frame, theta), mirrored_view(&frame, theta)] {
            let view = view.map_err(|e| e.to_string())?;
            let slope = theta.tan();
            for seg in &view.restricted {
                for p in [seg.start, seg.end, seg.point_at(0.5)] {
                    ensure(p.y > p.x * slope, || format!("perpendicular median below the line at {theta}"))?;
                    checks += 1;
                }
            }
            let (lo, hi) = (view.region.x_lo, view.region.x_hi);
            for seg in &view.clipped_median.set.segments {
                for p in [seg.start, seg.end] {
                    ensure(p.x > lo && p.x < hi, || format!("clipped median leaves the window at {theta}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} checks, 9 curves × 16 angles plus 16 clipped-curve angles"))
}

fn corner_free(curve: &JordanCurve, theta: f64) -> bool {
    find_special_corners(curve).iter().all(|c| !c.special_angles.contains(theta))
}

fn separation_suite() -> Outcome {
    const G: usize = 128;
    let (mut separated, mut coupled) = (0, 0);
    for (name, curve) in corpus() {
        for theta in angles(16) {
            let m = Median::build(&curve, theta).map_err(|e| e.to_string())?;
            let mask = median_mask(&m.arcs, &m.set, G);
            ensure(separates(&mask, CornerPair::ANTI_DIAGONAL), || format!("{name} at {theta}: corners not separated"))?;
            separated += 1;
            if corner_free(&curve, theta) {
                let other = Median::build(&curve, theta + FRAC_PI_2).map_err(|e| e.to_string())?;
                let rec = RecRegion::new(&curve, theta);
                let meet = !masks_intersect(&plane_mask(&m.set, &rec, G), &plane_mask(&other.set, &rec, G))
                    .map_err(|e| e.to_string())?
                    .is_empty();
                let found = !find_rhombi(&curve, theta).map_err(|e| e.to_string())?.candidates.is_empty();
                ensure(meet == found, || format!("{name} at {theta}: masks meet = {meet}, rhombi found = {found}"))?;
                coupled += 1;
            }
        }
    }
    Ok(format!("{separated} masks separate, {coupled} corner-free couplings agree"))
}

fn oracle_equivalence() -> Outcome {
    const SAMPLES: usize = 2000;
    let (mut median, mut matched) = (0, 0);
    for seed in 1..=5 {
        let curve = star(seed);
        let config = OracleConfig::with_samples(&curve, SAMPLES);
        let radius = 2.0 * (2.0 * PI / SAMPLES as f64) * curve.diameter();
        for theta in angles(8) {
            let found = find_rhombi(&curve, theta).map_err(|e| e.to_string())?.candidates;
            let oracle = brute_force_rhombi(&curve, theta, &config).map_err(|e| e.to_string())?;
            let report = compare_with_oracle(&found, &oracle, radius);
            ensure(report.found_only.is_empty(), || {
                format!("star{seed} at {theta}: {} unmatched median candidates", report.found_only.len())
            })?;
            median += found.len();
            matched += report.matched.len();
        }
    }
    Ok(format!("{matched}/{median} median candidates matched over 5 stars × 8 angles"))
}

fn equivariance() -> Outcome {
    const PHI: f64 = 0.37;
    let shift = Point::new(3.0, -1.0);
    let mut compared = 0;
    for (name, curve) in corpus() {
        let moved = curve.map(|p| p.rotate(PHI) + shift).map_err(|e| e.to_string())?;
        let scaled = curve.map(|p| p * 2.5).map_err(|e| e.to_string())?;
        let tol = 1e-9 * curve.diameter();
        for theta in angles(8) {
            let base = find_rhombi(&curve, theta).map_err(|e| e.to_string())?.candidates;
            let turned = find_rhombi(&moved, theta + PHI).map_err(|e| e.to_string())?.candidates;
            ensure(base.len() == turned.len(), || format!("{name} at {theta}: {} vs {} candidates", base.len(), turned.len()))?;
            for c in &base {
                let image: Vec<Point> = c.vertices.iter().map(|&v| v.rotate(PHI) + shift).collect();
                let ok = turned.iter().any(|d| vertex_error(d, &image) <= tol);
                ensure(ok, || format!("{name} at {theta}: moved rhombus not found"))?;
                compared += 1;
            }
            let big = find_rhombi(&scaled, theta).map_err(|e| e.to_string())?.candidates;
            ensure(base.len() == big.len(), || format!("{name} at {theta}: scaling changed the count"))?;
            for (c, d) in base.iter().zip(&big) {
                for (v, w) in c.vertices.iter().zip(&d.vertices).chain([(&c.center, &d.center)]) {
                    let want = *v * 2.5;
                    let err = want.dist(*w) / (2.5 * curve.diameter());
                    ensure(err <= 1e-12, || format!("{name} at {theta}: scaled error {err:.1e}"))?;
                }
            }
        }
    }
    Ok(format!("{compared} rhombi carried by the rigid motion; scaling exact to 1e-12"))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_rhombic");
    let curve = dir.path().join("star.json");
    rhombic::io::write_curve(&star(3), &curve).map_err(|e| e.to_string())?;
    let run = |out: &str| -> Result<Vec<u8>, String> {
        let path = dir.path().join(out);
        let status = Command::new(bin)
            .args(["sweep", "--steps", "24", "--curve"])
            .arg(&curve)
            .arg("--out")
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.success(), || format!("sweep exited with {}", status.status))?;
        std::fs::read(&path).map_err(|e| e.to_string())
    };
    let (a, b) = (run("a.json")?, run("b.json")?);
    ensure(a == b, || "reports differ".into())?;
    Ok(format!("two sweeps, {} identical bytes", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("circle fixture", circle_fixture),
        ("ellipse central symmetry", ellipse_fixture),
        ("square fixture", square_fixture),
        ("lens two-corner fixture", lens_fixture),
        ("arc, median and clipped-curve properties", claim_suite),
        ("median separation and mask coupling", separation_suite),
        ("oracle equivalence", oracle_equivalence),
        ("rigid motion and scale equivariance", equivariance),
        ("sweep determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
