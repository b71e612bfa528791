mod common;

use common::{angles, ellipse, lens, star};
use rhombic_core::corners::find_special_corners;
use rhombic_core::curve::{circle, JordanCurve};
use rhombic_core::frame::support_frame;
use rhombic_core::geom::rhombus_class;
use rhombic_core::search::{find_rhombi, RhombusCandidate};
use rhombic_core::Point;
use std::f64::consts::FRAC_PI_2;

const PHI: f64 = 0.37;
const SHIFT: Point = Point::new(3.0, -1.0);

fn moved(c: &JordanCurve) -> JordanCurve {
    c.map(|p| p.rotate(PHI) + SHIFT).unwrap()
}

fn curves() -> Vec<(&'static str, JordanCurve)> {
    vec![
        ("circle", circle(1.0, 720)),
        ("ellipse", ellipse()),
        ("lens", lens()),
        ("star1", star(1)),
        ("star3", star(3)),
    ]
}

/// Every vertex of `a` mapped by `f` lies within `tol` of some vertex of `b`.
fn same_vertices(a: &RhombusCandidate, b: &RhombusCandidate, f: impl Fn(Point) -> Point, tol: f64) -> bool {
    a.vertices.iter().all(|&v| b.vertices.iter().any(|&w| f(v).dist(w) <= tol))
}

fn assert_matched(name: &str, a: &[RhombusCandidate], b: &[RhombusCandidate], f: impl Fn(Point) -> Point, tol: f64) {
    assert_eq!(a.len(), b.len(), "{name}: candidate counts differ");
    for x in a {
        let y = b.iter().min_by(|p, q| p.center.dist(f(x.center)).total_cmp(&q.center.dist(f(x.center)))).unwrap();
        assert!(f(x.center).dist(y.center) <= tol, "{name}: center moved");
        assert!(same_vertices(x, y, &f, tol), "{name}: vertices differ");
    }
}

#[test]
fn rigid_motion_carries_rhombi() {
    for (name, curve) in curves() {
        let other = moved(&curve);
        let tol = 1e-9 * curve.diameter();
        for theta in angles(8) {
            let a = find_rhombi(&curve, theta).unwrap().candidates;
            let b = find_rhombi(&other, theta + PHI).unwrap().candidates;
            assert!((b.first().map_or(rhombus_class(theta + PHI), |c| c.theta) - rhombus_class(theta + PHI)).abs() < 1e-15);
            assert_matched(name, &a, &b, |p| p.rotate(PHI) + SHIFT, tol);
        }
    }
}

#[test]
fn scaling_scales_rhombi() {
    for (name, curve) in curves() {
        let big = curve.map(|p| p * 2.5).unwrap();
        for theta in angles(8) {
            let a = find_rhombi(&curve, theta).unwrap().candidates;
            let b = find_rhombi(&big, theta).unwrap().candidates;
            assert_eq!(a.len(), b.len(), "{name}");
            for (x, y) in a.iter().zip(&b) {
                for (v, w) in x.vertices.iter().zip(&y.vertices).chain([(&x.center, &y.center)]) {
                    let want = *v * 2.5;
                    assert!(want.dist(*w) <= 1e-12 * want.norm().max(curve.diameter()), "{name} at {theta}");
                }
            }
        }
    }
}

#[test]
fn angle_class_is_a_quarter_turn() {
    for (name, curve) in curves() {
        for theta in angles(8) {
            let a = find_rhombi(&curve, theta).unwrap().candidates;
            let b = find_rhombi(&curve, theta + FRAC_PI_2).unwrap().candidates;
            assert_matched(name, &a, &b, |p| p, 1e-9 * curve.diameter());
        }
    }
}

#[test]
fn support_frames_rotate_with_the_curve() {
    for (name, curve) in curves() {
        let other = moved(&curve);
        let tol = 1e-9 * curve.diameter();
        for theta in angles(16) {
            let f = support_frame(&curve, theta).unwrap();
            let g = support_frame(&other, theta + PHI).unwrap();
            let pairs = [
                (f.mm(), g.mm()),
                (f.big_m_m(), g.big_m_m()),
                (f.m_big_m(), g.m_big_m()),
                (f.big_mm(), g.big_mm()),
                (f.a, g.a),
                (f.b, g.b),
            ];
            // Crossing π swaps the roles of the two support lines.
            let wrapped = theta + PHI >= std::f64::consts::PI;
            for (p, q) in pairs {
                let p = p.rotate(PHI) + SHIFT;
                if wrapped {
                    assert!([g.mm(), g.big_m_m(), g.m_big_m(), g.big_mm(), g.a, g.b].iter().any(|r| r.dist(p) <= tol));
                } else {
                    assert!(p.dist(q) <= tol, "{name} at {theta}");
                }
            }
            assert!((f.max - f.min - (g.max - g.min)).abs() <= tol, "{name} at {theta}: width");
        }
    }
}

#[test]
fn special_angles_rotate_with_the_curve() {
    let curve = lens();
    let other = moved(&curve);
    let a = find_special_corners(&curve);
    let b = find_special_corners(&other);
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.vertex_index, y.vertex_index);
        assert!((x.special_angles.measure() - y.special_angles.measure()).abs() < 1e-9);
        for k in 0..200 {
            let t = k as f64 * FRAC_PI_2 / 200.0;
            let near_edge = x.special_angles.arcs().iter().any(|&(lo, hi)| {
                [lo, hi].iter().any(|e| (rhombus_class(*e) - rhombus_class(t)).abs() < 1e-6)
            });
            if !near_edge {
                assert_eq!(x.special_angles.contains(t), y.special_angles.contains(t + PHI));
            }
        }
    }
}
