#![allow(dead_code)]

use rhombic_core::curve::{circle, generate, CurveSpec, JordanCurve, Shape};
use rhombic_core::frame::SupportFrame;
use rhombic_core::Point;

pub fn ellipse() -> JordanCurve {
    generate(&CurveSpec::new(Shape::Ellipse, 720).with("a", 2.0).with("b", 1.0)).unwrap()
}

pub fn square() -> JordanCurve {
    generate(&CurveSpec::new(Shape::Square, 40)).unwrap()
}

pub fn star(seed: u32) -> JordanCurve {
    generate(&CurveSpec::new(Shape::RandomStar, 200).with("seed", f64::from(seed))).unwrap()
}

pub fn lens() -> JordanCurve {
    generate(&CurveSpec::new(Shape::Lens, 800)).unwrap()
}

/// Lens bounded by `y = x` and `y = √x`: both corners sit on one support line.
pub fn flat_lens() -> JordanCurve {
    generate(&CurveSpec::new(Shape::Lens, 800).with("a", 1.0).with("b", 2.0)).unwrap()
}

pub fn corpus() -> Vec<(String, JordanCurve)> {
    let mut out = vec![
        ("circle".to_string(), circle(1.0, 720)),
        ("ellipse".to_string(), ellipse()),
        ("square".to_string(), square()),
        ("lens".to_string(), lens()),
    ];
    for seed in 1..=5 {
        out.push((format!("star{seed}"), star(seed)));
    }
    out
}

pub fn angles(k: usize) -> Vec<f64> {
    (0..k).map(|i| i as f64 * std::f64::consts::FRAC_PI_2 / k as f64).collect()
}

pub fn normal(frame: &SupportFrame, p: Point) -> f64 {
    frame.dir.normal(p)
}
