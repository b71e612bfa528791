//! Angle sweeps and their JSON reports.

use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use rhombic_core::corners::{plan_sweep, CornerRecord, Mode, PlanEntry, SweepPlan};
use rhombic_core::curve::JordanCurve;
use rhombic_core::search::{find_rhombi_with_corners, validate_rhombus, RhombusCandidate, SearchOutcome};
use rhombic_core::two_corner::two_corner_search;
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::io::{curve_digest, write_text};
use crate::json::{number, point, to_canonical_string};
use crate::svg;

pub const REPORT_FORMAT: &str = "rhombus-report/1";
pub const TOOL_VERSION: &str = concat!("rhombic ", env!("CARGO_PKG_VERSION"));

/// Default validation tolerance for reported candidates.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The two-corner interval that produced an entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GuaranteeInfo {
    /// Center of the interval, as an angle class.
    pub theta0: f64,
    pub eps: f64,
    /// The entry's angle measured from the corner axis.
    pub posed_theta: f64,
    pub corners: (usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepEntry {
    /// The requested angle, as given.
    pub theta: f64,
    pub mode: Mode,
    pub guarantee: Option<GuaranteeInfo>,
    /// Candidates that passed validation.
    pub candidates: Vec<RhombusCandidate>,
    /// Candidates dropped by validation.
    pub rejected: usize,
    pub thick_median: bool,
    pub not_guaranteed: bool,
    pub finding: bool,
    /// Pipeline error, if the search failed.
    pub error: Option<String>,
    /// Wall-clock seconds spent on this entry.
    pub seconds: f64,
}

impl SweepEntry {
    pub fn flags(&self) -> Vec<&'static str> {
        let mut flags = Vec::new();
        if self.thick_median {
            flags.push("thick_median");
        }
        if self.not_guaranteed {
            flags.push("not_guaranteed");
        }
        if self.finding {
            flags.push("finding");
        }
        if self.rejected > 0 {
            flags.push("rejected_candidates");
        }
        if self.error.is_some() {
            flags.push("error");
        }
        flags
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub curve: JordanCurve,
    pub curve_digest: String,
    pub tol: f64,
    pub entries: Vec<SweepEntry>,
    pub corners: Vec<CornerRecord>,
    pub tool_version: &'static str,
}

impl SweepReport {
    pub fn findings(&self) -> usize {
        self.entries.iter().filter(|e| e.finding).count()
    }

    pub fn errors(&self) -> usize {
        self.entries.iter().filter(|e| e.error.is_some()).count()
    }

    pub fn candidate_count(&self) -> usize {
        self.entries.iter().map(|e| e.candidates.len()).sum()
    }

    /// The report as JSON. Timings are left out unless asked for, so that
    /// equal inputs give equal bytes.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let entries: Vec<Value> = self.entries.iter().map(|e| entry_json(e, with_timing)).collect();
        let corners: Vec<Value> = self
            .corners
            .iter()
            .map(|c| {
                let intervals: Vec<Value> =
                    c.special_angles.pieces().iter().map(|&(a, b)| json!([number(a), number(b)])).collect();
                json!({"point": point(c.point), "vertex_index": c.vertex_index, "intervals": intervals})
            })
            .collect();
        let mut modes = Map::new();
        for mode in [Mode::CornerFree, Mode::TwoCorner, Mode::Uncovered] {
            modes.insert(mode.name().into(), json!(self.entries.iter().filter(|e| e.mode == mode).count()));
        }
        json!({
            "format": REPORT_FORMAT,
            "curve_digest": self.curve_digest,
            "tool_version": self.tool_version,
            "tol": number(self.tol),
            "entries": entries,
            "corners": corners,
            "summary": {
                "entries": self.entries.len(),
                "candidates": self.candidate_count(),
                "findings": self.findings(),
                "errors": self.errors(),
                "modes": modes,
            },
        })
    }
}

pub fn candidate_json(c: &RhombusCandidate) -> Value {
    json!({
        "theta": number(c.theta),
        "center": point(c.center),
        "vertices": c.vertices.iter().map(|&v| point(v)).collect::<Vec<_>>(),
        "preimages": c.preimages.iter().map(|&t| number(t)).collect::<Vec<_>>(),
        "metrics": {
            "side_dispersion": number(c.metrics.side_dispersion),
            "on_curve_residual": number(c.metrics.on_curve_residual),
            "min_vertex_separation": number(c.metrics.min_vertex_separation),
        },
    })
}

fn entry_json(e: &SweepEntry, with_timing: bool) -> Value {
    let mut v = json!({
        "theta": number(e.theta),
        "mode": e.mode.name(),
        "candidates": e.candidates.iter().map(candidate_json).collect::<Vec<_>>(),
        "rejected": e.rejected,
        "flags": e.flags(),
    });
    let obj = v.as_object_mut().expect("entry is an object");
    if let Some(g) = e.guarantee {
        obj.insert(
            "guarantee".into(),
            json!({
                "theta0": number(g.theta0),
                "eps": number(g.eps),
                "posed_theta": number(g.posed_theta),
                "corners": [g.corners.0, g.corners.1],
            }),
        );
    }
    if let Some(msg) = &e.error {
        obj.insert("error".into(), json!(msg));
    }
    if with_timing {
        obj.insert("seconds".into(), number(e.seconds));
    }
    v
}

/// Runs one planned angle.
fn run_entry(curve: &JordanCurve, plan: &SweepPlan, entry: &PlanEntry, tol: f64) -> SweepEntry {
    let start = Instant::now();
    let mut guarantee = None;
    let result: Result<SearchOutcome, rhombic_core::Error> = match (entry.mode, entry.guarantee) {
        (Mode::TwoCorner, Some(k)) => {
            let frame = &plan.guarantees[k].frame;
            let posed = frame.posed_angle(entry.theta);
            guarantee = Some(GuaranteeInfo {
                theta0: plan.guarantees[k].theta0(),
                eps: frame.eps,
                posed_theta: posed,
                corners: (frame.p_index, frame.q_index),
            });
            two_corner_search(curve, frame, posed)
        }
        _ => find_rhombi_with_corners(curve, entry.theta, &plan.corners),
    };
    let mut out = SweepEntry {
        theta: entry.theta,
        mode: entry.mode,
        guarantee,
        candidates: Vec::new(),
        rejected: 0,
        thick_median: false,
        not_guaranteed: entry.mode == Mode::Uncovered,
        finding: false,
        error: None,
        seconds: 0.0,
    };
    match result {
        Ok(found) => {
            let total = found.candidates.len();
            out.candidates = found.candidates.into_iter().filter(|c| validate_rhombus(c, curve, tol).pass).collect();
            out.rejected = total - out.candidates.len();
            out.thick_median = found.thick_median;
            out.not_guaranteed |= found.not_guaranteed && entry.mode != Mode::TwoCorner;
            out.finding = out.candidates.is_empty() && !out.not_guaranteed;
        }
        Err(e) => {
            out.error = Some(e.to_string());
            out.finding = !out.not_guaranteed;
        }
    }
    out.seconds = start.elapsed().as_secs_f64();
    out
}

/// Plans and searches every angle. Entries keep the order of `angles`;
/// the searches run on the current rayon pool.
pub fn run_sweep(curve: &JordanCurve, angles: &[f64], tol: f64) -> Result<SweepReport, Error> {
    if angles.is_empty() {
        return Err(Error::parse("sweep", "no angles requested"));
    }
    if let Some(bad) = angles.iter().find(|a| !a.is_finite()) {
        return Err(Error::parse("sweep", format!("angle {bad} is not finite")));
    }
    let plan = plan_sweep(curve, angles);
    let entries = plan.entries.par_iter().map(|e| run_entry(curve, &plan, e, tol)).collect();
    Ok(SweepReport {
        curve: curve.clone(),
        curve_digest: curve_digest(curve),
        tol,
        entries,
        corners: plan.corners,
        tool_version: TOOL_VERSION,
    })
}

/// `steps` angles evenly spaced over `[lo, hi)`.
pub fn uniform_angles(steps: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..steps).map(|k| lo + (hi - lo) * k as f64 / steps as f64).collect()
}

/// Writes the JSON report and, when `svg_dir` is given, one SVG per entry.
pub fn emit_report(report: &SweepReport, json_path: &Path, svg_dir: Option<&Path>, with_timing: bool) -> Result<(), Error> {
    write_text(json_path, &to_canonical_string(&report.to_json(with_timing)))?;
    if let Some(dir) = svg_dir {
        for (k, entry) in report.entries.iter().enumerate() {
            let name = format!("entry_{k:04}.svg");
            write_text(&dir.join(name), &svg::render_entry(&report.curve, entry))?;
        }
    }
    Ok(())
}
