//! Output formatting: rounded JSON documents, CSV polylines and SVG.

use std::fmt::Write as _;

use dubins_core::geom::{sample_path, sample_segments, Motion};
use dubins_core::{
    normalize, Case, ClassId, Configuration, Method, Result, SolveResult,
};
use serde::Serialize;

/// Significant digits for every number we print.
pub const DIGITS: usize = 12;

/// `x` rounded to [`DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", DIGITS - 1, x).parse().unwrap_or(x)
}

/// Flat summary emitted by `solve`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveDoc {
    pub word: String,
    pub t: f64,
    pub p: f64,
    pub q: f64,
    pub total: f64,
    pub case: Case,
    pub class: Option<ClassId>,
    pub evals: u32,
    pub segment_evals: u32,
    pub method: Method,
}

impl From<&SolveResult> for SolveDoc {
    fn from(r: &SolveResult) -> Self {
        Self {
            word: r.path.word.to_string(),
            t: round_sig(r.path.t),
            p: round_sig(r.path.p),
            q: round_sig(r.path.q),
            total: round_sig(r.path.total),
            case: r.case,
            class: r.class,
            evals: r.evals,
            segment_evals: r.segment_evals,
            method: r.method,
        }
    }
}

pub fn solve_csv(doc: &SolveDoc) -> String {
    let class = doc.class.map(|c| c.to_string()).unwrap_or_default();
    format!(
        "word,t,p,q,total,case,class,evals,segment_evals,method\n{},{},{},{},{},{},{},{},{},{}\n",
        doc.word, doc.t, doc.p, doc.q, doc.total, doc.case, class, doc.evals, doc.segment_evals,
        doc.method
    )
}

/// World-frame samples of the path from `start` to `goal`, at most `step`
/// apart, and the per-segment polylines for drawing.
pub struct Sampled {
    pub points: Vec<Configuration>,
    pub segments: Vec<(Motion, Vec<Configuration>)>,
    pub result: SolveResult,
}

pub fn sample(
    start: &Configuration,
    goal: &Configuration,
    radius: f64,
    step: f64,
    solve: impl Fn(&dubins_core::NormalizedProblem) -> SolveResult,
) -> Result<Sampled> {
    let (p, frame) = normalize(start, goal, radius)?;
    let result = solve(&p);
    let local_step = step / radius;
    let to_world = |c: &Configuration| frame.to_world(c);
    let points = sample_path(&result.path, &p, local_step)?
        .iter()
        .map(to_world)
        .collect();
    let segments = sample_segments(&result.path, &p, local_step)?
        .into_iter()
        .map(|(m, pts)| (m, pts.iter().map(to_world).collect()))
        .collect();
    let mut result = result;
    result.path = result.path.scaled(radius);
    Ok(Sampled {
        points,
        segments,
        result,
    })
}

pub fn csv(points: &[Configuration]) -> String {
    let mut out = String::from("x,y,theta\n");
    for c in points {
        let _ = writeln!(out, "{},{},{}", round_sig(c.x), round_sig(c.y), round_sig(c.theta));
    }
    out
}

/// One `<path>` per segment plus start and goal markers. The y axis is
/// flipped so the picture matches the usual math orientation.
pub fn svg(s: &Sampled, start: &Configuration, goal: &Configuration) -> String {
    let all = s.segments.iter().flat_map(|(_, p)| p.iter()).chain([start, goal]);
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for c in all {
        x0 = x0.min(c.x);
        x1 = x1.max(c.x);
        y0 = y0.min(c.y);
        y1 = y1.max(c.y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = 0.05 * span;
    let stroke = span / 200.0;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        round_sig(x0 - pad),
        round_sig(-y1 - pad),
        round_sig(x1 - x0 + 2.0 * pad),
        round_sig(y1 - y0 + 2.0 * pad)
    );
    let _ = writeln!(
        out,
        "  <title>{} total {}</title>",
        s.result.path.word,
        round_sig(s.result.path.total)
    );
    for (motion, pts) in &s.segments {
        let color = match motion {
            Motion::L => "#1f77b4",
            Motion::R => "#d62728",
            Motion::S => "#2ca02c",
        };
        let mut d = String::new();
        for (k, c) in pts.iter().enumerate() {
            let _ = write!(
                d,
                "{}{} {} ",
                if k == 0 { "M" } else { "L" },
                round_sig(c.x),
                round_sig(-c.y)
            );
        }
        let _ = writeln!(
            out,
            r#"  <path class="{}" d="{}" fill="none" stroke="{color}" stroke-width="{}"/>"#,
            motion.letter(),
            d.trim_end(),
            round_sig(stroke)
        );
    }
    for (name, c) in [("start", start), ("goal", goal)] {
        let _ = writeln!(
            out,
            r#"  <circle class="{name}" cx="{}" cy="{}" r="{}"/>"#,
            round_sig(c.x),
            round_sig(-c.y),
            round_sig(3.0 * stroke)
        );
    }
    out.push_str("</svg>\n");
    out
}
