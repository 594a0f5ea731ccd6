//! Poses, the canonical frame, the three motion operators and turning circles.
//!
//! The canonical frame places the start at the origin and the goal on the
//! positive x-axis at distance `d`, with unit turning radius. Every other
//! module works in that frame; [`FrameTransform`] maps results back.

use serde::Serialize;

use crate::angle::mod2pi;
use crate::error::{Error, Result};
use crate::words::DubinsPath;

/// Position/heading tolerance used for endpoint checks, in normalized units.
pub const ENDPOINT_TOL: f64 = 1e-9;

/// A planar pose. `theta` is always kept in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Configuration {
    pub x: f64,
    pub y: f64,
    pub theta: f64,
}

impl Configuration {
    pub fn new(x: f64, y: f64, theta: f64) -> Self {
        Self {
            x,
            y,
            theta: mod2pi(theta),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.theta.is_finite()
    }

    pub fn distance(&self, other: &Configuration) -> f64 {
        (other.x - self.x).hypot(other.y - self.y)
    }

    /// Max of the positional error and the wrapped heading error.
    pub fn error_to(&self, other: &Configuration) -> f64 {
        let dh = crate::angle::angle_diff(self.theta, other.theta).abs();
        (self.x - other.x).abs().max((self.y - other.y).abs()).max(dh)
    }
}

/// Start `(0, 0, alpha)`, goal `(d, 0, beta)`, unit turning radius.
///
/// Sines and cosines of both headings are cached at construction since every
/// word kernel needs them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedProblem {
    d: f64,
    alpha: f64,
    beta: f64,
    pub(crate) sa: f64,
    pub(crate) ca: f64,
    pub(crate) sb: f64,
    pub(crate) cb: f64,
}

impl NormalizedProblem {
    pub fn new(d: f64, alpha: f64, beta: f64) -> Result<Self> {
        if !(d.is_finite() && alpha.is_finite() && beta.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "non-finite problem (d={d}, alpha={alpha}, beta={beta})"
            )));
        }
        if d < 0.0 {
            return Err(Error::InvalidArgument(format!("negative distance {d}")));
        }
        Ok(Self::from_parts(d, mod2pi(alpha), mod2pi(beta)))
    }

    /// `alpha`, `beta` must already be normalized and `d` nonnegative.
    pub(crate) fn from_parts(d: f64, alpha: f64, beta: f64) -> Self {
        let (sa, ca) = alpha.sin_cos();
        let (sb, cb) = beta.sin_cos();
        Self {
            d,
            alpha,
            beta,
            sa,
            ca,
            sb,
            cb,
        }
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn start(&self) -> Configuration {
        Configuration::new(0.0, 0.0, self.alpha)
    }

    pub fn goal(&self) -> Configuration {
        Configuration::new(self.d, 0.0, self.beta)
    }

    /// Headings with their sines and cosines already known.
    pub(crate) fn from_trig(d: f64, alpha: f64, beta: f64, trig: [f64; 4]) -> Self {
        let [sa, ca, sb, cb] = trig;
        Self {
            d,
            alpha,
            beta,
            sa,
            ca,
            sb,
            cb,
        }
    }

    /// The same geometry with both headings replaced.
    pub fn with_headings(&self, alpha: f64, beta: f64) -> Self {
        Self::from_parts(self.d, mod2pi(alpha), mod2pi(beta))
    }
}

/// Similarity transform between the world frame and the canonical frame.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrameTransform {
    pub translation: [f64; 2],
    pub rotation: f64,
    pub scale: f64,
}

impl FrameTransform {
    /// World pose to canonical pose.
    pub fn to_local(&self, c: &Configuration) -> Configuration {
        let (s, co) = self.rotation.sin_cos();
        let dx = c.x - self.translation[0];
        let dy = c.y - self.translation[1];
        Configuration::new(
            (co * dx + s * dy) / self.scale,
            (-s * dx + co * dy) / self.scale,
            c.theta - self.rotation,
        )
    }

    /// Canonical pose to world pose.
    pub fn to_world(&self, c: &Configuration) -> Configuration {
        let (s, co) = self.rotation.sin_cos();
        let x = c.x * self.scale;
        let y = c.y * self.scale;
        Configuration::new(
            co * x - s * y + self.translation[0],
            s * x + co * y + self.translation[1],
            c.theta + self.rotation,
        )
    }
}

/// Maps `start` to the origin and `goal` onto the positive x-axis, scaling
/// lengths by `1 / radius`.
pub fn normalize(
    start: &Configuration,
    goal: &Configuration,
    radius: f64,
) -> Result<(NormalizedProblem, FrameTransform)> {
    if !(start.is_finite() && goal.is_finite()) {
        return Err(Error::InvalidArgument("non-finite configuration".into()));
    }
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "turning radius must be positive, got {radius}"
        )));
    }
    let dx = goal.x - start.x;
    let dy = goal.y - start.y;
    let dist = dx.hypot(dy);
    let rotation = if dist > 0.0 { dy.atan2(dx) } else { 0.0 };
    let frame = FrameTransform {
        translation: [start.x, start.y],
        rotation,
        scale: radius,
    };
    let problem = NormalizedProblem::from_parts(
        dist / radius,
        mod2pi(start.theta - rotation),
        mod2pi(goal.theta - rotation),
    );
    Ok((problem, frame))
}

/// One of the three elementary motions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Motion {
    L,
    R,
    S,
}

impl Motion {
    pub fn flipped(self) -> Self {
        match self {
            Motion::L => Motion::R,
            Motion::R => Motion::L,
            Motion::S => Motion::S,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Motion::L => 'L',
            Motion::R => 'R',
            Motion::S => 'S',
        }
    }

    /// Closed-form motion without the sign check.
    #[inline]
    pub(crate) fn step(self, v: f64, c: &Configuration) -> Configuration {
        let phi = c.theta;
        match self {
            Motion::L => Configuration::new(
                c.x + (phi + v).sin() - phi.sin(),
                c.y - (phi + v).cos() + phi.cos(),
                phi + v,
            ),
            Motion::R => Configuration::new(
                c.x - (phi - v).sin() + phi.sin(),
                c.y + (phi - v).cos() - phi.cos(),
                phi - v,
            ),
            Motion::S => Configuration::new(c.x + v * phi.cos(), c.y + v * phi.sin(), phi),
        }
    }
}

/// Moves `c` a distance `v` along the given motion, unit radius.
pub fn apply_operator(op: Motion, v: f64, c: &Configuration) -> Result<Configuration> {
    if v.is_nan() || v < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "segment length must be nonnegative, got {v}"
        )));
    }
    Ok(op.step(v, c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CircleTag {
    Il,
    Ir,
    Fl,
    Fr,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CircleCenter {
    pub tag: CircleTag,
    pub center: [f64; 2],
    pub radius: f64,
}

impl NormalizedProblem {
    pub fn circle(&self, tag: CircleTag) -> CircleCenter {
        let center = match tag {
            CircleTag::Il => [-self.sa, self.ca],
            CircleTag::Ir => [self.sa, -self.ca],
            CircleTag::Fl => [self.d - self.sb, self.cb],
            CircleTag::Fr => [self.d + self.sb, -self.cb],
        };
        CircleCenter {
            tag,
            center,
            radius: 1.0,
        }
    }
}

/// Centres of the four unit turning circles, in the order il, ir, fl, fr.
pub fn turning_centers(p: &NormalizedProblem) -> [CircleCenter; 4] {
    [CircleTag::Il, CircleTag::Ir, CircleTag::Fl, CircleTag::Fr].map(|t| p.circle(t))
}

/// Pose reached after travelling `s` along `path` from the problem's start.
pub fn pose_at(path: &DubinsPath, p: &NormalizedProblem, s: f64) -> Configuration {
    let mut c = p.start();
    let mut remaining = s.max(0.0);
    for (motion, len) in path.segments() {
        if remaining <= len {
            return motion.step(remaining, &c);
        }
        c = motion.step(len, &c);
        remaining -= len;
    }
    c
}

/// Composes the three motions of `path` from the start of `p`.
pub fn endpoint(path: &DubinsPath, p: &NormalizedProblem) -> Configuration {
    path.segments()
        .into_iter()
        .fold(p.start(), |c, (m, len)| m.step(len, &c))
}

/// Uniform polyline along the whole path: consecutive vertices are at most
/// `step` apart in arc length, first vertex is the start, last is the
/// composed endpoint.
pub fn sample_path(
    path: &DubinsPath,
    p: &NormalizedProblem,
    step: f64,
) -> Result<Vec<Configuration>> {
    check_sampling(path, p, step)?;
    let total = path.total;
    let n = ((total / step).ceil() as usize).max(1);
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..n {
        out.push(pose_at(path, p, total * k as f64 / n as f64));
    }
    out.push(endpoint(path, p));
    Ok(out)
}

/// One polyline per nonzero-length segment (for rendering).
pub fn sample_segments(
    path: &DubinsPath,
    p: &NormalizedProblem,
    step: f64,
) -> Result<Vec<(Motion, Vec<Configuration>)>> {
    check_sampling(path, p, step)?;
    let mut out = Vec::with_capacity(3);
    let mut c = p.start();
    for (motion, len) in path.segments() {
        let n = ((len / step).ceil() as usize).max(1);
        let mut pts = Vec::with_capacity(n + 1);
        for k in 0..=n {
            pts.push(motion.step(len * k as f64 / n as f64, &c));
        }
        out.push((motion, pts));
        c = motion.step(len, &c);
    }
    Ok(out)
}

fn check_sampling(path: &DubinsPath, p: &NormalizedProblem, step: f64) -> Result<()> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "sampling step must be positive, got {step}"
        )));
    }
    let err = endpoint(path, p).error_to(&p.goal());
    if err.is_nan() || err > ENDPOINT_TOL * p.d().max(1.0) {
        return Err(Error::InvalidArgument(format!(
            "{} path does not reach the goal (endpoint error {err:e})",
            path.word
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::{FRAC_PI_2, PI, TAU};
    use crate::words::PathWord;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn conf(x: f64, y: f64, t: f64) -> Configuration {
        Configuration::new(x, y, t)
    }

    #[test]
    fn normalize_identity_frame() {
        let (p, _) = normalize(&conf(0., 0., 0.), &conf(5., 0., 0.), 1.0).unwrap();
        assert_eq!((p.d(), p.alpha(), p.beta()), (5.0, 0.0, 0.0));
    }

    #[test]
    fn normalize_rotated_frame() {
        let start = conf(1., 1., FRAC_PI_2);
        let goal = conf(1., 4., FRAC_PI_2);
        let (p, f) = normalize(&start, &goal, 1.0).unwrap();
        assert_abs_diff_eq!(p.d(), 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.alpha(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(p.beta(), 0.0, epsilon = 1e-12);
        // the inverse takes the canonical endpoints back to the inputs
        assert!(f.to_world(&conf(0., 0., 0.)).error_to(&start) < 1e-12);
        assert!(f.to_world(&conf(3., 0., 0.)).error_to(&goal) < 1e-12);
    }

    #[test]
    fn normalize_scales_by_radius() {
        let (p, _) = normalize(&conf(0., 0., 0.), &conf(10., 0., 0.), 2.0).unwrap();
        assert_eq!(p.d(), 5.0);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        let ok = conf(0., 0., 0.);
        assert!(normalize(&ok, &conf(f64::NAN, 0., 0.), 1.0).is_err());
        assert!(normalize(&ok, &ok, 0.0).is_err());
        assert!(normalize(&ok, &ok, -1.0).is_err());
        assert!(NormalizedProblem::new(-1.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn operators() {
        let o = conf(0., 0., 0.);
        let s = apply_operator(Motion::S, 5.0, &o).unwrap();
        assert!(s.error_to(&conf(5., 0., 0.)) < 1e-15);
        let l = apply_operator(Motion::L, FRAC_PI_2, &o).unwrap();
        assert!(l.error_to(&conf(1., 1., FRAC_PI_2)) < 1e-15);
        let c = conf(0.3, -2.0, 1.1);
        let r = apply_operator(Motion::R, TAU, &c).unwrap();
        assert!(r.error_to(&c) < 1e-14);
        assert!(apply_operator(Motion::L, -0.1, &o).is_err());
    }

    #[test]
    fn centers() {
        let p = NormalizedProblem::new(1.0, 0.0, 0.0).unwrap();
        let c = turning_centers(&p);
        assert_eq!(c[0].center, [0.0, 1.0]);
        assert_eq!(c[1].center, [0.0, -1.0]);

        let p = NormalizedProblem::new(3.0, 0.0, FRAC_PI_2).unwrap();
        let c = turning_centers(&p);
        assert_abs_diff_eq!(c[2].center[0], 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c[2].center[1], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c[3].center[0], 4.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c[3].center[1], 0.0, epsilon = 1e-15);

        let p = NormalizedProblem::new(1.0, PI, 0.0).unwrap();
        let c = turning_centers(&p);
        assert_abs_diff_eq!(c[0].center[1], -1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(c[1].center[1], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn sample_straight_line() {
        let p = NormalizedProblem::new(5.0, 0.0, 0.0).unwrap();
        let path = DubinsPath::new(PathWord::Lsl, 0.0, 5.0, 0.0);
        let pts = sample_path(&path, &p, 1.0).unwrap();
        assert_eq!(pts.len(), 6);
        for (k, v) in pts.iter().enumerate() {
            assert!(v.error_to(&conf(k as f64, 0., 0.)) < 1e-12);
        }
    }

    #[test]
    fn sample_whole_length_step_gives_endpoints() {
        let p = NormalizedProblem::new(5.0, 0.0, 0.0).unwrap();
        let path = DubinsPath::new(PathWord::Lsl, 0.0, 5.0, 0.0);
        let pts = sample_path(&path, &p, path.total).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts[1].error_to(&p.goal()) < 1e-9);
    }

    #[test]
    fn sample_ccc_reaches_goal() {
        // Minor middle arc around the upper tangent circle, built by hand:
        // centres (0,-1), (1, √3-1), (2,-1).
        let p = NormalizedProblem::new(2.0, 0.0, 0.0).unwrap();
        let path = DubinsPath::new(PathWord::Rlr, PI / 6.0, PI / 3.0, PI / 6.0);
        let pts = sample_path(&path, &p, 0.05).unwrap();
        assert!(pts.last().unwrap().error_to(&p.goal()) < 1e-9);
        assert!(pts[0].error_to(&p.start()) < 1e-15);
        for w in pts.windows(2) {
            assert!(w[0].distance(&w[1]) <= 0.05 + 1e-12);
        }
    }

    #[test]
    fn sample_rejects_infeasible_path() {
        let p = NormalizedProblem::new(5.0, 0.0, 0.0).unwrap();
        let path = DubinsPath::new(PathWord::Lsl, 0.0, 4.0, 0.0);
        assert!(sample_path(&path, &p, 1.0).is_err());
        let ok = DubinsPath::new(PathWord::Lsl, 0.0, 5.0, 0.0);
        assert!(sample_path(&ok, &p, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn frame_round_trip(
            sx in -50.0f64..50.0, sy in -50.0f64..50.0, st in -10.0f64..10.0,
            gx in -50.0f64..50.0, gy in -50.0f64..50.0, gt in -10.0f64..10.0,
            r in 0.1f64..10.0,
            qx in -50.0f64..50.0, qy in -50.0f64..50.0, qt in 0.0f64..TAU,
        ) {
            let (_, f) = normalize(&conf(sx, sy, st), &conf(gx, gy, gt), r).unwrap();
            let q = conf(qx, qy, qt);
            prop_assert!(f.to_world(&f.to_local(&q)).error_to(&q) < 1e-12);
        }
    }
}
