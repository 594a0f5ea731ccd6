//! Angle helpers. Every stored heading lives in `[0, 2π)`.

pub use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// Wraps any finite angle into `[0, 2π)`.
#[inline]
pub fn mod2pi(angle: f64) -> f64 {
    // Within one turn of the target range the result matches rem_euclid
    // bit for bit (the subtraction is exact), without the fmod call.
    let r = if (0.0..TAU).contains(&angle) {
        return angle;
    } else if (TAU..2.0 * TAU).contains(&angle) {
        angle - TAU
    } else if (-TAU..0.0).contains(&angle) {
        angle + TAU
    } else {
        angle.rem_euclid(TAU)
    };
    // rem_euclid rounds tiny negative inputs up to exactly TAU
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Signed distance between two headings, in `(-π, π]`.
#[inline]
pub fn angle_diff(a: f64, b: f64) -> f64 {
    let d = mod2pi(a - b);
    if d > PI {
        d - TAU
    } else {
        d
    }
}
