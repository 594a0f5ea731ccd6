//! Library side of the `dubins` command: benchmark, grid sweep and output
//! helpers, kept here so integration tests can drive them directly.

pub mod bench;
pub mod grid;
pub mod render;

use anyhow::{bail, Context};
use dubins_core::Configuration;

/// Parses `x,y,theta` (radians).
pub fn parse_pose(s: &str) -> anyhow::Result<Configuration> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        bail!("expected x,y,theta but got '{s}'");
    }
    let mut v = [0.0f64; 3];
    for (slot, part) in v.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .with_context(|| format!("'{part}' is not a number"))?;
        if !slot.is_finite() {
            bail!("'{part}' is not finite");
        }
    }
    Ok(Configuration::new(v[0], v[1], v[2]))
}
