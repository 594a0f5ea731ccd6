//! Classifier-versus-oracle sweep over a regular `(α, β, d)` grid.
//!
//! Heading axes always include the quadrant edges. Each `(α, β)` column
//! uses `d_steps − 1` evenly spaced distances below the threshold plus one at
//! `0.999·d_t`.

use std::collections::BTreeMap;

use dubins_core::angle::{FRAC_PI_2, TAU};
use dubins_core::{
    class_of, solve_exhaustive, solve_short, threshold_distance, ClassId, Method,
    NormalizedProblem, PathWord,
};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct GridConfig {
    pub alpha_steps: usize,
    pub beta_steps: usize,
    pub d_steps: usize,
    pub class_filter: Option<ClassId>,
    pub tolerance: f64,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            alpha_steps: 64,
            beta_steps: 64,
            d_steps: 32,
            class_filter: None,
            tolerance: 1e-9,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ClassStats {
    pub cells: usize,
    pub mismatches: usize,
    pub fallbacks: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Mismatch {
    pub d: f64,
    pub alpha: f64,
    pub beta: f64,
    pub class: ClassId,
    pub classifier: PathWord,
    pub oracle: PathWord,
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridReport {
    pub cells: usize,
    pub mismatches: usize,
    pub fallbacks: usize,
    pub max_excess: f64,
    pub tolerance: f64,
    pub per_class: BTreeMap<String, ClassStats>,
    /// First few offending cells, for diagnosis.
    pub examples: Vec<Mismatch>,
}

impl GridReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

const MAX_EXAMPLES: usize = 10;

/// `steps` evenly spaced angles in `[0, 2π)` merged with the four quadrant
/// edges.
pub fn heading_axis(steps: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..steps)
        .map(|k| k as f64 * TAU / steps as f64)
        .chain((0..4).map(|k| k as f64 * FRAC_PI_2))
        .collect();
    v.sort_by(f64::total_cmp);
    v.dedup_by(|a, b| (*a - *b).abs() < 1e-15);
    v
}

pub fn distances(dt: f64, d_steps: usize) -> Vec<f64> {
    if dt <= 0.0 {
        return Vec::new();
    }
    (1..d_steps)
        .map(|k| dt * k as f64 / d_steps as f64)
        .chain(std::iter::once(0.999 * dt))
        .collect()
}

pub fn run(cfg: &GridConfig) -> GridReport {
    let alphas = heading_axis(cfg.alpha_steps);
    let betas = heading_axis(cfg.beta_steps);
    let mut report = GridReport {
        cells: 0,
        mismatches: 0,
        fallbacks: 0,
        max_excess: 0.0,
        tolerance: cfg.tolerance,
        per_class: BTreeMap::new(),
        examples: Vec::new(),
    };
    for &alpha in &alphas {
        for &beta in &betas {
            for d in distances(threshold_distance(alpha, beta), cfg.d_steps) {
                let p = NormalizedProblem::new(d, alpha, beta).expect("finite grid point");
                let class = class_of(&p);
                if cfg.class_filter.is_some_and(|c| c != class) {
                    continue;
                }
                let c = solve_short(&p);
                let o = solve_exhaustive(&p);
                let excess = c.path.total - o.path.total;
                let stats = report.per_class.entry(class.to_string()).or_default();
                stats.cells += 1;
                report.cells += 1;
                report.max_excess = report.max_excess.max(excess);
                if c.method == Method::Exhaustive {
                    stats.fallbacks += 1;
                    report.fallbacks += 1;
                }
                if excess > cfg.tolerance {
                    stats.mismatches += 1;
                    report.mismatches += 1;
                    if report.examples.len() < MAX_EXAMPLES {
                        report.examples.push(Mismatch {
                            d,
                            alpha,
                            beta,
                            class,
                            classifier: c.path.word,
                            oracle: o.path.word,
                            excess,
                        });
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Instant;

    #[test]
    fn axis_contains_quadrant_edges() {
        let axis = heading_axis(6);
        for k in 0..4 {
            assert!(axis.contains(&(k as f64 * FRAC_PI_2)));
        }
        assert_eq!(heading_axis(8).len(), 8);
        assert_eq!(distances(2.0, 4), vec![0.5, 1.0, 1.5, 1.998]);
        assert!(distances(0.0, 4).is_empty());
    }

    #[test]
    fn small_sweep_is_quick_and_clean() {
        let start = Instant::now();
        let r = run(&GridConfig {
            alpha_steps: 4,
            beta_steps: 4,
            d_steps: 4,
            ..Default::default()
        });
        assert!(start.elapsed().as_secs_f64() < 1.0);
        assert!(r.passed(), "{r:?}");
        assert!(r.cells > 0);
    }

    #[test]
    fn class_filter_limits_rows() {
        let r = run(&GridConfig {
            alpha_steps: 16,
            beta_steps: 16,
            d_steps: 8,
            class_filter: Some(ClassId::A23),
            ..Default::default()
        });
        assert_eq!(r.per_class.keys().collect::<Vec<_>>(), ["a23"]);
        assert!(r.passed());
    }
}
