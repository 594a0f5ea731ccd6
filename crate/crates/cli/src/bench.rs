//! Randomized comparison of the classifier against the exhaustive search.
//!
//! Queries are drawn from a seeded ChaCha stream, so everything except the
//! timing fields is reproducible from `(n, seed, short_only)`. Timing runs
//! both methods over the same pre-built query buffer and excludes RNG and
//! normalization.

use std::hint::black_box;
use std::time::Instant;

use dubins_core::angle::TAU;
use dubins_core::{
    class_of, group_of, solve_exhaustive, solve_normalized, threshold_distance, Case, GroupId,
    Granularity, Method, NormalizedProblem, PathWord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Upper bound on `d` for mixed runs; the threshold never exceeds 4.
pub const MIXED_D_MAX: f64 = 8.0;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n: usize,
    pub seed: u64,
    pub short_only: bool,
    pub granularity: Granularity,
    pub tolerance: f64,
    /// Timing repetitions; the fastest pass is reported.
    pub timing_passes: usize,
    pub timing: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n: 100_000,
            seed: 0,
            short_only: false,
            granularity: Granularity::Segment,
            tolerance: 1e-9,
            timing_passes: 3,
            timing: true,
        }
    }
}

/// One generated query, reproducible from `(seed, index)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QueryRecord {
    pub index: usize,
    pub d: f64,
    pub alpha: f64,
    pub beta: f64,
    pub case: Case,
    pub word: PathWord,
    pub total_classifier: f64,
    pub total_exhaustive: f64,
    pub evals: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub n_queries: usize,
    pub seed: u64,
    pub short_only: bool,
    pub short_fraction: f64,
    pub granularity: Granularity,
    /// Classifier evals under `granularity`, over short-case queries.
    pub mean_evals_classifier: f64,
    pub max_evals_classifier: u32,
    pub mean_word_evals: f64,
    pub mean_segment_evals: f64,
    pub max_segment_evals: u32,
    pub min_segment_evals_e6: Option<u32>,
    pub mean_evals_exhaustive: f64,
    /// Short-case queries the classifier handed to the exhaustive search.
    pub fallbacks: usize,
    pub mismatches: usize,
    pub mean_time_classifier_ns: Option<f64>,
    pub mean_time_exhaustive_ns: Option<f64>,
    pub speedup: Option<f64>,
}

/// Draws `n` problems; short-only draws `d` uniformly below the threshold.
pub fn generate_queries(n: usize, seed: u64, short_only: bool) -> Vec<NormalizedProblem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let alpha = rng.gen_range(0.0..TAU);
        let beta = rng.gen_range(0.0..TAU);
        let d_max = if short_only {
            threshold_distance(alpha, beta)
        } else {
            MIXED_D_MAX
        };
        if d_max <= 0.0 {
            continue;
        }
        let d = rng.gen_range(0.0..d_max);
        out.push(NormalizedProblem::new(d, alpha, beta).expect("finite sample"));
    }
    out
}

pub fn run_records(queries: &[NormalizedProblem]) -> Vec<QueryRecord> {
    queries
        .iter()
        .enumerate()
        .map(|(index, p)| {
            let c = solve_normalized(p);
            let e = solve_exhaustive(p);
            QueryRecord {
                index,
                d: p.d(),
                alpha: p.alpha(),
                beta: p.beta(),
                case: c.case,
                word: c.path.word,
                total_classifier: c.path.total,
                total_exhaustive: e.path.total,
                evals: c.evals,
            }
        })
        .collect()
}

pub fn run(cfg: &BenchConfig) -> BenchReport {
    let queries = generate_queries(cfg.n, cfg.seed, cfg.short_only);

    let mut short = 0usize;
    let (mut word_sum, mut seg_sum, mut exh_sum) = (0u64, 0u64, 0u64);
    let (mut max_word, mut max_seg) = (0u32, 0u32);
    let mut e6_min: Option<u32> = None;
    let (mut fallbacks, mut mismatches) = (0usize, 0usize);
    for p in &queries {
        let c = solve_normalized(p);
        let e = solve_exhaustive(p);
        exh_sum += e.evals as u64;
        if c.path.total - e.path.total > cfg.tolerance {
            mismatches += 1;
        }
        if c.case != Case::Short {
            continue;
        }
        short += 1;
        if c.method == Method::Exhaustive {
            fallbacks += 1;
        }
        word_sum += c.evals as u64;
        seg_sum += c.segment_evals as u64;
        max_word = max_word.max(c.evals);
        max_seg = max_seg.max(c.segment_evals);
        if group_of(class_of(p)) == GroupId::E6 {
            e6_min = Some(e6_min.map_or(c.segment_evals, |m| m.min(c.segment_evals)));
        }
    }
    let mean = |sum: u64, n: usize| if n == 0 { 0.0 } else { sum as f64 / n as f64 };
    let (mean_word, mean_seg) = (mean(word_sum, short), mean(seg_sum, short));
    let (mean_sel, max_sel) = match cfg.granularity {
        Granularity::Word => (mean_word, max_word),
        Granularity::Segment => (mean_seg, max_seg),
    };

    let (tc, te) = if cfg.timing {
        let (tc, te) = time_methods(&queries, cfg.timing_passes.max(1));
        (Some(tc), Some(te))
    } else {
        (None, None)
    };

    BenchReport {
        n_queries: queries.len(),
        seed: cfg.seed,
        short_only: cfg.short_only,
        short_fraction: short as f64 / queries.len().max(1) as f64,
        granularity: cfg.granularity,
        mean_evals_classifier: mean_sel,
        max_evals_classifier: max_sel,
        mean_word_evals: mean_word,
        mean_segment_evals: mean_seg,
        max_segment_evals: max_seg,
        min_segment_evals_e6: e6_min,
        mean_evals_exhaustive: mean(exh_sum, queries.len()),
        fallbacks,
        mismatches,
        mean_time_classifier_ns: tc,
        mean_time_exhaustive_ns: te,
        speedup: tc.zip(te).map(|(c, e)| e / c),
    }
}

/// Queries per timing block.
const TIMING_BLOCK: usize = 4096;

/// Mean nanoseconds per query for (classifier, exhaustive).
///
/// The buffer is split into blocks. Both methods run over each block in
/// turn, `passes` times, and the fastest run per block and method is kept.
/// Interleaving at block level keeps a slow stretch on a shared machine from
/// landing on only one method.
pub fn time_methods(queries: &[NormalizedProblem], passes: usize) -> (f64, f64) {
    fn once(block: &[NormalizedProblem], f: fn(&NormalizedProblem) -> dubins_core::SolveResult) -> u128 {
        let start = Instant::now();
        for p in block {
            black_box(f(black_box(p)));
        }
        start.elapsed().as_nanos()
    }
    let n = queries.len().max(1) as f64;
    let (mut tc, mut te) = (0u128, 0u128);
    for block in queries.chunks(TIMING_BLOCK) {
        let (mut bc, mut be) = (u128::MAX, u128::MAX);
        for _ in 0..passes {
            bc = bc.min(once(block, solve_normalized));
            be = be.min(once(block, solve_exhaustive));
        }
        tc += bc;
        te += be;
    }
    (tc as f64 / n, te as f64 / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use dubins_core::case_of;

    #[test]
    fn queries_are_reproducible() {
        assert_eq!(generate_queries(50, 9, true), generate_queries(50, 9, true));
        assert_ne!(generate_queries(50, 9, true), generate_queries(50, 10, true));
        assert!(generate_queries(200, 1, true)
            .iter()
            .all(|p| case_of(p) == Case::Short));
    }

    #[test]
    fn single_query_report_is_complete() {
        let r = run(&BenchConfig {
            n: 1,
            seed: 7,
            timing_passes: 1,
            ..Default::default()
        });
        assert_eq!(r.n_queries, 1);
        assert_eq!(r.mismatches, 0);
        assert!(r.speedup.is_some() && r.mean_time_classifier_ns.is_some());
        assert_eq!(r.mean_evals_exhaustive, 18.0);
    }

    #[test]
    fn reports_match_without_timing() {
        let cfg = BenchConfig {
            n: 2_000,
            seed: 42,
            short_only: true,
            timing: false,
            ..Default::default()
        };
        let a = run(&cfg);
        assert_eq!(a, run(&cfg));
        assert_eq!(a.short_fraction, 1.0);
        assert_eq!(a.mismatches, 0);
        assert!(a.speedup.is_none());
    }

    #[test]
    fn records_agree_with_report() {
        let q = generate_queries(500, 3, false);
        let recs = run_records(&q);
        assert_eq!(recs.len(), 500);
        assert!(recs
            .iter()
            .all(|r| r.total_classifier - r.total_exhaustive <= 1e-9));
        assert!(recs.iter().any(|r| r.case == Case::Long));
    }
}
