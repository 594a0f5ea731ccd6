//! Exhaustive search over all six words. Ground truth for tests, the
//! long-case fallback, and the benchmark baseline. Deliberately unpruned.

use std::fmt;

use serde::Serialize;

use crate::classify::ClassId;
use crate::geom::NormalizedProblem;
use crate::words::{word_segments, DubinsPath, EvalCounter, Granularity, PathWord};

/// Totals closer than this are ties, broken by canonical word order.
pub const TIE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Short,
    Long,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Classifier,
    Exhaustive,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Short => "short",
            Case::Long => "long",
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Classifier => "classifier",
            Method::Exhaustive => "exhaustive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolveResult {
    pub path: DubinsPath,
    pub case: Case,
    pub class: Option<ClassId>,
    /// Word-granularity count: 3 per distinct word touched, final
    /// extraction included. Always 18 for the exhaustive method.
    pub evals: u32,
    /// Distinct segment lengths needed to identify the word (dependencies
    /// charged, final extraction excluded).
    pub segment_evals: u32,
    pub method: Method,
}

impl SolveResult {
    /// Evals under the requested accounting.
    pub fn evals_as(&self, granularity: Granularity) -> u32 {
        match granularity {
            Granularity::Word => self.evals,
            Granularity::Segment => self.segment_evals,
        }
    }
}

/// Evaluates every word and keeps the shortest feasible one.
pub fn solve_exhaustive(p: &NormalizedProblem) -> SolveResult {
    let mut counter = EvalCounter::new();
    let mut best: Option<DubinsPath> = None;
    for word in PathWord::ALL {
        if let Some(path) = word_segments(word, p, &mut counter) {
            // ALL is in canonical order, so an earlier word wins ties.
            if best.is_none_or(|b| path.total < b.total - TIE_TOL) {
                best = Some(path);
            }
        }
    }
    SolveResult {
        // LSL and RSR are feasible for every problem.
        path: best.expect("CSC words with equal turn directions are always feasible"),
        case: crate::classify::case_of(p),
        class: None,
        evals: counter.word_evals(),
        segment_evals: counter.segment_evals(),
        method: Method::Exhaustive,
    }
}

/// Shortest total among all feasible words (uncounted).
pub fn optimal_length(p: &NormalizedProblem) -> f64 {
    PathWord::ALL
        .into_iter()
        .filter_map(|w| crate::words::compute_word(w, p))
        .map(|path| path.total)
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::{FRAC_PI_2, PI, TAU};
    use crate::words::compute_word;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn prob(d: f64, a: f64, b: f64) -> NormalizedProblem {
        NormalizedProblem::new(d, a, b).unwrap()
    }

    #[test]
    fn straight_line_tie_goes_to_lsl() {
        let r = solve_exhaustive(&prob(5.0, 0.0, 0.0));
        assert_eq!(r.path.word, PathWord::Lsl);
        assert_eq!(r.path.total, 5.0);
        assert_eq!(r.evals, 18);
        assert_eq!(r.method, Method::Exhaustive);
        assert_eq!(r.case, Case::Long);
    }

    #[test]
    fn short_straight_line() {
        let r = solve_exhaustive(&prob(2.0, 0.0, 0.0));
        assert_eq!(r.path.word, PathWord::Lsl);
        assert_abs_diff_eq!(r.path.total, 2.0, epsilon = 1e-12);
    }

    #[test]
    fn quarter_turn_example_is_lsr() {
        // The cross-tangent path beats both CCC candidates here.
        let p = prob(1.0, PI / 4.0, 3.0 * PI / 4.0);
        let r = solve_exhaustive(&p);
        assert_eq!(r.path.word, PathWord::Lsr);
        assert_abs_diff_eq!(r.path.total, 6.446373311348715, epsilon = 1e-12);
        assert_eq!(r.case, Case::Short);
        let lrl = compute_word(PathWord::Lrl, &p).unwrap();
        assert!(lrl.total > r.path.total + 1.0);
    }

    #[test]
    fn coincident_poses_have_zero_length() {
        let r = solve_exhaustive(&prob(0.0, FRAC_PI_2, FRAC_PI_2));
        assert_eq!(r.path.word, PathWord::Lsl);
        assert_eq!(r.path.total, 0.0);
    }

    proptest! {
        #[test]
        fn returns_the_minimum(d in 0.0f64..8.0, a in 0.0f64..TAU, b in 0.0f64..TAU) {
            let p = prob(d, a, b);
            let r = solve_exhaustive(&p);
            for w in PathWord::ALL {
                if let Some(path) = compute_word(w, &p) {
                    prop_assert!(r.path.total <= path.total + TIE_TOL);
                }
            }
            prop_assert!(r.path.total >= d - 1e-9);
            prop_assert!((r.path.total - optimal_length(&p)).abs() <= TIE_TOL);
        }

        #[test]
        fn optimum_invariant_under_reflections(
            d in 0.0f64..8.0, a in 0.0f64..TAU, b in 0.0f64..TAU,
        ) {
            let base = solve_exhaustive(&prob(d, a, b)).path.total;
            for (x, y) in [(TAU - a, TAU - b), (b, a), (TAU - b, TAU - a)] {
                let other = solve_exhaustive(&prob(d, x, y)).path.total;
                prop_assert!((other - base).abs() <= 1e-12);
            }
        }
    }
}
