//! Shortest Dubins paths.
//!
//! [`solve`] normalizes two poses into the canonical frame, decides whether
//! the problem is in the short case, and then either runs the per-class
//! decision tables or falls back to evaluating all six words. The exhaustive
//! search in [`oracle`] is also exposed for verification and benchmarking.
//!
//! ```
//! use dubins_core::{solve, Configuration, PathWord};
//!
//! let r = solve(
//!     &Configuration::new(0.0, 0.0, 0.0),
//!     &Configuration::new(5.0, 0.0, 0.0),
//!     1.0,
//! )
//! .unwrap();
//! assert_eq!(r.path.word, PathWord::Lsl);
//! assert_eq!(r.path.total, 5.0);
//! ```

pub mod angle;
pub mod classify;
pub mod error;
pub mod geom;
pub mod oracle;
pub mod solver;
pub mod words;

pub use classify::{
    canonicalize, case_of, class_of, group_of, quadrant_of, solve, solve_normalized, solve_short,
    threshold_distance, ClassId, GroupId, WordTransform,
};
pub use error::{Error, Result};
pub use geom::{normalize, Configuration, FrameTransform, NormalizedProblem};
pub use oracle::{solve_exhaustive, Case, Method, SolveResult};
pub use solver::{solver_by_name, Solver};
pub use words::{DubinsPath, EvalCounter, Granularity, PathWord};
