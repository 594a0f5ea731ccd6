//! Solver strategies selectable by name.

use crate::classify::solve_normalized;
use crate::error::{Error, Result};
use crate::geom::NormalizedProblem;
use crate::oracle::{solve_exhaustive, SolveResult};

pub trait Solver: Send + Sync {
    fn name(&self) -> &'static str;

    fn solve(&self, p: &NormalizedProblem) -> SolveResult;
}

/// Decision tables for the short case, exhaustive search otherwise.
pub struct ClassifierSolver;

impl Solver for ClassifierSolver {
    fn name(&self) -> &'static str {
        "classifier"
    }

    fn solve(&self, p: &NormalizedProblem) -> SolveResult {
        solve_normalized(p)
    }
}

/// All six words, every time.
pub struct ExhaustiveSolver;

impl Solver for ExhaustiveSolver {
    fn name(&self) -> &'static str {
        "exhaustive"
    }

    fn solve(&self, p: &NormalizedProblem) -> SolveResult {
        solve_exhaustive(p)
    }
}

static SOLVERS: [&dyn Solver; 2] = [&ClassifierSolver, &ExhaustiveSolver];

pub fn solvers() -> &'static [&'static dyn Solver] {
    &SOLVERS
}

pub fn solver_names() -> impl Iterator<Item = &'static str> {
    SOLVERS.iter().map(|s| s.name())
}

pub fn solver_by_name(name: &str) -> Result<&'static dyn Solver> {
    SOLVERS
        .iter()
        .copied()
        .find(|s| s.name() == name)
        .ok_or_else(|| Error::Unknown {
            kind: "solver",
            name: name.to_string(),
        })
}
