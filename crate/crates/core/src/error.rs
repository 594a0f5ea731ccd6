use thiserror::Error;

use crate::words::PathWord;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A decision table referenced a segment of a word that has no solution
    /// for the problem at hand.
    #[error("word {0} is infeasible for this problem")]
    InfeasibleWord(PathWord),

    #[error("CCC word {0} is infeasible: outer circle centres are more than 4 radii apart")]
    CccInfeasible(PathWord),

    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
