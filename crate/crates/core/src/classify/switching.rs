//! Switching functions: signed quantities whose sign picks between the two
//! candidate words of a table row.
//!
//! Most are closed forms in a few segment lengths. Five of them
//! (`S13_1`, `S13_2`, `S14_1`, `S14_2`, `S14_3`) are evaluated as the length
//! difference they stand for, because the published closed forms drift from
//! that difference by region-dependent multiples of π.

use std::fmt;
use std::str::FromStr;

use crate::angle::PI;
use crate::error::{Error, Result};
use crate::geom::NormalizedProblem;
use crate::words::{EvalCounter, PathWord};

use super::tables::TableContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SwitchId {
    S11_1,
    S11_2,
    S11_3,
    S11_4,
    S12_1,
    S12_2,
    S13_1,
    S13_2,
    S14_1,
    S14_2,
    S14_3,
    S22_1,
    S22_2,
    S44_1,
    S44_2,
    S44_3,
    S44_4,
}

impl SwitchId {
    pub const ALL: [SwitchId; 17] = [
        SwitchId::S11_1,
        SwitchId::S11_2,
        SwitchId::S11_3,
        SwitchId::S11_4,
        SwitchId::S12_1,
        SwitchId::S12_2,
        SwitchId::S13_1,
        SwitchId::S13_2,
        SwitchId::S14_1,
        SwitchId::S14_2,
        SwitchId::S14_3,
        SwitchId::S22_1,
        SwitchId::S22_2,
        SwitchId::S44_1,
        SwitchId::S44_2,
        SwitchId::S44_3,
        SwitchId::S44_4,
    ];

    /// The formula, for reports and docs.
    pub fn formula(self) -> &'static str {
        use SwitchId::*;
        match self {
            S11_1 | S12_1 | S22_1 | S44_3 => "2(p_rlr - pi) - p_rsr",
            S11_2 | S12_2 => "2(t_rlr + q_rlr) - (p_lsr + 2 q_lsr) + 2 pi",
            S11_3 | S22_2 | S44_1 => "2(p_lrl - pi) - p_lsl",
            S11_4 => "2(t_lrl + q_lrl) - (p_lsr + 2 t_lsr) + 2 pi",
            S13_1 | S14_3 => "(L_rlr - L_lrl) / 2",
            S13_2 | S14_2 => "L_lrl - L_rsl",
            S14_1 => "L_lrl - L_lsr",
            S44_2 => "2(t_lrl + q_lrl) - (p_rsl + 2 q_rsl) + 2 pi",
            S44_4 => "2(t_rlr + q_rlr) - (p_rsl + 2 t_rsl) + 2 pi",
        }
    }
}

impl fmt::Display for SwitchId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for SwitchId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SwitchId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                kind: "switching function",
                name: s.to_string(),
            })
    }
}

pub(crate) fn evaluate(id: SwitchId, cx: &mut TableContext<'_>) -> Result<f64> {
    use PathWord::*;
    use SwitchId::*;
    Ok(match id {
        S11_1 | S12_1 | S22_1 | S44_3 => 2.0 * (cx.p(Rlr)? - PI) - cx.p(Rsr)?,
        S11_2 | S12_2 => 2.0 * (cx.t(Rlr)? + cx.q(Rlr)?) - (cx.p(Lsr)? + 2.0 * cx.q(Lsr)?) + 2.0 * PI,
        S11_3 | S22_2 | S44_1 => 2.0 * (cx.p(Lrl)? - PI) - cx.p(Lsl)?,
        S11_4 => 2.0 * (cx.t(Lrl)? + cx.q(Lrl)?) - (cx.p(Lsr)? + 2.0 * cx.t(Lsr)?) + 2.0 * PI,
        S44_2 => 2.0 * (cx.t(Lrl)? + cx.q(Lrl)?) - (cx.p(Rsl)? + 2.0 * cx.q(Rsl)?) + 2.0 * PI,
        S44_4 => 2.0 * (cx.t(Rlr)? + cx.q(Rlr)?) - (cx.p(Rsl)? + 2.0 * cx.t(Rsl)?) + 2.0 * PI,
        S13_1 | S14_3 => (cx.len(Rlr)? - cx.len(Lrl)?) / 2.0,
        S13_2 | S14_2 => cx.len(Lrl)? - cx.len(Rsl)?,
        S14_1 => cx.len(Lrl)? - cx.len(Lsr)?,
    })
}

/// Value of a switching function, drawing on (and charging) `counter`.
/// Fails with [`Error::InfeasibleWord`] if a referenced word has no solution.
pub fn switching_value(
    id: SwitchId,
    p: &NormalizedProblem,
    counter: &mut EvalCounter,
) -> Result<f64> {
    evaluate(id, &mut TableContext::new(p, counter))
}
