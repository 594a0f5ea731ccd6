//! Per-class decision tables behind a common trait, looked up by class.
//!
//! Each table reads only what its row needs: circle-pair predicates (free),
//! individual segment lengths compared against π, and switching-function
//! signs. Segment lengths come through the shared per-solve memo.
//!
//! The rows differ from the originally published tables in a few places,
//! each found by sweeping against the exhaustive search:
//! - a11/a22: when both cross circle pairs meet, LSR does not exist and the
//!   answer is LRL for α ≤ β, RLR otherwise;
//! - a22: the α ≤ β branch tests `t_rsr > π` and the α > β branch `q_lsl > π`;
//! - a14: the two mixed circle rows have their conditions swapped;
//! - a23: the mixed circle rows test `q_rsr > π` and `t_rsr > π`.

use std::sync::OnceLock;

use crate::angle::PI;
use crate::error::{Error, Result};
use crate::geom::NormalizedProblem;
use crate::words::{
    lsr_radicand, rsl_radicand, segment_value, word_length, EvalCounter, PathWord, Segment,
};

use super::switching::{evaluate, SwitchId};
use super::ClassId;

/// What a table row can ask about the problem.
pub struct TableContext<'a> {
    problem: &'a NormalizedProblem,
    counter: &'a mut EvalCounter,
}

impl<'a> TableContext<'a> {
    pub fn new(problem: &'a NormalizedProblem, counter: &'a mut EvalCounter) -> Self {
        Self { problem, counter }
    }

    pub fn alpha(&self) -> f64 {
        self.problem.alpha()
    }

    pub fn beta(&self) -> f64 {
        self.problem.beta()
    }

    /// `C_il` and `C_fr` meet (tangency included).
    pub fn il_fr(&self) -> bool {
        lsr_radicand(self.problem) <= 0.0
    }

    /// `C_ir` and `C_fl` meet (tangency included).
    pub fn ir_fl(&self) -> bool {
        rsl_radicand(self.problem) <= 0.0
    }

    pub fn segment(&mut self, word: PathWord, seg: Segment) -> Result<f64> {
        segment_value(word, seg, self.problem, self.counter).ok_or(Error::InfeasibleWord(word))
    }

    pub fn t(&mut self, word: PathWord) -> Result<f64> {
        self.segment(word, Segment::T)
    }

    pub fn p(&mut self, word: PathWord) -> Result<f64> {
        self.segment(word, Segment::P)
    }

    pub fn q(&mut self, word: PathWord) -> Result<f64> {
        self.segment(word, Segment::Q)
    }

    pub fn len(&mut self, word: PathWord) -> Result<f64> {
        word_length(word, self.problem, self.counter).ok_or(Error::InfeasibleWord(word))
    }

    pub fn switch(&mut self, id: SwitchId) -> Result<f64> {
        evaluate(id, self)
    }
}

/// A decision table for one quadrant class.
pub trait ClassTable: Send + Sync {
    fn class(&self) -> ClassId;

    fn name(&self) -> &'static str;

    /// The optimal word for a short-case problem of this class. An
    /// [`Error::InfeasibleWord`] means a row referenced a word that does
    /// not exist for the problem.
    fn select(&self, cx: &mut TableContext<'_>) -> Result<PathWord>;
}

use PathWord::*;

pub struct A11Table;

impl ClassTable for A11Table {
    fn class(&self) -> ClassId {
        ClassId::A11
    }

    fn name(&self) -> &'static str {
        "a11"
    }

    fn select(&self, cx: &mut TableContext<'_>) -> Result<PathWord> {
        if !cx.ir_fl() {
            return Ok(Rsl);
        }
        let forward = cx.alpha() <= cx.beta();
        if cx.il_fr() {
            return Ok(if forward { Lrl } else { Rlr });
        }
        if forward {
            let t_rsr = cx.t(Rsr)?;
            if t_rsr < PI && cx.switch(SwitchId::S11_1)? > 0.0 {
                Ok(Rsr)
            } else if t_rsr > PI && cx.switch(SwitchId::S11_2)? > 0.0 {
                Ok(Lsr)
            } else {
                Ok(Rlr)
            }
        } else {
            let q_lsl = cx.q(Lsl)?;
            if q_lsl < PI && cx.switch(SwitchId::S11_3)? > 0.0 {
                Ok(Lsl)
            } else if q_lsl > PI && cx.switch(SwitchId::S11_4)? > 0.0 {
                Ok(Lsr)
            } else {
                Ok(Lrl)
            }
        }
    }
}

pub struct A12Table;

impl ClassTable for A12Table {
    fn class(&self) -> ClassId {
        ClassId::A12
    }

    fn name(&self) -> &'static str {
        "a12"
    }

    fn select(&self, cx: &mut TableContext<'_>) -> Result<PathWord> {
        if cx.il_fr() {
            return Ok(Lrl);
        }
        if cx.t(Rsr)? < PI {
            Ok(if cx.switch(SwitchId::S12_1)? < 0.0 { Rlr } else { Rsr })
        } else {
            Ok(if cx.switch(SwitchId::S12_2)? < 0.0 { Rlr } else { Lsr })
        }
    }
}

pub struct A13Table;

impl ClassTable for A13Table {
    fn class(&self) -> ClassId {
        ClassId::A13
    }

    fn name(&self) -> &'static str {
        "a13"
    }

    fn select(&self, cx: &mut TableContext<'_>) -> Result<PathWord> {
        match (cx.il_fr(), cx.ir_fl()) {
            (true, true) => Ok(if cx.switch(SwitchId::S13_1)? < 0.0 { Rlr } else { Lrl }),
            (true, false) => Ok(if cx.switch(SwitchId::S13_2)? < 0.0 { Lrl } else { Rsl }),
            _ => Ok(if cx.t(Rsr)? < PI { Rsr } else { Lsr }),
        }
    }
}

pub struct A14Table;

impl ClassTable for A14Table {
    fn class(&self) -> ClassId {
        ClassId::A14
    }

    fn name(&self) -> &'static str {
        "a14"
    }

    fn select(&self, cx: &mut TableContext<'_>) -> Result<PathWord> {
        match (cx.il_fr(), cx.ir_fl()) {
            (false, false) => {
                if cx.t(Rsr)? > PI {
                    Ok(Lsr)
                } else if cx.q(Rsr)? > PI {
                    Ok(Rsl)
                } else {
                    Ok(Rsr)
                }
            }
            (false, true) => Ok(if cx.switch(SwitchId::S14_1)? < 0.0 { Lrl } else { Lsr }),
            (true, false) => Ok(if cx.switch(SwitchId::S14_2)? < 0.0 { Lrl } else { Rsl }),
            (true, true) => Ok(if cx.switch(SwitchId::S14_3)? < 0.0 { Rlr } else { Lrl }),
        }
    }
}

pub struct A22Table;

impl ClassTable for A22Table {
    fn class(&self) -> ClassId {
        ClassId::A22
    }

    fn name(&self) -> &'static str {
        "a22"
    }

    fn select(&self, cx: &mut TableContext<'_>) -> Result<PathWord> {
        let forward = cx.alpha() <= cx.beta();
        if cx.il_fr() {
            return Ok(if forward { Lrl } else { Rlr });
        }
        if forward {
            if cx.t(Rsr)? > PI {
                Ok(Lsr)
            } else if cx.switch(SwitchId::S22_1)? > 0.0 {
                Ok(Rsr)
            } else {
                Ok(Rlr)
            }
        } else if cx.q(Lsl)? > PI {
            Ok(Lsr)
        } else if cx.switch(SwitchId::S22_2)? > 0.0 {
            Ok(Lsl)
        } else {
            Ok(Lrl)
        }
    }
}

pub struct A23Table;

impl ClassTable for A23Table {
    fn class(&self) -> ClassId {
        ClassId::A23
    }

    fn name(&self) -> &'static str {
        "a23"
    }

    fn select(&self, cx: &mut TableContext<'_>) -> Result<PathWord> {
        match (cx.il_fr(), cx.ir_fl()) {
            (false, false) => Ok(Rsr),
            (true, false) => Ok(if cx.q(Rsr)? > PI { Rsl } else { Rsr }),
            (false, true) => Ok(if cx.t(Rsr)? > PI { Lsr } else { Rsr }),
            (true, true) => Ok(Lrl),
        }
    }
}

/// Table for a44 stated directly rather than through reflection onto a11.
/// Not used by the default solve; kept to cross-check the reflection.
pub struct A44DirectTable;

impl ClassTable for A44DirectTable {
    fn class(&self) -> ClassId {
        ClassId::A44
    }

    fn name(&self) -> &'static str {
        "a44-direct"
    }

    fn select(&self, cx: &mut TableContext<'_>) -> Result<PathWord> {
        if !cx.il_fr() {
            return Ok(Lsr);
        }
        let backward = cx.alpha() >= cx.beta();
        if cx.ir_fl() {
            return Ok(if backward { Rlr } else { Lrl });
        }
        if backward {
            let t_lsl = cx.t(Lsl)?;
            if t_lsl < PI && cx.switch(SwitchId::S44_1)? > 0.0 {
                Ok(Lsl)
            } else if t_lsl > PI && cx.switch(SwitchId::S44_2)? > 0.0 {
                Ok(Rsl)
            } else {
                Ok(Lrl)
            }
        } else {
            let q_rsr = cx.q(Rsr)?;
            if q_rsr < PI && cx.switch(SwitchId::S44_3)? > 0.0 {
                Ok(Rsr)
            } else if q_rsr > PI && cx.switch(SwitchId::S44_4)? > 0.0 {
                Ok(Rsl)
            } else {
                Ok(Rlr)
            }
        }
    }
}

/// Tables keyed by class (one slot per class, looked up by index).
pub struct TableRegistry {
    tables: [Option<Box<dyn ClassTable>>; 16],
}

impl TableRegistry {
    pub fn empty() -> Self {
        Self {
            tables: Default::default(),
        }
    }

    /// The six canonical tables.
    pub fn standard() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(A11Table));
        r.register(Box::new(A12Table));
        r.register(Box::new(A13Table));
        r.register(Box::new(A14Table));
        r.register(Box::new(A22Table));
        r.register(Box::new(A23Table));
        r
    }

    /// Shared instance of [`TableRegistry::standard`].
    pub fn global() -> &'static TableRegistry {
        static GLOBAL: OnceLock<TableRegistry> = OnceLock::new();
        GLOBAL.get_or_init(TableRegistry::standard)
    }

    /// Adds or replaces the table for its class.
    pub fn register(&mut self, table: Box<dyn ClassTable>) {
        let slot = table.class().index();
        self.tables[slot] = Some(table);
    }

    #[inline]
    pub fn get(&self, class: ClassId) -> Option<&dyn ClassTable> {
        self.tables[class.index()].as_deref()
    }

    pub fn classes(&self) -> impl Iterator<Item = ClassId> + '_ {
        self.tables.iter().flatten().map(|t| t.class())
    }

    pub fn select(
        &self,
        class: ClassId,
        p: &NormalizedProblem,
        counter: &mut EvalCounter,
    ) -> Result<PathWord> {
        let table = self.get(class).ok_or_else(|| Error::Unknown {
            kind: "class table",
            name: class.to_string(),
        })?;
        table.select(&mut TableContext::new(p, counter))
    }
}
