//! Closed-form segment lengths for the six Dubins words.
//!
//! Each kernel returns the unique `(t, p, q)` in range whose operator
//! composition carries `(0, 0, α)` to `(d, 0, β)`. CCC words use the middle
//! arc longer than π, which is the only branch that can be optimal.
//!
//! Two details differ from the commonly printed forms: the LRL radicand
//! carries `2d(sin β − sin α)` (the mirror of RLR), and the CCC first
//! segment adds `p / 2`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::angle::{mod2pi, TAU};
use crate::error::Error;
use crate::geom::{Motion, NormalizedProblem};

/// Centre separations below this are treated as coincident circles, where
/// the connecting direction is undefined.
const COINCIDENT: f64 = 1e-12;

/// The six words, in canonical tie-breaking order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathWord {
    Lsl,
    Rsr,
    Lsr,
    Rsl,
    Rlr,
    Lrl,
}

impl PathWord {
    pub const ALL: [PathWord; 6] = [
        PathWord::Lsl,
        PathWord::Rsr,
        PathWord::Lsr,
        PathWord::Rsl,
        PathWord::Rlr,
        PathWord::Lrl,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn motions(self) -> [Motion; 3] {
        use Motion::*;
        match self {
            PathWord::Lsl => [L, S, L],
            PathWord::Rsr => [R, S, R],
            PathWord::Lsr => [L, S, R],
            PathWord::Rsl => [R, S, L],
            PathWord::Rlr => [R, L, R],
            PathWord::Lrl => [L, R, L],
        }
    }

    pub fn from_motions(m: [Motion; 3]) -> Option<Self> {
        PathWord::ALL.into_iter().find(|w| w.motions() == m)
    }

    pub fn is_ccc(self) -> bool {
        matches!(self, PathWord::Rlr | PathWord::Lrl)
    }

    /// L ↔ R.
    pub fn flipped(self) -> Self {
        match self {
            PathWord::Lsl => PathWord::Rsr,
            PathWord::Rsr => PathWord::Lsl,
            PathWord::Lsr => PathWord::Rsl,
            PathWord::Rsl => PathWord::Lsr,
            PathWord::Rlr => PathWord::Lrl,
            PathWord::Lrl => PathWord::Rlr,
        }
    }

    /// Letters in reverse order.
    pub fn reversed(self) -> Self {
        match self {
            PathWord::Lsr => PathWord::Rsl,
            PathWord::Rsl => PathWord::Lsr,
            w => w,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PathWord::Lsl => "LSL",
            PathWord::Rsr => "RSR",
            PathWord::Lsr => "LSR",
            PathWord::Rsl => "RSL",
            PathWord::Rlr => "RLR",
            PathWord::Lrl => "LRL",
        }
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PathWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PathWord::ALL
            .into_iter()
            .find(|w| w.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown {
                kind: "word",
                name: s.to_string(),
            })
    }
}

impl Serialize for PathWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A word with its three segment lengths. Arc segments are angles in
/// `[0, 2π)`; the straight middle of CSC words is a nonnegative length.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DubinsPath {
    pub word: PathWord,
    pub t: f64,
    pub p: f64,
    pub q: f64,
    pub total: f64,
}

impl DubinsPath {
    pub fn new(word: PathWord, t: f64, p: f64, q: f64) -> Self {
        Self {
            word,
            t,
            p,
            q,
            total: t + p + q,
        }
    }

    pub fn segment(&self, seg: Segment) -> f64 {
        match seg {
            Segment::T => self.t,
            Segment::P => self.p,
            Segment::Q => self.q,
        }
    }

    pub fn segments(&self) -> [(Motion, f64); 3] {
        let [a, b, c] = self.word.motions();
        [(a, self.t), (b, self.p), (c, self.q)]
    }

    /// Lengths multiplied by `radius` (world units).
    pub fn scaled(&self, radius: f64) -> Self {
        Self::new(self.word, self.t * radius, self.p * radius, self.q * radius)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Segment {
    T,
    P,
    Q,
}

impl Segment {
    fn bit(self) -> u32 {
        match self {
            Segment::T => 0,
            Segment::P => 1,
            Segment::Q => 2,
        }
    }
}

/// Squared-distance radicand of the LSR straight segment. Nonpositive iff
/// `C_il` and `C_fr` intersect.
#[inline]
pub(crate) fn lsr_radicand(pr: &NormalizedProblem) -> f64 {
    let d = pr.d();
    let cab = pr.ca * pr.cb + pr.sa * pr.sb;
    -2.0 + d * d + 2.0 * cab + 2.0 * d * (pr.sa + pr.sb)
}

/// Nonpositive iff `C_ir` and `C_fl` intersect.
#[inline]
pub(crate) fn rsl_radicand(pr: &NormalizedProblem) -> f64 {
    let d = pr.d();
    let cab = pr.ca * pr.cb + pr.sa * pr.sb;
    -2.0 + d * d + 2.0 * cab - 2.0 * d * (pr.sa + pr.sb)
}

/// Arcs this close to a full turn are rounding noise around zero.
const FULL_TURN_SNAP: f64 = 1e-10;

/// Normalized arc length; a whisker below 2π is taken as 0 so the result
/// does not depend on which side of zero rounding landed.
#[inline]
fn wrap_arc(x: f64) -> f64 {
    let r = mod2pi(x);
    if r > TAU - FULL_TURN_SNAP {
        0.0
    } else {
        r
    }
}

#[inline]
fn direction(y: f64, x: f64, fallback: f64) -> f64 {
    if x.abs() < COINCIDENT && y.abs() < COINCIDENT {
        fallback
    } else {
        y.atan2(x)
    }
}

/// Uncounted kernel: segments of `word` for `pr`, or `None` if infeasible.
pub fn compute_word(word: PathWord, pr: &NormalizedProblem) -> Option<DubinsPath> {
    let (d, a, b) = (pr.d(), pr.alpha(), pr.beta());
    let (sa, ca, sb, cb) = (pr.sa, pr.ca, pr.sb, pr.cb);
    let cab = ca * cb + sa * sb;
    let (t, p, q) = match word {
        PathWord::Lsl => {
            let tmp = 2.0 + d * d - 2.0 * cab + 2.0 * d * (sa - sb);
            let th = direction(cb - ca, d + sa - sb, a);
            (wrap_arc(th - a), tmp.max(0.0).sqrt(), wrap_arc(b - th))
        }
        PathWord::Rsr => {
            let tmp = 2.0 + d * d - 2.0 * cab + 2.0 * d * (sb - sa);
            let th = direction(ca - cb, d - sa + sb, a);
            (wrap_arc(a - th), tmp.max(0.0).sqrt(), wrap_arc(th - b))
        }
        PathWord::Lsr => {
            let tmp = lsr_radicand(pr);
            if tmp < 0.0 {
                return None;
            }
            let p = tmp.sqrt();
            let th = (-ca - cb).atan2(d + sa + sb) - (-2.0f64).atan2(p);
            (wrap_arc(th - a), p, wrap_arc(th - b))
        }
        PathWord::Rsl => {
            let tmp = rsl_radicand(pr);
            if tmp < 0.0 {
                return None;
            }
            let p = tmp.sqrt();
            let th = (ca + cb).atan2(d - sa - sb) - 2.0f64.atan2(p);
            (wrap_arc(a - th), p, wrap_arc(b - th))
        }
        PathWord::Rlr | PathWord::Lrl => return compute_ccc(word, pr, MiddleArc::Major),
    };
    Some(DubinsPath::new(word, t, p, q))
}

/// Which of the two tangent middle circles a CCC word runs around.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MiddleArc {
    /// Middle arc of at least π; the only candidate for optimality.
    Major,
    /// Middle arc of at most π.
    Minor,
}

/// CCC segments on the requested middle circle. Returns `None` for CSC words
/// or when the outer circles are more than 4 radii apart.
pub fn compute_ccc(word: PathWord, pr: &NormalizedProblem, arc: MiddleArc) -> Option<DubinsPath> {
    let (d, a, b) = (pr.d(), pr.alpha(), pr.beta());
    let (sa, ca, sb, cb) = (pr.sa, pr.ca, pr.sb, pr.cb);
    let cab = ca * cb + sa * sb;
    let side = match word {
        PathWord::Rlr => 1.0,
        PathWord::Lrl => -1.0,
        _ => return None,
    };
    let tmp = (6.0 - d * d + 2.0 * cab + 2.0 * side * d * (sa - sb)) / 8.0;
    if !(-1.0..=1.0).contains(&tmp) {
        return None;
    }
    let p = match arc {
        MiddleArc::Major => wrap_arc(TAU - tmp.acos()),
        MiddleArc::Minor => tmp.acos(),
    };
    let (t, q) = if side > 0.0 {
        let phi = direction(ca - cb, d - sa + sb, a);
        let t = wrap_arc(a - phi + p / 2.0);
        (t, wrap_arc(a - b - t + p))
    } else {
        let phi = direction(ca - cb, d + sa - sb, -a);
        let t = wrap_arc(-a - phi + p / 2.0);
        (t, wrap_arc(b - a - t + p))
    };
    Some(DubinsPath::new(word, t, p, q))
}

/// How [`EvalCounter::count`] reports work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    /// Three evaluations the first time any segment of a word is needed.
    #[default]
    Word,
    /// One per distinct segment length, including the lengths it is derived
    /// from (`t` of LSR/RSL/CCC needs `p`; `q` of CCC needs `p` and `t`).
    Segment,
}

/// Per-solve memo of word segments plus the two work accountings.
///
/// The memo assumes every request within one solve is for the same problem.
#[derive(Debug, Clone)]
pub struct EvalCounter {
    granularity: Granularity,
    memo: [Option<Option<DubinsPath>>; 6],
    words: u8,
    segments: u32,
}

impl Default for EvalCounter {
    fn default() -> Self {
        Self::new()
    }
}

impl EvalCounter {
    pub fn new() -> Self {
        Self::with_granularity(Granularity::Word)
    }

    pub fn with_granularity(granularity: Granularity) -> Self {
        Self {
            granularity,
            memo: [None; 6],
            words: 0,
            segments: 0,
        }
    }

    pub fn granularity(&self) -> Granularity {
        self.granularity
    }

    pub fn count(&self) -> u32 {
        match self.granularity {
            Granularity::Word => self.word_evals(),
            Granularity::Segment => self.segment_evals(),
        }
    }

    pub fn word_evals(&self) -> u32 {
        3 * self.words.count_ones()
    }

    pub fn segment_evals(&self) -> u32 {
        self.segments.count_ones()
    }

    fn lookup(&mut self, word: PathWord, pr: &NormalizedProblem) -> Option<DubinsPath> {
        *self.memo[word.index()].get_or_insert_with(|| compute_word(word, pr))
    }

    fn charge(&mut self, word: PathWord, seg: Segment) {
        self.words |= 1 << word.index();
        let deps: &[Segment] = match (word, seg) {
            (PathWord::Lsl | PathWord::Rsr, s) => match s {
                Segment::T => &[Segment::T],
                Segment::P => &[Segment::P],
                Segment::Q => &[Segment::Q],
            },
            (PathWord::Lsr | PathWord::Rsl, Segment::P) => &[Segment::P],
            (PathWord::Lsr | PathWord::Rsl, s) => {
                if s == Segment::T {
                    &[Segment::P, Segment::T]
                } else {
                    &[Segment::P, Segment::Q]
                }
            }
            (_, Segment::P) => &[Segment::P],
            (_, Segment::T) => &[Segment::P, Segment::T],
            (_, Segment::Q) => &[Segment::P, Segment::T, Segment::Q],
        };
        for s in deps {
            self.segments |= 1 << (3 * word.index() as u32 + s.bit());
        }
    }
}

/// All three segments of `word`, charging the counter.
pub fn word_segments(
    word: PathWord,
    pr: &NormalizedProblem,
    counter: &mut EvalCounter,
) -> Option<DubinsPath> {
    for s in [Segment::T, Segment::P, Segment::Q] {
        counter.charge(word, s);
    }
    counter.lookup(word, pr)
}

/// A single segment, charging only it and what it is derived from.
pub fn segment_value(
    word: PathWord,
    seg: Segment,
    pr: &NormalizedProblem,
    counter: &mut EvalCounter,
) -> Option<f64> {
    counter.charge(word, seg);
    counter.lookup(word, pr).map(|path| path.segment(seg))
}

pub fn word_length(
    word: PathWord,
    pr: &NormalizedProblem,
    counter: &mut EvalCounter,
) -> Option<f64> {
    word_segments(word, pr, counter).map(|path| path.total)
}
