//! Short-case classifier.
//!
//! A short-case problem is binned by the quadrants of its two headings into
//! one of sixteen classes. Reflections and reversal relate the classes in six
//! groups, so only six canonical classes carry a decision table. Each table
//! names the optimal word after evaluating a handful of segment lengths.

mod ccc;
mod switching;
mod tables;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::angle::{mod2pi, FRAC_PI_2};
use crate::error::{Error, Result};
use crate::geom::{normalize, CircleCenter, Configuration, NormalizedProblem};
use crate::oracle::{solve_exhaustive, Case, Method, SolveResult};
use crate::words::{word_segments, EvalCounter, PathWord};

pub use ccc::{ccc_necessary_condition, SideClass};
pub use switching::{switching_value, SwitchId};
pub use tables::{
    ClassTable, TableContext, TableRegistry, A11Table, A12Table, A13Table, A14Table, A22Table,
    A23Table, A44DirectTable,
};

/// Quadrant pair `a_ij` of the start and goal headings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId {
    i: u8,
    j: u8,
}

impl ClassId {
    pub const A11: ClassId = ClassId { i: 1, j: 1 };
    pub const A12: ClassId = ClassId { i: 1, j: 2 };
    pub const A13: ClassId = ClassId { i: 1, j: 3 };
    pub const A14: ClassId = ClassId { i: 1, j: 4 };
    pub const A22: ClassId = ClassId { i: 2, j: 2 };
    pub const A23: ClassId = ClassId { i: 2, j: 3 };
    pub const A44: ClassId = ClassId { i: 4, j: 4 };

    /// The group representatives that own a table.
    pub const CANONICAL: [ClassId; 6] = [
        Self::A11,
        Self::A12,
        Self::A13,
        Self::A14,
        Self::A22,
        Self::A23,
    ];

    pub fn new(i: u8, j: u8) -> Result<Self> {
        if (1..=4).contains(&i) && (1..=4).contains(&j) {
            Ok(Self { i, j })
        } else {
            Err(Error::InvalidArgument(format!(
                "quadrant indices must be in 1..=4, got ({i}, {j})"
            )))
        }
    }

    pub fn all() -> impl Iterator<Item = ClassId> {
        (1..=4).flat_map(|i| (1..=4).map(move |j| ClassId { i, j }))
    }

    pub fn initial(self) -> u8 {
        self.i
    }

    pub fn terminal(self) -> u8 {
        self.j
    }

    /// Position in `0..16`, row-major over `(i, j)`.
    pub fn index(self) -> usize {
        4 * (self.i as usize - 1) + (self.j as usize - 1)
    }

    pub fn is_canonical(self) -> bool {
        Self::CANONICAL.contains(&self)
    }

    pub fn group(self) -> GroupId {
        group_of(self)
    }

    /// Class of the transformed headings, computed on indices alone.
    fn transformed(self, tr: WordTransform) -> ClassId {
        let (mut i, mut j) = (self.i, self.j);
        if tr.flip_letters {
            (i, j) = (5 - i, 5 - j);
        }
        if tr.reverse {
            (i, j) = (5 - j, 5 - i);
        }
        ClassId { i, j }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a{}{}", self.i, self.j)
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "class",
            name: s.to_string(),
        };
        let digits = s.strip_prefix(['a', 'A']).unwrap_or(s).as_bytes();
        match digits {
            [i @ b'1'..=b'4', j @ b'1'..=b'4'] => ClassId::new(i - b'0', j - b'0'),
            _ => Err(unknown()),
        }
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupId {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Quadrant index for an angle in `[0, 2π)`; intervals are half-open.
pub fn quadrant_of(angle: f64) -> u8 {
    let k = (mod2pi(angle) / FRAC_PI_2) as u8;
    k.min(3) + 1
}

pub fn class_of(p: &NormalizedProblem) -> ClassId {
    ClassId {
        i: quadrant_of(p.alpha()),
        j: quadrant_of(p.beta()),
    }
}

pub fn group_of(c: ClassId) -> GroupId {
    match (c.i, c.j) {
        (1, 1) | (4, 4) => GroupId::E1,
        (1, 2) | (2, 1) | (3, 4) | (4, 3) => GroupId::E2,
        (1, 3) | (3, 1) | (2, 4) | (4, 2) => GroupId::E3,
        (1, 4) | (4, 1) => GroupId::E4,
        (2, 2) | (3, 3) => GroupId::E5,
        _ => GroupId::E6,
    }
}

/// Distance below which a problem is in the short case.
pub fn threshold_distance(alpha: f64, beta: f64) -> f64 {
    let (sa, ca) = alpha.sin_cos();
    let (sb, cb) = beta.sin_cos();
    threshold_from_trig(sa, ca, sb, cb)
}

#[inline]
fn threshold_from_trig(sa: f64, ca: f64, sb: f64, cb: f64) -> f64 {
    let c = ca + cb;
    sa.abs() + sb.abs() + (4.0 - c * c).max(0.0).sqrt()
}

pub fn case_of(p: &NormalizedProblem) -> Case {
    if p.d() < threshold_from_trig(p.sa, p.ca, p.sb, p.cb) {
        Case::Short
    } else {
        Case::Long
    }
}

/// Unit circles intersect (or touch) iff their centres are at most 2 apart.
pub fn circles_intersect(c1: &CircleCenter, c2: &CircleCenter) -> bool {
    let dx = c1.center[0] - c2.center[0];
    let dy = c1.center[1] - c2.center[1];
    dx.hypot(dy) <= c1.radius + c2.radius
}

/// Reflection and/or reversal relating equivalent problems.
///
/// `flip_letters` maps headings `(α, β) → (−α, −β)` and swaps L and R.
/// `reverse` maps `(α, β) → (−β, −α)`, reverses the word and swaps `t`
/// with `q`. Both together give `(β, α)`. The two commute, so composition is
/// the XOR of the flags and every transform is its own inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct WordTransform {
    pub flip_letters: bool,
    pub reverse: bool,
}

impl WordTransform {
    pub const IDENTITY: WordTransform = WordTransform {
        flip_letters: false,
        reverse: false,
    };

    pub const ALL: [WordTransform; 4] = [
        WordTransform::IDENTITY,
        WordTransform {
            flip_letters: true,
            reverse: false,
        },
        WordTransform {
            flip_letters: false,
            reverse: true,
        },
        WordTransform {
            flip_letters: true,
            reverse: true,
        },
    ];

    pub fn compose(self, other: WordTransform) -> WordTransform {
        WordTransform {
            flip_letters: self.flip_letters ^ other.flip_letters,
            reverse: self.reverse ^ other.reverse,
        }
    }

    pub fn apply_word(self, w: PathWord) -> PathWord {
        let w = if self.flip_letters { w.flipped() } else { w };
        if self.reverse {
            w.reversed()
        } else {
            w
        }
    }

    pub fn apply_path(self, path: &crate::words::DubinsPath) -> crate::words::DubinsPath {
        let word = self.apply_word(path.word);
        if self.reverse {
            crate::words::DubinsPath::new(word, path.q, path.p, path.t)
        } else {
            crate::words::DubinsPath::new(word, path.t, path.p, path.q)
        }
    }

    pub fn apply_headings(self, alpha: f64, beta: f64) -> (f64, f64) {
        let (mut a, mut b) = (alpha, beta);
        if self.flip_letters {
            (a, b) = (-a, -b);
        }
        if self.reverse {
            (a, b) = (-b, -a);
        }
        (mod2pi(a), mod2pi(b))
    }

    /// The transformed problem. Sines and cosines are derived from the
    /// cached ones (negation and swap) rather than recomputed.
    pub fn apply_problem(self, p: &NormalizedProblem) -> NormalizedProblem {
        let (mut a, mut b) = (p.alpha(), p.beta());
        let [mut sa, mut ca, mut sb, mut cb] = [p.sa, p.ca, p.sb, p.cb];
        if self.flip_letters {
            (a, b) = (mod2pi(-a), mod2pi(-b));
            (sa, sb) = (-sa, -sb);
        }
        if self.reverse {
            (a, b) = (mod2pi(-b), mod2pi(-a));
            (sa, ca, sb, cb) = (-sb, cb, -sa, ca);
        }
        NormalizedProblem::from_trig(p.d(), a, b, [sa, ca, sb, cb])
    }
}

/// Maps `p` into its group's canonical class.
///
/// The transform is chosen from the quadrant indices rather than by
/// re-binning the transformed headings: negating an angle on a quadrant edge
/// lands on the opposite (open) edge, so re-binning can miss the canonical
/// class. The transformed headings then lie in the closure of the canonical
/// cell, which the tables accept.
pub fn canonicalize(cls: ClassId, p: &NormalizedProblem) -> (ClassId, NormalizedProblem, WordTransform) {
    let tr = WordTransform::ALL
        .into_iter()
        .find(|tr| cls.transformed(*tr).is_canonical())
        .expect("every class has a canonical image");
    (cls.transformed(tr), tr.apply_problem(p), tr)
}

/// Word chosen by the canonical class's table from the default registry.
pub fn solve_class(
    canonical: ClassId,
    p: &NormalizedProblem,
    counter: &mut EvalCounter,
) -> Result<PathWord> {
    TableRegistry::global().select(canonical, p, counter)
}

/// Classifier path for a short-case problem.
///
/// Should a table ever reference an infeasible word, the result falls back
/// to the exhaustive search and says so in `method`.
pub fn solve_short(p: &NormalizedProblem) -> SolveResult {
    solve_short_with(TableRegistry::global(), p)
}

pub fn solve_short_with(registry: &TableRegistry, p: &NormalizedProblem) -> SolveResult {
    let class = class_of(p);
    if near_concentric(p) {
        return SolveResult {
            class: Some(class),
            ..solve_exhaustive(p)
        };
    }
    let (canonical, tp, tr) = canonicalize(class, p);
    let mut counter = EvalCounter::new();
    let Ok(word_c) = registry.select(canonical, &tp, &mut counter) else {
        return SolveResult {
            class: Some(class),
            ..solve_exhaustive(p)
        };
    };
    let segment_evals = counter.segment_evals();
    match word_segments(word_c, &tp, &mut counter) {
        Some(path) => SolveResult {
            path: tr.apply_path(&path),
            case: Case::Short,
            class: Some(class),
            evals: counter.word_evals(),
            segment_evals,
            method: Method::Classifier,
        },
        None => SolveResult {
            class: Some(class),
            ..solve_exhaustive(p)
        },
    }
}

/// Same-direction circles closer than this are treated as coincident.
pub const CONCENTRIC_TOL: f64 = 1e-6;

/// True when `C_ir ≈ C_fr` or `C_il ≈ C_fl`.
///
/// At exact coincidence the optimum is a single arc, and moving `d` by any
/// amount in one direction forces an extra near-full loop, so the optimal
/// length jumps by almost 2π. Close to that point the arc directions are
/// dominated by rounding and no sign test is reliable; the classifier hands
/// such problems to the exhaustive search.
pub fn near_concentric(p: &NormalizedProblem) -> bool {
    let dc = p.cb - p.ca;
    let right = p.sa - p.sb - p.d();
    let left = p.sb - p.sa - p.d();
    let tol2 = CONCENTRIC_TOL * CONCENTRIC_TOL;
    dc * dc + right * right < tol2 || dc * dc + left * left < tol2
}

/// Normalized solve: classifier for the short case, exhaustive otherwise.
pub fn solve_normalized(p: &NormalizedProblem) -> SolveResult {
    match case_of(p) {
        Case::Short => solve_short(p),
        Case::Long => solve_exhaustive(p),
    }
}

/// Shortest path between two world poses for turning radius `radius`.
/// Segment lengths in the result are in world units.
pub fn solve(start: &Configuration, goal: &Configuration, radius: f64) -> Result<SolveResult> {
    let (p, _) = normalize(start, goal, radius)?;
    let mut r = solve_normalized(&p);
    r.path = r.path.scaled(radius);
    Ok(r)
}
