//! Side classification of start and goal against the CCC rhombus.
//!
//! For a CCC word the two outer circles are fixed. When their centres are
//! at most 4 apart there are two middle circles tangent to both. The four
//! centres form a rhombus, and whether the start and goal points lie inside
//! it constrains which middle circle an optimal path can use.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{CircleTag, NormalizedProblem};
use crate::words::PathWord;

/// Below this centre separation the rhombus has collapsed to a point.
const DEGENERATE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SideClass {
    SameInside,
    SameOutside,
    Opposite,
}

/// Classifies `(0, 0)` and `(d, 0)` against the rhombus of `word`.
///
/// Returns [`Error::CccInfeasible`] when no middle circle exists and
/// [`Error::InvalidArgument`] for a CSC word. Coincident outer centres count
/// as same-inside.
pub fn ccc_necessary_condition(p: &NormalizedProblem, word: PathWord) -> Result<SideClass> {
    let (a, b) = match word {
        PathWord::Rlr => (CircleTag::Ir, CircleTag::Fr),
        PathWord::Lrl => (CircleTag::Il, CircleTag::Fl),
        w => {
            return Err(Error::InvalidArgument(format!(
                "{w} has no middle circle"
            )))
        }
    };
    let c1 = p.circle(a).center;
    let c2 = p.circle(b).center;
    let (dx, dy) = (c2[0] - c1[0], c2[1] - c1[1]);
    let dist = dx.hypot(dy);
    if dist > 4.0 {
        return Err(Error::CccInfeasible(word));
    }
    if dist < DEGENERATE {
        return Ok(SideClass::SameInside);
    }
    let mid = [(c1[0] + c2[0]) / 2.0, (c1[1] + c2[1]) / 2.0];
    let h = (4.0 - (dist / 2.0).powi(2)).max(0.0).sqrt();
    let n = [-dy / dist, dx / dist];
    let m1 = [mid[0] + h * n[0], mid[1] + h * n[1]];
    let m2 = [mid[0] - h * n[0], mid[1] - h * n[1]];
    let rhombus = [c1, m1, c2, m2];

    let start_in = strictly_inside(&rhombus, [0.0, 0.0]);
    let goal_in = strictly_inside(&rhombus, [p.d(), 0.0]);
    Ok(match (start_in, goal_in) {
        (true, true) => SideClass::SameInside,
        (false, false) => SideClass::SameOutside,
        _ => SideClass::Opposite,
    })
}

/// Point strictly inside a convex polygon given in either orientation.
fn strictly_inside(poly: &[[f64; 2]; 4], pt: [f64; 2]) -> bool {
    let mut sign = 0.0f64;
    for k in 0..4 {
        let a = poly[k];
        let b = poly[(k + 1) % 4];
        let cross = (b[0] - a[0]) * (pt[1] - a[1]) - (b[1] - a[1]) * (pt[0] - a[0]);
        if cross == 0.0 || (sign != 0.0 && cross.signum() != sign) {
            return false;
        }
        sign = cross.signum();
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prob(d: f64, a: f64, b: f64) -> NormalizedProblem {
        NormalizedProblem::new(d, a, b).unwrap()
    }

    #[test]
    fn straight_line_is_same_outside() {
        assert_eq!(
            ccc_necessary_condition(&prob(2.0, 0.0, 0.0), PathWord::Rlr).unwrap(),
            SideClass::SameOutside
        );
        // The rhombus is only 0.1 wide at y = -1; both points sit a unit away.
        assert_eq!(
            ccc_necessary_condition(&prob(0.1, 0.0, 0.0), PathWord::Rlr).unwrap(),
            SideClass::SameOutside
        );
    }

    #[test]
    fn coincident_outer_circles_are_same_inside() {
        assert_eq!(
            ccc_necessary_condition(&prob(0.0, 0.4, 0.4), PathWord::Lrl).unwrap(),
            SideClass::SameInside
        );
    }

    #[test]
    fn far_apart_is_infeasible() {
        assert_eq!(
            ccc_necessary_condition(&prob(5.0, 0.0, 0.0), PathWord::Rlr),
            Err(Error::CccInfeasible(PathWord::Rlr))
        );
        assert!(ccc_necessary_condition(&prob(1.0, 0.0, 0.0), PathWord::Lsl).is_err());
    }

    #[test]
    fn inside_and_opposite_cases_occur() {
        // Headings pointing away from each other pull the outer centres
        // across the segment joining the points.
        let inside = ccc_necessary_condition(&prob(1.0, std::f64::consts::PI, 0.0), PathWord::Rlr)
            .unwrap();
        assert_eq!(inside, SideClass::SameInside);
        let square = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        assert!(strictly_inside(&square, [0.5, 0.5]));
        assert!(!strictly_inside(&square, [1.0, 0.5]));
        assert!(!strictly_inside(&square, [1.5, 0.5]));
    }
}
