//! Randomized properties of the word kernels, the threshold and the
//! classifier.

use dubins_core::angle::{angle_diff, PI, TAU};
use dubins_core::classify::{canonicalize, circles_intersect, WordTransform};
use dubins_core::geom::{endpoint, CircleTag};
use dubins_core::oracle::optimal_length;
use dubins_core::words::{compute_ccc, compute_word, MiddleArc};
use dubins_core::{
    class_of, group_of, solve_short, threshold_distance, ClassId, GroupId, NormalizedProblem,
    PathWord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_short(r: &mut ChaCha8Rng) -> NormalizedProblem {
    loop {
        let a = r.gen_range(0.0..TAU);
        let b = r.gen_range(0.0..TAU);
        let dt = threshold_distance(a, b);
        if dt > 0.0 {
            return NormalizedProblem::new(r.gen_range(0.0..dt), a, b).unwrap();
        }
    }
}

fn same_arc(x: f64, y: f64, tol: f64) -> bool {
    angle_diff(x, y).abs() <= tol
}

#[test]
fn every_feasible_word_reaches_the_goal() {
    let mut r = rng(1);
    for _ in 0..100_000 {
        let p = NormalizedProblem::new(
            r.gen_range(0.0..8.0),
            r.gen_range(0.0..TAU),
            r.gen_range(0.0..TAU),
        )
        .unwrap();
        for w in PathWord::ALL {
            if let Some(path) = compute_word(w, &p) {
                let err = endpoint(&path, &p).error_to(&p.goal());
                assert!(err <= 1e-9, "{w} {p:?} err {err}");
                assert!(path.t >= 0.0 && path.t < TAU && path.q >= 0.0 && path.q < TAU);
                assert!(path.p >= 0.0);
                assert_eq!(path.total, path.t + path.p + path.q);
            }
            if w.is_ccc() {
                if let Some(path) = compute_ccc(w, &p, MiddleArc::Minor) {
                    assert!(endpoint(&path, &p).error_to(&p.goal()) <= 1e-9);
                    assert!(path.p <= PI);
                }
            }
        }
    }
}

#[test]
fn mirror_symmetry() {
    let mut r = rng(2);
    for _ in 0..20_000 {
        let (d, a, b) = (r.gen_range(0.0..6.0), r.gen_range(0.0..TAU), r.gen_range(0.0..TAU));
        let p = NormalizedProblem::new(d, a, b).unwrap();
        let m = NormalizedProblem::new(d, TAU - a, TAU - b).unwrap();
        for w in PathWord::ALL {
            match (compute_word(w, &p), compute_word(w.flipped(), &m)) {
                (Some(x), Some(y)) => {
                    assert!(same_arc(x.t, y.t, 1e-12) && same_arc(x.q, y.q, 1e-12), "{w} {p:?}");
                    if w.is_ccc() {
                        assert!(same_arc(x.p, y.p, 1e-12));
                    } else {
                        assert!((x.p - y.p).abs() <= 1e-12);
                    }
                }
                (None, None) => {}
                // feasibility can differ only on the boundary
                (x, y) => panic!("{w} {p:?}: {x:?} vs {y:?}"),
            }
        }
    }
}

#[test]
fn reversal_symmetry() {
    // Reversing the word alone corresponds to headings (−β, −α); adding the
    // letter flip gives (β, α).
    let mut r = rng(3);
    for _ in 0..20_000 {
        let (d, a, b) = (r.gen_range(0.0..6.0), r.gen_range(0.0..TAU), r.gen_range(0.0..TAU));
        let p = NormalizedProblem::new(d, a, b).unwrap();
        let images = [
            (NormalizedProblem::new(d, TAU - b, TAU - a).unwrap(), false),
            (NormalizedProblem::new(d, b, a).unwrap(), true),
        ];
        for (q, flip) in images {
            for w in PathWord::ALL {
                let image = if flip { w.reversed().flipped() } else { w.reversed() };
                if let (Some(x), Some(y)) = (compute_word(w, &p), compute_word(image, &q)) {
                    assert!(same_arc(x.t, y.q, 1e-12) && same_arc(x.q, y.t, 1e-12), "{w} {p:?}");
                    assert!((x.total - y.total).abs() <= 1e-9 || (x.total - y.total).abs() > 6.0);
                }
            }
        }
    }
}

#[test]
fn straight_segment_squares_to_its_radicand() {
    let mut r = rng(4);
    for _ in 0..20_000 {
        let (d, a, b) = (r.gen_range(0.0..6.0), r.gen_range(0.0..TAU), r.gen_range(0.0..TAU));
        let p = NormalizedProblem::new(d, a, b).unwrap();
        let (sa, ca, sb, cb) = (a.sin(), a.cos(), b.sin(), b.cos());
        let cab = (a - b).cos();
        let radicands = [
            (PathWord::Lsl, 2.0 + d * d - 2.0 * cab + 2.0 * d * (sa - sb)),
            (PathWord::Rsr, 2.0 + d * d - 2.0 * cab + 2.0 * d * (sb - sa)),
            (PathWord::Lsr, -2.0 + d * d + 2.0 * cab + 2.0 * d * (sa + sb)),
            (PathWord::Rsl, -2.0 + d * d + 2.0 * cab - 2.0 * d * (sa + sb)),
        ];
        let _ = (ca, cb);
        for (w, rad) in radicands {
            if let Some(path) = compute_word(w, &p) {
                assert!((path.p * path.p - rad).abs() <= 1e-12 * rad.abs().max(1.0) * 10.0);
            } else {
                assert!(rad < 1e-12);
            }
        }
    }
}

#[test]
fn tangent_ir_fl_makes_rsl_an_rlr() {
    // With C_ir and C_fl touching, RSL has a zero straight and is also an
    // RLR whose middle circle is C_fl. The closed forms may differ by whole
    // loops, so compare modulo 2π.
    let mut r = rng(5);
    let mut checked = 0;
    while checked < 2_000 {
        let (a, b) = (r.gen_range(0.0..TAU), r.gen_range(0.0..TAU));
        let s = a.sin() + b.sin();
        let disc = s * s - (2.0 * (a - b).cos() - 2.0);
        let d = s + disc.sqrt();
        if !(disc >= 0.0 && d > 0.0) {
            continue;
        }
        let p = NormalizedProblem::new(d, a, b).unwrap();
        let Some(rsl) = compute_word(PathWord::Rsl, &NormalizedProblem::new(d + 1e-12, a, b).unwrap())
        else {
            continue;
        };
        let ir = p.circle(CircleTag::Ir);
        let fl = p.circle(CircleTag::Fl);
        assert!(circles_intersect(&ir, &fl) || (ir.center[0] - fl.center[0]).hypot(ir.center[1] - fl.center[1]) < 2.0 + 1e-9);
        let matches = [MiddleArc::Major, MiddleArc::Minor].into_iter().any(|arc| {
            compute_ccc(PathWord::Rlr, &p, arc).is_some_and(|rlr| {
                let k = ((rlr.total - rsl.total) / TAU).round();
                (rlr.total - rsl.total - k * TAU).abs() <= 1e-6
            })
        });
        assert!(matches, "{p:?}");
        checked += 1;
    }
}

#[test]
fn equal_headings_make_mirrored_words_tie() {
    let mut r = rng(6);
    for _ in 0..10_000 {
        let a = r.gen_range(0.0..PI);
        let d = r.gen_range(0.0..threshold_distance(a, a).max(1e-3));
        let p = NormalizedProblem::new(d, a, a).unwrap();
        assert!(matches!(class_of(&p), c if c == ClassId::A11 || c == ClassId::A22));
        let len = |w| compute_word(w, &p).map(|x| x.total);
        let (lsl, rsr) = (len(PathWord::Lsl).unwrap(), len(PathWord::Rsr).unwrap());
        assert!(((lsl - rsr) / TAU).round() * TAU - (lsl - rsr) <= 1e-12);
        if let (Some(x), Some(y)) = (len(PathWord::Lrl), len(PathWord::Rlr)) {
            assert!((x - y).abs() <= 1e-12, "{p:?}");
        }
    }
}

#[test]
fn threshold_is_the_cross_pair_tangency_for_same_sign_sines() {
    let mut r = rng(7);
    let mut checked = 0;
    while checked < 20_000 {
        let (a, b) = (r.gen_range(0.0..TAU), r.gen_range(0.0..TAU));
        let dt = threshold_distance(a, b);
        if a.sin() * b.sin() < 0.0 || dt <= 1e-6 {
            continue;
        }
        let cross = |d: f64| {
            let p = NormalizedProblem::new(d, a, b).unwrap();
            let c = |t| p.circle(t);
            (
                circles_intersect(&c(CircleTag::Il), &c(CircleTag::Fr)),
                circles_intersect(&c(CircleTag::Ir), &c(CircleTag::Fl)),
            )
        };
        let (x, y) = cross(0.999 * dt);
        assert!(x || y, "a={a} b={b}");
        assert_eq!(cross(1.001 * dt), (false, false), "a={a} b={b}");
        checked += 1;
    }
}

#[test]
fn eval_budget() {
    let mut r = rng(8);
    let n = 100_000;
    let (mut sum, mut max, mut e6_min) = (0u64, 0u32, u32::MAX);
    for _ in 0..n {
        let p = random_short(&mut r);
        let res = solve_short(&p);
        assert!(res.evals < 18 && res.segment_evals < 18);
        sum += res.segment_evals as u64;
        max = max.max(res.segment_evals);
        if group_of(class_of(&p)) == GroupId::E6 {
            e6_min = e6_min.min(res.segment_evals);
        }
    }
    let mean = sum as f64 / n as f64;
    assert!((2.5..=4.0).contains(&mean), "mean {mean}");
    assert!(max <= 7, "max {max}");
    assert!(e6_min <= 3);
}

#[test]
fn equivalent_problems_get_related_words() {
    let mut r = rng(9);
    for _ in 0..10_000 {
        let p = random_short(&mut r);
        let base = solve_short(&p);
        for tr in WordTransform::ALL {
            let q = tr.apply_problem(&p);
            let image = solve_short(&q);
            assert!((image.path.total - base.path.total).abs() <= 1e-12, "{p:?} {tr:?}");
            assert_eq!(image.path.word, tr.apply_word(base.path.word), "{p:?} {tr:?}");
        }
    }
}

#[test]
fn canonical_images_stay_short() {
    let mut r = rng(10);
    for _ in 0..10_000 {
        let p = random_short(&mut r);
        let (c, q, tr) = canonicalize(class_of(&p), &p);
        assert!(c.is_canonical());
        assert!(q.d() < threshold_distance(q.alpha(), q.beta()) + 1e-12);
        assert!((optimal_length(&q) - optimal_length(&p)).abs() <= 1e-12, "{tr:?}");
    }
}
