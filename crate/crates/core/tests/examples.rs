//! Worked examples checked against the brute-force and sampling oracles.

mod common;

use kfrechet::oracles::{dense_stabbing, exhaustive_min_selection, lipschitz_bound, pixel_freespace, sampled_hausdorff};
use kfrechet::selection::{decide_bruteforce, decide_fpt, decide_hausdorff, decide_strong_frechet, decide_weak_frechet};
use kfrechet::{Axis, FreeSpaceDiagram, PolyCurve};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TAU: f64 = 1e-9;

fn curve(c: &[(f64, f64)]) -> PolyCurve {
    PolyCurve::from_coords(c).unwrap()
}

/// Compares the exact diagram with the pixel oracle at resolution 512:
/// component counts must match and every exact projection must agree with
/// a pixel projection to within two pixels.
fn assert_matches_pixels(p: &PolyCurve, q: &PolyCurve, eps: f64) {
    let res = 512;
    let d = FreeSpaceDiagram::new(p, q, eps);
    let px = pixel_freespace(p, q, eps, res).unwrap();
    assert_eq!(d.component_count(), px.component_count(), "eps = {eps}");
    let slack = |axis: Axis| {
        2.0 * match axis {
            Axis::P => d.n(),
            Axis::Q => d.m(),
        } as f64
            / res as f64
    };
    for comp in d.components() {
        let matched = (0..px.component_count()).any(|id| {
            [Axis::P, Axis::Q].into_iter().all(|axis| {
                let (a, b) = comp.bounds(axis);
                let (c, e) = px.projection(id, axis).bounds().unwrap();
                (a - c).abs() <= slack(axis) && (b - e).abs() <= slack(axis)
            })
        });
        assert!(matched, "component {} has no pixel counterpart", comp.id);
    }
    assert_eq!(decide_weak_frechet(&d), px.weak_frechet());
    assert_eq!(decide_hausdorff(&d), px.hausdorff());
}

#[test]
fn zigzag_against_its_reversal() {
    let p = curve(&[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0), (3.0, 1.0)]);
    let q = p.reversed();
    for eps in [0.3, 0.45, 0.6, 0.8] {
        assert_matches_pixels(&p, &q, eps);
    }
}

#[test]
fn six_components_where_two_suffice() {
    let p = curve(&[(1.0, 3.0), (1.0, 1.0), (5.0, 5.0), (2.0, 5.0), (5.0, 0.0), (0.0, 5.0)]);
    let q = curve(&[(4.0, 5.0), (0.0, 2.0), (2.0, 1.0), (1.0, 3.0), (1.0, 0.0), (1.0, 5.0), (4.0, 1.0)]);
    let d = FreeSpaceDiagram::new(&p, &q, 1.5);
    assert_eq!(d.component_count(), 6);
    assert_matches_pixels(&p, &q, 1.5);
    assert!(!decide_weak_frechet(&d));
    assert!(decide_fpt(&d, 1).is_none());
    let two = decide_fpt(&d, 2).expect("two components cover both axes");
    assert_eq!(Some(two), exhaustive_min_selection(&d).unwrap());
}

#[test]
fn reversed_segment_is_weak_but_not_strong() {
    let p = curve(&[(0.0, 0.0), (1.0, 0.0)]);
    let q = curve(&[(1.0, 0.1), (0.0, 0.1)]);
    let d = FreeSpaceDiagram::new(&p, &q, 0.2);
    assert!(decide_weak_frechet(&d));
    assert!(!decide_strong_frechet(&d));
    let px = pixel_freespace(&p, &q, 0.2, 512).unwrap();
    assert!(px.weak_frechet());
    assert_eq!(px.component_count(), 1);
}

#[test]
fn diagonal_strong_frechet_threshold() {
    let p = curve(&[(0.0, 0.0), (1.0, 0.0)]);
    let q = curve(&[(0.0, 1.0), (1.0, 1.0)]);
    assert!(decide_strong_frechet(&FreeSpaceDiagram::new(&p, &q, 1.0)));
    assert!(!decide_strong_frechet(&FreeSpaceDiagram::new(&p, &q, 0.99)));
}

#[test]
fn z_matches_dense_stabbing() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut equal = 0;
    for _ in 0..200 {
        let p = common::random_curve(&mut rng, 5, 10.0);
        let q = common::random_curve(&mut rng, 5, 10.0);
        let d = FreeSpaceDiagram::new(&p, &q, rng.gen_range(0.5..4.0));
        let dense = dense_stabbing(&d, 1000);
        assert!(dense <= d.z());
        // The probes find z whenever some z-fold overlap is wider than two
        // probe spacings.
        let wide = [Axis::P, Axis::Q].into_iter().any(|axis| {
            let spacing = match axis {
                Axis::P => d.n(),
                Axis::Q => d.m(),
            } as f64
                / 1000.0;
            let iv = d.axis_intervals(axis);
            iv.iter().flat_map(|&(_, lo, hi)| [lo, hi]).any(|x| {
                let hits: Vec<_> = iv.iter().filter(|&&(_, lo, hi)| lo <= x && x <= hi).collect();
                let lo = hits.iter().map(|h| h.1).fold(f64::NEG_INFINITY, f64::max);
                let hi = hits.iter().map(|h| h.2).fold(f64::INFINITY, f64::min);
                hits.len() == d.z() && hi - lo > 2.0 * spacing
            })
        });
        if wide {
            assert_eq!(dense, d.z());
            equal += 1;
        }
    }
    assert!(equal >= 100, "only {equal} instances had a wide overlap");
}

#[test]
fn hausdorff_decision_brackets_sampled_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let (p, q) = common::random_pair(&mut rng);
        let h = sampled_hausdorff(&p, &q, 10_000).unwrap();
        let above = h.value + h.error_bound + 10.0 * TAU;
        let below = h.value - 10.0 * TAU;
        assert!(decide_hausdorff(&FreeSpaceDiagram::new(&p, &q, above)));
        assert!(!decide_hausdorff(&FreeSpaceDiagram::new(&p, &q, below)));
        assert!(h.error_bound <= lipschitz_bound(&p, &q) * 6.0 / 20_000.0 + 1e-12);
    }
}

#[test]
fn selection_examples_agree_with_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut multi = 0;
    for _ in 0..300 {
        let (p, q) = common::random_pair(&mut rng);
        let d = FreeSpaceDiagram::new(&p, &q, rng.gen_range(1.0..4.0));
        if d.component_count() > 12 {
            continue;
        }
        let opt = exhaustive_min_selection(&d).unwrap();
        for k in 1..=4 {
            let expect = opt.as_ref().is_some_and(|o| o.len() <= k);
            assert_eq!(decide_bruteforce(&d, k).is_some(), expect);
            assert_eq!(decide_fpt(&d, k).is_some(), expect);
        }
        if opt.as_ref().is_some_and(|o| o.len() >= 2) {
            multi += 1;
        }
    }
    assert!(multi > 0);
}
