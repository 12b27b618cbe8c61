#![allow(dead_code)]

use kfrechet::geometry::Point2;
use kfrechet::PolyCurve;
use proptest::prelude::*;
use rand::Rng;

/// A curve with `segments` segments and vertices uniform in `[0, size]²`.
pub fn random_curve<R: Rng>(rng: &mut R, segments: usize, size: f64) -> PolyCurve {
    loop {
        let vertices = (0..=segments)
            .map(|_| Point2::new(rng.gen_range(0.0..size), rng.gen_range(0.0..size)))
            .collect();
        if let Ok(c) = PolyCurve::new(vertices) {
            return c;
        }
    }
}

/// Two curves of 2 to 6 segments each.
pub fn random_pair<R: Rng>(rng: &mut R) -> (PolyCurve, PolyCurve) {
    let n = rng.gen_range(2..=6);
    let m = rng.gen_range(2..=6);
    (random_curve(rng, n, 10.0), random_curve(rng, m, 10.0))
}

pub fn arb_curve(max_segments: usize) -> impl Strategy<Value = PolyCurve> {
    proptest::collection::vec((0.0..10.0f64, 0.0..10.0f64), 2..=max_segments + 1)
        .prop_filter_map("zero-length segment", |coords| PolyCurve::from_coords(&coords).ok())
}

pub fn arb_pair(max_segments: usize) -> impl Strategy<Value = (PolyCurve, PolyCurve)> {
    (arb_curve(max_segments), arb_curve(max_segments))
}
