//! Free space inside a single cell.
//!
//! For segments `a(u)` of P and `b(v)` of Q the free set
//! `{(u, v) ∈ [0,1]² : |a(u) − b(v)| ≤ ε}` is an ellipse (or a strip, for
//! parallel segments) clipped to the unit square. It is convex, so every edge
//! and each axis projection of it is a single interval.

use crate::geometry::{Point2, Segment};
use crate::interval::Interval;

/// One of the four sides of a cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Edge {
    /// `u = 0`, parameterized by `v`.
    Left,
    /// `u = 1`, parameterized by `v`.
    Right,
    /// `v = 0`, parameterized by `u`.
    Bottom,
    /// `v = 1`, parameterized by `u`.
    Top,
}

/// A parameter axis of the diagram: P is horizontal, Q vertical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    P,
    Q,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::P => Axis::Q,
            Axis::Q => Axis::P,
        }
    }
}

/// Parameters `u ∈ [0,1]` with `|seg(u) − c| ≤ ε`.
///
/// Points at distance up to `ε + tol` count as free, which absorbs rounding
/// at tangencies.
pub fn point_segment_interval(seg: &Segment, c: Point2, eps: f64, tol: f64) -> Interval {
    let d = seg.direction();
    let len = d.norm();
    let w = seg.start - c;
    let foot = -d.dot(w) / (len * len);
    let h = d.cross(w).abs() / len;
    if h > eps + tol {
        return Interval::Empty;
    }
    let half = (eps * eps - h * h).max(0.0).sqrt() / len;
    let (lo, hi) = (foot - half, foot + half);
    if hi < 0.0 {
        return if seg.start.dist(c) <= eps + tol {
            Interval::point(0.0)
        } else {
            Interval::Empty
        };
    }
    if lo > 1.0 {
        return if seg.end.dist(c) <= eps + tol {
            Interval::point(1.0)
        } else {
            Interval::Empty
        };
    }
    Interval::new(lo.max(0.0), hi.min(1.0))
}

/// Free interval on one edge of the cell spanned by `seg_p × seg_q`.
pub fn cell_edge_interval(
    seg_p: &Segment,
    seg_q: &Segment,
    eps: f64,
    edge: Edge,
    tol: f64,
) -> Interval {
    match edge {
        Edge::Left => point_segment_interval(seg_q, seg_p.start, eps, tol),
        Edge::Right => point_segment_interval(seg_q, seg_p.end, eps, tol),
        Edge::Bottom => point_segment_interval(seg_p, seg_q.start, eps, tol),
        Edge::Top => point_segment_interval(seg_p, seg_q.end, eps, tol),
    }
}

/// `{u ∈ [0,1] : lo ≤ a + b·u ≤ hi}`.
fn affine_preimage_unit(a: f64, b: f64, lo: f64, hi: f64) -> Interval {
    if b == 0.0 {
        return if (lo..=hi).contains(&a) {
            Interval::unit()
        } else {
            Interval::Empty
        };
    }
    let x1 = (lo - a) / b;
    let x2 = (hi - a) / b;
    Interval::new(x1.min(x2).max(0.0), x1.max(x2).min(1.0))
}

/// `{u ∈ [0,1] : dist(seg(u), other) ≤ ε}`.
///
/// The distance from a point to `other` is below ε iff the point is close to
/// one of the endpoints of `other` or it lies in the ε-strip around `other`
/// with its foot point inside `other`. Each condition gives an interval and,
/// since the result is convex, the hull of the three is their union.
pub fn segment_projection(seg: &Segment, other: &Segment, eps: f64, tol: f64) -> Interval {
    let near_start = point_segment_interval(seg, other.start, eps, tol);
    let near_end = point_segment_interval(seg, other.end, eps, tol);

    let e = other.direction();
    let e_len = e.norm();
    let r = seg.start - other.start;
    let d = seg.direction();
    let foot = affine_preimage_unit(r.dot(e) / (e_len * e_len), d.dot(e) / (e_len * e_len), 0.0, 1.0);
    let band = eps + tol;
    let strip = affine_preimage_unit(e.cross(r) / e_len, e.cross(d) / e_len, -band, band);

    near_start.hull(&near_end).hull(&foot.intersect(&strip))
}

/// Projection of the cell's free set onto the P or Q axis, in local `[0,1]` coordinates.
pub fn cell_axis_projection(
    seg_p: &Segment,
    seg_q: &Segment,
    eps: f64,
    axis: Axis,
    tol: f64,
) -> Interval {
    match axis {
        Axis::P => segment_projection(seg_p, seg_q, eps, tol),
        Axis::Q => segment_projection(seg_q, seg_p, eps, tol),
    }
}
