//! Optimizing k for a fixed ε, and ε for a fixed k.

use thiserror::Error;

use crate::approx::approximate_k;
use crate::config::DEFAULT_TOL;
use crate::freespace::FreeSpaceDiagram;
use crate::geometry::{max_vertex_distance, Point2, PolyCurve, Segment};
use crate::selection::{decide_fpt, decide_hausdorff, decide_weak_frechet, weak_frechet_witness, Selection};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Method {
    /// Smallest k via the exact search-tree decision.
    #[default]
    Exact,
    /// Size of the greedy 2-approximation.
    Approx,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMinimum {
    pub k: usize,
    pub selection: Selection,
}

/// Smallest number of components covering both axes, or `None` when no
/// selection covers (the Hausdorff distance exceeds ε).
///
/// The exact method scans `k` upwards from the greedy lower bound
/// `max(|S_P|, |S_Q|)`; the greedy union is a valid selection of size
/// `|S_P ∪ S_Q|`, so the scan stops there at the latest.
pub fn minimize_k(d: &FreeSpaceDiagram, method: Method) -> Option<KMinimum> {
    let approx = approximate_k(d)?;
    if method == Method::Approx {
        return Some(KMinimum {
            k: approx.len(),
            selection: approx.selection,
        });
    }
    for k in approx.lower_bound()..approx.len() {
        if let Some(selection) = decide_fpt(d, k) {
            return Some(KMinimum { k, selection });
        }
    }
    Some(KMinimum {
        k: approx.len(),
        selection: approx.selection,
    })
}

/// Decides whether `k` components suffice, with cheap exits before the
/// search-tree algorithm: Hausdorff failing, weak Fréchet succeeding, and the
/// greedy bounds. All of them give the same answer as [`decide_fpt`].
pub fn decide_k_frechet(d: &FreeSpaceDiagram, k: usize) -> Option<Selection> {
    if k == 0 || !decide_hausdorff(d) {
        return None;
    }
    if let Some(id) = weak_frechet_witness(d) {
        return Some(Selection::new(vec![id]));
    }
    let approx = approximate_k(d)?;
    if approx.len() <= k {
        return Some(approx.selection);
    }
    if approx.lower_bound() > k {
        return None;
    }
    decide_fpt(d, k)
}

/// k-Fréchet distance within `tol`, by bisection on ε.
///
/// The decision is monotone in ε and true at the largest vertex-vertex
/// distance, where every cell is entirely free.
pub fn minimize_epsilon(p: &PolyCurve, q: &PolyCurve, k: usize, tol: f64) -> Result<f64, SearchError> {
    minimize_epsilon_with(p, q, k, tol, DEFAULT_TOL)
}

pub fn minimize_epsilon_with(
    p: &PolyCurve,
    q: &PolyCurve,
    k: usize,
    tol: f64,
    cmp_tol: f64,
) -> Result<f64, SearchError> {
    check_args(k, tol)?;
    let feasible = |eps: f64| decide_k_frechet(&FreeSpaceDiagram::with_tolerance(p, q, eps, cmp_tol), k).is_some();
    Ok(bisect(0.0, max_vertex_distance(p, q), tol, feasible))
}

/// Weak Fréchet distance within `tol`.
pub fn weak_frechet_distance(p: &PolyCurve, q: &PolyCurve, tol: f64) -> Result<f64, SearchError> {
    check_args(1, tol)?;
    Ok(bisect(0.0, max_vertex_distance(p, q), tol, |eps| {
        decide_weak_frechet(&FreeSpaceDiagram::new(p, q, eps))
    }))
}

/// Hausdorff distance within `tol`.
pub fn hausdorff_distance(p: &PolyCurve, q: &PolyCurve, tol: f64) -> Result<f64, SearchError> {
    check_args(1, tol)?;
    Ok(bisect(0.0, max_vertex_distance(p, q), tol, |eps| {
        decide_hausdorff(&FreeSpaceDiagram::new(p, q, eps))
    }))
}

fn check_args(k: usize, tol: f64) -> Result<(), SearchError> {
    if k == 0 {
        return Err(SearchError::ZeroK);
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(SearchError::BadTolerance(tol));
    }
    Ok(())
}

/// Smallest feasible point of a monotone predicate on `[lo, hi]`, to within
/// `tol`. `hi` must be feasible.
fn bisect(mut lo: f64, mut hi: f64, tol: f64, mut feasible: impl FnMut(f64) -> bool) -> f64 {
    if feasible(lo) {
        return lo;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if feasible(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Candidate critical distances: vertex-vertex, vertex-segment, and the
/// points on a segment equidistant from two vertices of the other curve.
///
/// These are where the classic Fréchet free space changes shape. Whether
/// they include every value at which a k-Fréchet decision flips is not
/// known, so the result of [`minimize_epsilon_candidates`] should be
/// treated as a heuristic.
pub fn critical_candidates(p: &PolyCurve, q: &PolyCurve) -> Vec<f64> {
    let mut out = Vec::new();
    let mut one_way = |a: &PolyCurve, b: &PolyCurve| {
        for seg in b.segments() {
            for &v in a.vertices() {
                out.push(seg.distance_to_point(v));
                out.push(seg.start.dist(v));
            }
            for (i, &v) in a.vertices().iter().enumerate() {
                for &w in &a.vertices()[i + 1..] {
                    if let Some(x) = bisector_hit(&seg, v, w) {
                        out.push(x.dist(v));
                    }
                }
            }
        }
        if let Some(&last) = b.vertices().last() {
            out.extend(a.vertices().iter().map(|v| v.dist(last)));
        }
    };
    one_way(p, q);
    one_way(q, p);
    out.push(0.0);
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

/// Point of `seg` equidistant from `v` and `w`, if any.
fn bisector_hit(seg: &Segment, v: Point2, w: Point2) -> Option<Point2> {
    // |s(u) - v|² = |s(u) - w|²  is linear in u.
    let d = seg.direction();
    let a = 2.0 * d.dot(w - v);
    let b = w.norm_sq() - v.norm_sq() - 2.0 * seg.start.dot(w - v);
    if a == 0.0 {
        return None;
    }
    let u = b / a;
    (0.0..=1.0).contains(&u).then(|| seg.point_at(u))
}

/// Smallest candidate distance at which `k` components suffice.
pub fn minimize_epsilon_candidates(p: &PolyCurve, q: &PolyCurve, k: usize) -> Result<f64, SearchError> {
    check_args(k, 1.0)?;
    let candidates = critical_candidates(p, q);
    let feasible = |eps: f64| decide_k_frechet(&FreeSpaceDiagram::new(p, q, eps), k).is_some();
    // partition_point needs a predicate that is true on a prefix.
    let first = candidates.partition_point(|&eps| !feasible(eps));
    Ok(candidates
        .get(first)
        .copied()
        .unwrap_or_else(|| max_vertex_distance(p, q)))
}
