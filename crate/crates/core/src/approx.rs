//! Greedy 2-approximation of the smallest covering selection.
//!
//! Each axis is covered on its own by the classic greedy interval cover,
//! which is optimal per axis. The union of the two per-axis covers covers
//! both axes and has at most `|S_P| + |S_Q| ≤ 2·OPT` components, since any
//! covering selection covers each axis separately.

use crate::freespace::Axis;
use crate::interval::Interval;
use crate::selection::{CoverInstance, Selection};

/// A component's projection onto one axis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProjectedInterval {
    pub component_id: usize,
    pub axis: Axis,
    pub interval: Interval,
}

/// Projections of every component onto `axis`.
pub fn projected_intervals<D: CoverInstance + ?Sized>(d: &D, axis: Axis) -> Vec<ProjectedInterval> {
    d.intervals(axis)
        .into_iter()
        .map(|(component_id, lo, hi)| ProjectedInterval {
            component_id,
            axis,
            interval: Interval::new(lo, hi),
        })
        .collect()
}

/// Minimum-cardinality cover of `target` by `intervals`, or `None` if there is a gap.
///
/// From the current frontier `r` (initially `target.lo`) pick, among the
/// intervals starting at or before `r + tol`, the one reaching furthest
/// (smaller component id on ties). Stops once `r ≥ target.hi − tol`.
pub fn greedy_axis_cover(
    intervals: &[ProjectedInterval],
    target: Interval,
    tol: f64,
) -> Option<Selection> {
    let (lo, hi) = target.bounds()?;
    let mut sorted: Vec<(f64, f64, usize)> = intervals
        .iter()
        .filter_map(|p| p.interval.bounds().map(|(a, b)| (a, b, p.component_id)))
        .collect();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.2.cmp(&b.2)));

    let mut chosen = Vec::new();
    let mut frontier = lo;
    let mut next = 0;
    // Best reach among intervals scanned so far: (hi, id).
    let mut best: Option<(f64, usize)> = None;
    while chosen.is_empty() || frontier < hi - tol {
        while next < sorted.len() && sorted[next].0 <= frontier + tol {
            let (_, b, id) = sorted[next];
            if best.is_none_or(|(bh, bid)| b > bh || (b == bh && id < bid)) {
                best = Some((b, id));
            }
            next += 1;
        }
        match best {
            // The first pick only needs to touch the start; later picks must advance.
            Some((b, id)) if b > frontier || (chosen.is_empty() && b + tol >= frontier) => {
                chosen.push(id);
                frontier = frontier.max(b);
            }
            _ => return None,
        }
    }
    Some(Selection::new(chosen))
}

/// Result of [`approximate_k`].
#[derive(Clone, Debug, PartialEq)]
pub struct Approximation {
    /// `S_P ∪ S_Q`, covering both axes.
    pub selection: Selection,
    /// Greedy cover of the P axis.
    pub cover_p: Selection,
    /// Greedy cover of the Q axis.
    pub cover_q: Selection,
}

impl Approximation {
    pub fn len(&self) -> usize {
        self.selection.len()
    }

    pub fn is_empty(&self) -> bool {
        self.selection.is_empty()
    }

    /// `max(|S_P|, |S_Q|)`, a lower bound on the optimum.
    pub fn lower_bound(&self) -> usize {
        self.cover_p.len().max(self.cover_q.len())
    }
}

/// Covering selection with at most twice the optimal number of components,
/// or `None` when the components cannot cover both axes at all.
pub fn approximate_k<D: CoverInstance + ?Sized>(d: &D) -> Option<Approximation> {
    let cover = |axis| greedy_axis_cover(&projected_intervals(d, axis), d.parameter_space(axis), d.tol());
    let cover_p = cover(Axis::P)?;
    let cover_q = cover(Axis::Q)?;
    Some(Approximation {
        selection: cover_p.union(&cover_q),
        cover_p,
        cover_q,
    })
}
