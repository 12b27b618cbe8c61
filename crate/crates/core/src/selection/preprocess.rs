//! Necessary and redundant components.
//!
//! A component is necessary when it is the only one covering some stretch of
//! a parameter space, so every covering selection contains it. It is
//! redundant when its bounding box lies inside another component's bounding
//! box, so swapping it for that component never hurts.

use super::{CoverInstance, Selection};
use crate::freespace::Axis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preprocessed {
    pub necessary: Selection,
    pub redundant: Selection,
    /// Components that are neither necessary nor redundant, ascending.
    pub candidates: Vec<usize>,
}

impl Preprocessed {
    /// All components that survive pruning (necessary ones included).
    pub fn kept(&self) -> Selection {
        self.necessary
            .union(&Selection::new(self.candidates.clone()))
    }
}

pub fn preprocess<D: CoverInstance + ?Sized>(d: &D) -> Preprocessed {
    let count = d.component_count();
    let mut is_necessary = vec![false; count];
    for axis in [Axis::P, Axis::Q] {
        for id in sole_coverers(d, axis) {
            is_necessary[id] = true;
        }
    }

    let boxes: Vec<[(f64, f64); 2]> = (0..count)
        .map(|id| [d.projection(id, Axis::P), d.projection(id, Axis::Q)])
        .collect();
    let inside = |a: &[(f64, f64); 2], b: &[(f64, f64); 2]| {
        b[0].0 <= a[0].0 && a[0].1 <= b[0].1 && b[1].0 <= a[1].0 && a[1].1 <= b[1].1
    };
    // Exact containment is a preorder; breaking ties between equal boxes by
    // id makes it a strict order, so every pruned component keeps an
    // unpruned dominator.
    let is_redundant: Vec<bool> = (0..count)
        .map(|a| {
            !is_necessary[a]
                && (0..count).any(|b| {
                    b != a && inside(&boxes[a], &boxes[b]) && (b < a || !inside(&boxes[b], &boxes[a]))
                })
        })
        .collect();

    Preprocessed {
        necessary: (0..count).filter(|&id| is_necessary[id]).collect(),
        redundant: (0..count).filter(|&id| is_redundant[id]).collect(),
        candidates: (0..count)
            .filter(|&id| !is_necessary[id] && !is_redundant[id])
            .collect(),
    }
}

/// Components that alone cover some elementary piece of `axis` wider than the tolerance.
///
/// Between consecutive projection endpoints the set of covering components is
/// constant, so probing each piece at its midpoint is a complete sweep.
fn sole_coverers<D: CoverInstance + ?Sized>(d: &D, axis: Axis) -> Vec<usize> {
    let intervals = d.intervals(axis);
    let extent = d.extent(axis);
    let mut stops: Vec<f64> = intervals
        .iter()
        .flat_map(|&(_, lo, hi)| [lo, hi])
        .chain([0.0, extent])
        .map(|x| x.clamp(0.0, extent))
        .collect();
    stops.sort_by(f64::total_cmp);
    stops.dedup();

    let mut out = Vec::new();
    for w in stops.windows(2) {
        if w[1] - w[0] <= d.tol() {
            continue;
        }
        let mid = 0.5 * (w[0] + w[1]);
        let mut covering = intervals.iter().filter(|&&(_, lo, hi)| lo <= mid && mid <= hi);
        if let (Some(&(id, _, _)), None) = (covering.next(), covering.next()) {
            out.push(id);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}
