//! Bounded search trees over the two axis projections.
//!
//! The tree for one axis sweeps its parameter space from 0 upwards. Children
//! of the root are the components touching the lower boundary. When the
//! sweep leaves a component (reaches the end of its interval), every tree
//! node of that component gets one child per component that is active at
//! that point and reaches further. A node whose component touches the upper
//! boundary is a feasible leaf; no node is expanded beyond depth `k`.
//!
//! Each root-to-leaf path is a selection covering that axis with at most `k`
//! components. Any covering selection of both axes contains one such path
//! per axis, so trying all pairs of feasible paths decides the problem in
//! `O(k · z^{2k})` after the diagram is built, `z` being the branching bound.

use std::collections::BTreeSet;

use super::{CoverInstance, Selection};
use crate::freespace::Axis;

/// One node of a search tree, as visited by the depth-first enumeration.
///
/// The trees are never stored; this is what [`feasible_paths`] reports to
/// callers that want to inspect the expansion.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchTreeNode {
    pub component_id: usize,
    /// The root (the lower boundary itself) has depth 0, so components start at 1.
    pub depth: usize,
    /// Right end of the prefix covered by the path ending here.
    pub frontier: f64,
}

/// Work counters for one run of [`decide_fpt_with_stats`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FptStats {
    /// Tree nodes created in `T_P` and `T_Q` together.
    pub nodes: usize,
    /// Distinct feasible paths over both trees, `distinct_p + distinct_q`.
    pub paths: usize,
    /// Distinct feasible selections per axis.
    pub distinct_p: usize,
    pub distinct_q: usize,
    /// Pairs `(S_P, S_Q)` examined.
    pub pairs: usize,
}

/// Feasible selections of the search tree for `axis`, sorted and de-duplicated.
///
/// `on_node` is called for every node the tree would contain.
pub fn feasible_paths<D: CoverInstance + ?Sized>(
    d: &D,
    axis: Axis,
    k: usize,
    mut on_node: impl FnMut(&SearchTreeNode),
) -> Vec<Selection> {
    let tol = d.tol();
    let extent = d.extent(axis);
    let intervals = d.intervals(axis);
    let mut found = BTreeSet::new();
    let mut path = Vec::with_capacity(k);

    struct Walk<'a, F> {
        intervals: &'a [(usize, f64, f64)],
        extent: f64,
        tol: f64,
        k: usize,
        on_node: F,
    }

    impl<F: FnMut(&SearchTreeNode)> Walk<'_, F> {
        fn expand(&mut self, path: &mut Vec<usize>, frontier: f64, found: &mut BTreeSet<Selection>) {
            if frontier >= self.extent - self.tol {
                found.insert(Selection::new(path.clone()));
                return;
            }
            if path.len() == self.k {
                return;
            }
            // Active when the sweep is at `frontier` and reaching further.
            for &(id, lo, hi) in self.intervals {
                let is_child = if path.is_empty() {
                    lo <= self.tol
                } else {
                    lo <= frontier + self.tol && hi > frontier
                };
                if !is_child {
                    continue;
                }
                path.push(id);
                (self.on_node)(&SearchTreeNode {
                    component_id: id,
                    depth: path.len(),
                    frontier: hi,
                });
                self.expand(path, hi, found);
                path.pop();
            }
        }
    }

    let mut walk = Walk {
        intervals: &intervals,
        extent,
        tol,
        k,
        on_node: &mut on_node,
    };
    if k > 0 {
        // The root sits at the lower boundary and covers nothing yet; a
        // frontier below 0 keeps `extent - tol` out of reach for it.
        walk.expand(&mut path, f64::NEG_INFINITY, &mut found);
    }
    found.into_iter().collect()
}

/// Lexicographically smallest covering selection of size at most `k`
/// assembled from one feasible path per axis, or `None`.
pub fn decide_fpt<D: CoverInstance + ?Sized>(d: &D, k: usize) -> Option<Selection> {
    decide_fpt_with_stats(d, k).0
}

pub fn decide_fpt_with_stats<D: CoverInstance + ?Sized>(
    d: &D,
    k: usize,
) -> (Option<Selection>, FptStats) {
    let mut stats = FptStats::default();
    let mut count_node = |_: &SearchTreeNode| stats.nodes += 1;
    let list_p = feasible_paths(d, Axis::P, k, &mut count_node);
    let list_q = feasible_paths(d, Axis::Q, k, &mut count_node);
    stats.distinct_p = list_p.len();
    stats.distinct_q = list_q.len();
    stats.paths = stats.distinct_p + stats.distinct_q;

    let mut best: Option<Selection> = None;
    for sp in &list_p {
        for sq in &list_q {
            stats.pairs += 1;
            if sp.union_len(sq) > k {
                continue;
            }
            let union = sp.union(sq);
            if best.as_ref().is_none_or(|b| union < *b) {
                best = Some(union);
            }
        }
    }
    (best, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::selection::{covers_both, ComponentBoxes};

    fn staircase() -> ComponentBoxes {
        ComponentBoxes::new(
            2.0,
            2.0,
            vec![
                [(0.0, 1.0), (0.0, 1.0)],
                [(1.0, 2.0), (1.0, 2.0)],
                [(0.0, 1.1), (0.9, 2.0)],
                [(0.9, 2.0), (0.0, 1.1)],
            ],
        )
    }

    #[test]
    fn single_full_component() {
        let b = ComponentBoxes::new(1.0, 1.0, vec![[(0.0, 1.0), (0.0, 1.0)]]);
        assert_eq!(decide_fpt(&b, 1), Some(Selection::new(vec![0])));
        assert_eq!(decide_fpt(&b, 0), None);
    }

    #[test]
    fn paths_per_axis() {
        let b = staircase();
        let lp = feasible_paths(&b, Axis::P, 2, |_| {});
        let ids: Vec<Vec<usize>> = lp.iter().map(|s| s.ids().to_vec()).collect();
        // Roots on P: 0 and 2. 0 ends at 1 where 1 and 3 reach further; 2
        // ends at 1.1 where 1 and 3 are still active.
        assert_eq!(ids, vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert!(feasible_paths(&b, Axis::P, 1, |_| {}).is_empty());
    }

    #[test]
    fn combines_axes() {
        let b = staircase();
        assert_eq!(decide_fpt(&b, 1), None);
        let s = decide_fpt(&b, 2).unwrap();
        assert_eq!(s, Selection::new(vec![0, 1]));
        assert_eq!(covers_both(&b, &s), Ok(true));
    }

    #[test]
    fn contained_components_get_no_node() {
        // Component 1 lies inside the prefix already covered by 0.
        let b = ComponentBoxes::new(
            1.0,
            1.0,
            vec![[(0.0, 0.6), (0.0, 1.0)], [(0.1, 0.5), (0.2, 0.3)], [(0.5, 1.0), (0.0, 1.0)]],
        );
        let mut visited = Vec::new();
        let lp = feasible_paths(&b, Axis::P, 3, |n| visited.push(n.component_id));
        assert!(!visited.contains(&1));
        assert_eq!(lp, vec![Selection::new(vec![0, 2])]);
    }

    #[test]
    fn node_depths_bounded_by_k() {
        let b = staircase();
        let mut max_depth = 0;
        feasible_paths(&b, Axis::Q, 2, |n| max_depth = max_depth.max(n.depth));
        assert_eq!(max_depth, 2);
    }
}
