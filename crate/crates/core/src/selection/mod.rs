//! Covering selections of components and the algorithms that find them.
//!
//! A selection covers the diagram when the union of its components'
//! projections is the whole of `[0, n]` and the whole of `[0, m]`. The
//! k-Fréchet decision asks for a covering selection of at most `k` components.

mod brute;
mod classic;
mod fpt;
mod preprocess;

pub use brute::{decide_bruteforce, decide_bruteforce_with, Preprocessing};
pub use classic::{
    decide_hausdorff, decide_strong_frechet, decide_weak_frechet, weak_frechet_witness,
};
pub use fpt::{decide_fpt, decide_fpt_with_stats, feasible_paths, FptStats, SearchTreeNode};
pub use preprocess::{preprocess, Preprocessed};

use std::fmt;

use thiserror::Error;

use crate::freespace::{Axis, FreeSpaceDiagram};
use crate::interval::{interval_union_covers, Interval};

/// Anything whose components project to one interval per axis.
///
/// The selection algorithms only look at these projections, so they run on
/// a [`FreeSpaceDiagram`] as well as on a synthetic [`ComponentBoxes`].
pub trait CoverInstance {
    /// Length of the parameter space `[0, extent]` of `axis`.
    fn extent(&self, axis: Axis) -> f64;
    fn tol(&self) -> f64;
    fn component_count(&self) -> usize;
    /// `(lo, hi)` of component `id` projected onto `axis`.
    fn projection(&self, id: usize, axis: Axis) -> (f64, f64);

    fn parameter_space(&self, axis: Axis) -> Interval {
        Interval::new(0.0, self.extent(axis))
    }

    /// `(id, lo, hi)` for every component.
    fn intervals(&self, axis: Axis) -> Vec<(usize, f64, f64)> {
        (0..self.component_count())
            .map(|id| {
                let (lo, hi) = self.projection(id, axis);
                (id, lo, hi)
            })
            .collect()
    }
}

impl CoverInstance for FreeSpaceDiagram {
    fn extent(&self, axis: Axis) -> f64 {
        match axis {
            Axis::P => self.n() as f64,
            Axis::Q => self.m() as f64,
        }
    }

    fn tol(&self) -> f64 {
        FreeSpaceDiagram::tol(self)
    }

    fn component_count(&self) -> usize {
        FreeSpaceDiagram::component_count(self)
    }

    fn projection(&self, id: usize, axis: Axis) -> (f64, f64) {
        self.components()[id].bounds(axis)
    }
}

/// Components given directly by their bounding boxes `proj_p × proj_q`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentBoxes {
    pub n: f64,
    pub m: f64,
    pub tol: f64,
    /// `[(p_lo, p_hi), (q_lo, q_hi)]` per component, indexed by id.
    pub boxes: Vec<[(f64, f64); 2]>,
}

impl ComponentBoxes {
    pub fn new(n: f64, m: f64, boxes: Vec<[(f64, f64); 2]>) -> Self {
        Self {
            n,
            m,
            tol: crate::config::DEFAULT_TOL,
            boxes,
        }
    }

    /// Snapshot of a diagram's component projections.
    pub fn from_diagram(d: &FreeSpaceDiagram) -> Self {
        Self {
            n: d.n() as f64,
            m: d.m() as f64,
            tol: d.tol(),
            boxes: d
                .components()
                .iter()
                .map(|c| [c.bounds(Axis::P), c.bounds(Axis::Q)])
                .collect(),
        }
    }
}

impl CoverInstance for ComponentBoxes {
    fn extent(&self, axis: Axis) -> f64 {
        match axis {
            Axis::P => self.n,
            Axis::Q => self.m,
        }
    }

    fn tol(&self) -> f64 {
        self.tol
    }

    fn component_count(&self) -> usize {
        self.boxes.len()
    }

    fn projection(&self, id: usize, axis: Axis) -> (f64, f64) {
        match axis {
            Axis::P => self.boxes[id][0],
            Axis::Q => self.boxes[id][1],
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SelectionError {
    #[error("unknown component id {id} (diagram has {count} components)")]
    UnknownComponent { id: usize, count: usize },
}

/// A sorted, duplicate-free set of component ids.
///
/// Ordering is lexicographic on the sorted id tuple, with a proper prefix
/// ordered first; every algorithm breaks ties by taking the smallest.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Selection(Vec<usize>);

impl Selection {
    pub fn new(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        Selection(ids)
    }

    pub fn empty() -> Self {
        Selection(Vec::new())
    }

    pub fn ids(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.0.binary_search(&id).is_ok()
    }

    pub fn union(&self, other: &Selection) -> Selection {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    out.push(x.min(y));
                    if x <= y {
                        a.next();
                    }
                    if y <= x {
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Selection(out)
    }

    /// Size of the union without building it.
    pub fn union_len(&self, other: &Selection) -> usize {
        let (mut i, mut j, mut shared) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    shared += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        self.0.len() + other.0.len() - shared
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl FromIterator<usize> for Selection {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Selection::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, id) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}

/// Whether the components in `ids` cover the parameter space of `axis`.
pub(crate) fn covers_axis<D: CoverInstance + ?Sized>(d: &D, ids: &[usize], axis: Axis) -> bool {
    let parts: Vec<Interval> = ids
        .iter()
        .map(|&id| {
            let (lo, hi) = d.projection(id, axis);
            Interval::new(lo, hi)
        })
        .collect();
    interval_union_covers(&parts, d.parameter_space(axis), d.tol())
}

pub(crate) fn covers_ids<D: CoverInstance + ?Sized>(d: &D, ids: &[usize]) -> bool {
    covers_axis(d, ids, Axis::P) && covers_axis(d, ids, Axis::Q)
}

/// Whether `s` covers both parameter spaces, up to gaps of width `d.tol()`.
pub fn covers_both<D: CoverInstance + ?Sized>(
    d: &D,
    s: &Selection,
) -> Result<bool, SelectionError> {
    let count = d.component_count();
    if let Some(&id) = s.ids().iter().find(|&&id| id >= count) {
        return Err(SelectionError::UnknownComponent { id, count });
    }
    Ok(covers_ids(d, s.ids()))
}
