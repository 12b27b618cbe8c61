//! Slow reference implementations for cross-checking the exact algorithms.
//!
//! None of these share code paths with the production algorithms beyond
//! curve evaluation and the interval coverage test: free space is sampled
//! pixel by pixel, covers are found by enumerating subsets, and distances by
//! sampling.

use std::collections::VecDeque;

use thiserror::Error;

use crate::freespace::Axis;
use crate::geometry::{Point2, PolyCurve};
use crate::interval::{interval_union_covers, Interval};
use crate::selection::{CoverInstance, Selection};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("resolution {0} is below the minimum of {MIN_RESOLUTION}")]
    ResolutionTooSmall(usize),
    #[error("{0} items is too many for exhaustive enumeration (limit {MAX_EXHAUSTIVE})")]
    TooMany(usize),
    #[error("{0} samples is below the minimum of {MIN_SAMPLES}")]
    TooFewSamples(usize),
}

pub const MIN_RESOLUTION: usize = 16;
pub const MAX_EXHAUSTIVE: usize = 20;
pub const MIN_SAMPLES: usize = 100;

/// Largest rate at which `|P(s) − Q(t)|` can change per unit of either parameter.
///
/// A unit of parameter spans one segment, so each curve moves at most its
/// longest segment length per unit.
pub fn lipschitz_bound(p: &PolyCurve, q: &PolyCurve) -> f64 {
    p.max_segment_length().max(q.max_segment_length())
}

/// Free space sampled at pixel centers.
#[derive(Clone, Debug)]
pub struct PixelDiagram {
    res: usize,
    n: usize,
    m: usize,
    /// Row-major, `free[row * res + col]`; columns run along P.
    free: Vec<bool>,
    labels: Vec<Option<usize>>,
    components: Vec<PixelComponent>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PixelComponent {
    pub pixels: usize,
    /// Inclusive pixel column and row ranges.
    pub cols: (usize, usize),
    pub rows: (usize, usize),
}

impl PixelDiagram {
    pub fn resolution(&self) -> usize {
        self.res
    }

    pub fn is_free(&self, col: usize, row: usize) -> bool {
        self.free[row * self.res + col]
    }

    pub fn label(&self, col: usize, row: usize) -> Option<usize> {
        self.labels[row * self.res + col]
    }

    pub fn components(&self) -> &[PixelComponent] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Parameter value at the center of pixel `index` along `axis`.
    pub fn center(&self, axis: Axis, index: usize) -> f64 {
        let len = match axis {
            Axis::P => self.n,
            Axis::Q => self.m,
        } as f64;
        (index as f64 + 0.5) * len / self.res as f64
    }

    /// Projection of a component, from its outermost pixel centers.
    pub fn projection(&self, id: usize, axis: Axis) -> Interval {
        let c = &self.components[id];
        let (a, b) = match axis {
            Axis::P => c.cols,
            Axis::Q => c.rows,
        };
        Interval::new(self.center(axis, a), self.center(axis, b))
    }

    /// Some pixel component meets every column and every row.
    pub fn weak_frechet(&self) -> bool {
        let last = self.res - 1;
        self.components
            .iter()
            .any(|c| c.cols == (0, last) && c.rows == (0, last))
    }

    /// Every column and every row contains a free pixel.
    pub fn hausdorff(&self) -> bool {
        let res = self.res;
        (0..res).all(|col| (0..res).any(|row| self.is_free(col, row)))
            && (0..res).all(|row| (0..res).any(|col| self.is_free(col, row)))
    }
}

/// Samples the free space of `p` and `q` at distance `eps` on a `res × res`
/// grid of pixel centers and labels its components in scan order.
///
/// Pixels sharing an edge or a corner are connected. Free space is closed,
/// so regions meeting in a single point form one component; with corner
/// adjacency a free set that is only a diagonal line still comes out as one
/// component.
pub fn pixel_freespace(
    p: &PolyCurve,
    q: &PolyCurve,
    eps: f64,
    res: usize,
) -> Result<PixelDiagram, OracleError> {
    if res < MIN_RESOLUTION {
        return Err(OracleError::ResolutionTooSmall(res));
    }
    let n = p.segment_count();
    let m = q.segment_count();
    let sample = |c: &PolyCurve, len: usize| -> Vec<Point2> {
        (0..res)
            .map(|i| {
                let s = (i as f64 + 0.5) * len as f64 / res as f64;
                c.point_at(s).expect("pixel centers lie inside the parameter space")
            })
            .collect()
    };
    let ps = sample(p, n);
    let qs = sample(q, m);
    let mut free = vec![false; res * res];
    for (row, &b) in qs.iter().enumerate() {
        for (col, &a) in ps.iter().enumerate() {
            free[row * res + col] = a.dist(b) <= eps;
        }
    }

    let mut labels = vec![None; res * res];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for row in 0..res {
        for col in 0..res {
            let start = row * res + col;
            if !free[start] || labels[start].is_some() {
                continue;
            }
            let id = components.len();
            let mut comp = PixelComponent {
                pixels: 0,
                cols: (col, col),
                rows: (row, row),
            };
            labels[start] = Some(id);
            queue.push_back((col, row));
            while let Some((c, r)) = queue.pop_front() {
                comp.pixels += 1;
                comp.cols = (comp.cols.0.min(c), comp.cols.1.max(c));
                comp.rows = (comp.rows.0.min(r), comp.rows.1.max(r));
                for (nc, nr) in neighbours(c, r) {
                    if nc < res && nr < res {
                        let k = nr * res + nc;
                        if free[k] && labels[k].is_none() {
                            labels[k] = Some(id);
                            queue.push_back((nc, nr));
                        }
                    }
                }
            }
            components.push(comp);
        }
    }

    Ok(PixelDiagram {
        res,
        n,
        m,
        free,
        labels,
        components,
    })
}

/// The 8 pixels around `(c, r)`. Out-of-range neighbours wrap to huge
/// indices and are filtered by the caller.
fn neighbours(c: usize, r: usize) -> impl Iterator<Item = (usize, usize)> {
    [c.wrapping_sub(1), c, c + 1].into_iter().flat_map(move |nc| {
        [r.wrapping_sub(1), r, r + 1]
            .into_iter()
            .filter(move |&nr| (nc, nr) != (c, r))
            .map(move |nr| (nc, nr))
    })
}

/// Fewest intervals whose union covers `target` (gaps up to `tol` allowed),
/// found by trying every subset; `None` when even all of them leave a gap.
pub fn exhaustive_min_cover(
    intervals: &[Interval],
    target: Interval,
    tol: f64,
) -> Result<Option<usize>, OracleError> {
    if intervals.len() > MAX_EXHAUSTIVE {
        return Err(OracleError::TooMany(intervals.len()));
    }
    let mut best: Option<usize> = None;
    let mut subset = Vec::with_capacity(intervals.len());
    for mask in 0u32..(1u32 << intervals.len()) {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| size >= b) {
            continue;
        }
        subset.clear();
        subset.extend((0..intervals.len()).filter(|i| mask & (1 << i) != 0).map(|i| intervals[i]));
        if interval_union_covers(&subset, target, tol) {
            best = Some(size);
        }
    }
    Ok(best)
}

/// Smallest covering selection of components, the lexicographically first
/// among those of minimum size, by enumerating every subset.
pub fn exhaustive_min_selection<D: CoverInstance + ?Sized>(
    d: &D,
) -> Result<Option<Selection>, OracleError> {
    let count = d.component_count();
    if count > MAX_EXHAUSTIVE {
        return Err(OracleError::TooMany(count));
    }
    let covers = |ids: &[usize], axis: Axis| {
        let parts: Vec<Interval> = ids
            .iter()
            .map(|&id| {
                let (lo, hi) = d.projection(id, axis);
                Interval::new(lo, hi)
            })
            .collect();
        interval_union_covers(&parts, d.parameter_space(axis), d.tol())
    };
    let mut best: Option<Selection> = None;
    for mask in 0u32..(1u32 << count) {
        let ids: Vec<usize> = (0..count).filter(|i| mask & (1 << i) != 0).collect();
        if !(covers(&ids, Axis::P) && covers(&ids, Axis::Q)) {
            continue;
        }
        let candidate = Selection::new(ids);
        let better = match &best {
            None => true,
            Some(b) => (candidate.len(), &candidate) < (b.len(), b),
        };
        if better {
            best = Some(candidate);
        }
    }
    Ok(best)
}

/// A sampled distance and a bound on how far the true value can exceed it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SampledDistance {
    pub value: f64,
    /// The true distance lies in `[value, value + error_bound]`.
    pub error_bound: f64,
}

/// Hausdorff distance from `samples + 1` evenly spaced parameters on each
/// curve, measuring each to the other curve exactly.
///
/// The distance from `P(s)` to `Q` is Lipschitz in `s` with constant `L`
/// (the longest segment of P) and the nearest sample is at most
/// `n / (2·samples)` away, so each directed term is low by at most
/// `L·n / (2·samples)`.
pub fn sampled_hausdorff(
    p: &PolyCurve,
    q: &PolyCurve,
    samples: usize,
) -> Result<SampledDistance, OracleError> {
    if samples < MIN_SAMPLES {
        return Err(OracleError::TooFewSamples(samples));
    }
    let directed = |a: &PolyCurve, b: &PolyCurve| {
        let n = a.segment_count() as f64;
        let value = (0..=samples)
            .map(|i| {
                let s = (n * i as f64 / samples as f64).min(n);
                b.distance_to_point(a.point_at(s).expect("sample inside parameter space"))
            })
            .fold(0.0, f64::max);
        (value, a.max_segment_length() * n / (2.0 * samples as f64))
    };
    let (vp, ep) = directed(p, q);
    let (vq, eq) = directed(q, p);
    Ok(SampledDistance {
        value: vp.max(vq),
        error_bound: ep.max(eq),
    })
}

/// Largest number of component projections containing one of `samples + 1`
/// evenly spaced probes, over both axes.
///
/// This never exceeds the neighborhood complexity z and reaches it once the
/// probes are denser than the narrowest maximal overlap.
pub fn dense_stabbing<D: CoverInstance + ?Sized>(d: &D, samples: usize) -> usize {
    [Axis::P, Axis::Q]
        .into_iter()
        .map(|axis| {
            let len = d.extent(axis);
            let intervals = d.intervals(axis);
            (0..=samples)
                .map(|i| {
                    let x = len * i as f64 / samples as f64;
                    intervals
                        .iter()
                        .filter(|&&(_, lo, hi)| lo <= x && x <= hi)
                        .count()
                })
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}
