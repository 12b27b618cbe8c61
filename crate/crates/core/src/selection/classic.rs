//! Hausdorff, weak Fréchet and Fréchet decisions on a free space diagram.

use super::{covers_axis, CoverInstance};
use crate::freespace::{Axis, FreeSpaceDiagram};
use crate::interval::Interval;

pub(crate) fn covers_all<D: CoverInstance + ?Sized>(d: &D) -> bool {
    let all: Vec<usize> = (0..d.component_count()).collect();
    covers_axis(d, &all, Axis::P) && covers_axis(d, &all, Axis::Q)
}

/// Hausdorff distance at most ε: all components together cover both axes.
pub fn decide_hausdorff<D: CoverInstance + ?Sized>(d: &D) -> bool {
    covers_all(d)
}

/// Smallest id of a component that alone covers both axes.
pub fn weak_frechet_witness<D: CoverInstance + ?Sized>(d: &D) -> Option<usize> {
    (0..d.component_count()).find(|&id| covers_axis(d, &[id], Axis::P) && covers_axis(d, &[id], Axis::Q))
}

/// Weak Fréchet distance at most ε: one component projects onto both axes,
/// i.e. touches all four sides of the diagram.
pub fn decide_weak_frechet<D: CoverInstance + ?Sized>(d: &D) -> bool {
    weak_frechet_witness(d).is_some()
}

/// Fréchet distance at most ε: a monotone path runs through free space from
/// `(0, 0)` to `(n, m)`.
///
/// Reachable parts of the left and bottom edge of each cell are propagated to
/// its right and top edge, column by column. Within a convex cell any free
/// point on the right or top edge is reachable from a reachable point on the
/// left edge; from the bottom edge only points further right are.
pub fn decide_strong_frechet(d: &FreeSpaceDiagram) -> bool {
    let (n, m, tol) = (d.n(), d.m(), d.tol());
    let start = d.cell(0, 0);
    if !start.left.contains(0.0) && !start.bottom.contains(0.0) {
        return false;
    }
    // reach_bottom[j]: reachable part of the bottom edge of cell (i, j) for the current i.
    // reach_left[j]: reachable part of the left edge of cell (i, j).
    let mut reach_left = vec![Interval::Empty; m];
    reach_left[0] = Interval::point(0.0);
    let mut corner = false;
    for i in 0..n {
        let mut reach_bottom = if i == 0 {
            Interval::point(0.0)
        } else {
            Interval::Empty
        };
        let mut next_left = vec![Interval::Empty; m];
        for j in 0..m {
            let cell = d.cell(i, j);
            let from_left = reach_left[j];
            let top = if !from_left.is_empty() {
                cell.top
            } else if let Some(b) = reach_bottom.lo() {
                cell.top.intersect(&Interval::new(b - tol, 1.0 + tol))
            } else {
                Interval::Empty
            };
            let right = if !reach_bottom.is_empty() {
                cell.right
            } else if let Some(a) = from_left.lo() {
                cell.right.intersect(&Interval::new(a - tol, 1.0 + tol))
            } else {
                Interval::Empty
            };
            if i + 1 == n && j + 1 == m {
                corner = [top, right]
                    .iter()
                    .any(|iv| iv.hi().is_some_and(|h| h >= 1.0 - tol));
            }
            next_left[j] = right;
            reach_bottom = top;
        }
        reach_left = next_left;
    }
    corner
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::PolyCurve;

    fn curve(c: &[(f64, f64)]) -> PolyCurve {
        PolyCurve::from_coords(c).unwrap()
    }

    #[test]
    fn diagonal_example() {
        let p = curve(&[(0.0, 0.0), (1.0, 0.0)]);
        let q = curve(&[(0.0, 1.0), (1.0, 1.0)]);
        let d = FreeSpaceDiagram::new(&p, &q, 1.0);
        assert!(decide_hausdorff(&d));
        assert!(decide_weak_frechet(&d));
        assert!(decide_strong_frechet(&d));
        let d = FreeSpaceDiagram::new(&p, &q, 0.99);
        assert!(!decide_strong_frechet(&d));
        assert!(!decide_weak_frechet(&d));
        let d = FreeSpaceDiagram::new(&p, &q, 0.5);
        assert!(!decide_hausdorff(&d));
    }

    #[test]
    fn identical_curves_are_frechet_zero() {
        let p = curve(&[(0.0, 0.0), (1.0, 2.0), (3.0, 1.0), (2.0, -1.0)]);
        for eps in [0.0, 0.1, 1.0] {
            let d = FreeSpaceDiagram::new(&p, &p, eps);
            assert!(decide_strong_frechet(&d), "eps = {eps}");
            assert!(decide_weak_frechet(&d));
        }
    }

    #[test]
    fn reversed_segment_is_weak_but_not_strong() {
        // Q runs backwards 0.1 above P: the free space is an anti-diagonal band.
        let p = curve(&[(0.0, 0.0), (1.0, 0.0)]);
        let q = curve(&[(1.0, 0.1), (0.0, 0.1)]);
        let d = FreeSpaceDiagram::new(&p, &q, 0.2);
        assert!(decide_weak_frechet(&d));
        assert!(!decide_strong_frechet(&d));
        assert!(decide_hausdorff(&d));
    }

    #[test]
    fn strong_needs_monotone_path() {
        // P goes right then back left then right again; Q just goes right.
        // Hausdorff and weak Fréchet are small, Fréchet is not.
        let p = curve(&[(0.0, 0.0), (2.0, 0.0), (1.0, 0.0), (3.0, 0.0)]);
        let q = curve(&[(0.0, 0.0), (3.0, 0.0)]);
        let d = FreeSpaceDiagram::new(&p, &q, 0.1);
        assert!(decide_weak_frechet(&d));
        assert!(!decide_strong_frechet(&d));
        let d = FreeSpaceDiagram::new(&p, &q, 0.51);
        assert!(decide_strong_frechet(&d));
    }
}
