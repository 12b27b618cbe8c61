//! Free space diagrams and their connected components.
//!
//! The diagram of curves P (n segments) and Q (m segments) at distance ε is
//! the set `{(s, t) ∈ [0,n]×[0,m] : |P(s) − Q(t)| ≤ ε}`, organized as an n×m
//! grid of cells. P runs along the horizontal axis and Q along the vertical.
//!
//! Free space is closed, so two cells whose shared edge contains even a
//! single free point belong to the same component.

mod cell;
mod union_find;

pub use cell::{
    cell_axis_projection, cell_edge_interval, point_segment_interval, segment_projection, Axis,
    Edge,
};
pub use union_find::UnionFind;

use crate::config::DEFAULT_TOL;
use crate::geometry::{PolyCurve, Segment};
use crate::interval::Interval;

/// Free space of one cell, in local `[0,1]` coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct CellFreeSpace {
    pub i: usize,
    pub j: usize,
    pub left: Interval,
    pub right: Interval,
    pub bottom: Interval,
    pub top: Interval,
    pub interior_nonempty: bool,
    pub s_projection: Interval,
    pub t_projection: Interval,
}

impl CellFreeSpace {
    pub fn edge(&self, edge: Edge) -> Interval {
        match edge {
            Edge::Left => self.left,
            Edge::Right => self.right,
            Edge::Bottom => self.bottom,
            Edge::Top => self.top,
        }
    }
}

/// Which sides of the diagram a component reaches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct Touches {
    pub left: bool,
    pub right: bool,
    pub bottom: bool,
    pub top: bool,
}

impl Touches {
    pub fn all(&self) -> bool {
        self.left && self.right && self.bottom && self.top
    }
}

/// A connected component of the free space.
#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub id: usize,
    /// Member cells `(i, j)` in scan order.
    pub cells: Vec<(usize, usize)>,
    /// Projection onto `[0, n]`; never empty.
    pub proj_p: Interval,
    /// Projection onto `[0, m]`; never empty.
    pub proj_q: Interval,
    pub touches: Touches,
}

impl Component {
    pub fn projection(&self, axis: Axis) -> Interval {
        match axis {
            Axis::P => self.proj_p,
            Axis::Q => self.proj_q,
        }
    }

    /// `(lo, hi)` of the projection onto `axis`.
    pub fn bounds(&self, axis: Axis) -> (f64, f64) {
        self.projection(axis)
            .bounds()
            .expect("component projections are nonempty")
    }
}

#[derive(Clone, Debug)]
pub struct FreeSpaceDiagram {
    epsilon: f64,
    tol: f64,
    n: usize,
    m: usize,
    cells: Vec<CellFreeSpace>,
    cell_component: Vec<Option<usize>>,
    components: Vec<Component>,
    z: usize,
}

impl FreeSpaceDiagram {
    /// Builds the diagram with the default tolerance.
    pub fn new(p: &PolyCurve, q: &PolyCurve, epsilon: f64) -> Self {
        Self::with_tolerance(p, q, epsilon, DEFAULT_TOL)
    }

    pub fn with_tolerance(p: &PolyCurve, q: &PolyCurve, epsilon: f64, tol: f64) -> Self {
        assert!(epsilon >= 0.0, "epsilon must be non-negative, got {epsilon}");
        let n = p.segment_count();
        let m = q.segment_count();
        let segs_p: Vec<Segment> = p.segments().collect();
        let segs_q: Vec<Segment> = q.segments().collect();

        // Shared edges are computed once so neighbouring cells agree exactly.
        // vertical[i * m + j]: P vertex i against Q segment j.
        let vertical: Vec<Interval> = (0..=n)
            .flat_map(|i| {
                let v = p.vertex(i);
                segs_q
                    .iter()
                    .map(move |sq| point_segment_interval(sq, v, epsilon, tol))
            })
            .collect();
        // horizontal[i * (m + 1) + j]: Q vertex j against P segment i.
        let horizontal: Vec<Interval> = segs_p
            .iter()
            .flat_map(|sp| {
                q.vertices()
                    .iter()
                    .map(move |&w| point_segment_interval(sp, w, epsilon, tol))
            })
            .collect();

        let mut cells = Vec::with_capacity(n * m);
        for (i, sp) in segs_p.iter().enumerate() {
            for (j, sq) in segs_q.iter().enumerate() {
                let left = vertical[i * m + j];
                let right = vertical[(i + 1) * m + j];
                let bottom = horizontal[i * (m + 1) + j];
                let top = horizontal[i * (m + 1) + j + 1];

                let mut s_projection = segment_projection(sp, sq, epsilon, tol)
                    .hull(&bottom)
                    .hull(&top);
                let mut t_projection = segment_projection(sq, sp, epsilon, tol)
                    .hull(&left)
                    .hull(&right);
                if !left.is_empty() {
                    s_projection = s_projection.hull(&Interval::point(0.0));
                }
                if !right.is_empty() {
                    s_projection = s_projection.hull(&Interval::point(1.0));
                }
                if !bottom.is_empty() {
                    t_projection = t_projection.hull(&Interval::point(0.0));
                }
                if !top.is_empty() {
                    t_projection = t_projection.hull(&Interval::point(1.0));
                }
                // The two projections are computed independently; at a
                // tangency one can round to empty. Fall back to the closest pair.
                if s_projection.is_empty() != t_projection.is_empty() {
                    let (u, v) = sp.closest_params(sq);
                    if s_projection.is_empty() {
                        s_projection = Interval::point(u);
                    } else {
                        t_projection = Interval::point(v);
                    }
                }
                cells.push(CellFreeSpace {
                    i,
                    j,
                    left,
                    right,
                    bottom,
                    top,
                    interior_nonempty: !s_projection.is_empty(),
                    s_projection,
                    t_projection,
                });
            }
        }

        let mut diagram = Self {
            epsilon,
            tol,
            n,
            m,
            cells,
            cell_component: vec![None; n * m],
            components: Vec::new(),
            z: 0,
        };
        diagram.label_components();
        diagram.z = compute_z(&diagram);
        diagram
    }

    fn label_components(&mut self) {
        let (n, m) = (self.n, self.m);
        let idx = |i: usize, j: usize| i * m + j;
        let mut uf = UnionFind::new(n * m);
        for i in 0..n {
            for j in 0..m {
                let c = &self.cells[idx(i, j)];
                if i + 1 < n && !c.right.is_empty() {
                    uf.union(idx(i, j), idx(i + 1, j));
                }
                if j + 1 < m && !c.top.is_empty() {
                    uf.union(idx(i, j), idx(i, j + 1));
                }
            }
        }

        let mut root_to_id = vec![usize::MAX; n * m];
        for i in 0..n {
            for j in 0..m {
                let cell = &self.cells[idx(i, j)];
                if !cell.interior_nonempty {
                    continue;
                }
                let root = uf.find(idx(i, j));
                if root_to_id[root] == usize::MAX {
                    root_to_id[root] = self.components.len();
                    self.components.push(Component {
                        id: self.components.len(),
                        cells: Vec::new(),
                        proj_p: Interval::Empty,
                        proj_q: Interval::Empty,
                        touches: Touches::default(),
                    });
                }
                let id = root_to_id[root];
                let comp = &mut self.components[id];
                comp.cells.push((i, j));
                comp.proj_p = comp.proj_p.hull(&cell.s_projection.shift(i as f64));
                comp.proj_q = comp.proj_q.hull(&cell.t_projection.shift(j as f64));
                self.cell_component[idx(i, j)] = Some(id);
            }
        }

        let tol = self.tol;
        for comp in &mut self.components {
            let (plo, phi) = comp.bounds(Axis::P);
            let (qlo, qhi) = comp.bounds(Axis::Q);
            comp.touches = Touches {
                left: plo <= tol,
                right: phi >= n as f64 - tol,
                bottom: qlo <= tol,
                top: qhi >= m as f64 - tol,
            };
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// Absolute tolerance used for endpoint comparisons and coverage gaps.
    pub fn tol(&self) -> f64 {
        self.tol
    }

    /// Number of segments of P (horizontal axis).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of segments of Q (vertical axis).
    pub fn m(&self) -> usize {
        self.m
    }

    /// The parameter space `[0, n]` or `[0, m]` of `axis`.
    pub fn parameter_space(&self, axis: Axis) -> Interval {
        match axis {
            Axis::P => Interval::new(0.0, self.n as f64),
            Axis::Q => Interval::new(0.0, self.m as f64),
        }
    }

    pub fn cell(&self, i: usize, j: usize) -> &CellFreeSpace {
        &self.cells[i * self.m + j]
    }

    pub fn cells(&self) -> &[CellFreeSpace] {
        &self.cells
    }

    pub fn component_of(&self, i: usize, j: usize) -> Option<usize> {
        self.cell_component[i * self.m + j]
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn component(&self, id: usize) -> Option<&Component> {
        self.components.get(id)
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Neighborhood complexity: the most components met by one axis-parallel line.
    pub fn z(&self) -> usize {
        self.z
    }

    /// `(id, lo, hi)` for every component projected onto `axis`.
    pub fn axis_intervals(&self, axis: Axis) -> Vec<(usize, f64, f64)> {
        self.components
            .iter()
            .map(|c| {
                let (lo, hi) = c.bounds(axis);
                (c.id, lo, hi)
            })
            .collect()
    }
}

/// Maximum number of component projections stabbed by a single point, over both axes.
///
/// The maximum overlap of closed intervals is attained at some endpoint, so
/// only endpoints need to be probed.
pub fn compute_z(d: &FreeSpaceDiagram) -> usize {
    [Axis::P, Axis::Q]
        .into_iter()
        .map(|axis| max_stabbing(&d.axis_intervals(axis)))
        .max()
        .unwrap_or(0)
}

fn max_stabbing(intervals: &[(usize, f64, f64)]) -> usize {
    intervals
        .iter()
        .flat_map(|&(_, lo, hi)| [lo, hi])
        .map(|x| {
            intervals
                .iter()
                .filter(|&&(_, lo, hi)| lo <= x && x <= hi)
                .count()
        })
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diagonal_pair() -> (PolyCurve, PolyCurve) {
        (
            PolyCurve::from_coords(&[(0.0, 0.0), (1.0, 0.0)]).unwrap(),
            PolyCurve::from_coords(&[(0.0, 1.0), (1.0, 1.0)]).unwrap(),
        )
    }

    #[test]
    fn diagonal_example() {
        let (p, q) = diagonal_pair();
        let d = FreeSpaceDiagram::new(&p, &q, 1.0);
        assert_eq!(d.component_count(), 1);
        let c = &d.components()[0];
        assert_eq!(c.proj_p, Interval::unit());
        assert_eq!(c.proj_q, Interval::unit());
        assert!(c.touches.all());
        assert_eq!(d.z(), 1);
    }

    #[test]
    fn empty_free_space() {
        let (p, q) = diagonal_pair();
        let d = FreeSpaceDiagram::new(&p, &q, 0.5);
        assert_eq!(d.component_count(), 0);
        assert_eq!(d.z(), 0);
        assert!(!d.cell(0, 0).interior_nonempty);
    }

    #[test]
    fn interior_ellipse_is_a_component() {
        // Crossing segments: at small ε the free set is a small ellipse around
        // the intersection, touching no cell edge.
        let p = PolyCurve::from_coords(&[(-1.0, 0.0), (1.0, 0.0)]).unwrap();
        let q = PolyCurve::from_coords(&[(0.0, -1.0), (0.0, 1.0)]).unwrap();
        let d = FreeSpaceDiagram::new(&p, &q, 0.1);
        let cell = d.cell(0, 0);
        assert!(cell.left.is_empty() && cell.right.is_empty());
        assert!(cell.bottom.is_empty() && cell.top.is_empty());
        assert!(cell.interior_nonempty);
        assert_eq!(d.component_count(), 1);
        let (lo, hi) = d.components()[0].bounds(Axis::P);
        assert!((lo - 0.45).abs() < 1e-8 && (hi - 0.55).abs() < 1e-8);
        assert_eq!(d.components()[0].touches, Touches::default());
    }

    #[test]
    fn tangent_corner_joins_cells() {
        // P's middle vertex (1,0) is at distance exactly ε from Q's middle
        // vertex (1,1), and everything else is farther: the four cells around
        // the corner (1,1) share one free point and form a single component.
        let p = PolyCurve::from_coords(&[(0.0, -1.0), (1.0, 0.0), (2.0, -1.0)]).unwrap();
        let q = PolyCurve::from_coords(&[(0.0, 2.0), (1.0, 1.0), (2.0, 2.0)]).unwrap();
        let d = FreeSpaceDiagram::new(&p, &q, 1.0);
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.components()[0].cells.len(), 4);
        let (lo, hi) = d.components()[0].bounds(Axis::P);
        assert!((lo - 1.0).abs() < 1e-12 && (hi - 1.0).abs() < 1e-12);
    }

    #[test]
    fn z_counts_overlapping_projections() {
        let iv = [(0, 0.0, 0.5), (1, 0.4, 1.0)];
        assert_eq!(max_stabbing(&iv), 2);
        let iv = [(0, 0.0, 0.3), (1, 0.4, 1.0)];
        assert_eq!(max_stabbing(&iv), 1);
        assert_eq!(max_stabbing(&[]), 0);
    }
}
