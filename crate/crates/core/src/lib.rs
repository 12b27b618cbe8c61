//! Free space diagrams and the k-Fréchet distance.
//!
//! The k-Fréchet distance of two polygonal curves is the smallest ε for
//! which at most `k` connected components of the free space together project
//! onto both parameter spaces. It equals the weak Fréchet distance for
//! `k = 1` and the Hausdorff distance once `k` reaches the number of
//! components.
//!
//! - [`freespace`] builds the diagram and its components.
//! - [`selection`] decides the distance exactly (brute force and bounded
//!   search trees) along with the Hausdorff, weak and strong Fréchet decisions.
//! - [`approx`] is the greedy 2-approximation of the minimal `k`.
//! - [`search`] optimizes `k` or ε.
//! - [`boxes`] reduces 3-SAT to the box covering problem, the combinatorial
//!   core of the NP-hardness of the decision.
//! - [`oracles`] holds slow, independent reference implementations.

pub mod approx;
pub mod boxes;
pub mod config;
pub mod freespace;
pub mod geometry;
pub mod interval;
pub mod io;
#[cfg(feature = "oracles")]
pub mod oracles;
pub mod search;
pub mod selection;
pub mod svg;

pub use approx::{approximate_k, greedy_axis_cover, Approximation, ProjectedInterval};
pub use freespace::{compute_z, Axis, Component, FreeSpaceDiagram};
pub use geometry::{CurveError, Point2, PolyCurve};
pub use interval::{interval_union_covers, Interval};
pub use io::parse_curve;
pub use search::{minimize_epsilon, minimize_k, Method};
pub use selection::{
    covers_both, decide_bruteforce, decide_fpt, decide_hausdorff, decide_strong_frechet,
    decide_weak_frechet, preprocess, CoverInstance, Selection,
};
