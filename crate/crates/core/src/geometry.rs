//! Planar points, segments and polygonal curves.
//!
//! A [`PolyCurve`] with `n` segments is parameterized over `[0, n]`, one unit
//! of parameter per segment, so that cell boundaries of a free space diagram
//! fall on integers.

use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CurveError {
    #[error("a curve needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {next} coincide (zero-length segment)", next = .0 + 1)]
    ZeroLengthSegment(usize),
    #[error("vertex {0} has a non-finite coordinate")]
    NonFinite(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid JSON curve: {0}")]
    Json(String),
    #[error("parameter {s} outside [0, {n}]")]
    ParameterOutOfRange { s: f64, n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn lerp(self, other: Self, t: f64) -> Self {
        self + (other - self) * t
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, rhs: Self) -> Self {
        Point2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, rhs: Self) -> Self {
        Point2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, rhs: f64) -> Self {
        Point2::new(self.x * rhs, self.y * rhs)
    }
}

impl From<(f64, f64)> for Point2 {
    fn from((x, y): (f64, f64)) -> Self {
        Point2::new(x, y)
    }
}

/// A directed line segment, parameterized by `u ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub start: Point2,
    pub end: Point2,
}

impl Segment {
    pub const fn new(start: Point2, end: Point2) -> Self {
        Self { start, end }
    }

    pub fn direction(&self) -> Point2 {
        self.end - self.start
    }

    pub fn length(&self) -> f64 {
        self.direction().norm()
    }

    pub fn point_at(&self, u: f64) -> Point2 {
        self.start.lerp(self.end, u)
    }

    /// Parameter of the point on the segment closest to `p`.
    pub fn closest_param(&self, p: Point2) -> f64 {
        let d = self.direction();
        let len_sq = d.norm_sq();
        if len_sq == 0.0 {
            return 0.0;
        }
        ((p - self.start).dot(d) / len_sq).clamp(0.0, 1.0)
    }

    pub fn distance_to_point(&self, p: Point2) -> f64 {
        self.point_at(self.closest_param(p)).dist(p)
    }

    /// Parameters `(u, v)` of a closest pair of points between `self` and `other`.
    pub fn closest_params(&self, other: &Segment) -> (f64, f64) {
        let d1 = self.direction();
        let d2 = other.direction();
        let r = self.start - other.start;
        let a = d1.norm_sq();
        let e = d2.norm_sq();
        let f = d2.dot(r);
        let c = d1.dot(r);
        let b = d1.dot(d2);
        let denom = a * e - b * b;

        let mut s = if denom > 1e-15 * a * e {
            ((b * f - c * e) / denom).clamp(0.0, 1.0)
        } else {
            0.0
        };
        let mut t = (b * s + f) / e;
        if t < 0.0 {
            t = 0.0;
            s = (-c / a).clamp(0.0, 1.0);
        } else if t > 1.0 {
            t = 1.0;
            s = ((b - c) / a).clamp(0.0, 1.0);
        }
        (s, t)
    }

    pub fn distance_to_segment(&self, other: &Segment) -> f64 {
        let (s, t) = self.closest_params(other);
        let mut best = self.point_at(s).dist(other.point_at(t));
        // Parallel configurations can pick a suboptimal pair; the endpoint
        // distances bound the true minimum from above and cover that case.
        for p in [self.start, self.end] {
            best = best.min(other.distance_to_point(p));
        }
        for q in [other.start, other.end] {
            best = best.min(self.distance_to_point(q));
        }
        best
    }
}

/// A polygonal curve with at least one segment and no zero-length segments.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyCurve {
    vertices: Vec<Point2>,
}

impl PolyCurve {
    pub fn new(vertices: Vec<Point2>) -> Result<Self, CurveError> {
        if vertices.len() < 2 {
            return Err(CurveError::TooFewVertices(vertices.len()));
        }
        if let Some(i) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(CurveError::NonFinite(i));
        }
        if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(CurveError::ZeroLengthSegment(i));
        }
        Ok(Self { vertices })
    }

    /// Convenience constructor from coordinate pairs.
    pub fn from_coords(coords: &[(f64, f64)]) -> Result<Self, CurveError> {
        Self::new(coords.iter().copied().map(Point2::from).collect())
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point2 {
        self.vertices[i]
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn segment(&self, i: usize) -> Segment {
        Segment::new(self.vertices[i], self.vertices[i + 1])
    }

    pub fn segments(&self) -> impl Iterator<Item = Segment> + '_ {
        self.vertices.windows(2).map(|w| Segment::new(w[0], w[1]))
    }

    /// Point at parameter `s ∈ [0, n]`, interpolated on segment `⌊s⌋`.
    pub fn point_at(&self, s: f64) -> Result<Point2, CurveError> {
        let n = self.segment_count();
        if !(0.0..=n as f64).contains(&s) {
            return Err(CurveError::ParameterOutOfRange { s, n });
        }
        let i = (s.floor() as usize).min(n - 1);
        Ok(self.segment(i).point_at(s - i as f64))
    }

    pub fn max_segment_length(&self) -> f64 {
        self.segments().map(|s| s.length()).fold(0.0, f64::max)
    }

    /// Distance from `p` to the closest point of the curve.
    pub fn distance_to_point(&self, p: Point2) -> f64 {
        self.segments()
            .map(|s| s.distance_to_point(p))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }
}

/// Largest distance between a vertex of `p` and a vertex of `q`.
///
/// Every pair of points on the two curves is at most this far apart, so at
/// this distance the whole free space diagram is free.
pub fn max_vertex_distance(p: &PolyCurve, q: &PolyCurve) -> f64 {
    p.vertices()
        .iter()
        .flat_map(|a| q.vertices().iter().map(move |b| a.dist(*b)))
        .fold(0.0, f64::max)
}
