//! Closed real intervals and coverage tests.

use std::fmt;

/// A closed interval `[lo, hi]`, possibly a single point, or empty.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub enum Interval {
    #[default]
    Empty,
    Closed {
        lo: f64,
        hi: f64,
    },
}

impl Interval {
    /// `[lo, hi]`; empty when `lo > hi`.
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo.is_finite() && hi.is_finite(), "non-finite endpoint");
        if lo <= hi {
            Interval::Closed { lo, hi }
        } else {
            Interval::Empty
        }
    }

    pub fn point(x: f64) -> Self {
        Interval::new(x, x)
    }

    pub fn unit() -> Self {
        Interval::Closed { lo: 0.0, hi: 1.0 }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Interval::Empty)
    }

    pub fn bounds(&self) -> Option<(f64, f64)> {
        match *self {
            Interval::Empty => None,
            Interval::Closed { lo, hi } => Some((lo, hi)),
        }
    }

    pub fn lo(&self) -> Option<f64> {
        self.bounds().map(|b| b.0)
    }

    pub fn hi(&self) -> Option<f64> {
        self.bounds().map(|b| b.1)
    }

    pub fn width(&self) -> f64 {
        self.bounds().map_or(0.0, |(lo, hi)| hi - lo)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.bounds().is_some_and(|(lo, hi)| lo <= x && x <= hi)
    }

    /// Exact containment of `other` in `self`. The empty set is contained in everything.
    pub fn contains_interval(&self, other: &Interval) -> bool {
        match (self.bounds(), other.bounds()) {
            (_, None) => true,
            (None, Some(_)) => false,
            (Some((a, b)), Some((c, d))) => a <= c && d <= b,
        }
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Interval) -> Interval {
        match (self.bounds(), other.bounds()) {
            (None, _) => *other,
            (_, None) => *self,
            (Some((a, b)), Some((c, d))) => Interval::Closed {
                lo: a.min(c),
                hi: b.max(d),
            },
        }
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        match (self.bounds(), other.bounds()) {
            (Some((a, b)), Some((c, d))) => Interval::new(a.max(c), b.min(d)),
            _ => Interval::Empty,
        }
    }

    pub fn shift(&self, offset: f64) -> Interval {
        match *self {
            Interval::Empty => Interval::Empty,
            Interval::Closed { lo, hi } => Interval::Closed {
                lo: lo + offset,
                hi: hi + offset,
            },
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Interval::Empty => write!(f, "∅"),
            Interval::Closed { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Whether the union of `intervals` covers `target`, treating uncovered gaps of
/// width at most `gap_tol` as covered.
///
/// A degenerate target `[x, x]` needs some interval within `gap_tol` of `x`.
/// The empty target is always covered.
pub fn interval_union_covers(intervals: &[Interval], target: Interval, gap_tol: f64) -> bool {
    let Some((lo, hi)) = target.bounds() else {
        return true;
    };
    let mut sorted: Vec<(f64, f64)> = intervals.iter().filter_map(Interval::bounds).collect();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut reach = lo;
    let mut touched = false;
    for (a, b) in sorted {
        if a > reach + gap_tol {
            break;
        }
        if b + gap_tol >= reach {
            touched = true;
            reach = reach.max(b);
        }
    }
    touched && reach + gap_tol >= hi
}
