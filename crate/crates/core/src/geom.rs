//! Points, skyline arrays and the predicates every algorithm is built on.
//!
//! Distances are always handled squared. A radius `λ` enters the library
//! once, is squared, and from then on only `λ²` is compared against
//! [`dist_sq`] values. With integer-valued coordinates below `2^26` in
//! magnitude every comparison is exact.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// `p` dominates `q` when it is at least as large in both coordinates.
/// Every point dominates itself.
#[inline]
pub fn dominates(p: Point, q: Point) -> bool {
    p.x >= q.x && p.y >= q.y
}

/// Orders by `y`, then by `x`. The maximum under this order is the highest
/// point, ties going to the larger `x`.
#[inline]
pub fn cmp_perturbed_high(p: Point, q: Point) -> Ordering {
    p.y.total_cmp(&q.y).then(p.x.total_cmp(&q.x))
}

/// Orders by `x`, then by `y`. The maximum is the rightmost point, ties
/// going to the larger `y`. This is also the lexicographic order.
#[inline]
pub fn cmp_perturbed_right(p: Point, q: Point) -> Ordering {
    p.x.total_cmp(&q.x).then(p.y.total_cmp(&q.y))
}

/// Squared Euclidean distance.
#[inline]
pub fn dist_sq(p: Point, q: Point) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    dx * dx + dy * dy
}

/// Highest point of a non-empty iterator (ties to larger `x`).
pub fn highest<I: IntoIterator<Item = Point>>(points: I) -> Option<Point> {
    points
        .into_iter()
        .max_by(|a, b| cmp_perturbed_high(*a, *b))
}

/// Rightmost point of a non-empty iterator (ties to larger `y`).
pub fn rightmost<I: IntoIterator<Item = Point>>(points: I) -> Option<Point> {
    points
        .into_iter()
        .max_by(|a, b| cmp_perturbed_right(*a, *b))
}

/// Largest absolute coordinate over a set of points.
pub(crate) fn max_abs_coordinate(points: &[Point]) -> f64 {
    points
        .iter()
        .fold(0.0_f64, |m, p| m.max(p.x.abs()).max(p.y.abs()))
}

/// A validated, duplicate-free planar point set.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Rejects non-finite coordinates and drops coordinate-identical
    /// duplicates. Input order of the first occurrences is preserved.
    pub fn new(mut points: Vec<Point>) -> Result<Self> {
        if let Some(index) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        // -0.0 becomes 0.0 so that total_cmp agrees with `<`
        for p in &mut points {
            p.x += 0.0;
            p.y += 0.0;
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&a, &b| {
            cmp_perturbed_right(points[a], points[b]).then(a.cmp(&b))
        });
        let mut keep = vec![true; points.len()];
        for w in order.windows(2) {
            let (a, b) = (points[w[0]], points[w[1]]);
            if a == b {
                keep[w[1]] = false;
            }
        }
        let points = points
            .into_iter()
            .zip(keep)
            .filter_map(|(p, k)| k.then_some(p))
            .collect();
        Ok(PointSet { points })
    }

    pub fn from_pairs<I: IntoIterator<Item = (f64, f64)>>(pairs: I) -> Result<Self> {
        Self::new(pairs.into_iter().map(Point::from).collect())
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub(crate) fn non_empty(&self) -> Result<&[Point]> {
        if self.points.is_empty() {
            Err(Error::EmptyInput)
        } else {
            Ok(&self.points)
        }
    }

    /// Highest point (ties to larger `x`): the leftmost skyline point.
    pub fn top(&self) -> Option<Point> {
        highest(self.points.iter().copied())
    }

    /// Rightmost point (ties to larger `y`): the last skyline point.
    pub fn right_end(&self) -> Option<Point> {
        rightmost(self.points.iter().copied())
    }
}

/// A skyline stored by increasing `x` (hence decreasing `y`).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SkylineArray {
    pts: Vec<Point>,
}

impl SkylineArray {
    /// Validates the staircase shape.
    pub fn new(pts: Vec<Point>) -> Result<Self> {
        if pts.windows(2).all(|w| w[0].x < w[1].x && w[0].y > w[1].y) {
            Ok(SkylineArray { pts })
        } else {
            Err(Error::NotASkyline)
        }
    }

    /// Caller guarantees the staircase invariant.
    pub(crate) fn from_sorted_unchecked(pts: Vec<Point>) -> Self {
        debug_assert!(pts.windows(2).all(|w| w[0].x < w[1].x && w[0].y > w[1].y));
        SkylineArray { pts }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.pts.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.pts.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.pts
    }

    pub fn into_points(self) -> Vec<Point> {
        self.pts
    }

    pub fn first(&self) -> Option<Point> {
        self.pts.first().copied()
    }

    pub fn last(&self) -> Option<Point> {
        self.pts.last().copied()
    }

    /// Index of the first point with `x > x0`.
    pub fn next_index(&self, x0: f64) -> usize {
        self.pts.partition_point(|q| q.x <= x0)
    }

    /// Index of `p`, if it is one of the stored points.
    pub fn position(&self, p: Point) -> Option<usize> {
        let i = self.pts.partition_point(|q| q.x < p.x);
        (i < self.pts.len() && self.pts[i] == p).then_some(i)
    }

    /// `ψ(Q, S)²`: squared covering radius of `centers` over this skyline.
    pub fn covering_radius_sq(&self, centers: &[Point]) -> f64 {
        self.pts
            .iter()
            .map(|&p| {
                centers
                    .iter()
                    .map(|&c| dist_sq(p, c))
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    }
}

impl std::ops::Index<usize> for SkylineArray {
    type Output = Point;

    fn index(&self, i: usize) -> &Point {
        &self.pts[i]
    }
}

/// Which side of an α-curve a point falls on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Left of or on the curve.
    Left,
    RightOrBeyond,
}

/// The curve made of the upward vertical ray from `p + (λ, 0)`, the
/// clockwise quarter circle of radius `λ` around `p` down to `p + (0, -λ)`,
/// and the downward vertical ray from there.
///
/// Skyline points left of the curve form a prefix of any skyline; the
/// ones right of `p` among them are exactly those within `λ` of `p`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AlphaCurve {
    center: Point,
    radius_sq: f64,
}

impl AlphaCurve {
    pub fn new(center: Point, radius: f64) -> Self {
        assert!(radius >= 0.0, "alpha curve radius must be non-negative");
        AlphaCurve {
            center,
            radius_sq: radius * radius,
        }
    }

    pub fn from_radius_sq(center: Point, radius_sq: f64) -> Self {
        assert!(radius_sq >= 0.0, "alpha curve radius must be non-negative");
        AlphaCurve { center, radius_sq }
    }

    pub fn center(&self) -> Point {
        self.center
    }

    pub fn radius_sq(&self) -> f64 {
        self.radius_sq
    }
}

/// Side test against `α(p, λ)`; points on the curve are `Left`.
#[inline]
pub fn side_of_alpha(q: Point, a: &AlphaCurve) -> Side {
    let p = a.center;
    let dx = q.x - p.x;
    let left = if dx <= 0.0 {
        true
    } else if q.y >= p.y {
        dx * dx <= a.radius_sq
    } else {
        // below p and strictly right of it: inside the quarter disk or not.
        // Below the arc's band the distance already exceeds λ.
        dist_sq(p, q) <= a.radius_sq
    };
    if left {
        Side::Left
    } else {
        Side::RightOrBeyond
    }
}
