//! Skyline queries over a partition of `P` into groups, without ever
//! materializing `sky(P)`.
//!
//! Every group keeps its own skyline padded with the sentinels `(-M, M)` and
//! `(M, -M)`. The sentinels always sit at the two ends of each group array,
//! so binary searches run over the interior only and fall back to a
//! sentinel when nothing inside qualifies.

use crate::context::{partition_steps, Context, Counters};
use crate::error::{Error, Result};
use crate::geom::{
    self, cmp_perturbed_high, cmp_perturbed_right, dist_sq, side_of_alpha, AlphaCurve, Point,
    PointSet, Side,
};
use crate::skyline::skyline_of;

/// Group count from which one query spreads its searches over threads.
#[cfg(feature = "parallel")]
const PARALLEL_GROUPS: usize = 1 << 12;

fn higher(a: Point, b: Point) -> Point {
    if cmp_perturbed_high(a, b).is_ge() {
        a
    } else {
        b
    }
}

fn further_right(a: Point, b: Point) -> Point {
    if cmp_perturbed_right(a, b).is_ge() {
        a
    } else {
        b
    }
}

/// Per-group skyline arrays sharing one sentinel bound `m`.
#[derive(Clone, Debug)]
pub(crate) struct Groups {
    arrays: Vec<Vec<Point>>,
    m: f64,
    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    parallel: bool,
}

impl Groups {
    pub(crate) fn build(points: &[Point], size: usize, m: f64, cx: &Context) -> Self {
        let lo = Point::new(-m, m);
        let hi = Point::new(m, -m);
        let arrays = cx.map_chunks(points, size.max(1), |chunk| {
            let mut v = Vec::with_capacity(chunk.len() + 2);
            v.extend_from_slice(chunk);
            v.push(lo);
            v.push(hi);
            skyline_of(&v, &cx.counters)
        });
        Groups {
            arrays,
            m,
            parallel: cx.wants_parallel(),
        }
    }

    /// Maps every group and combines the results; `combine` must be
    /// associative.
    fn reduce<T, M, C>(&self, map: M, combine: C) -> T
    where
        T: Send,
        M: Fn(&[Point]) -> T + Sync + Send,
        C: Fn(T, T) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.parallel && self.arrays.len() >= PARALLEL_GROUPS {
            use rayon::prelude::*;
            return self
                .arrays
                .par_iter()
                .map(|g| map(g))
                .reduce_with(combine)
                .expect("at least one group");
        }
        self.arrays
            .iter()
            .map(|g| map(g))
            .reduce(combine)
            .expect("at least one group")
    }

    /// Highest over groups of `g[search(pred)]`, searching each interior.
    fn highest_found<P>(&self, ctr: &Counters, offset: usize, pred: P) -> Point
    where
        P: Fn(&Point) -> bool + Sync + Send,
    {
        self.best_found(ctr, offset, pred, higher)
    }

    fn best_found<P>(&self, ctr: &Counters, offset: usize, pred: P, pick: fn(Point, Point) -> Point) -> Point
    where
        P: Fn(&Point) -> bool + Sync + Send,
    {
        let t = self.arrays.len() as u64;
        let (best, steps) = self.reduce(
            |g| {
                let (i, steps) = partition_steps(1, g.len() - 1, |i| pred(&g[i]));
                (g[i - offset], steps)
            },
            |a, b| (pick(a.0, b.0), a.1 + b.1),
        );
        ctr.add_searches(t, steps);
        ctr.add_comparisons(t - 1);
        best
    }

    #[inline]
    pub(crate) fn left_dummy(&self) -> Point {
        Point::new(-self.m, self.m)
    }

    #[inline]
    pub(crate) fn right_dummy(&self) -> Point {
        Point::new(self.m, -self.m)
    }

    /// Leftmost point of the padded global skyline strictly right of `x0`.
    pub(crate) fn next_on_skyline(&self, x0: f64, ctr: &Counters) -> Point {
        if x0 < -self.m {
            return self.left_dummy();
        }
        self.highest_found(ctr, 0, |q| q.x <= x0)
    }

    /// Whether `p` is on the padded global skyline, and its predecessor there.
    /// The left sentinel is reported as its own predecessor.
    pub(crate) fn membership_and_prev(&self, p: Point, ctr: &Counters) -> (bool, Point) {
        if p.x <= -self.m {
            return (p == self.left_dummy(), self.left_dummy());
        }
        // highest point with x >= x(p)
        let top = self.highest_found(ctr, 0, |q| q.x < p.x);
        // rightmost point with y > y(top)
        let prev = self.best_found(ctr, 1, |q| q.y > top.y, further_right);
        (top == p, prev)
    }

    /// For every group, the last point left of or on `alpha` and its
    /// successor; returns the rightmost of the former and the highest of the
    /// latter. Requires the right sentinel to lie right of `alpha`.
    pub(crate) fn alpha_split(&self, alpha: &AlphaCurve, ctr: &Counters) -> (Point, Point) {
        let t = self.arrays.len() as u64;
        let (before, after, steps) = self.reduce(
            |g| {
                let (i, steps) =
                    partition_steps(1, g.len() - 1, |i| side_of_alpha(g[i], alpha) == Side::Left);
                (g[i - 1], g[i], steps)
            },
            |a, b| (further_right(a.0, b.0), higher(a.1, b.1), a.2 + b.2),
        );
        ctr.add_searches(t, steps);
        ctr.add_comparisons(2 * (t - 1));
        (before, after)
    }

    pub(crate) fn arrays(&self) -> &[Vec<Point>] {
        &self.arrays
    }
}

/// `P` split into `t = ⌈n/κ⌉` groups of at most `κ` points, each group's
/// skyline stored for binary search, plus the extreme skyline points and the
/// bounds used by the decision procedures.
#[derive(Clone, Debug)]
pub struct GroupedSkyline {
    groups: Groups,
    kappa: usize,
    n: usize,
    lambda_max: f64,
    p0: Point,
    q0: Point,
}

impl GroupedSkyline {
    pub fn build(ps: &PointSet, kappa: usize, cx: &Context) -> Result<Self> {
        let pts = ps.non_empty()?;
        if kappa == 0 {
            return Err(Error::InvalidK);
        }
        let kappa = kappa.min(pts.len());
        let p0 = geom::highest(pts.iter().copied()).expect("non-empty");
        let q0 = geom::rightmost(pts.iter().copied()).expect("non-empty");
        let lambda_max = 1.0 + dist_sq(p0, q0).sqrt();
        let m = 2.0 * lambda_max + geom::max_abs_coordinate(pts);
        Ok(GroupedSkyline {
            groups: Groups::build(pts, kappa, m, cx),
            kappa,
            n: pts.len(),
            lambda_max,
            p0,
            q0,
        })
    }

    pub fn group_count(&self) -> usize {
        self.groups.arrays.len()
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The sentinel coordinate bound `M`.
    pub fn sentinel_bound(&self) -> f64 {
        self.groups.m
    }

    /// `1 + d(p0, q0)`, an upper bound on any optimal radius.
    pub fn lambda_max(&self) -> f64 {
        self.lambda_max
    }

    /// Highest point of `P`, ties to larger `x`: first skyline point.
    pub fn p0(&self) -> Point {
        self.p0
    }

    /// Rightmost point of `P`, ties to larger `y`: last skyline point.
    pub fn q0(&self) -> Point {
        self.q0
    }

    pub fn left_dummy(&self) -> Point {
        self.groups.left_dummy()
    }

    pub fn right_dummy(&self) -> Point {
        self.groups.right_dummy()
    }

    pub fn is_dummy(&self, p: Point) -> bool {
        p == self.left_dummy() || p == self.right_dummy()
    }

    /// Padded per-group skylines, increasing `x`, sentinels included.
    pub fn group_skylines(&self) -> impl Iterator<Item = &[Point]> {
        self.groups.arrays().iter().map(Vec::as_slice)
    }

    /// Leftmost skyline point strictly right of `x0`, or the right sentinel
    /// once the real skyline is exhausted.
    pub fn next_on_skyline(&self, x0: f64, cx: &Context) -> Point {
        debug_assert!(x0 < self.groups.m);
        self.groups.next_on_skyline(x0, &cx.counters)
    }

    /// Tests `p ∈ sky(P)` and returns the skyline predecessor of `x(p)`.
    pub fn test_membership_and_prev(&self, p: Point, cx: &Context) -> (bool, Point) {
        self.groups.membership_and_prev(p, &cx.counters)
    }

    /// `nrp(p, λ)`: the skyline point farthest from `p` among those with
    /// `x ≥ x(p)` and within distance `λ` of `p`. `p` must be a skyline point.
    pub fn next_relevant_point(&self, p: Point, lambda_sq: f64, cx: &Context) -> Point {
        let ctr = &cx.counters;
        if lambda_sq >= ctr.dist_sq(p, self.q0) {
            return self.q0;
        }
        let alpha = AlphaCurve::from_radius_sq(p, lambda_sq);
        let (q, q_next) = self.groups.alpha_split(&alpha, ctr);
        let (on_skyline, prev) = self.groups.membership_and_prev(q_next, ctr);
        if on_skyline {
            prev
        } else {
            q
        }
    }
}
