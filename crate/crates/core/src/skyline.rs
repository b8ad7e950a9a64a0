//! Skyline construction: the sort-and-scan baseline, the bounded
//! group-and-merge routine, and the output-sensitive driver that squares its
//! size guess until the bounded routine succeeds.

use crate::context::{Context, Counters};
use crate::error::Result;
use crate::geom::{self, cmp_perturbed_right, Point, PointSet, SkylineArray};
use crate::grouped::Groups;

/// Outcome of [`skyline_bounded`].
#[derive(Clone, Debug, PartialEq)]
pub enum BoundedResult {
    Complete(SkylineArray),
    /// The skyline has more points than the guess.
    Incomplete,
}

impl BoundedResult {
    pub fn complete(self) -> Option<SkylineArray> {
        match self {
            BoundedResult::Complete(s) => Some(s),
            BoundedResult::Incomplete => None,
        }
    }
}

/// `O(n log n)` skyline: lexicographic sort, then a reverse scan keeping
/// every point higher than all points to its right.
pub fn slow_skyline(ps: &PointSet, cx: &Context) -> Result<SkylineArray> {
    let pts = ps.non_empty()?;
    Ok(SkylineArray::from_sorted_unchecked(skyline_of(pts, &cx.counters)))
}

/// Skyline of an arbitrary non-empty slice, increasing `x`.
pub(crate) fn skyline_of(points: &[Point], ctr: &Counters) -> Vec<Point> {
    let mut sorted = points.to_vec();
    let mut cmps = 0u64;
    sorted.sort_unstable_by(|a, b| {
        cmps += 1;
        cmp_perturbed_right(*a, *b)
    });
    let mut out = Vec::new();
    if let Some(&last) = sorted.last() {
        out.push(last);
        let mut top = last.y;
        for &p in sorted.iter().rev().skip(1) {
            cmps += 1;
            if p.y > top {
                top = p.y;
                out.push(p);
            }
        }
    }
    ctr.add_comparisons(cmps);
    out.reverse();
    out
}

/// Returns the skyline when it has at most `s` points, `Incomplete`
/// otherwise, in `O(n log s)` time.
///
/// The input is cut into `⌈n/s⌉` contiguous chunks. Each chunk's skyline
/// (with the sentinels `(-M, M)` and `(M, -M)` added) is built independently,
/// then the global skyline is walked from the left sentinel one step at a
/// time, each step taking the highest per-chunk successor.
pub fn skyline_bounded(ps: &PointSet, s: usize, cx: &Context) -> Result<BoundedResult> {
    let pts = ps.non_empty()?;
    if s == 0 {
        return Ok(BoundedResult::Incomplete);
    }
    let m = 1.0 + geom::max_abs_coordinate(pts);
    let groups = Groups::build(pts, s, m, cx);
    let mut out = Vec::new();
    let mut p = groups.left_dummy();
    for _ in 0..s.saturating_add(1) {
        p = groups.next_on_skyline(p.x, &cx.counters);
        if p.x == m {
            return Ok(BoundedResult::Complete(SkylineArray::from_sorted_unchecked(out)));
        }
        out.push(p);
    }
    Ok(BoundedResult::Incomplete)
}

/// First guess handed to [`skyline_bounded`] by [`skyline_optimal`].
pub const INITIAL_GUESS: usize = 4;

/// Output-sensitive `O(n log h)` skyline.
pub fn skyline_optimal(ps: &PointSet, cx: &Context) -> Result<SkylineArray> {
    ps.non_empty()?;
    let mut s = INITIAL_GUESS;
    loop {
        if let BoundedResult::Complete(sky) = skyline_bounded(ps, s, cx)? {
            return Ok(sky);
        }
        s = s.saturating_mul(s);
    }
}
