//! Exact solvers for `opt(P, k)`.
//!
//! [`solve_via_matrix`] materializes the skyline and binary-searches ranks
//! of the signed distance matrix. [`solve_parametric`] never builds the
//! skyline: it replays the greedy decision at the unknown optimum, resolving
//! every step with a search over candidate distances driven by the grouped
//! decision procedure.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::context::{search_indices, search_range, Context, Counters};
use crate::decision::{decide_grouped, decide_materialized, Cluster};
use crate::error::{Error, Result};
use crate::geom::{dist_sq, Point, PointSet, SkylineArray};
use crate::grouped::GroupedSkyline;
use crate::matrix::SortedDistanceMatrix;
use crate::multisearch::{multi_array_search, SortedSource};
use crate::skyline::skyline_optimal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    MatrixSelect,
    Parametric,
    SmallK,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algorithm::MatrixSelect => "matrix-select",
            Algorithm::Parametric => "parametric",
            Algorithm::SmallK => "small-k",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveResult {
    /// `opt(P, k)²`.
    pub lambda_star_sq: f64,
    /// At most `k` skyline points, increasing `x`.
    pub centers: Vec<Point>,
    pub algorithm: Algorithm,
}

impl SolveResult {
    pub fn lambda_star(&self) -> f64 {
        self.lambda_star_sq.sqrt()
    }
}

/// `opt(P, k)` in `O(n log h)` time.
pub fn solve_via_matrix(ps: &PointSet, k: usize, cx: &Context) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let sky = skyline_optimal(ps, cx)?;
    solve_on_skyline(&sky, k, cx)
}

/// `opt(S, k)` for a materialized skyline: binary search over matrix ranks,
/// with the `O(h)` greedy decision as the comparison.
pub fn solve_on_skyline(sky: &SkylineArray, k: usize, cx: &Context) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let h = sky.len();
    if h == 0 {
        return Err(Error::EmptyInput);
    }
    let lambda_star_sq = if k >= h {
        0.0
    } else {
        let mat = SortedDistanceMatrix::new(sky);
        // ranks below this hold the strictly negative entries
        let first_non_negative = h * (h - 1) / 2 + 1;
        let mut failure = None;
        let rank = search_indices(first_non_negative, h * h, &cx.counters, |r| {
            match mat.select_sq(r, cx) {
                Ok(v) => v < 0.0 || !decide_materialized(sky, k, v, cx).is_feasible(),
                Err(e) => {
                    failure = Some(e);
                    false
                }
            }
        });
        if let Some(e) = failure {
            return Err(e);
        }
        mat.select_sq(rank, cx)?
    };
    let cover = decide_materialized(sky, k, lambda_star_sq, cx)
        .into_cover()
        .ok_or(Error::InternalInvariantViolation("no cover at the optimal radius"))?;
    Ok(SolveResult {
        lambda_star_sq,
        centers: cover.centers(),
        algorithm: Algorithm::MatrixSelect,
    })
}

/// Squared distances from `p` to the real points of one group skyline at or
/// right of `p`, increasing.
struct SuffixDistances<'a> {
    arr: &'a [Point],
    start: usize,
    end: usize,
    p: Point,
    ctr: &'a Counters,
}

impl SortedSource for SuffixDistances<'_> {
    fn len(&self) -> usize {
        self.end - self.start
    }

    fn value(&self, i: usize) -> f64 {
        self.ctr.dist_sq(self.p, self.arr[self.start + i])
    }
}

/// `nrp(p, λ*)` for the unknown `λ* = opt(P, k)`, where `decider(λ²)`
/// answers `opt(P, k) ≤ λ`. `p` must be a skyline point.
///
/// Finds the smallest squared distance `v` from `p` to a later skyline
/// point with `decider(v)`, then settles whether `λ*² = v`.
pub fn param_next_relevant<F>(
    g: &GroupedSkyline,
    p: Point,
    decider: &mut F,
    cx: &Context,
) -> Result<Point>
where
    F: FnMut(f64) -> bool,
{
    if decider(0.0) {
        return Ok(p);
    }
    let q0 = g.q0();
    // λ* beyond d(p, q0): the whole remaining skyline is in reach
    if !decider(cx.counters.dist_sq(p, q0)) {
        return Ok(q0);
    }
    let ctr = &cx.counters;
    let sources: Vec<SuffixDistances> = g
        .group_skylines()
        .map(|arr| SuffixDistances {
            arr,
            start: search_range(arr, 1, arr.len() - 1, ctr, |q| q.x < p.x),
            end: arr.len() - 1,
            p,
            ctr,
        })
        .collect();
    let lambda_sq = match multi_array_search(&sources, &mut *decider, cx) {
        Ok(v) => v,
        Err(Error::NotFound) => {
            return Err(Error::InternalInvariantViolation(
                "no candidate distance is feasible",
            ))
        }
        Err(e) => return Err(e),
    };
    // every candidate below `lambda_sq` is below λ*; a point at exactly
    // `lambda_sq` is in reach only when λ* equals it. λ* is itself a float,
    // so λ* < v exactly when λ* ≤ next_down(v).
    let below = lambda_sq.next_down();
    let reach = if decider(below) { below } else { lambda_sq };
    Ok(g.next_relevant_point(p, reach, cx))
}

/// `⌈k³ log₂² n⌉`, clamped to `1..=n`.
pub fn parametric_kappa(n: usize, k: usize) -> usize {
    let lg = (n.max(1) as f64).log2();
    let v = (k as f64).powi(3) * lg * lg;
    (v.ceil() as usize).clamp(1, n.max(1))
}

/// Whether [`solve_parametric`] hands over to [`solve_via_matrix`]
/// (`k ≥ n^{1/4}`).
pub fn prefers_matrix(n: usize, k: usize) -> bool {
    (k as u128).saturating_pow(4) >= n as u128
}

/// `opt(P, k)` in `O(n log k + n log log n)` time, delegating to
/// [`solve_via_matrix`] when `k⁴ ≥ n`.
pub fn solve_parametric(ps: &PointSet, k: usize, cx: &Context) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let n = ps.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    if prefers_matrix(n, k) {
        solve_via_matrix(ps, k, cx)
    } else {
        parametric_search(ps, k, parametric_kappa(n, k), cx)
    }
}

/// The parametric search itself with an explicit group size `kappa`.
pub fn parametric_search(
    ps: &PointSet,
    k: usize,
    kappa: usize,
    cx: &Context,
) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let g = GroupedSkyline::build(ps, kappa, cx)?;
    let mut memo: HashMap<u64, bool> = HashMap::new();
    let mut decider = |lambda_sq: f64| {
        *memo
            .entry(lambda_sq.to_bits())
            .or_insert_with(|| decide_grouped(&g, k, lambda_sq, cx).is_feasible())
    };
    let m = g.sentinel_bound();
    let mut clusters: Vec<Cluster> = Vec::with_capacity(k);
    let mut left = g.p0();
    let mut covered = false;
    for _ in 0..k {
        let center = param_next_relevant(&g, left, &mut decider, cx)?;
        let right = param_next_relevant(&g, center, &mut decider, cx)?;
        clusters.push(Cluster {
            left,
            center,
            right,
        });
        left = g.next_on_skyline(right.x, cx);
        if left.x == m {
            covered = true;
            break;
        }
    }
    if !covered {
        return Err(Error::InternalInvariantViolation(
            "greedy at the optimum left the skyline uncovered",
        ));
    }
    let lambda_star_sq = clusters
        .iter()
        .flat_map(|c| [dist_sq(c.center, c.left), dist_sq(c.center, c.right)])
        .fold(0.0, f64::max);
    Ok(SolveResult {
        lambda_star_sq,
        centers: clusters.iter().map(|c| c.center).collect(),
        algorithm: Algorithm::Parametric,
    })
}
