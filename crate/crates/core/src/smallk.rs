//! Algorithms for small `k`: exact 1-center in linear time, farthest-first
//! 2-approximation over slabs, and `(1+ε)`-approximation by a short binary
//! search with the grouped decision procedure.

use std::collections::HashMap;

use serde::Serialize;

use crate::context::{search_indices, Context, Counters};
use crate::decision::{decide_grouped, Cover};
use crate::error::{Error, Result};
use crate::exact::{Algorithm, SolveResult};
use crate::geom::{cmp_perturbed_high, cmp_perturbed_right, dominates, Point, PointSet};
use crate::grouped::GroupedSkyline;

/// The two skyline points between `p0` and `q0` that straddle the bisector
/// of `p0 q0`, and the extremes they realize.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Extremes {
    /// Minimizes `max{d(·, p0), d(·, q0)}` over the skyline portion.
    pub r_star: Point,
    pub r_star_cost_sq: f64,
    /// Maximizes `min{d(·, p0), d(·, q0)}` over the skyline portion.
    pub r_prime_star: Point,
    pub r_prime_star_gap_sq: f64,
}

/// Extremes of the skyline portion of `P` from `p0` to `q0`, both skyline
/// points. Points outside the strip `x(p0) ≤ x ≤ x(q0)` are ignored. Ties
/// go to the smaller `x`.
pub fn bisector_extremes(ps: &PointSet, p0: Point, q0: Point, cx: &Context) -> Result<Extremes> {
    ps.non_empty()?;
    if !(p0.x < q0.x && p0.y > q0.y) {
        return Err(Error::DegenerateSpan);
    }
    let strip: Vec<Point> = ps
        .points()
        .iter()
        .copied()
        .filter(|p| p.x >= p0.x && p.x <= q0.x && *p != p0 && *p != q0)
        .collect();
    Ok(extremes_between(&strip, p0, q0, &cx.counters))
}

/// `members` lie in the strip of `p0 q0` and exclude both endpoints.
/// Makes `2 |members| + 4` distance evaluations.
fn extremes_between(members: &[Point], p0: Point, q0: Point, ctr: &Counters) -> Extremes {
    let mut p1 = p0;
    let mut q1 = q0;
    for &r in members {
        if ctr.dist_sq(r, p0) <= ctr.dist_sq(r, q0) {
            if cmp_perturbed_right(r, p1).is_gt() {
                p1 = r;
            }
        } else if cmp_perturbed_high(r, q1).is_gt() {
            q1 = r;
        }
    }
    ctr.add_comparisons(members.len() as u64);

    let all = || members.iter().copied().chain([p0, q0]);
    let q1_on_skyline = all().all(|r| r == q1 || !dominates(r, q1));
    let (p_left, q_right) = if q1_on_skyline {
        let before = all()
            .filter(|r| r.x < q1.x && r.y > q1.y)
            .max_by(|a, b| cmp_perturbed_right(*a, *b))
            .unwrap_or(p0);
        (before, q1)
    } else {
        let after = all()
            .filter(|r| r.x > p1.x)
            .max_by(|a, b| cmp_perturbed_high(*a, *b))
            .unwrap_or(q0);
        (p1, after)
    };
    ctr.add_comparisons(2 * members.len() as u64 + 4);

    let (a0, a1) = (ctr.dist_sq(p_left, p0), ctr.dist_sq(p_left, q0));
    let (b0, b1) = (ctr.dist_sq(q_right, p0), ctr.dist_sq(q_right, q0));
    let (cost_a, cost_b) = (a0.max(a1), b0.max(b1));
    let (gap_a, gap_b) = (a0.min(a1), b0.min(b1));
    let (r_star, r_star_cost_sq) = if cost_a <= cost_b {
        (p_left, cost_a)
    } else {
        (q_right, cost_b)
    };
    let (r_prime_star, r_prime_star_gap_sq) = if gap_a >= gap_b {
        (p_left, gap_a)
    } else {
        (q_right, gap_b)
    };
    Extremes {
        r_star,
        r_star_cost_sq,
        r_prime_star,
        r_prime_star_gap_sq,
    }
}

/// Exact `opt(P, 1)` with at most `2n` distance evaluations.
pub fn solve_one_center(ps: &PointSet, cx: &Context) -> Result<SolveResult> {
    let pts = ps.non_empty()?;
    let p0 = ps.top().expect("non-empty");
    let q0 = ps.right_end().expect("non-empty");
    if p0 == q0 {
        return Ok(SolveResult {
            lambda_star_sq: 0.0,
            centers: vec![p0],
            algorithm: Algorithm::SmallK,
        });
    }
    let strip: Vec<Point> = pts
        .iter()
        .copied()
        .filter(|p| p.x >= p0.x && *p != p0 && *p != q0)
        .collect();
    let e = extremes_between(&strip, p0, q0, &cx.counters);
    Ok(SolveResult {
        lambda_star_sq: e.r_star_cost_sq,
        centers: vec![e.r_star],
        algorithm: Algorithm::SmallK,
    })
}

/// A set of centers and its exact squared covering radius over `sky(P)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Approximation {
    /// Increasing `x`.
    pub centers: Vec<Point>,
    pub psi_sq: f64,
}

/// Vertical strip between two consecutive centers. Members are the points
/// with `x(left) < x ≤ x(right)` other than the right center.
#[derive(Clone, Debug, PartialEq)]
pub struct Slab {
    pub left_center: Point,
    pub right_center: Point,
    pub members: Vec<Point>,
    extremes: Extremes,
}

impl Slab {
    fn new(left_center: Point, right_center: Point, members: Vec<Point>, ctr: &Counters) -> Self {
        let extremes = extremes_between(&members, left_center, right_center, ctr);
        Slab {
            left_center,
            right_center,
            members,
            extremes,
        }
    }

    /// Farthest skyline point of the slab from its two centers, squared
    /// distance to the nearer one.
    pub fn farthest(&self) -> (Point, f64) {
        (self.extremes.r_prime_star, self.extremes.r_prime_star_gap_sq)
    }
}

/// Farthest-first traversal from `p0` and `q0`: `ψ ≤ 2 opt(P, k)` in
/// `O(kn)` time.
pub fn gonzalez_2approx(ps: &PointSet, k: usize, cx: &Context) -> Result<Approximation> {
    Ok(gonzalez_slabs(ps, k, cx)?.0)
}

/// [`gonzalez_2approx`] together with the final slabs.
pub fn gonzalez_slabs(ps: &PointSet, k: usize, cx: &Context) -> Result<(Approximation, Vec<Slab>)> {
    let pts = ps.non_empty()?;
    if k == 0 {
        return Err(Error::InvalidK);
    }
    if k == 1 {
        let r = solve_one_center(ps, cx)?;
        return Ok((
            Approximation {
                centers: r.centers,
                psi_sq: r.lambda_star_sq,
            },
            vec![],
        ));
    }
    let p0 = ps.top().expect("non-empty");
    let q0 = ps.right_end().expect("non-empty");
    if p0 == q0 {
        return Ok((
            Approximation {
                centers: vec![p0],
                psi_sq: 0.0,
            },
            vec![],
        ));
    }
    let ctr = &cx.counters;
    let members: Vec<Point> = pts
        .iter()
        .copied()
        .filter(|p| p.x > p0.x && *p != q0)
        .collect();
    let mut slabs = vec![Slab::new(p0, q0, members, ctr)];
    let mut count = 2;
    while count < k {
        let (i, gap) = slabs
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.farthest().1))
            .fold((0, f64::NEG_INFINITY), |a, b| if b.1 > a.1 { b } else { a });
        if gap <= 0.0 {
            break;
        }
        let s = slabs.swap_remove(i);
        let (r, _) = s.farthest();
        let (left, right): (Vec<Point>, Vec<Point>) =
            s.members.into_iter().filter(|p| *p != r).partition(|p| p.x <= r.x);
        slabs.push(Slab::new(s.left_center, r, left, ctr));
        slabs.push(Slab::new(r, s.right_center, right, ctr));
        count += 1;
    }
    slabs.sort_by(|a, b| a.left_center.x.total_cmp(&b.left_center.x));
    let psi_sq = slabs.iter().map(|s| s.farthest().1).fold(0.0, f64::max);
    let mut centers: Vec<Point> = slabs.iter().map(|s| s.left_center).collect();
    centers.push(q0);
    Ok((Approximation { centers, psi_sq }, slabs))
}

/// `⌈k² log₂²(1/ε)⌉`, clamped to `1..=n`.
pub fn approx_kappa(n: usize, k: usize, eps: f64) -> usize {
    let lg = (1.0 / eps).log2();
    let v = (k as f64).powi(2) * lg * lg;
    (v.ceil() as usize).clamp(1, n.max(1))
}

/// Centers with `ψ ≤ (1 + ε) opt(P, k)`, for `0 < ε < 1`.
pub fn approx_solve(ps: &PointSet, k: usize, eps: f64, cx: &Context) -> Result<Approximation> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidEpsilon(eps));
    }
    let n = ps.non_empty()?.len();
    let gz = gonzalez_2approx(ps, k, cx)?;
    if gz.psi_sq == 0.0 {
        return Ok(gz);
    }
    // base ≤ opt ≤ 2 base
    let base = gz.psi_sq.sqrt() / 2.0;
    let steps = (2.0 / eps).ceil() as usize;
    let grid = |j: usize| base + j as f64 * eps * base / 2.0;
    let g = GroupedSkyline::build(ps, approx_kappa(n, k, eps), cx)?;
    let mut seen: HashMap<usize, Option<Cover>> = HashMap::new();
    let mut probe = |j: usize| -> bool {
        seen.entry(j)
            .or_insert_with(|| {
                let l = grid(j);
                decide_grouped(&g, k, l * l, cx).into_cover()
            })
            .is_some()
    };
    let j = search_indices(0, steps, &cx.counters, |j| !probe(j));
    probe(j);
    match seen.remove(&j).flatten() {
        Some(cover) => Ok(Approximation {
            psi_sq: cover.radius_sq(),
            centers: cover.centers(),
        }),
        None => Ok(gz),
    }
}
