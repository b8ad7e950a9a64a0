//! Brute-force reference implementations used to check the fast paths.
//!
//! Nothing here shares code with the algorithms under test beyond the
//! basic predicates of [`geom`](crate::geom).

use crate::error::{Error, Result};
use crate::geom::{dist_sq, dominates, Point, PointSet, SkylineArray};

/// Largest skyline accepted by [`OptMethod::Candidates`].
pub const CANDIDATE_LIMIT: usize = 2000;
/// Largest skyline accepted by [`OptMethod::Subsets`].
pub const SUBSET_LIMIT: usize = 20;

/// Skyline by pairwise dominance, `O(n²)`. Empty input gives an empty array.
pub fn brute_skyline(ps: &PointSet) -> SkylineArray {
    let pts = ps.points();
    let mut out: Vec<Point> = pts
        .iter()
        .enumerate()
        .filter(|&(i, &p)| {
            !pts
                .iter()
                .enumerate()
                .any(|(j, &q)| i != j && dominates(q, p))
        })
        .map(|(_, &p)| p)
        .collect();
    out.sort_by(|a, b| a.x.total_cmp(&b.x));
    SkylineArray::new(out).expect("undominated points form a staircase")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptMethod {
    /// Binary search over sorted pairwise distances with a greedy check.
    Candidates,
    /// Every `min(k, h)`-subset of the skyline.
    Subsets,
}

/// `opt(P, k)²` by brute force.
pub fn brute_opt(ps: &PointSet, k: usize, method: OptMethod) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    if ps.is_empty() {
        return Err(Error::EmptyInput);
    }
    let s = brute_skyline(ps);
    brute_opt_on(s.points(), k, method)
}

/// `opt(S, k)²` for an explicit skyline.
pub fn brute_opt_on(s: &[Point], k: usize, method: OptMethod) -> Result<f64> {
    let h = s.len();
    if k == 0 {
        return Err(Error::InvalidK);
    }
    if k >= h {
        return Ok(0.0);
    }
    match method {
        OptMethod::Candidates => {
            if h > CANDIDATE_LIMIT {
                return Err(Error::InstanceTooLarge {
                    what: "skyline",
                    size: h,
                    limit: CANDIDATE_LIMIT,
                });
            }
            let cands = candidate_values(s);
            let i = cands.partition_point(|&l| !coverable(s, k, l));
            Ok(cands[i])
        }
        OptMethod::Subsets => {
            if h > SUBSET_LIMIT {
                return Err(Error::InstanceTooLarge {
                    what: "skyline",
                    size: h,
                    limit: SUBSET_LIMIT,
                });
            }
            let mut best = f64::INFINITY;
            let mut mask: u32 = (1 << k) - 1;
            while mask < (1 << h) {
                let centers: Vec<Point> = (0..h).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                best = best.min(brute_psi_sq(s, &centers));
                // next mask with the same number of bits
                let c = mask & mask.wrapping_neg();
                let r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
            Ok(best)
        }
    }
}

/// Sorted distinct non-negative squared distances between skyline points,
/// including 0.
pub fn candidate_values(s: &[Point]) -> Vec<f64> {
    let mut v = vec![0.0];
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            v.push(dist_sq(s[i], s[j]));
        }
    }
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

/// Whether `k` disks of squared radius `lambda_sq` centered at points of `s`
/// cover `s`. Repeatedly takes the leftmost uncovered point, puts a center
/// on the rightmost point within reach of it, and marks everything that
/// center reaches.
pub fn coverable(s: &[Point], k: usize, lambda_sq: f64) -> bool {
    let mut covered = vec![false; s.len()];
    let mut used = 0;
    while let Some(first) = covered.iter().position(|c| !c) {
        used += 1;
        if used > k {
            return false;
        }
        let center = (0..s.len())
            .filter(|&j| j >= first && dist_sq(s[first], s[j]) <= lambda_sq)
            .max()
            .unwrap_or(first);
        for (j, c) in covered.iter_mut().enumerate() {
            if dist_sq(s[center], s[j]) <= lambda_sq {
                *c = true;
            }
        }
    }
    true
}

/// `ψ(Q, S)²` by full scan. Empty `centers` gives infinity for non-empty `s`.
pub fn brute_psi_sq(s: &[Point], centers: &[Point]) -> f64 {
    s.iter()
        .map(|&p| {
            centers
                .iter()
                .map(|&c| dist_sq(p, c))
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Rank-th smallest signed squared matrix entry, by flattening and sorting.
pub fn brute_matrix_rank(s: &SkylineArray, rank: usize) -> Result<f64> {
    let h = s.len();
    if rank == 0 || rank > h * h {
        return Err(Error::RankOutOfRange { rank, max: h * h });
    }
    let mut all = Vec::with_capacity(h * h);
    for i in 0..h {
        for j in 0..h {
            let d = dist_sq(s[i], s[j]);
            all.push(if i < j { d } else { 0.0 - d });
        }
    }
    all.sort_by(f64::total_cmp);
    Ok(all[rank - 1])
}

/// Farthest skyline point right of or at `p` within `lambda_sq`, by scan.
pub fn brute_next_relevant(s: &[Point], p: Point, lambda_sq: f64) -> Point {
    s.iter()
        .copied()
        .filter(|q| q.x >= p.x && dist_sq(p, *q) <= lambda_sq)
        .max_by(|a, b| a.x.total_cmp(&b.x))
        .unwrap_or(p)
}
