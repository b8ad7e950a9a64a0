//! Rank selection in the implicit signed distance matrix of a skyline.
//!
//! Entry `(i, j)` is `+d²(S[i], S[j])` for `i < j` and `-d²(S[i], S[j])`
//! otherwise, so rows are nondecreasing and columns nonincreasing. Selection
//! works on the row-reversed matrix, which is sorted in both directions, by
//! recursive sampling of every second row and column: two ranks selected in
//! the sample bracket the wanted rank, and only `O(h)` entries fall between
//! the brackets.

use std::cell::Cell;

use crate::context::Context;
use crate::error::{Error, Result};
use crate::geom::{dist_sq, SkylineArray};

/// Implicit `h × h` matrix over a skyline. Entries are computed on demand.
#[derive(Clone, Copy, Debug)]
pub struct SortedDistanceMatrix<'a> {
    sky: &'a SkylineArray,
}

impl<'a> SortedDistanceMatrix<'a> {
    pub fn new(sky: &'a SkylineArray) -> Self {
        SortedDistanceMatrix { sky }
    }

    pub fn dim(&self) -> usize {
        self.sky.len()
    }

    /// Signed squared entry; the diagonal is `+0`.
    pub fn entry_sq(&self, i: usize, j: usize) -> f64 {
        signed_entry(self.sky, i, j)
    }

    /// The `rank`-th smallest signed squared entry, `rank` in `1..=h²`.
    pub fn select_sq(&self, rank: usize, cx: &Context) -> Result<f64> {
        let h = self.dim();
        let max = h * h;
        if rank == 0 || rank > max {
            return Err(Error::RankOutOfRange { rank, max });
        }
        let sel = Selector {
            sky: self.sky,
            h,
            touches: Cell::new(0),
        };
        let idx: Vec<usize> = (0..h).collect();
        let (v, _) = sel.biselect(&idx, rank, rank);
        cx.counters.add_matrix_touches(sel.touches.get());
        Ok(v)
    }

    /// Like [`select_sq`](Self::select_sq) but in distance units, keeping
    /// the sign.
    pub fn select(&self, rank: usize, cx: &Context) -> Result<f64> {
        let v = self.select_sq(rank, cx)?;
        Ok(v.signum() * v.abs().sqrt() + 0.0)
    }
}

pub(crate) fn signed_entry(sky: &SkylineArray, i: usize, j: usize) -> f64 {
    let d = dist_sq(sky[i], sky[j]);
    if i < j {
        d
    } else {
        -d + 0.0
    }
}

struct Selector<'a> {
    sky: &'a SkylineArray,
    h: usize,
    touches: Cell<u64>,
}

impl Selector<'_> {
    /// Entry of the row-reversed matrix, nondecreasing along rows and columns.
    #[inline]
    fn a(&self, i: usize, j: usize) -> f64 {
        self.touches.set(self.touches.get() + 1);
        signed_entry(self.sky, self.h - 1 - i, j)
    }

    /// Values of ranks `k1 ≤ k2` in the submatrix on rows and columns `idx`.
    fn biselect(&self, idx: &[usize], k1: usize, k2: usize) -> (f64, f64) {
        debug_assert!(1 <= k1 && k1 <= k2 && k2 <= idx.len() * idx.len());
        let n = idx.len();
        let at = |i: usize, j: usize| self.a(idx[i], idx[j]);
        if n <= 3 {
            let mut all: Vec<f64> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| at(i, j))
                .collect();
            all.sort_unstable_by(f64::total_cmp);
            return (all[k1 - 1], all[k2 - 1]);
        }

        let m = n.div_ceil(2);
        let sub: Vec<usize> = (0..m).map(|i| idx[(2 * i + 1).min(n - 1)]).collect();
        // #{A < x} ≤ 4 (#{A' < x} + 2m - 1) and #{A ≤ x} ≥ 4 #{A' ≤ x} - 4m
        let ra = ((k1 - 1) / 4 + 2).checked_sub(2 * m).filter(|&r| r >= 1);
        let rb = Some(k2.div_ceil(4) + m).filter(|&r| r <= m * m);
        let (lo, hi) = match (ra, rb) {
            (Some(a), Some(b)) => self.biselect(&sub, a, b),
            (Some(a), None) => (self.biselect(&sub, a, a).0, at(n - 1, n - 1)),
            (None, Some(b)) => (at(0, 0), self.biselect(&sub, b, b).1),
            (None, None) => (at(0, 0), at(n - 1, n - 1)),
        };

        let row_le = self.staircase(n, &at, |v| v > lo);
        let row_lt = self.staircase(n, &at, |v| v >= hi);
        let le_lo: usize = row_le.iter().sum();
        let lt_hi: usize = row_lt.iter().sum();
        let mut between = Vec::with_capacity(lt_hi.saturating_sub(le_lo));
        for i in 0..n {
            for j in row_le[i]..row_lt[i] {
                between.push(at(i, j));
            }
        }
        let mut pick = |k: usize| {
            if k <= le_lo {
                lo
            } else if k > lt_hi {
                hi
            } else {
                let (_, v, _) = between.select_nth_unstable_by(k - le_lo - 1, f64::total_cmp);
                *v
            }
        };
        let v1 = pick(k1);
        let v2 = pick(k2);
        (v1, v2)
    }

    /// Per row, the number of leading entries for which `past` is false.
    /// `past` must be monotone along rows and columns.
    fn staircase<F, P>(&self, n: usize, at: &F, past: P) -> Vec<usize>
    where
        F: Fn(usize, usize) -> f64,
        P: Fn(f64) -> bool,
    {
        let mut out = Vec::with_capacity(n);
        let mut j = n;
        for i in 0..n {
            while j > 0 && past(at(i, j - 1)) {
                j -= 1;
            }
            out.push(j);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Point;

    fn stair(h: usize) -> SkylineArray {
        SkylineArray::new(
            (0..h)
                .map(|i| Point::new(i as f64, (h - 1 - i) as f64))
                .collect(),
        )
        .unwrap()
    }

    fn flat(sky: &SkylineArray) -> Vec<f64> {
        let h = sky.len();
        let mut v: Vec<f64> = (0..h)
            .flat_map(|i| (0..h).map(move |j| (i, j)))
            .map(|(i, j)| signed_entry(sky, i, j))
            .collect();
        v.sort_unstable_by(f64::total_cmp);
        v
    }

    #[test]
    fn three_point_examples() {
        let cx = Context::default();
        let s = stair(3);
        let d = SortedDistanceMatrix::new(&s);
        assert_eq!(d.select_sq(7, &cx).unwrap(), 2.0);
        assert!((d.select(7, &cx).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(d.select_sq(1, &cx).unwrap(), -8.0);
        assert_eq!(d.select_sq(9, &cx).unwrap(), 8.0);
        assert_eq!(d.select_sq(5, &cx).unwrap(), 0.0);
        assert!(d.select_sq(5, &cx).unwrap().is_sign_positive());
        assert_eq!(d.select_sq(0, &cx), Err(Error::RankOutOfRange { rank: 0, max: 9 }));
        assert!(d.select_sq(10, &cx).is_err());
    }

    #[test]
    fn matrix_is_sorted() {
        let s = stair(6);
        let d = SortedDistanceMatrix::new(&s);
        for i in 0..6 {
            for j in 1..6 {
                assert!(d.entry_sq(i, j - 1) <= d.entry_sq(i, j));
                assert!(d.entry_sq(j - 1, i) >= d.entry_sq(j, i));
            }
        }
    }

    #[test]
    fn all_ranks_on_staircases() {
        let cx = Context::default();
        for h in 1..=24 {
            let s = stair(h);
            let want = flat(&s);
            let d = SortedDistanceMatrix::new(&s);
            for r in 1..=h * h {
                let before = cx.snapshot().matrix_touches;
                assert_eq!(d.select_sq(r, &cx).unwrap(), want[r - 1], "h {h} rank {r}");
                let touched = cx.snapshot().matrix_touches - before;
                assert!(touched <= 60 * h as u64, "h {h} rank {r}: {touched} touches");
            }
        }
    }
}
