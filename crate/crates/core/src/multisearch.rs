//! Search for the smallest value, over several sorted sequences, on which a
//! monotone predicate holds.
//!
//! Each round probes the weighted median of the medians of the active
//! ranges (weights are the range lengths). Whatever the answer, at least a
//! quarter of the active values is discarded, so the predicate is called
//! `O(log N)` times for `N` values in total.

use crate::context::{search_indices, Context};
use crate::error::{Error, Result};

/// A nondecreasing sequence whose values may be computed on demand.
pub trait SortedSource {
    fn len(&self) -> usize;
    fn value(&self, i: usize) -> f64;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl SortedSource for [f64] {
    fn len(&self) -> usize {
        <[f64]>::len(self)
    }

    fn value(&self, i: usize) -> f64 {
        self[i]
    }
}

impl SortedSource for Vec<f64> {
    fn len(&self) -> usize {
        Vec::len(self)
    }

    fn value(&self, i: usize) -> f64 {
        self[i]
    }
}

impl<S: SortedSource + ?Sized> SortedSource for &S {
    fn len(&self) -> usize {
        (**self).len()
    }

    fn value(&self, i: usize) -> f64 {
        (**self).value(i)
    }
}

/// Smallest value `v` among all sources with `pred(v)` true. `pred` must be
/// false-then-true over the merged sorted order. Returns
/// [`Error::NotFound`] when it holds nowhere.
pub fn multi_array_search<S, F>(sources: &[S], mut pred: F, cx: &Context) -> Result<f64>
where
    S: SortedSource,
    F: FnMut(f64) -> bool,
{
    let ctr = &cx.counters;
    let mut ranges: Vec<(usize, usize)> = sources.iter().map(|s| (0, s.len())).collect();
    let mut best: Option<f64> = None;
    let mut medians: Vec<(f64, usize)> = Vec::with_capacity(sources.len());
    loop {
        medians.clear();
        for (s, &(lo, hi)) in sources.iter().zip(&ranges) {
            if lo < hi {
                medians.push((s.value(lo + (hi - lo) / 2), hi - lo));
            }
        }
        if medians.is_empty() {
            break;
        }
        ctr.add_comparisons(medians.len() as u64);
        medians.sort_unstable_by(|a, b| a.0.total_cmp(&b.0));
        let total: usize = medians.iter().map(|m| m.1).sum();
        let mut acc = 0;
        let pivot = medians
            .iter()
            .find(|m| {
                acc += m.1;
                2 * acc >= total
            })
            .expect("non-empty weights")
            .0;

        ctr.add_predicate_call();
        if pred(pivot) {
            best = Some(best.map_or(pivot, |b| b.min(pivot)));
            for (s, r) in sources.iter().zip(ranges.iter_mut()) {
                if r.0 < r.1 {
                    r.1 = search_indices(r.0, r.1, ctr, |i| s.value(i) < pivot);
                }
            }
        } else {
            for (s, r) in sources.iter().zip(ranges.iter_mut()) {
                if r.0 < r.1 {
                    r.0 = search_indices(r.0, r.1, ctr, |i| s.value(i) <= pivot);
                }
            }
        }
    }
    best.ok_or(Error::NotFound)
}
