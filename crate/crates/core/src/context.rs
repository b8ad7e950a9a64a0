//! Operation counters and the execution policy shared by all algorithms.
//!
//! Counters are atomics so that work done on rayon workers is attributed to
//! the same [`Context`]; totals are independent of scheduling.

use std::sync::atomic::{AtomicU64, Ordering::Relaxed};

use serde::Serialize;

use crate::geom::{self, Point};

/// Whether independent per-group work may be spread across threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    /// Falls back to sequential when the `parallel` feature is off.
    #[default]
    Parallel,
}

#[derive(Debug, Default)]
pub struct Counters {
    comparisons: AtomicU64,
    binary_searches: AtomicU64,
    search_steps: AtomicU64,
    distance_evals: AtomicU64,
    decision_calls: AtomicU64,
    matrix_touches: AtomicU64,
    predicate_calls: AtomicU64,
}

/// Plain copy of the counter values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CounterSnapshot {
    /// Coordinate comparisons, including every binary-search probe.
    pub comparisons: u64,
    pub binary_searches: u64,
    /// Probes made inside binary searches.
    pub search_steps: u64,
    pub distance_evals: u64,
    pub decision_calls: u64,
    pub matrix_touches: u64,
    pub predicate_calls: u64,
}

impl Counters {
    #[inline]
    pub(crate) fn add_comparisons(&self, n: u64) {
        self.comparisons.fetch_add(n, Relaxed);
    }

    #[inline]
    pub(crate) fn add_search(&self, steps: u64) {
        self.add_searches(1, steps);
    }

    #[inline]
    pub(crate) fn add_searches(&self, searches: u64, steps: u64) {
        self.binary_searches.fetch_add(searches, Relaxed);
        self.search_steps.fetch_add(steps, Relaxed);
        self.comparisons.fetch_add(steps, Relaxed);
    }

    #[inline]
    pub(crate) fn add_decision_call(&self) {
        self.decision_calls.fetch_add(1, Relaxed);
    }

    #[inline]
    pub(crate) fn add_matrix_touches(&self, n: u64) {
        self.matrix_touches.fetch_add(n, Relaxed);
    }

    #[inline]
    pub(crate) fn add_predicate_call(&self) {
        self.predicate_calls.fetch_add(1, Relaxed);
    }

    /// Counted squared distance.
    #[inline]
    pub fn dist_sq(&self, p: Point, q: Point) -> f64 {
        self.distance_evals.fetch_add(1, Relaxed);
        geom::dist_sq(p, q)
    }

    pub fn snapshot(&self) -> CounterSnapshot {
        CounterSnapshot {
            comparisons: self.comparisons.load(Relaxed),
            binary_searches: self.binary_searches.load(Relaxed),
            search_steps: self.search_steps.load(Relaxed),
            distance_evals: self.distance_evals.load(Relaxed),
            decision_calls: self.decision_calls.load(Relaxed),
            matrix_touches: self.matrix_touches.load(Relaxed),
            predicate_calls: self.predicate_calls.load(Relaxed),
        }
    }

    pub fn reset(&self) {
        for c in [
            &self.comparisons,
            &self.binary_searches,
            &self.search_steps,
            &self.distance_evals,
            &self.decision_calls,
            &self.matrix_touches,
            &self.predicate_calls,
        ] {
            c.store(0, Relaxed);
        }
    }
}

impl std::ops::Sub for CounterSnapshot {
    type Output = CounterSnapshot;

    fn sub(self, rhs: Self) -> Self {
        CounterSnapshot {
            comparisons: self.comparisons - rhs.comparisons,
            binary_searches: self.binary_searches - rhs.binary_searches,
            search_steps: self.search_steps - rhs.search_steps,
            distance_evals: self.distance_evals - rhs.distance_evals,
            decision_calls: self.decision_calls - rhs.decision_calls,
            matrix_touches: self.matrix_touches - rhs.matrix_touches,
            predicate_calls: self.predicate_calls - rhs.predicate_calls,
        }
    }
}

/// Counters plus execution policy, threaded through every algorithm.
#[derive(Debug, Default)]
pub struct Context {
    pub counters: Counters,
    pub exec: Exec,
}

impl Context {
    pub fn new(exec: Exec) -> Self {
        Context {
            counters: Counters::default(),
            exec,
        }
    }

    pub fn sequential() -> Self {
        Self::new(Exec::Sequential)
    }

    pub fn snapshot(&self) -> CounterSnapshot {
        self.counters.snapshot()
    }

    pub(crate) fn wants_parallel(&self) -> bool {
        cfg!(feature = "parallel") && self.exec == Exec::Parallel
    }

    /// Maps `f` over consecutive chunks of at most `size` items, in order.
    pub(crate) fn map_chunks<T, R, F>(&self, items: &[T], size: usize, f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&[T]) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            // below this the thread hand-off costs more than it saves
            const MIN_PARALLEL_ITEMS: usize = 1 << 12;
            if self.exec == Exec::Parallel && items.len() >= MIN_PARALLEL_ITEMS {
                return items.par_chunks(size).map(f).collect();
            }
        }
        items.chunks(size).map(f).collect()
    }
}

/// `slice.partition_point(pred)` restricted to `lo..hi`, counting probes.
#[inline]
pub(crate) fn search_range<T, F>(
    slice: &[T],
    lo: usize,
    hi: usize,
    ctr: &Counters,
    mut pred: F,
) -> usize
where
    F: FnMut(&T) -> bool,
{
    search_indices(lo, hi, ctr, |i| pred(&slice[i]))
}

/// First index in `lo..hi` where `pred` turns false (`pred` must be
/// true-then-false over the range).
#[inline]
pub(crate) fn search_indices<F>(lo: usize, hi: usize, ctr: &Counters, pred: F) -> usize
where
    F: FnMut(usize) -> bool,
{
    let (i, steps) = partition_steps(lo, hi, pred);
    ctr.add_search(steps);
    i
}

/// Uncounted [`search_indices`] that reports its probe count instead.
#[inline]
pub(crate) fn partition_steps<F>(lo: usize, hi: usize, mut pred: F) -> (usize, u64)
where
    F: FnMut(usize) -> bool,
{
    let (mut lo, mut hi) = (lo, hi);
    let mut steps = 0;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        steps += 1;
        if pred(mid) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    (lo, steps)
}
