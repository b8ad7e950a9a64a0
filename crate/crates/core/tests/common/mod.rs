#![allow(dead_code)]

use pareto_kcenter::{Point, PointSet};
use proptest::prelude::*;

/// Small integer grids produce plenty of shared coordinates.
pub fn point_set(max_n: usize, range: i32) -> impl Strategy<Value = PointSet> {
    prop::collection::vec((0..range, 0..range), 1..=max_n).prop_map(|v| {
        PointSet::from_pairs(v.into_iter().map(|(x, y)| (x as f64, y as f64))).unwrap()
    })
}

/// Points on a perturbed anti-diagonal: large skylines.
pub fn staircase_set(max_h: usize) -> impl Strategy<Value = PointSet> {
    prop::collection::vec((0..4i32, 0..4i32), 1..=max_h).prop_map(|v| {
        let h = v.len() as i32;
        PointSet::from_pairs(v.into_iter().enumerate().map(|(i, (dx, dy))| {
            let i = i as i32;
            ((8 * i + dx) as f64, (8 * (h - i) + dy) as f64)
        }))
        .unwrap()
    })
}

pub fn stair(h: usize) -> PointSet {
    PointSet::from_pairs((0..h).map(|i| (i as f64, (h - 1 - i) as f64))).unwrap()
}

/// Every non-negative pairwise squared distance on the skyline plus small
/// offsets around each.
pub fn lambda_grid(s: &[Point]) -> Vec<f64> {
    let mut v = pareto_kcenter::oracle::candidate_values(s);
    let extra: Vec<f64> = v.iter().flat_map(|&l| [l - 0.5, l + 0.5]).collect();
    v.extend(extra.into_iter().filter(|l| *l >= 0.0));
    // past λ_max of any grouping
    v.push(4.0 * (v.iter().fold(0.0, |a: f64, &b| a.max(b)) + 1.0));
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}
