//! Greedy decision procedures for `opt(P, k) ≤ λ`.
//!
//! Both walk the skyline left to right. Cluster `a` starts at the first
//! uncovered point `ℓ_a`, takes its center `c_a = nrp(ℓ_a, λ)` and extends to
//! `r_a = nrp(c_a, λ)`. One variant scans a materialized skyline, the other
//! answers the same steps with [`GroupedSkyline`] queries.

use serde::Serialize;

use crate::context::Context;
use crate::geom::{dist_sq, Point, SkylineArray};
use crate::grouped::GroupedSkyline;

/// One greedy cluster: `center` covers the skyline from `left` to `right`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Cluster {
    pub left: Point,
    pub center: Point,
    pub right: Point,
}

impl Cluster {
    /// Larger of the squared distances from the center to the two ends.
    pub fn radius_sq(&self) -> f64 {
        dist_sq(self.center, self.left).max(dist_sq(self.center, self.right))
    }
}

/// A feasible solution: clusters in increasing `x`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cover {
    pub clusters: Vec<Cluster>,
}

impl Cover {
    pub fn centers(&self) -> Vec<Point> {
        self.clusters.iter().map(|c| c.center).collect()
    }

    /// Largest cluster radius, squared. At least `ψ(Q, P)²`, and equal to it
    /// whenever the cover came from a decision at the optimal radius.
    pub fn radius_sq(&self) -> f64 {
        self.clusters
            .iter()
            .map(Cluster::radius_sq)
            .fold(0.0, f64::max)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum DecisionOutcome {
    Feasible(Cover),
    /// `λ < opt(P, k)`.
    Incomplete,
}

impl DecisionOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, DecisionOutcome::Feasible(_))
    }

    pub fn cover(&self) -> Option<&Cover> {
        match self {
            DecisionOutcome::Feasible(c) => Some(c),
            DecisionOutcome::Incomplete => None,
        }
    }

    pub fn into_cover(self) -> Option<Cover> {
        match self {
            DecisionOutcome::Feasible(c) => Some(c),
            DecisionOutcome::Incomplete => None,
        }
    }

    pub fn centers(&self) -> Option<Vec<Point>> {
        self.cover().map(Cover::centers)
    }
}

/// `O(h)` greedy over a materialized skyline. The scan index never moves
/// backwards. `k` larger than `h` is clamped to `h`.
pub fn decide_materialized(
    sky: &SkylineArray,
    k: usize,
    lambda_sq: f64,
    cx: &Context,
) -> DecisionOutcome {
    cx.counters.add_decision_call();
    let s = sky.points();
    let h = s.len();
    if h == 0 || k == 0 || lambda_sq < 0.0 {
        return if h == 0 {
            DecisionOutcome::Feasible(Cover { clusters: vec![] })
        } else {
            DecisionOutcome::Incomplete
        };
    }
    let k = k.min(h);
    let ctr = &cx.counters;
    let mut clusters = Vec::with_capacity(k);
    let mut i = 0;
    for _ in 0..k {
        let l = i;
        while i < h && ctr.dist_sq(s[l], s[i]) <= lambda_sq {
            i += 1;
        }
        let c = i - 1;
        while i < h && ctr.dist_sq(s[c], s[i]) <= lambda_sq {
            i += 1;
        }
        clusters.push(Cluster {
            left: s[l],
            center: s[c],
            right: s[i - 1],
        });
        if i == h {
            return DecisionOutcome::Feasible(Cover { clusters });
        }
    }
    DecisionOutcome::Incomplete
}

/// Greedy decision on a [`GroupedSkyline`]; `O(k (n/κ) log κ)` per call.
/// Returns exactly the clusters of [`decide_materialized`] on `sky(P)`. For
/// `λ ≥ λ_max` that is the single cluster centered at `q0`, answered without
/// any query.
pub fn decide_grouped(
    g: &GroupedSkyline,
    k: usize,
    lambda_sq: f64,
    cx: &Context,
) -> DecisionOutcome {
    cx.counters.add_decision_call();
    if k == 0 || lambda_sq < 0.0 {
        return DecisionOutcome::Incomplete;
    }
    let lambda_max = g.lambda_max();
    if lambda_sq >= lambda_max * lambda_max {
        return DecisionOutcome::Feasible(Cover {
            clusters: vec![Cluster {
                left: g.p0(),
                center: g.q0(),
                right: g.q0(),
            }],
        });
    }
    let m = g.sentinel_bound();
    let mut clusters = Vec::new();
    let mut left = g.p0();
    for _ in 0..k {
        let center = g.next_relevant_point(left, lambda_sq, cx);
        let right = g.next_relevant_point(center, lambda_sq, cx);
        clusters.push(Cluster {
            left,
            center,
            right,
        });
        left = g.next_on_skyline(right.x, cx);
        if left.x == m {
            return DecisionOutcome::Feasible(Cover { clusters });
        }
    }
    DecisionOutcome::Incomplete
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::PointSet;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn stair4() -> SkylineArray {
        SkylineArray::new(vec![pt(0.0, 3.0), pt(1.0, 2.0), pt(2.0, 1.0), pt(3.0, 0.0)]).unwrap()
    }

    #[test]
    fn materialized_examples() {
        let cx = Context::default();
        let s = stair4();
        let out = decide_materialized(&s, 2, 2.0, &cx);
        assert_eq!(out.centers().unwrap(), vec![pt(1.0, 2.0), pt(3.0, 0.0)]);
        let cover = out.cover().unwrap();
        assert_eq!(cover.clusters[0], Cluster { left: pt(0.0, 3.0), center: pt(1.0, 2.0), right: pt(2.0, 1.0) });
        assert_eq!(decide_materialized(&s, 1, 4.0, &cx), DecisionOutcome::Incomplete);
        let all = decide_materialized(&s, 7, 0.0, &cx);
        assert_eq!(all.centers().unwrap(), s.points().to_vec());
        assert!(decide_materialized(&s, 1, 18.0, &cx).is_feasible());
        assert!(!decide_materialized(&s, 1, 7.99, &cx).is_feasible());
        assert!(decide_materialized(&s, 1, 8.0, &cx).is_feasible());
    }

    #[test]
    fn grouped_matches_materialized_on_staircase() {
        let cx = Context::default();
        let ps = PointSet::new(stair4().into_points()).unwrap();
        for kappa in 1..=4 {
            let g = GroupedSkyline::build(&ps, kappa, &cx).unwrap();
            for k in 1..=5 {
                for lam in [0.0, 1.0, 2.0, 2.5, 4.0, 8.0, 9.0, 17.9] {
                    assert_eq!(
                        decide_grouped(&g, k, lam, &cx),
                        decide_materialized(&stair4(), k, lam, &cx),
                        "kappa {kappa} k {k} lambda_sq {lam}"
                    );
                }
            }
        }
    }

    #[test]
    fn grouped_fast_path_uses_right_end() {
        let cx = Context::default();
        let ps = PointSet::new(stair4().into_points()).unwrap();
        let g = GroupedSkyline::build(&ps, 2, &cx).unwrap();
        let lm = g.lambda_max();
        let out = decide_grouped(&g, 1, lm * lm, &cx);
        assert_eq!(out.centers().unwrap(), vec![g.q0()]);
        assert_eq!(out, decide_materialized(&stair4(), 1, lm * lm, &cx));
    }

    #[test]
    fn cover_radius() {
        let cx = Context::default();
        let out = decide_materialized(&stair4(), 2, 2.0, &cx);
        assert_eq!(out.cover().unwrap().radius_sq(), 2.0);
    }
}
