mod common;

use common::{lambda_grid, point_set, staircase_set};
use pareto_kcenter::oracle::{brute_next_relevant, brute_psi_sq, brute_skyline, coverable};
use pareto_kcenter::{
    decide_grouped, decide_materialized, Context, DecisionOutcome, GroupedSkyline, Point, PointSet,
};
use proptest::prelude::*;

fn kappas(n: usize, k: usize) -> Vec<usize> {
    let mut v = vec![1, 2, 3, k, n];
    v.retain(|&x| x >= 1 && x <= n);
    v.sort();
    v.dedup();
    v
}

fn check_grouped_queries(ps: &PointSet) -> Result<(), TestCaseError> {
    let cx = Context::default();
    let sky = brute_skyline(ps);
    let s = sky.points();
    let n = ps.len();
    for kappa in kappas(n, 1) {
        let g = GroupedSkyline::build(ps, kappa, &cx).unwrap();
        prop_assert_eq!(g.group_count(), n.div_ceil(kappa));
        prop_assert_eq!(g.p0(), s[0]);
        prop_assert_eq!(g.q0(), s[s.len() - 1]);
        let real: Vec<Point> = g
            .group_skylines()
            .flat_map(|a| a[1..a.len() - 1].to_vec())
            .filter(|p| s.contains(p))
            .collect();
        prop_assert_eq!(real.len(), s.len());

        // next_on_skyline at every x of P and just around it
        for p in ps.points() {
            for x0 in [p.x - 0.5, p.x, p.x + 0.5] {
                let want = s.iter().copied().find(|q| q.x > x0).unwrap_or(g.right_dummy());
                prop_assert_eq!(g.next_on_skyline(x0, &cx), want);
            }
        }
        // membership and predecessor for every point of P
        for &p in ps.points() {
            let on = s.contains(&p);
            let prev = s.iter().copied().rev().find(|q| q.x < p.x).unwrap_or(g.left_dummy());
            prop_assert_eq!(g.test_membership_and_prev(p, &cx), (on, prev), "p {:?}", p);
        }
        // next relevant point for every skyline point and candidate radius
        for &p in s {
            for l in lambda_grid(s) {
                let got = g.next_relevant_point(p, l, &cx);
                prop_assert_eq!(got, brute_next_relevant(s, p, l), "p {:?} l {}", p, l);
            }
        }
    }
    Ok(())
}

fn check_decisions(ps: &PointSet) -> Result<(), TestCaseError> {
    let cx = Context::default();
    let sky = brute_skyline(ps);
    let s = sky.points();
    let h = s.len();
    let grid = lambda_grid(s);
    for k in 1..=h.min(6) + 1 {
        let mut was_feasible = false;
        for &l in &grid {
            let m = decide_materialized(&sky, k, l, &cx);
            prop_assert_eq!(m.is_feasible(), coverable(s, k, l));
            for kappa in kappas(ps.len(), k) {
                let g = GroupedSkyline::build(ps, kappa, &cx).unwrap();
                prop_assert_eq!(&decide_grouped(&g, k, l, &cx), &m, "k {} kappa {} l {}", k, kappa, l);
            }
            if let DecisionOutcome::Feasible(cover) = &m {
                let centers = cover.centers();
                prop_assert!(centers.len() <= k);
                prop_assert!(centers.windows(2).all(|w| w[0].x < w[1].x));
                prop_assert!(centers.iter().all(|c| s.contains(c)));
                prop_assert!(brute_psi_sq(s, &centers) <= l);
                prop_assert!(decide_materialized(&sky, k + 1, l, &cx).is_feasible());
            }
            prop_assert!(!was_feasible || m.is_feasible(), "monotone in lambda");
            was_feasible = m.is_feasible();
        }
    }
    Ok(())
}

/// After `a` clusters the greedy reaches the longest prefix that `a` disks
/// can cover.
fn check_greedy_reach(ps: &PointSet) -> Result<(), TestCaseError> {
    let cx = Context::default();
    let sky = brute_skyline(ps);
    let s = sky.points();
    for &l in &lambda_grid(s) {
        let mut a = 1;
        loop {
            let out = decide_materialized(&sky, a, l, &cx);
            let best = (0..=s.len()).rev().find(|&e| coverable(&s[..e], a, l)).unwrap();
            match out {
                DecisionOutcome::Feasible(_) => {
                    prop_assert_eq!(best, s.len());
                    break;
                }
                DecisionOutcome::Incomplete => {
                    prop_assert!(best < s.len());
                    // the full a-cluster greedy run, read from the a+1 run
                    let cover = decide_materialized(&sky, s.len(), l, &cx).into_cover().unwrap();
                    let r = cover.clusters[a - 1].right;
                    let reach = s.iter().position(|q| *q == r).unwrap() + 1;
                    prop_assert_eq!(reach, best);
                }
            }
            a += 1;
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn grouped_queries_match_scans(ps in point_set(25, 10)) {
        check_grouped_queries(&ps)?;
    }

    #[test]
    fn grouped_queries_on_staircases(ps in staircase_set(20)) {
        check_grouped_queries(&ps)?;
    }

    #[test]
    fn decisions_agree(ps in point_set(25, 12)) {
        check_decisions(&ps)?;
    }

    #[test]
    fn decisions_agree_on_staircases(ps in staircase_set(14)) {
        check_decisions(&ps)?;
    }

    #[test]
    fn greedy_reach_is_optimal(ps in staircase_set(10)) {
        check_greedy_reach(&ps)?;
    }
}

#[test]
fn fast_path_and_examples() {
    let cx = Context::default();
    let ps = common::stair(4);
    let g = GroupedSkyline::build(&ps, 2, &cx).unwrap();
    let lm = g.lambda_max();
    let out = decide_grouped(&g, 1, lm * lm + 1.0, &cx);
    assert_eq!(out.centers().unwrap(), vec![g.q0()]);
    let sky = brute_skyline(&ps);
    assert_eq!(out, decide_materialized(&sky, 1, lm * lm + 1.0, &cx));
    assert!(decide_materialized(&sky, 4, 0.0, &cx).is_feasible());
    assert!(decide_materialized(&sky, 2, 1.4143f64.powi(2), &cx).is_feasible());
    assert!(!decide_materialized(&sky, 2, 1.4f64.powi(2), &cx).is_feasible());
}
