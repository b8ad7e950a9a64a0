//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use pareto_kcenter::oracle::{
    brute_matrix_rank, brute_opt, brute_psi_sq, brute_skyline, candidate_values, OptMethod,
};
use pareto_kcenter::{
    approx_solve, decide_grouped, decide_materialized, gonzalez_2approx, parametric_kappa,
    parametric_search, skyline_bounded, skyline_optimal, slow_skyline, solve_one_center,
    solve_parametric, solve_via_matrix, BoundedResult, Context, Generator, GroupedSkyline,
    InstanceSpec, PointSet, SkylineArray, SortedDistanceMatrix,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {{
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    }};
}

/// Random generator, size in `1..=max_n` and parameters that range from
/// tie-heavy small grids to wide coordinates.
fn sample(rng: &mut ChaCha8Rng, max_n: usize) -> (InstanceSpec, PointSet) {
    let g = Generator::ALL[rng.random_range(0..4)];
    let n = rng.random_range(1..=max_n);
    let params = match g {
        Generator::UniformSquare => vec![[8.0, 100.0, 1e6][rng.random_range(0..3)]],
        Generator::Clustered => vec![
            rng.random_range(1..=8) as f64,
            [2.0, 50.0, 2e4][rng.random_range(0..3)],
            [100.0, 1e6][rng.random_range(0..2)],
        ],
        Generator::Staircase => vec![
            rng.random_range(1..=n.min(64)) as f64,
            [2.0, 3.0, 4096.0][rng.random_range(0..3)],
        ],
        Generator::CircleQuadrant => vec![
            [30.0, 1e6][rng.random_range(0..2)],
            [0.0, 0.01, 0.2][rng.random_range(0..3)],
        ],
    };
    let spec = InstanceSpec::new(g, n, rng.random()).with_params(params);
    let ps = PointSet::new(spec.generate()).expect("generated points are finite");
    (spec, ps)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for i in 0..1000 {
        let (spec, ps) = sample(&mut rng, 2000);
        let cx = Context::default();
        let brute = brute_skyline(&ps);
        let slow = slow_skyline(&ps, &cx).map_err(|e| e.to_string())?;
        let opt = skyline_optimal(&ps, &cx).map_err(|e| e.to_string())?;
        ensure!(slow == brute && opt == brute, "instance {i} ({spec:?}) differs");
    }
    let t = start.elapsed();
    ensure!(t < Duration::from_secs(60), "took {t:?}");
    Ok(format!("1000 instances in {:.1}s", t.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut calls = 0;
    for i in 0..200 {
        let (spec, ps) = sample(&mut rng, 500);
        let brute = brute_skyline(&ps);
        let h = brute.len();
        for s in 1..=h + 2 {
            calls += 1;
            let r = skyline_bounded(&ps, s, &Context::default()).map_err(|e| e.to_string())?;
            match r {
                BoundedResult::Incomplete => ensure!(s < h, "instance {i} ({spec:?}) s={s} h={h}: incomplete"),
                BoundedResult::Complete(sky) => {
                    ensure!(s >= h, "instance {i} ({spec:?}) s={s} h={h}: complete");
                    ensure!(sky == brute, "instance {i} s={s}: wrong skyline");
                }
            }
        }
    }
    Ok(format!("200 instances, {calls} bounded calls"))
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut feasible = 0;
    for i in 0..500 {
        let (spec, ps) = sample(&mut rng, 200);
        let sky = brute_skyline(&ps);
        let cands = candidate_values(sky.points());
        let k = rng.random_range(1..=sky.len().min(8) + 1);
        let base = cands[rng.random_range(0..cands.len())];
        let lambda_sq = match rng.random_range(0..5) {
            0 => base,
            1 => base.next_down(),
            2 => base.next_up(),
            3 => base * (1.0 - 1e-9),
            _ => base + 0.5,
        };
        let cx = Context::default();
        let m = decide_materialized(&sky, k, lambda_sq, &cx);
        feasible += usize::from(m.is_feasible());
        for kappa in [1, 2, k, ps.len()] {
            let kappa = kappa.min(ps.len());
            let g = GroupedSkyline::build(&ps, kappa, &cx).map_err(|e| e.to_string())?;
            let d = decide_grouped(&g, k, lambda_sq, &cx);
            ensure!(
                d == m,
                "triple {i} ({spec:?}) k={k} kappa={kappa} lambda_sq={lambda_sq}: {d:?} vs {m:?}"
            );
        }
    }
    Ok(format!("500 triples, {feasible} feasible"))
}

/// Criterion 4 on one instance; returns `opt²` and the number of forced
/// parametric runs.
fn check_agreement(ps: &PointSet, k: usize) -> Result<(f64, usize), String> {
    let e = |e: pareto_kcenter::Error| e.to_string();
    let sky = brute_skyline(ps);
    let s = sky.points();
    let want = brute_opt(ps, k, OptMethod::Candidates).map_err(e)?;
    let cx = Context::default();
    let mut results = vec![
        solve_via_matrix(ps, k, &cx).map_err(e)?,
        solve_parametric(ps, k, &cx).map_err(e)?,
    ];
    let kappas = [1, k, parametric_kappa(ps.len(), k)];
    for kappa in kappas {
        results.push(parametric_search(ps, k, kappa.min(ps.len()), &cx).map_err(e)?);
    }
    for r in &results {
        ensure!(
            r.lambda_star_sq.to_bits() == want.to_bits(),
            "{} gives {} not {want}",
            r.algorithm,
            r.lambda_star_sq
        );
        ensure!(r.centers.len() <= k, "{} uses {} centers", r.algorithm, r.centers.len());
        ensure!(r.centers.iter().all(|c| s.contains(c)), "{} center off skyline", r.algorithm);
        let psi = brute_psi_sq(s, &r.centers);
        ensure!(psi.to_bits() == want.to_bits(), "{} centers cover at {psi} not {want}", r.algorithm);
    }
    Ok((want, kappas.len()))
}

/// Criterion 5: feasible at `opt²`, incomplete at the next smaller candidate.
fn check_certificate(ps: &PointSet, k: usize, opt: f64) -> Result<(), String> {
    let sky = brute_skyline(ps);
    let cx = Context::default();
    let g = GroupedSkyline::build(ps, k.min(ps.len()), &cx).map_err(|e| e.to_string())?;
    ensure!(decide_materialized(&sky, k, opt, &cx).is_feasible(), "decide({opt}) incomplete");
    ensure!(decide_grouped(&g, k, opt, &cx).is_feasible(), "grouped decide({opt}) incomplete");
    let cands = candidate_values(sky.points());
    let i = cands.partition_point(|&c| c < opt);
    if i > 0 {
        let below = cands[i - 1];
        ensure!(
            !decide_materialized(&sky, k, below, &cx).is_feasible(),
            "decide({below}) below opt {opt} is feasible"
        );
        ensure!(
            !decide_grouped(&g, k, below, &cx).is_feasible(),
            "grouped decide({below}) below opt {opt} is feasible"
        );
    }
    Ok(())
}

fn criteria_4_5() -> (Outcome, Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut forced = 0;
    let mut certified = 0;
    let mut fail4 = None;
    let mut fail5 = None;
    for i in 0..500 {
        let (spec, ps) = sample(&mut rng, 300);
        let k = rng.random_range(1..=8);
        let ctx = |msg: String| format!("instance {i} ({spec:?}) k={k}: {msg}");
        // the certificate uses the oracle value, so it does not depend on the solvers
        let opt = match brute_opt(&ps, k, OptMethod::Candidates) {
            Ok(v) => v,
            Err(e) => return (Err(ctx(e.to_string())), Err(ctx(e.to_string()))),
        };
        match check_agreement(&ps, k) {
            Ok((_, f)) => forced += f,
            Err(m) => {
                fail4.get_or_insert(ctx(m));
            }
        }
        match check_certificate(&ps, k, opt) {
            Ok(()) => certified += 1,
            Err(m) => {
                fail5.get_or_insert(ctx(m));
            }
        }
    }
    (
        fail4.map_or_else(
            || Ok(format!("500 instances bitwise equal, {forced} forced parametric runs")),
            Err,
        ),
        fail5.map_or_else(|| Ok(format!("{certified} certificates")), Err),
    )
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = 0;
    let mut worst = 0.0f64;
    while done < 50 {
        let (_, ps) = sample(&mut rng, 120);
        let sky: SkylineArray = brute_skyline(&ps);
        let h = sky.len();
        if h > 40 {
            continue;
        }
        done += 1;
        let m = SortedDistanceMatrix::new(&sky);
        for rank in 1..=h * h {
            let cx = Context::default();
            let got = m.select_sq(rank, &cx).map_err(|e| e.to_string())?;
            let want = brute_matrix_rank(&sky, rank).map_err(|e| e.to_string())?;
            ensure!(got.to_bits() == want.to_bits(), "h={h} rank={rank}: {got} vs {want}");
            let touches = cx.snapshot().matrix_touches;
            ensure!(touches <= 60 * h as u64, "h={h} rank={rank}: {touches} touches");
            worst = worst.max(touches as f64 / h as f64);
        }
    }
    Ok(format!("50 instances, at most {worst:.1}h touches"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let e = |e: pareto_kcenter::Error| e.to_string();
    let mut worst_evals = 0.0f64;
    for i in 0..500 {
        let (spec, ps) = sample(&mut rng, 300);
        let n = ps.len();
        let opt1 = brute_opt(&ps, 1, OptMethod::Candidates).map_err(e)?;
        let cx = Context::default();
        let one = solve_one_center(&ps, &cx).map_err(e)?;
        ensure!(one.lambda_star_sq.to_bits() == opt1.to_bits(), "instance {i} ({spec:?}): one-center");
        let m = solve_via_matrix(&ps, 1, &Context::default()).map_err(e)?;
        ensure!(m.lambda_star_sq.to_bits() == opt1.to_bits(), "instance {i}: matrix k=1");
        let evals = cx.snapshot().distance_evals;
        ensure!(evals <= 3 * n as u64, "instance {i}: {evals} distance evals for n={n}");
        worst_evals = worst_evals.max(evals as f64 / n as f64);

        let k = rng.random_range(1..=8);
        let opt = brute_opt(&ps, k, OptMethod::Candidates).map_err(e)?;
        let gz = gonzalez_2approx(&ps, k, &Context::default()).map_err(e)?;
        ensure!(gz.psi_sq <= 4.0 * opt, "instance {i} k={k}: gonzalez {} vs opt {opt}", gz.psi_sq);
        for eps in [0.5, 0.1, 0.01] {
            let a = approx_solve(&ps, k, eps, &Context::default()).map_err(e)?;
            let bound = (1.0 + eps) * (1.0 + eps) * opt;
            ensure!(a.psi_sq <= bound, "instance {i} k={k} eps={eps}: {} > {bound}", a.psi_sq);
            ensure!(a.centers.len() <= k, "instance {i}: too many centers");
        }
    }
    Ok(format!("500 instances, one-center at most {worst_evals:.2}n distance evals"))
}

fn criterion_8() -> Outcome {
    let e = |e: pareto_kcenter::Error| e.to_string();
    // fixed h, doubling n
    let mut prev: Option<u64> = None;
    let mut ratios = Vec::new();
    for p in 14..=18 {
        let ps = PointSet::new(
            InstanceSpec::new(Generator::Staircase, 1 << p, 8)
                .with_params(vec![64.0, 4096.0])
                .generate(),
        )
        .map_err(e)?;
        let cx = Context::default();
        let sky = skyline_optimal(&ps, &cx).map_err(e)?;
        ensure!(sky.len() == 64, "h = {}", sky.len());
        let c = cx.snapshot().comparisons;
        if let Some(q) = prev {
            ratios.push(c as f64 / q as f64);
        }
        prev = Some(c);
    }
    for &r in &ratios {
        ensure!((1.6..=2.6).contains(&r), "comparison ratios {ratios:.3?}");
    }

    // fixed n, doubling k, all points on the skyline, λ just below opt
    let n = 1usize << 17;
    let ps = PointSet::new(
        InstanceSpec::new(Generator::Staircase, n, 8)
            .with_params(vec![n as f64, 3.0])
            .generate(),
    )
    .map_err(e)?;
    let mut per_k = Vec::new();
    for p in 1..=6 {
        let k = 1usize << p;
        let opt = solve_parametric(&ps, k, &Context::default()).map_err(e)?.lambda_star_sq;
        let g = GroupedSkyline::build(&ps, k, &Context::default()).map_err(e)?;
        let cx = Context::default();
        let out = decide_grouped(&g, k, opt.next_down(), &cx);
        ensure!(!out.is_feasible(), "k={k}: feasible below opt");
        let snap = cx.snapshot();
        let model = n as f64 * (k as f64).log2();
        per_k.push((k, snap.binary_searches, snap.search_steps, snap.search_steps as f64 / model));
    }
    // least squares in log space
    let c = (per_k.iter().map(|t| t.3.ln()).sum::<f64>() / per_k.len() as f64).exp();
    for &(k, searches, steps, r) in &per_k {
        ensure!(
            r / c <= 1.5 && c / r <= 1.5,
            "k={k}: {steps} steps ({searches} searches) is {:.2}x the fit c={c:.3}; all {per_k:?}",
            r / c
        );
    }
    let spread = per_k.iter().map(|t| t.3 / c).fold((f64::MAX, 0.0f64), |(a, b), v| (a.min(v), b.max(v)));
    Ok(format!(
        "n ratios {ratios:.3?}; steps/(n log2 k) fit c={c:.3}, spread {:.2}..{:.2}",
        spread.0, spread.1
    ))
}

fn criterion_9() -> Outcome {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let input = golden.join("staircase4.txt");
    let bin = env!("CARGO_BIN_EXE_pareto-kcenter");
    let run = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .map_err(|e| e.to_string())
    };
    let input = input.to_str().unwrap();
    let want = std::fs::read(golden.join("solve_k2.txt")).map_err(|e| e.to_string())?;
    for _ in 0..2 {
        let o = run(&["solve", input, "--k", "2", "--method", "auto"])?;
        ensure!(o.status.code() == Some(0), "solve exit {:?}", o.status.code());
        ensure!(o.stdout == want, "solve output differs from golden");
    }
    ensure!(
        String::from_utf8_lossy(&want).contains("lambda_star=1.414213562373\n"),
        "golden lambda"
    );
    let dir = std::env::temp_dir().join(format!("pareto-kcenter-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let svg = dir.join("plot.svg");
    let o = run(&["plot", input, "--k", "2", "-o", svg.to_str().unwrap()])?;
    ensure!(o.status.code() == Some(0), "plot exit {:?}", o.status.code());
    let got = std::fs::read(&svg).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_dir_all(&dir);
    let want_svg = std::fs::read(golden.join("plot_k2.svg")).map_err(|e| e.to_string())?;
    ensure!(got == want_svg, "svg differs from golden");
    Ok("solve and plot byte-stable".into())
}

fn main() {
    let mut failed = 0;
    let mut report = |id: &str, name: &str, outcome: Outcome, took: Duration| {
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} criterion {id}: {name} [{detail}] ({:.1}s)", took.as_secs_f64());
    };
    let timed = |f: fn() -> Outcome| {
        let t = Instant::now();
        let o = f();
        (o, t.elapsed())
    };
    let (o, t) = timed(criterion_1);
    report("1", "skyline three-way equivalence", o, t);
    let (o, t) = timed(criterion_2);
    report("2", "bounded skyline dichotomy", o, t);
    let (o, t) = timed(criterion_3);
    report("3", "decision equivalence", o, t);
    let t = Instant::now();
    let (o4, o5) = criteria_4_5();
    let t = t.elapsed();
    report("4", "exact solver agreement", o4, t);
    report("5", "optimality certificate", o5, t);
    let (o, t) = timed(criterion_6);
    report("6", "sorted matrix selection", o, t);
    let (o, t) = timed(criterion_7);
    report("7", "small-k solvers", o, t);
    let (o, t) = timed(criterion_8);
    report("8", "counter scaling", o, t);
    let (o, t) = timed(criterion_9);
    report("9", "CLI golden output", o, t);
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
