//! `bench` subcommand: time one method over generated instances of growing
//! size and report how time and counters scale when `n` doubles.

use std::io::Write;
use std::time::Instant;

use clap::Args;
use pareto_kcenter::{
    approx_solve, decide_grouped, gonzalez_2approx, parametric_kappa, parametric_search,
    skyline_optimal, slow_skyline, solve_one_center, solve_parametric, solve_via_matrix, Context,
    CounterSnapshot, GroupedSkyline, InstanceSpec, PointSet,
};
use serde::Serialize;

use crate::{parse_generator, resolve_seed, CliError, EXIT_OK};

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value = "uniform-square")]
    generator: String,
    /// Instance sizes, comma separated
    #[arg(short = 'n', long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    #[arg(short = 'k', long = "k", value_delimiter = ',', default_values_t = [1usize])]
    k: Vec<usize>,
    /// optimal-skyline | slow-skyline | grouped-decide | matrix | parametric
    /// | auto | gonzalez | one-center | approx
    #[arg(long, default_value = "optimal-skyline")]
    method: String,
    /// Epsilon for `approx`
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    params: Vec<f64>,
    /// Timed repetitions; the minimum is reported
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchMethod {
    OptimalSkyline,
    SlowSkyline,
    GroupedDecide,
    Matrix,
    Parametric,
    Auto,
    Gonzalez,
    OneCenter,
    Approx,
}

impl BenchMethod {
    pub const ALL: [BenchMethod; 9] = [
        BenchMethod::OptimalSkyline,
        BenchMethod::SlowSkyline,
        BenchMethod::GroupedDecide,
        BenchMethod::Matrix,
        BenchMethod::Parametric,
        BenchMethod::Auto,
        BenchMethod::Gonzalez,
        BenchMethod::OneCenter,
        BenchMethod::Approx,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BenchMethod::OptimalSkyline => "optimal-skyline",
            BenchMethod::SlowSkyline => "slow-skyline",
            BenchMethod::GroupedDecide => "grouped-decide",
            BenchMethod::Matrix => "matrix",
            BenchMethod::Parametric => "parametric",
            BenchMethod::Auto => "auto",
            BenchMethod::Gonzalez => "gonzalez",
            BenchMethod::OneCenter => "one-center",
            BenchMethod::Approx => "approx",
        }
    }

    pub fn parse(s: &str) -> Result<Self, CliError> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown bench method `{s}`")))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    /// Requested size; duplicates are dropped before solving.
    pub n: usize,
    pub h: usize,
    pub k: usize,
    pub method: &'static str,
    pub time_ms: f64,
    pub counters: CounterSnapshot,
    /// Against the row with the same `k` and half the `n`, if present.
    pub time_ratio: Option<f64>,
    pub comparison_ratio: Option<f64>,
}

/// Runs `method` once on `ps` and returns the counters of that run.
pub fn measure_once(
    method: BenchMethod,
    ps: &PointSet,
    k: usize,
    eps: f64,
) -> Result<CounterSnapshot, CliError> {
    let cx = Context::default();
    match method {
        BenchMethod::OptimalSkyline => drop(skyline_optimal(ps, &cx)?),
        BenchMethod::SlowSkyline => drop(slow_skyline(ps, &cx)?),
        BenchMethod::GroupedDecide => {
            // ψ/2 is at most the optimum, so the greedy usually runs all k rounds
            let lambda_sq = gonzalez_2approx(ps, k, &Context::default())?.psi_sq / 4.0;
            let g = GroupedSkyline::build(ps, k.min(ps.len()), &cx)?;
            drop(decide_grouped(&g, k, lambda_sq, &cx));
        }
        BenchMethod::Matrix => drop(solve_via_matrix(ps, k, &cx)?),
        BenchMethod::Parametric => {
            drop(parametric_search(ps, k, parametric_kappa(ps.len(), k), &cx)?)
        }
        BenchMethod::Auto => drop(solve_parametric(ps, k, &cx)?),
        BenchMethod::Gonzalez => drop(gonzalez_2approx(ps, k, &cx)?),
        BenchMethod::OneCenter => drop(solve_one_center(ps, &cx)?),
        BenchMethod::Approx => drop(approx_solve(ps, k, eps, &cx)?),
    }
    Ok(cx.snapshot())
}

fn generate_all(specs: &[InstanceSpec]) -> Result<Vec<PointSet>, CliError> {
    #[cfg(feature = "parallel")]
    let raw: Vec<_> = {
        use rayon::prelude::*;
        specs.par_iter().map(InstanceSpec::generate).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let raw: Vec<_> = specs.iter().map(InstanceSpec::generate).collect();
    raw.into_iter()
        .map(|pts| PointSet::new(pts).map_err(CliError::from))
        .collect()
}

pub(crate) fn cmd_bench(a: BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let method = BenchMethod::parse(&a.method)?;
    if a.n.contains(&0) {
        return Err(CliError::Usage("every n must be at least 1".into()));
    }
    if a.k.contains(&0) {
        return Err(CliError::Usage("every k must be at least 1".into()));
    }
    if method == BenchMethod::OneCenter && a.k.iter().any(|&k| k != 1) {
        return Err(CliError::Usage("method one-center requires k = 1".into()));
    }
    if method == BenchMethod::Approx && !(a.eps > 0.0 && a.eps < 1.0) {
        return Err(CliError::Usage(format!("epsilon must lie in (0, 1), got {}", a.eps)));
    }
    let generator = parse_generator(&a.generator)?;
    let seed = resolve_seed(a.seed)?;
    let specs: Vec<InstanceSpec> = a
        .n
        .iter()
        .map(|&n| InstanceSpec::new(generator, n, seed).with_params(a.params.clone()))
        .collect();
    let instances = generate_all(&specs)?;
    let trials = a.trials.max(1);

    let mut rows: Vec<BenchRow> = Vec::new();
    for &k in &a.k {
        for (&n, ps) in a.n.iter().zip(&instances) {
            let h = skyline_optimal(ps, &Context::default())?.len();
            let mut best = f64::INFINITY;
            let mut counters = CounterSnapshot::default();
            for _ in 0..trials {
                let start = Instant::now();
                counters = measure_once(method, ps, k, a.eps)?;
                best = best.min(start.elapsed().as_secs_f64() * 1e3);
            }
            let half = rows
                .iter()
                .find(|r| r.k == k && 2 * r.n == n)
                .map(|r| (r.time_ms, r.counters.comparisons));
            rows.push(BenchRow {
                n,
                h,
                k,
                method: method.name(),
                time_ms: best,
                counters,
                time_ratio: half.map(|(t, _)| best / t),
                comparison_ratio: half
                    .filter(|&(_, c)| c > 0)
                    .map(|(_, c)| counters.comparisons as f64 / c as f64),
            });
        }
    }

    if a.json {
        serde_json::to_writer(&mut *out, &rows).map_err(|e| CliError::Output(e.to_string()))?;
        writeln!(out)?;
        return Ok(EXIT_OK);
    }
    writeln!(
        out,
        "{:>9} {:>9} {:>5} {:>16} {:>11} {:>12} {:>10} {:>10} {:>9} {:>7} {:>7}",
        "n", "h", "k", "method", "time_ms", "comparisons", "searches", "dist", "decisions",
        "t_ratio", "c_ratio"
    )?;
    let ratio = |r: Option<f64>| r.map_or_else(|| "-".to_string(), |v| format!("{v:.3}"));
    for r in &rows {
        writeln!(
            out,
            "{:>9} {:>9} {:>5} {:>16} {:>11.3} {:>12} {:>10} {:>10} {:>9} {:>7} {:>7}",
            r.n,
            r.h,
            r.k,
            r.method,
            r.time_ms,
            r.counters.comparisons,
            r.counters.binary_searches,
            r.counters.distance_evals,
            r.counters.decision_calls,
            ratio(r.time_ratio),
            ratio(r.comparison_ratio)
        )?;
    }
    Ok(EXIT_OK)
}
