//! Command-line front end. [`run`] is the whole program minus process exit,
//! so it can be driven from tests.
//!
//! Exit codes: 0 success or feasible, 1 infeasible, 2 input or usage error,
//! 3 bounded skyline incomplete.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use pareto_kcenter::oracle::brute_skyline;
use pareto_kcenter::{
    approx_solve, decide_grouped, decide_materialized, gonzalez_2approx, skyline_bounded,
    skyline_optimal, slow_skyline, solve_one_center, solve_parametric, solve_via_matrix,
    BoundedResult, Context, Generator, GroupedSkyline, InstanceSpec, Point, PointSet,
};
use serde::Serialize;

pub mod bench;
pub mod io;
pub mod report;
pub mod svg;

use report::{digest, RunReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCOMPLETE: i32 = 3;

/// Environment variable overriding the default generator seed.
pub const SEED_ENV: &str = "PARETO_KCENTER_SEED";
const DEFAULT_SEED: u64 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Output(String),
    #[error(transparent)]
    Core(#[from] pareto_kcenter::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pareto-kcenter",
    version,
    about = "Representative skylines: k-center along the Pareto front of planar points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the skyline of a point file
    Skyline(SkylineArgs),
    /// Decide whether k centers of radius lambda cover the skyline
    Decide(DecideArgs),
    /// Compute an optimal or approximate set of k centers
    Solve(SolveArgs),
    /// Time algorithms on generated instances
    Bench(bench::BenchArgs),
    /// Write a generated instance
    Gen(GenArgs),
    /// Render the skyline and a solution as SVG
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
struct SkylineArgs {
    input: PathBuf,
    /// slow | bounded:<s> | optimal | brute
    #[arg(long, default_value = "optimal")]
    algo: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct DecideArgs {
    input: PathBuf,
    #[arg(short = 'k', long = "k")]
    k: usize,
    /// Radius in distance units
    #[arg(short = 'l', long)]
    lambda: f64,
    /// Use the grouped decision; the group size defaults to k
    #[arg(long, num_args = 0..=1, require_equals = true, default_missing_value = "k")]
    grouped: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args, Clone)]
struct SolveFlags {
    #[arg(short = 'k', long = "k", default_value_t = 1)]
    k: usize,
    /// matrix | parametric | auto | approx[:eps] | gonzalez | one-center
    #[arg(long, default_value = "auto")]
    method: String,
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(Debug, Args)]
struct SolveArgs {
    input: PathBuf,
    #[command(flatten)]
    flags: SolveFlags,
    #[arg(long)]
    json: bool,
    /// Include wall time in the report
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct GenArgs {
    /// uniform-square | clustered | staircase | circle-quadrant
    #[arg(long, default_value = "uniform-square")]
    generator: String,
    #[arg(short = 'n', long)]
    n: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Generator parameters, comma separated
    #[arg(long, value_delimiter = ',')]
    params: Vec<f64>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PlotArgs {
    input: PathBuf,
    #[command(flatten)]
    flags: SolveFlags,
    #[arg(short, long)]
    output: PathBuf,
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = args.into_iter().map(|a| {
        let a: OsString = a.into();
        match a.to_str() {
            Some(s) if s.starts_with("--grouped:") => OsString::from(s.replacen(':', "=", 1)),
            _ => a,
        }
    });
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Skyline(a) => cmd_skyline(a, out),
        Command::Decide(a) => cmd_decide(a, out),
        Command::Solve(a) => cmd_solve(a, out),
        Command::Bench(a) => bench::cmd_bench(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Plot(a) => cmd_plot(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// Explicit seed, else the environment override, else the default.
pub fn resolve_seed(explicit: Option<u64>) -> Result<u64, CliError> {
    if let Some(s) = explicit {
        return Ok(s);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{SEED_ENV} must be an unsigned integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

pub(crate) fn parse_generator(name: &str) -> Result<Generator, CliError> {
    name.parse().map_err(CliError::Usage)
}

fn skyline_len(ps: &PointSet) -> Result<usize, CliError> {
    Ok(skyline_optimal(ps, &Context::default())?.len())
}

#[derive(Serialize)]
struct SkylineOut<'a> {
    algo: &'a str,
    h: usize,
    points: &'a [Point],
}

fn cmd_skyline(a: SkylineArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let ps = io::read_points(&a.input)?;
    let cx = Context::default();
    let sky = match a.algo.as_str() {
        "slow" => slow_skyline(&ps, &cx)?,
        "optimal" => skyline_optimal(&ps, &cx)?,
        "brute" => brute_skyline(&ps),
        other => {
            let s = other
                .strip_prefix("bounded:")
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&s| s >= 1)
                .ok_or_else(|| CliError::Usage(format!("unknown skyline algorithm `{other}`")))?;
            match skyline_bounded(&ps, s, &cx)? {
                BoundedResult::Complete(sky) => sky,
                BoundedResult::Incomplete => {
                    writeln!(out, "incomplete")?;
                    return Ok(EXIT_INCOMPLETE);
                }
            }
        }
    };
    if a.json {
        serde_json::to_writer(
            &mut *out,
            &SkylineOut {
                algo: &a.algo,
                h: sky.len(),
                points: sky.points(),
            },
        )
        .map_err(|e| CliError::Output(e.to_string()))?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}", sky.len())?;
        out.write_all(io::format_points(sky.points()).as_bytes())?;
    }
    Ok(EXIT_OK)
}

fn cmd_decide(a: DecideArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    if !(a.lambda >= 0.0 && a.lambda.is_finite()) {
        return Err(CliError::Usage("lambda must be a finite non-negative number".into()));
    }
    let ps = io::read_points(&a.input)?;
    let lambda_sq = a.lambda * a.lambda;
    let cx = Context::default();
    let (outcome, kappa, method) = match &a.grouped {
        None => {
            let sky = skyline_optimal(&ps, &cx)?;
            (decide_materialized(&sky, a.k, lambda_sq, &cx), None, "materialized")
        }
        Some(v) => {
            let kappa = if v == "k" {
                a.k
            } else {
                v.parse::<usize>()
                    .ok()
                    .filter(|&x| x >= 1)
                    .ok_or_else(|| CliError::Usage(format!("invalid group size `{v}`")))?
            }
            .min(ps.len());
            let g = GroupedSkyline::build(&ps, kappa, &cx)?;
            (decide_grouped(&g, a.k, lambda_sq, &cx), Some(kappa), "grouped")
        }
    };
    let counters = cx.snapshot();
    let feasible = outcome.is_feasible();
    let centers = outcome.centers().unwrap_or_default();
    let report = RunReport {
        command: "decide",
        method: Some(method.into()),
        n: ps.len(),
        h: skyline_len(&ps)?,
        k: Some(a.k),
        kappa,
        lambda: Some(a.lambda),
        verdict: Some(if feasible { "FEASIBLE" } else { "INCOMPLETE" }),
        digest: digest(&centers, lambda_sq),
        centers,
        counters,
        ..Default::default()
    };
    if !a.json {
        writeln!(out, "{}", report.verdict.unwrap_or_default())?;
    }
    report.write(a.json, out)?;
    Ok(if feasible { EXIT_OK } else { EXIT_INFEASIBLE })
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Method {
    Matrix,
    Parametric,
    Auto,
    Approx(f64),
    Gonzalez,
    OneCenter,
}

impl Method {
    fn parse(s: &str, eps: Option<f64>) -> Result<Self, CliError> {
        Ok(match s {
            "matrix" => Method::Matrix,
            "parametric" => Method::Parametric,
            "auto" => Method::Auto,
            "gonzalez" => Method::Gonzalez,
            "one-center" => Method::OneCenter,
            "approx" => Method::Approx(
                eps.ok_or_else(|| CliError::Usage("method approx needs --eps or approx:<eps>".into()))?,
            ),
            other => match other.strip_prefix("approx:") {
                Some(v) => Method::Approx(
                    v.parse()
                        .map_err(|_| CliError::Usage(format!("invalid epsilon `{v}`")))?,
                ),
                None => return Err(CliError::Usage(format!("unknown method `{other}`"))),
            },
        })
    }

    fn name(self) -> &'static str {
        match self {
            Method::Matrix => "matrix",
            Method::Parametric => "parametric",
            Method::Auto => "auto",
            Method::Approx(_) => "approx",
            Method::Gonzalez => "gonzalez",
            Method::OneCenter => "one-center",
        }
    }
}

struct Solved {
    method: Method,
    algorithm: String,
    exact: bool,
    value_sq: f64,
    centers: Vec<Point>,
}

fn solve_with(ps: &PointSet, flags: &SolveFlags, cx: &Context) -> Result<Solved, CliError> {
    if flags.k == 0 {
        return Err(CliError::Usage("k must be at least 1".into()));
    }
    let method = Method::parse(&flags.method, flags.eps)?;
    if let Method::Approx(e) = method {
        if !(e > 0.0 && e < 1.0) {
            return Err(CliError::Usage(format!("epsilon must lie in (0, 1), got {e}")));
        }
    }
    if method == Method::OneCenter && flags.k != 1 {
        return Err(CliError::Usage("method one-center requires k = 1".into()));
    }
    let exact = |r: pareto_kcenter::SolveResult| Solved {
        method,
        algorithm: r.algorithm.to_string(),
        exact: true,
        value_sq: r.lambda_star_sq,
        centers: r.centers,
    };
    let approx = |a: pareto_kcenter::Approximation, algorithm: &str| Solved {
        method,
        algorithm: algorithm.into(),
        exact: false,
        value_sq: a.psi_sq,
        centers: a.centers,
    };
    Ok(match method {
        Method::Matrix => exact(solve_via_matrix(ps, flags.k, cx)?),
        Method::Parametric => {
            let n = ps.len();
            exact(pareto_kcenter::parametric_search(
                ps,
                flags.k,
                pareto_kcenter::parametric_kappa(n, flags.k),
                cx,
            )?)
        }
        Method::Auto => exact(solve_parametric(ps, flags.k, cx)?),
        Method::OneCenter => exact(solve_one_center(ps, cx)?),
        Method::Gonzalez => approx(gonzalez_2approx(ps, flags.k, cx)?, "farthest-first"),
        Method::Approx(e) => approx(approx_solve(ps, flags.k, e, cx)?, "grid-search"),
    })
}

fn solve_report(ps: &PointSet, flags: &SolveFlags, cx: &Context) -> Result<(RunReport, Solved), CliError> {
    let solved = solve_with(ps, flags, cx)?;
    let counters = cx.snapshot();
    let mut report = RunReport {
        command: "solve",
        method: Some(solved.method.name().into()),
        algorithm: Some(solved.algorithm.clone()),
        n: ps.len(),
        h: skyline_len(ps)?,
        k: Some(flags.k),
        centers: solved.centers.clone(),
        counters,
        digest: digest(&solved.centers, solved.value_sq),
        ..Default::default()
    };
    if let Method::Approx(e) = solved.method {
        report.eps = Some(e);
    }
    if solved.exact {
        report.lambda_star = Some(solved.value_sq.sqrt());
        report.lambda_star_sq = Some(solved.value_sq);
    } else {
        report.psi = Some(solved.value_sq.sqrt());
        report.psi_sq = Some(solved.value_sq);
    }
    Ok((report, solved))
}

fn cmd_solve(a: SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let ps = io::read_points(&a.input)?;
    let cx = Context::default();
    let start = Instant::now();
    let (mut report, _) = solve_report(&ps, &a.flags, &cx)?;
    if a.timing {
        report.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    report.write(a.json, out)?;
    Ok(EXIT_OK)
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let spec = InstanceSpec::new(parse_generator(&a.generator)?, a.n, resolve_seed(a.seed)?)
        .with_params(a.params);
    let mut text = format!(
        "# generator={} n={} seed={}\n",
        spec.generator, spec.n, spec.seed
    );
    text.push_str(&io::format_points(&spec.generate()));
    match a.output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_plot(a: PlotArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let ps = io::read_points(&a.input)?;
    let cx = Context::default();
    let (report, solved) = solve_report(&ps, &a.flags, &cx)?;
    let sky = skyline_optimal(&ps, &Context::default())?;
    let doc = svg::render(&svg::Scene {
        points: ps.points(),
        skyline: sky.points(),
        centers: &solved.centers,
        radius: solved.value_sq.sqrt(),
    });
    std::fs::write(&a.output, doc)
        .map_err(|e| CliError::Output(format!("{}: {e}", a.output.display())))?;
    report.write_text(out)?;
    Ok(EXIT_OK)
}
