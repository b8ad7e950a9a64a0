//! k-center clustering along the skyline (Pareto front) of a planar point
//! set.
//!
//! Given points `P` and `k`, find at most `k` skyline points minimizing the
//! largest distance from any skyline point to its nearest chosen point.
//! The crate provides skyline construction in `O(n log h)`, greedy decision
//! procedures with and without materializing the skyline, two exact
//! optimizers, small-`k` and approximate solvers, and brute-force oracles.
//!
//! Distances are handled squared throughout; see [`geom`].
//!
//! ```
//! use pareto_kcenter::{solve_parametric, Context, PointSet};
//!
//! let ps = PointSet::from_pairs([(0.0, 3.0), (1.0, 2.0), (2.0, 1.0), (3.0, 0.0)]).unwrap();
//! let r = solve_parametric(&ps, 2, &Context::default()).unwrap();
//! assert_eq!(r.lambda_star_sq, 2.0);
//! ```

pub mod context;
pub mod decision;
pub mod error;
pub mod exact;
pub mod geom;
pub mod grouped;
pub mod instance;
pub mod matrix;
pub mod multisearch;
pub mod oracle;
pub mod skyline;
pub mod smallk;

pub use context::{Context, CounterSnapshot, Counters, Exec};
pub use decision::{decide_grouped, decide_materialized, Cluster, Cover, DecisionOutcome};
pub use error::{Error, Result};
pub use exact::{
    param_next_relevant, parametric_kappa, parametric_search, prefers_matrix, solve_on_skyline,
    solve_parametric, solve_via_matrix, Algorithm, SolveResult,
};
pub use geom::{
    cmp_perturbed_high, cmp_perturbed_right, dist_sq, dominates, side_of_alpha, AlphaCurve, Point,
    PointSet, Side, SkylineArray,
};
pub use grouped::GroupedSkyline;
pub use instance::{Generator, InstanceSpec};
pub use matrix::SortedDistanceMatrix;
pub use multisearch::{multi_array_search, SortedSource};
pub use skyline::{skyline_bounded, skyline_optimal, slow_skyline, BoundedResult};
pub use smallk::{
    approx_kappa, approx_solve, bisector_extremes, gonzalez_2approx, gonzalez_slabs,
    solve_one_center, Approximation, Extremes, Slab,
};
