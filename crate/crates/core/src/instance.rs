//! Seeded instance generators. All coordinates are integer-valued, so every
//! squared distance is computed exactly.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::geom::Point;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Generator {
    /// Uniform in `[0, scale)²`. Params: `[scale]`, default `1e6`.
    UniformSquare,
    /// Gaussian blobs around uniform centers. Params: `[clusters, spread,
    /// scale]`, default `[8, 2e4, 1e6]`.
    Clustered,
    /// `h` points on an anti-diagonal plus strictly dominated filler.
    /// Params: `[h, step]`, default `[n, 4096]`.
    Staircase,
    /// Near the quarter circle of radius `r`. Params: `[r, thickness]`,
    /// default `[1e6, 0]`; thickness is the relative band width.
    CircleQuadrant,
}

impl Generator {
    pub const ALL: [Generator; 4] = [
        Generator::UniformSquare,
        Generator::Clustered,
        Generator::Staircase,
        Generator::CircleQuadrant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::UniformSquare => "uniform-square",
            Generator::Clustered => "clustered",
            Generator::Staircase => "staircase",
            Generator::CircleQuadrant => "circle-quadrant",
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| format!("unknown generator `{s}`"))
    }
}

/// Everything needed to reproduce an instance bit for bit.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub generator: Generator,
    pub n: usize,
    pub seed: u64,
    /// Generator-specific; missing entries take their defaults.
    #[serde(default)]
    pub params: Vec<f64>,
}

impl InstanceSpec {
    pub fn new(generator: Generator, n: usize, seed: u64) -> Self {
        InstanceSpec {
            generator,
            n,
            seed,
            params: Vec::new(),
        }
    }

    pub fn with_params(mut self, params: Vec<f64>) -> Self {
        self.params = params;
        self
    }

    fn param(&self, i: usize, default: f64) -> f64 {
        self.params.get(i).copied().unwrap_or(default)
    }

    /// `n` points; duplicates are possible but rare.
    pub fn generate(&self) -> Vec<Point> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let n = self.n;
        match self.generator {
            Generator::UniformSquare => {
                let scale = self.param(0, 1e6).max(1.0).floor();
                (0..n)
                    .map(|_| {
                        Point::new(
                            rng.random_range(0.0..scale).floor(),
                            rng.random_range(0.0..scale).floor(),
                        )
                    })
                    .collect()
            }
            Generator::Clustered => {
                let clusters = (self.param(0, 8.0) as usize).max(1);
                let spread = self.param(1, 2e4).max(0.0);
                let scale = self.param(2, 1e6).max(1.0);
                let centers: Vec<(f64, f64)> = (0..clusters)
                    .map(|_| (rng.random_range(0.0..scale), rng.random_range(0.0..scale)))
                    .collect();
                let noise = Normal::new(0.0, spread).expect("finite spread");
                (0..n)
                    .map(|_| {
                        let (cx, cy) = centers[rng.random_range(0..clusters)];
                        Point::new(
                            (cx + noise.sample(&mut rng)).round(),
                            (cy + noise.sample(&mut rng)).round(),
                        )
                    })
                    .collect()
            }
            Generator::Staircase => {
                let h = (self.param(0, n as f64) as usize).clamp(1, n.max(1)).min(n);
                let step = self.param(1, 4096.0).max(2.0).floor();
                let top = (h as f64 - 1.0) * step;
                let mut pts: Vec<Point> = (0..h)
                    .map(|i| Point::new(i as f64 * step, top - i as f64 * step))
                    .collect();
                if h > 1 {
                    while pts.len() < n {
                        let x = rng.random_range(0.0..=top).floor();
                        // the staircase point at or right of x caps y
                        let cap = top - (x / step).ceil() * step;
                        if cap >= 1.0 {
                            let y = rng.random_range(0.0..cap).floor();
                            pts.push(Point::new(x, y));
                        }
                    }
                }
                pts
            }
            Generator::CircleQuadrant => {
                let r = self.param(0, 1e6).max(1.0);
                let thickness = self.param(1, 0.0).clamp(0.0, 1.0);
                (0..n)
                    .map(|_| {
                        let t = rng.random_range(0.0..std::f64::consts::FRAC_PI_2);
                        let rr = r * (1.0 - thickness * rng.random::<f64>());
                        Point::new((rr * t.cos()).round(), (rr * t.sin()).round())
                    })
                    .collect()
            }
        }
    }
}
