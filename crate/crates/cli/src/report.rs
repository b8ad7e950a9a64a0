//! Run reports: line-oriented `key=value` text or a single JSON object.

use std::io::Write;

use pareto_kcenter::{CounterSnapshot, Point};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::io::format_point;

#[derive(Clone, Debug, Default, Serialize)]
pub struct RunReport {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algorithm: Option<String>,
    pub n: usize,
    pub h: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eps: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_star: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda_star_sq: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psi_sq: Option<f64>,
    pub centers: Vec<Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
    pub counters: CounterSnapshot,
    pub digest: String,
}

/// SHA-256 over the centers sorted by `(x, y)` and the bits of `value_sq`.
pub fn digest(centers: &[Point], value_sq: f64) -> String {
    let mut sorted = centers.to_vec();
    sorted.sort_by(|a, b| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    let mut h = Sha256::new();
    for p in &sorted {
        h.update(p.x.to_bits().to_le_bytes());
        h.update(p.y.to_bits().to_le_bytes());
    }
    h.update(value_sq.to_bits().to_le_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

/// Radii are printed with 12 decimals.
fn radius(v: f64) -> String {
    format!("{v:.12}")
}

impl RunReport {
    pub fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "command={}", self.command)?;
        if let Some(m) = &self.method {
            writeln!(out, "method={m}")?;
        }
        if let Some(a) = &self.algorithm {
            writeln!(out, "algorithm={a}")?;
        }
        writeln!(out, "n={}", self.n)?;
        writeln!(out, "h={}", self.h)?;
        if let Some(k) = self.k {
            writeln!(out, "k={k}")?;
        }
        if let Some(kappa) = self.kappa {
            writeln!(out, "kappa={kappa}")?;
        }
        if let Some(l) = self.lambda {
            writeln!(out, "lambda={l}")?;
        }
        if let Some(e) = self.eps {
            writeln!(out, "eps={e}")?;
        }
        if let Some(v) = self.verdict {
            writeln!(out, "verdict={v}")?;
        }
        if let Some(l) = self.lambda_star {
            writeln!(out, "lambda_star={}", radius(l))?;
        }
        if let Some(l) = self.lambda_star_sq {
            writeln!(out, "lambda_star_sq={l}")?;
        }
        if let Some(p) = self.psi {
            writeln!(out, "psi={}", radius(p))?;
        }
        if let Some(p) = self.psi_sq {
            writeln!(out, "psi_sq={p}")?;
        }
        writeln!(out, "centers={}", self.centers.len())?;
        for &c in &self.centers {
            writeln!(out, "center={}", format_point(c))?;
        }
        if let Some(t) = self.wall_time_ms {
            writeln!(out, "wall_time_ms={t:.3}")?;
        }
        let c = &self.counters;
        writeln!(out, "comparisons={}", c.comparisons)?;
        writeln!(out, "binary_searches={}", c.binary_searches)?;
        writeln!(out, "search_steps={}", c.search_steps)?;
        writeln!(out, "distance_evals={}", c.distance_evals)?;
        writeln!(out, "decision_calls={}", c.decision_calls)?;
        writeln!(out, "matrix_touches={}", c.matrix_touches)?;
        writeln!(out, "predicate_calls={}", c.predicate_calls)?;
        writeln!(out, "digest={}", self.digest)
    }

    pub fn write_json(&self, out: &mut dyn Write) -> std::io::Result<()> {
        serde_json::to_writer(&mut *out, self)?;
        writeln!(out)
    }

    pub fn write(&self, json: bool, out: &mut dyn Write) -> std::io::Result<()> {
        if json {
            self.write_json(out)
        } else {
            self.write_text(out)
        }
    }
}
