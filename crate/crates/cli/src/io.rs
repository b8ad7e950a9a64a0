//! Point files: one point per line, two whitespace-separated decimals, `#`
//! starts a comment, blank lines are skipped.

use std::fmt::Write as _;
use std::path::Path;

use pareto_kcenter::{Error as CoreError, Point, PointSet};

use crate::CliError;

pub fn parse_points(text: &str) -> Result<PointSet, CliError> {
    let mut pts = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = i + 1;
        let mut it = line.split_whitespace();
        let mut coord = |what: &str| -> Result<f64, CliError> {
            let tok = it
                .next()
                .ok_or_else(|| CliError::Input(format!("line {lineno}: missing {what} coordinate")))?;
            tok.parse::<f64>()
                .map_err(|_| CliError::Input(format!("line {lineno}: cannot parse `{tok}` as a number")))
        };
        let x = coord("x")?;
        let y = coord("y")?;
        if let Some(extra) = it.next() {
            return Err(CliError::Input(format!("line {lineno}: unexpected token `{extra}`")));
        }
        pts.push(Point::new(x, y));
        lines.push(lineno);
    }
    if pts.is_empty() {
        return Err(CliError::Input("input contains no points".into()));
    }
    PointSet::new(pts).map_err(|e| match e {
        CoreError::NonFinite { index } => {
            CliError::Input(format!("line {}: non-finite coordinate", lines[index]))
        }
        other => CliError::Input(other.to_string()),
    })
}

pub fn read_points(path: &Path) -> Result<PointSet, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_points(&text)
}

/// Shortest decimal text that reads back to the same bits.
pub fn format_point(p: Point) -> String {
    format!("{} {}", p.x, p.y)
}

pub fn format_points(pts: &[Point]) -> String {
    let mut s = String::with_capacity(pts.len() * 16);
    for &p in pts {
        let _ = writeln!(s, "{}", format_point(p));
    }
    s
}
