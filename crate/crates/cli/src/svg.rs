//! Deterministic SVG rendering of a point set, its skyline and the disks of
//! a solution. All numbers are printed with three decimals.

use std::fmt::Write as _;

use pareto_kcenter::Point;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

pub struct Scene<'a> {
    pub points: &'a [Point],
    /// Increasing `x`.
    pub skyline: &'a [Point],
    pub centers: &'a [Point],
    pub radius: f64,
}

pub fn render(scene: &Scene) -> String {
    let r = scene.radius;
    let mut xs = scene.points.iter().map(|p| p.x).chain(scene.centers.iter().flat_map(|c| [c.x - r, c.x + r]));
    let first = xs.next().unwrap_or(0.0);
    let (x0, x1) = xs.fold((first, first), |(a, b), v| (a.min(v), b.max(v)));
    let mut ys = scene.points.iter().map(|p| p.y).chain(scene.centers.iter().flat_map(|c| [c.y - r, c.y + r]));
    let first = ys.next().unwrap_or(0.0);
    let (y0, y1) = ys.fold((first, first), |(a, b), v| (a.min(v), b.max(v)));
    let span = (x1 - x0).max(y1 - y0);
    let scale = if span > 0.0 { (SIZE - 2.0 * MARGIN) / span } else { 1.0 };
    let sx = |x: f64| MARGIN + (x - x0) * scale;
    // SVG y grows downwards
    let sy = |y: f64| SIZE - MARGIN - (y - y0) * scale;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE:.0}" height="{SIZE:.0}" viewBox="0 0 {SIZE:.0} {SIZE:.0}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{SIZE:.0}" height="{SIZE:.0}" fill="white"/>"#);

    let _ = writeln!(s, r#"<g id="disks" fill="steelblue" fill-opacity="0.15" stroke="steelblue">"#);
    for c in scene.centers {
        let _ = writeln!(
            s,
            r#"<circle class="disk" cx="{:.3}" cy="{:.3}" r="{:.3}"/>"#,
            sx(c.x),
            sy(c.y),
            r * scale
        );
    }
    let _ = writeln!(s, "</g>");

    let mut on_sky = scene.skyline.iter().peekable();
    let _ = writeln!(s, r#"<g id="points">"#);
    let mut sorted: Vec<Point> = scene.points.to_vec();
    sorted.sort_by(|a, b| a.x.total_cmp(&b.x).then(b.y.total_cmp(&a.y)));
    for p in &sorted {
        let sky = on_sky.peek().is_some_and(|q| *q == p);
        if sky {
            on_sky.next();
        }
        let _ = writeln!(
            s,
            r#"<circle cx="{:.3}" cy="{:.3}" r="3" fill="{}"/>"#,
            sx(p.x),
            sy(p.y),
            if sky { "black" } else { "silver" }
        );
    }
    let _ = writeln!(s, "</g>");

    if !scene.skyline.is_empty() {
        let pts: Vec<String> = scene
            .skyline
            .iter()
            .map(|p| format!("{:.3},{:.3}", sx(p.x), sy(p.y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline id="skyline" fill="none" stroke="black" points="{}"/>"#,
            pts.join(" ")
        );
    }

    let _ = writeln!(s, r#"<g id="centers" fill="crimson">"#);
    for c in scene.centers {
        let _ = writeln!(s, r#"<circle cx="{:.3}" cy="{:.3}" r="4"/>"#, sx(c.x), sy(c.y));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}
