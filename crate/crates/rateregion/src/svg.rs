//! Static SVG plot of a two-user rate region.

use std::fmt::Write as _;

use rateregion_core::crystallize::{CrystallizedHull, HullBoundary};
use rateregion_core::frontier2::{FrontierId, FrontierTrace};
use rateregion_core::Error;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 70.0;
const TICKS: usize = 5;

struct Frame {
    x_max: f64,
    y_max: f64,
}

impl Frame {
    fn x(&self, r1: f64) -> f64 {
        MARGIN + r1 / self.x_max * (SIZE - 2.0 * MARGIN)
    }

    fn y(&self, r2: f64) -> f64 {
        SIZE - MARGIN - r2 / self.y_max * (SIZE - 2.0 * MARGIN)
    }

    fn pt(&self, r: [f64; 2]) -> String {
        format!("{:.2},{:.2}", self.x(r[0]), self.y(r[1]))
    }
}

fn color(id: FrontierId) -> &'static str {
    match id {
        FrontierId::Phi2 => "#1f77b4",
        FrontierId::Phi1 => "#d62728",
        FrontierId::Combined => "#1f77b4",
    }
}

fn name(id: FrontierId) -> &'static str {
    match id {
        FrontierId::Phi2 => "phi2",
        FrontierId::Phi1 => "phi1",
        FrontierId::Combined => "frontier",
    }
}

/// Draws the power-control frontiers, the corner points A, B, C, the
/// inflection point D when given, and the crystallized boundary (dashed).
///
/// Axes are in bits per channel use. The output contains no timestamps, so
/// equal inputs give byte-identical documents.
pub fn render_region_svg(
    traces: &[FrontierTrace],
    hull: &CrystallizedHull,
    inflection_d: Option<(f64, f64)>,
) -> Result<String, Error> {
    let n = hull.corners.first().map_or(0, |c| c.rates.len());
    if n != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: n,
        });
    }
    let mut x_max: f64 = 0.0;
    let mut y_max: f64 = 0.0;
    for s in traces.iter().flat_map(|t| &t.samples) {
        x_max = x_max.max(s.r1);
        y_max = y_max.max(s.r2);
    }
    for c in &hull.corners {
        x_max = x_max.max(c.rates[0]);
        y_max = y_max.max(c.rates[1]);
    }
    let frame = Frame {
        x_max: if x_max > 0.0 { x_max * 1.05 } else { 1.0 },
        y_max: if y_max > 0.0 { y_max * 1.05 } else { 1.0 },
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="sans-serif" font-size="12">"#
    );
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    axes(&mut out, &frame);

    for t in traces {
        let pts: Vec<String> = t.samples.iter().map(|s| frame.pt([s.r1, s.r2])).collect();
        let _ = writeln!(
            out,
            r#"<polyline class="{}" points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            name(t.frontier_id),
            pts.join(" "),
            color(t.frontier_id)
        );
    }

    if let HullBoundary::Polyline(vs) = &hull.boundary {
        let pts: Vec<String> = vs.iter().map(|v| frame.pt(v.point)).collect();
        let _ = writeln!(
            out,
            r##"<polyline class="crystallized" points="{}" fill="none" stroke="#2ca02c" stroke-width="2" stroke-dasharray="6,4"/>"##,
            pts.join(" ")
        );
    }

    // corner k = 1 is user 1 alone (C), k = 2 user 2 alone (A), k = 3 both (B)
    for (label, k) in [("A", 2), ("B", 3), ("C", 1)] {
        if let Some(c) = hull.corners.iter().find(|c| c.k == k) {
            marker(&mut out, &frame, [c.rates[0], c.rates[1]], label, "black");
        }
    }
    if let Some((r1, r2)) = inflection_d {
        marker(&mut out, &frame, [r1, r2], "D", "#9467bd");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn marker(out: &mut String, frame: &Frame, r: [f64; 2], label: &str, fill: &str) {
    let (x, y) = (frame.x(r[0]), frame.y(r[1]));
    let _ = writeln!(
        out,
        r#"<g class="marker"><circle cx="{x:.2}" cy="{y:.2}" r="4" fill="{fill}"/><text x="{:.2}" y="{:.2}">{label}</text></g>"#,
        x + 6.0,
        y - 6.0
    );
}

fn axes(out: &mut String, frame: &Frame) {
    let (x0, y0) = (frame.x(0.0), frame.y(0.0));
    let (x1, y1) = (frame.x(frame.x_max), frame.y(frame.y_max));
    let _ = writeln!(
        out,
        r#"<path d="M{x0:.2},{y1:.2} L{x0:.2},{y0:.2} L{x1:.2},{y0:.2}" fill="none" stroke="black"/>"#
    );
    for k in 0..=TICKS {
        let vx = frame.x_max * k as f64 / TICKS as f64;
        let vy = frame.y_max * k as f64 / TICKS as f64;
        let (tx, ty) = (frame.x(vx), frame.y(vy));
        let _ = writeln!(
            out,
            r#"<line x1="{tx:.2}" y1="{y0:.2}" x2="{tx:.2}" y2="{:.2}" stroke="black"/><text x="{tx:.2}" y="{:.2}" text-anchor="middle">{vx:.3}</text>"#,
            y0 + 5.0,
            y0 + 20.0
        );
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{ty:.2}" x2="{x0:.2}" y2="{ty:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{vy:.3}</text>"#,
            x0 - 5.0,
            x0 - 8.0,
            ty + 4.0
        );
    }
    let _ = writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">R1 (bits/channel use)</text>"#,
        0.5 * (x0 + x1),
        SIZE - 20.0
    );
    let _ = writeln!(
        out,
        r#"<text transform="translate(20,{:.2}) rotate(-90)" text-anchor="middle">R2 (bits/channel use)</text>"#,
        0.5 * (y0 + y1)
    );
}
