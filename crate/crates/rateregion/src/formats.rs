//! CSV and JSON writers for the analysis results.
//!
//! Doubles in CSV are written as `{:.16e}` (17 significant digits, `.` as
//! the decimal separator). JSON numbers use the shortest representation
//! that reads back to the same double; non-finite values become `null`.

use std::fmt::Write as _;

use rateregion_core::crystallize::{CornerPoint, CrystallizedHull, HullBoundary, ThetaVector};
use rateregion_core::frontier2::{Convexity, ConvexityReport, FrontierTrace, Strategy};
use rateregion_core::nregion::{SurfaceSample, SymmetricGeometry};
use rateregion_core::oracle::{GapRow, VerifyReport};
use rateregion_core::{PowerVector, RatePoint};
use serde::Serialize;

/// A double with 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report serializes");
    out.push('\n');
    out
}

pub fn mask_string(mask: &[bool]) -> String {
    mask.iter().map(|&on| if on { '1' } else { '0' }).collect()
}

pub fn frontier_csv(trace: &FrontierTrace) -> String {
    let mut out = String::from("r1,r2,p1,p2\n");
    for s in &trace.samples {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            num(s.r1),
            num(s.r2),
            num(s.p1),
            num(s.p2)
        );
    }
    out
}

pub fn rates_csv(p: &PowerVector, sinr: &[f64], r: &RatePoint) -> String {
    let mut out = String::from("user,p,sinr,rate\n");
    for i in 0..p.len() {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            i + 1,
            num(p[i]),
            num(sinr[i]),
            num(r[i])
        );
    }
    out
}

pub fn convexity_name(c: Convexity) -> &'static str {
    match c {
        Convexity::Concave => "Concave",
        Convexity::Inflection(_) => "Inflection",
        Convexity::Convex => "Convex",
    }
}

pub fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::PowerControlOnly => "PowerControlOnly",
        Strategy::ConcaveThenTimeShareFromD => "ConcaveThenTimeShareFromD",
        Strategy::TimeShareThroughB => "TimeShareThroughB",
        Strategy::PureTdm => "PureTdm",
    }
}

#[derive(Serialize)]
struct Point2 {
    r1: f64,
    r2: f64,
}

#[derive(Serialize)]
struct ConvexityJson {
    q1: f64,
    q2: f64,
    class_phi2: &'static str,
    class_phi1: &'static str,
    inflection_d: Option<Point2>,
    tdm_optimal: bool,
    strategy: &'static str,
}

pub fn convexity_json(report: &ConvexityReport) -> String {
    json(&ConvexityJson {
        q1: report.q1,
        q2: report.q2,
        class_phi2: convexity_name(report.class_phi2),
        class_phi1: convexity_name(report.class_phi1),
        inflection_d: report.inflection_d.map(|(r1, r2)| Point2 { r1, r2 }),
        tdm_optimal: report.tdm_optimal,
        strategy: strategy_name(report.strategy),
    })
}

#[derive(Serialize)]
struct CornerJson<'a> {
    k: usize,
    mask: String,
    rates: &'a [f64],
}

#[derive(Serialize)]
struct VertexJson {
    point: [f64; 2],
    corner: Option<usize>,
}

#[derive(Serialize)]
struct SupportJson<'a> {
    direction: &'a [f64],
    value: f64,
    corner: usize,
}

#[derive(Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
enum BoundaryJson<'a> {
    Point { value: f64 },
    Polyline { vertices: Vec<VertexJson> },
    Facets { facets: &'a [[usize; 3]] },
    SupportSamples { samples: Vec<SupportJson<'a>> },
}

#[derive(Serialize)]
struct HullJson<'a> {
    corners: Vec<CornerJson<'a>>,
    boundary: BoundaryJson<'a>,
    dominated: &'a [usize],
}

fn corner_json(c: &CornerPoint) -> CornerJson<'_> {
    CornerJson {
        k: c.k,
        mask: mask_string(&c.mask),
        rates: c.rates.as_slice(),
    }
}

/// Corner masks are written as bit strings, transmitter 1 first.
pub fn hull_json(hull: &CrystallizedHull) -> String {
    let boundary = match &hull.boundary {
        HullBoundary::Point(value) => BoundaryJson::Point { value: *value },
        HullBoundary::Polyline(vs) => BoundaryJson::Polyline {
            vertices: vs
                .iter()
                .map(|v| VertexJson {
                    point: v.point,
                    corner: v.corner,
                })
                .collect(),
        },
        HullBoundary::Facets(f) => BoundaryJson::Facets { facets: f },
        HullBoundary::Support(samples) => BoundaryJson::SupportSamples {
            samples: samples
                .iter()
                .map(|s| SupportJson {
                    direction: &s.direction,
                    value: s.value,
                    corner: s.corner,
                })
                .collect(),
        },
    };
    json(&HullJson {
        corners: hull.corners.iter().map(corner_json).collect(),
        boundary,
        dominated: &hull.dominated,
    })
}

/// One row per corner, `k` from 1.
pub fn theta_csv(theta: &ThetaVector, corners: &[CornerPoint]) -> String {
    let mut out = String::from("k,mask,theta\n");
    for (c, w) in corners.iter().zip(theta.as_slice()) {
        let _ = writeln!(out, "{},{},{}", c.k, mask_string(&c.mask), num(*w));
    }
    out
}

pub fn surface_csv(sample: &SurfaceSample, n: usize) -> String {
    let mut out = String::new();
    let head: Vec<String> = (1..=n)
        .map(|i| format!("p{i}"))
        .chain((1..=n).map(|i| format!("r{i}")))
        .collect();
    out.push_str(&head.join(","));
    out.push('\n');
    for (p, r) in &sample.grid {
        let row: Vec<String> = p
            .as_slice()
            .iter()
            .chain(r.as_slice())
            .map(|x| num(*x))
            .collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct GeometryJson {
    n: usize,
    a: f64,
    b: f64,
    p_max: f64,
    ob: f64,
    obprime: f64,
    b_star_n: f64,
    b_star_inf: f64,
}

pub fn geometry_json(g: &SymmetricGeometry) -> String {
    json(&GeometryJson {
        n: g.n,
        a: g.a,
        b: g.b,
        p_max: g.p_max,
        ob: g.ob_len,
        obprime: g.obprime_len,
        b_star_n: g.b_star_n,
        b_star_inf: g.b_star_inf,
    })
}

pub fn gap_report_csv(rows: &[GapRow]) -> String {
    let mut out = String::from("b_db,area_pc,area_crystal,max_gap_pct,gap_argmax_r1\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            num(r.b_db),
            num(r.area_pc),
            num(r.area_crystal),
            num(r.max_gap_pct),
            num(r.gap_argmax_r1)
        );
    }
    out
}

#[derive(Serialize)]
struct VerifyJson {
    passed: bool,
    grid: usize,
    tol: f64,
    max_violation: f64,
    pareto_points: usize,
    roundtrip_max_err: f64,
    roundtrip_failures: usize,
}

pub fn verify_json(report: &VerifyReport, grid: usize, tol: f64) -> String {
    json(&VerifyJson {
        passed: report.passed,
        grid,
        tol,
        max_violation: report.max_violation,
        pareto_points: report.pareto_points,
        roundtrip_max_err: report.roundtrip_max_err,
        roundtrip_failures: report.roundtrip_failures,
    })
}
