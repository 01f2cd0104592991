//! Brute-force checks of the closed forms and the area / rate-gap metrics
//! comparing power control against the crystallized region.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use rand::Rng;

use crate::channel::{db_to_linear, ChannelInstance, PowerVector, RatePoint, TwoUserParams};
use crate::crystallize::{self, HullBoundary};
use crate::error::{Error, Result};
use crate::frontier2;
use crate::math;
use crate::nregion::{checked_grid_size, envelope_at};

/// Default grid resolution for two-user oracles.
pub const DEFAULT_GRID_2: usize = 201;
/// Default grid resolution for three-user oracles.
pub const DEFAULT_GRID_3: usize = 41;
/// Frontier values below this are excluded from relative gaps.
pub const GAP_FLOOR: f64 = 1e-6;

/// Non-dominated rate points over the uniform `m^n` power grid.
pub fn grid_pareto(ch: &ChannelInstance, m: usize) -> Result<Vec<RatePoint>> {
    if m < 2 {
        return Err(Error::InvalidParameter("grid size must be >= 2"));
    }
    let n = ch.n();
    let total = checked_grid_size(m, n)?;
    let p_max = ch.p_max();
    let level = |k: usize| {
        if k + 1 == m {
            p_max
        } else {
            p_max * k as f64 / (m - 1) as f64
        }
    };
    let mut points: Vec<Vec<f64>> = Vec::with_capacity(total as usize);
    let mut digits = alloc::vec![0usize; n];
    let mut p = alloc::vec![0.0; n];
    for _ in 0..total {
        for (pi, &k) in p.iter_mut().zip(&digits) {
            *pi = level(k);
        }
        points.push(ch.rates_unchecked(&p));
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < m {
                break;
            }
            *d = 0;
        }
    }
    Ok(pareto_filter(points)
        .into_iter()
        .map(RatePoint::new)
        .collect())
}

/// Keeps the points not weakly dominated by an earlier kept point, after a
/// descending lexicographic sort.
fn pareto_filter(mut points: Vec<Vec<f64>>) -> Vec<Vec<f64>> {
    points.sort_by(|p, q| {
        q.iter()
            .zip(p.iter())
            .map(|(a, b)| a.total_cmp(b))
            .find(|o| o.is_ne())
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    let mut kept: Vec<Vec<f64>> = Vec::new();
    if points.first().is_some_and(|p| p.len() == 2) {
        let mut best = f64::NEG_INFINITY;
        for p in points {
            if p[1] > best {
                best = p[1];
                kept.push(p);
            }
        }
        return kept;
    }
    for p in points {
        let dominated = kept.iter().any(|q| q.iter().zip(&p).all(|(a, b)| a >= b));
        if !dominated {
            kept.push(p);
        }
    }
    kept
}

/// Trapezoidal area under the power-control frontier.
///
/// `samples` points per interval, junction and endpoints exact.
pub fn area_power_control(params: &TwoUserParams, samples: usize) -> Result<f64> {
    if samples < 16 {
        return Err(Error::InvalidParameter("samples must be >= 16"));
    }
    let trace = frontier2::trace_frontier(params, samples)?;
    Ok(trace
        .samples
        .windows(2)
        .map(|w| (w[1].r1 - w[0].r1) * (w[0].r2 + w[1].r2) / 2.0)
        .sum())
}

fn crystal_polyline(ch: &ChannelInstance) -> Result<Vec<[f64; 2]>> {
    if ch.n() != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ch.n(),
        });
    }
    match crystallize::hull(ch)?.boundary {
        HullBoundary::Polyline(p) => Ok(p.into_iter().map(|v| v.point).collect()),
        _ => unreachable!("two-user hull is a polyline"),
    }
}

/// Shoelace area of the two-user crystallized region (origin included).
pub fn area_crystallized(ch: &ChannelInstance) -> Result<f64> {
    let mut poly = alloc::vec![[0.0, 0.0]];
    poly.extend(crystal_polyline(ch)?);
    Ok(shoelace(&poly))
}

/// Absolute polygon area.
pub fn shoelace(poly: &[[f64; 2]]) -> f64 {
    let k = poly.len();
    let twice: f64 = (0..k)
        .map(|i| {
            let (p, q) = (poly[i], poly[(i + 1) % k]);
            p[0] * q[1] - q[0] * p[1]
        })
        .sum();
    twice.abs() / 2.0
}

/// Relative rate gap between the power-control and crystallized regions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapResult {
    /// Largest loss of the crystallized region against power control, percent.
    pub loss_pct: f64,
    /// Largest gain of the crystallized region over power control, percent.
    pub gain_pct: f64,
    /// `r1` of the power-control boundary point where the loss peaks.
    pub at_r1: f64,
}

/// Radial rate gap, used for the sweep reports.
///
/// Along `samples - 1` rays from the origin at uniformly spaced angles in
/// `(0, π/2)`, measured after scaling both axes to the single-user maxima,
/// compares the distance to the power-control boundary with the
/// distance to the crystallized boundary. The loss is
/// `(s_pc - s_crystal) / s_pc`.
pub fn max_gap(params: &TwoUserParams, samples: usize) -> Result<GapResult> {
    if samples < 64 {
        return Err(Error::InvalidParameter("samples must be >= 64"));
    }
    let ch = ChannelInstance::from_two_user(params)?;
    let poly = crystal_polyline(&ch)?;
    let x_max = frontier2::max_r1(params);
    let aspect = frontier2::max_r2(params) / x_max;
    let pc = |x: f64| frontier2::frontier_unchecked(params, x).r2;
    let cr = |x: f64| envelope_at(&poly, x);
    let mut out = GapResult {
        loss_pct: 0.0,
        gain_pct: 0.0,
        at_r1: 0.0,
    };
    for j in 1..samples {
        let angle = FRAC_PI_2 * j as f64 / samples as f64;
        let (cos, sin) = (math::cos(angle), math::sin(angle));
        let slope = aspect * sin / cos;
        let x_pc = ray_hit(&pc, slope, x_max);
        let x_cr = ray_hit(&cr, slope, x_max);
        if x_pc <= 0.0 {
            continue;
        }
        // Both points lie on the same ray, so the r1 ratio is the radial ratio.
        let loss = (x_pc - x_cr) / x_pc;
        if loss > out.loss_pct / 100.0 {
            out.loss_pct = 100.0 * loss;
            out.at_r1 = x_pc;
        }
        out.gain_pct = out.gain_pct.max(-100.0 * loss);
    }
    Ok(out)
}

/// `r1` where the ray `r2 = slope·r1` leaves the region under `edge`.
fn ray_hit(edge: &dyn Fn(f64) -> f64, slope: f64, x_max: f64) -> f64 {
    if edge(x_max) >= slope * x_max {
        return x_max;
    }
    let (mut lo, mut hi) = (0.0, x_max);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if edge(mid) >= slope * mid {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Vertical rate gap at matched `r1`.
///
/// Over `samples + 1` uniform `r1` values where the power-control frontier
/// is at least [`GAP_FLOOR`], compares `R2` of both boundaries relative to
/// the power-control value. Near the `r1` axis both boundaries are steep and
/// this ratio stays large even when the regions nearly coincide.
pub fn vertical_gap(params: &TwoUserParams, samples: usize) -> Result<GapResult> {
    if samples < 64 {
        return Err(Error::InvalidParameter("samples must be >= 64"));
    }
    let ch = ChannelInstance::from_two_user(params)?;
    let poly = crystal_polyline(&ch)?;
    let x_max = frontier2::max_r1(params);
    let mut out = GapResult {
        loss_pct: 0.0,
        gain_pct: 0.0,
        at_r1: 0.0,
    };
    for j in 0..=samples {
        let x = x_max * j as f64 / samples as f64;
        let pc = frontier2::frontier_unchecked(params, x).r2;
        if pc < GAP_FLOOR {
            continue;
        }
        let rel = (pc - envelope_at(&poly, x)) / pc;
        if rel > out.loss_pct / 100.0 {
            out.loss_pct = 100.0 * rel;
            out.at_r1 = x;
        }
        out.gain_pct = out.gain_pct.max(-100.0 * rel);
    }
    Ok(out)
}

/// One row of a symmetric cross-gain sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapRow {
    pub b_db: f64,
    pub area_pc: f64,
    pub area_crystal: f64,
    pub max_gap_pct: f64,
    pub gap_argmax_r1: f64,
}

/// Sweeps `b = d` over `lo..=hi` dB in `step` increments on a symmetric
/// channel with direct gain `a`.
pub fn sweep_b_symmetric(
    a: f64,
    p_max: f64,
    (lo, hi, step): (f64, f64, f64),
    samples: usize,
) -> Result<Vec<GapRow>> {
    if !(lo < hi) || !(step > 0.0) {
        return Err(Error::InvalidParameter("sweep needs lo < hi and step > 0"));
    }
    let count = libm::floor((hi - lo) / step + 1e-9) as usize + 1;
    (0..count)
        .map(|k| {
            let b_db = lo + step * k as f64;
            let params = TwoUserParams::symmetric(a, db_to_linear(b_db), p_max)?;
            let ch = ChannelInstance::from_two_user(&params)?;
            let gap = max_gap(&params, samples)?;
            Ok(GapRow {
                b_db,
                area_pc: area_power_control(&params, samples)?,
                area_crystal: area_crystallized(&ch)?,
                max_gap_pct: gap.loss_pct,
                gap_argmax_r1: gap.at_r1,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    /// Largest amount by which a grid Pareto point exceeds the frontier.
    pub max_violation: f64,
    pub pareto_points: usize,
    /// Largest rate error after mapping frontier samples back to powers.
    pub roundtrip_max_err: f64,
    /// Frontier samples whose recovered powers left the box (or failed).
    pub roundtrip_failures: usize,
    pub passed: bool,
}

/// Checks the analytic frontier against the brute-force grid.
pub fn verify_frontier(params: &TwoUserParams, m: usize, tol: f64) -> Result<VerifyReport> {
    let ch = ChannelInstance::from_two_user(params)?;
    let pareto = grid_pareto(&ch, m)?;
    let x_max = frontier2::max_r1(params);
    let max_violation = pareto
        .iter()
        .map(|r| r[1] - frontier2::frontier_unchecked(params, r[0].min(x_max)).r2)
        .fold(0.0, f64::max);

    let trace = frontier2::trace_frontier(params, frontier2::DEFAULT_SAMPLES)?;
    let mut roundtrip_max_err: f64 = 0.0;
    let mut roundtrip_failures = 0;
    for s in &trace.samples {
        match frontier2::rate_to_power(params, s.r1, s.r2) {
            Ok((p1, p2)) => {
                let (r1, r2) = params.rates(p1, p2);
                roundtrip_max_err = roundtrip_max_err
                    .max((r1 - s.r1).abs())
                    .max((r2 - s.r2).abs());
            }
            Err(_) => roundtrip_failures += 1,
        }
    }
    Ok(VerifyReport {
        max_violation,
        pareto_points: pareto.len(),
        roundtrip_max_err,
        roundtrip_failures,
        passed: max_violation <= tol && roundtrip_failures == 0 && roundtrip_max_err <= 1e-9,
    })
}

/// Peak powers used by the random channel draws.
pub const RANDOM_P_MAX: [f64; 3] = [0.1, 1.0, 10.0];

/// Gain drawn log-uniformly over `[-20, 20]` dB.
pub fn random_gain<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    db_to_linear(rng.gen_range(-20.0..=20.0))
}

/// Random two-user parameters with log-uniform gains.
pub fn random_two_user<R: Rng + ?Sized>(rng: &mut R) -> TwoUserParams {
    let (a, b, c, d) = (
        random_gain(rng),
        random_gain(rng),
        random_gain(rng),
        random_gain(rng),
    );
    let p_max = RANDOM_P_MAX[rng.gen_range(0..RANDOM_P_MAX.len())];
    TwoUserParams { a, b, c, d, p_max }
}

/// Random `n`-user channel (σ² = 1) with log-uniform gains.
pub fn random_channel<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<ChannelInstance> {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| random_gain(rng)).collect())
        .collect();
    let p_max = RANDOM_P_MAX[rng.gen_range(0..RANDOM_P_MAX.len())];
    ChannelInstance::new(rows, 1.0, p_max)
}

/// Power vector with every entry at `p`.
pub fn flat_powers(n: usize, p: f64) -> PowerVector {
    PowerVector::new(alloc::vec![p; n])
}
