//! n-user potential surfaces, two-user region membership and the symmetric
//! n-user TDM threshold.

use alloc::vec::Vec;

use crate::channel::{ChannelInstance, PowerVector, RatePoint, TwoUserParams};
use crate::error::{Error, Result};
use crate::frontier2;
use crate::math;

/// Largest number of grid points per surface.
pub const MAX_SURFACE_POINTS: u64 = 10_000_000;

/// Rate points on the surface where transmitter `surface_index` is pinned at
/// full power and the other powers sweep a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceSample {
    /// Zero-based index of the pinned transmitter.
    pub surface_index: usize,
    pub grid: Vec<(PowerVector, RatePoint)>,
}

/// Where a two-user rate pair sits relative to the achievable regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    /// Reachable by power control alone.
    InsidePowerControl,
    /// Reachable only with time-sharing.
    InsideConvexHullOnly,
    Outside,
}

/// Distances from the origin to the all-on point B and to the TDM
/// hyperplane, for a symmetric `n`-user channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricGeometry {
    pub n: usize,
    pub a: f64,
    pub b: f64,
    pub p_max: f64,
    pub ob_len: f64,
    pub obprime_len: f64,
    pub b_star_n: f64,
    pub b_star_inf: f64,
}

/// Samples the surface with `p_i = P_max` (zero-based `i`).
///
/// The free powers take `grid_res` uniform values in `[0, P_max]`; the
/// lowest-numbered free transmitter varies slowest.
pub fn sample_surface(ch: &ChannelInstance, i: usize, grid_res: usize) -> Result<SurfaceSample> {
    let n = ch.n();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    if grid_res < 2 {
        return Err(Error::InvalidParameter("grid_res must be >= 2"));
    }
    let total = checked_grid_size(grid_res, n - 1)?;
    let p_max = ch.p_max();
    let step = |k: usize| {
        if k + 1 == grid_res {
            p_max
        } else {
            p_max * k as f64 / (grid_res - 1) as f64
        }
    };
    let free: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let mut grid = Vec::with_capacity(total as usize);
    let mut digits = alloc::vec![0usize; free.len()];
    for _ in 0..total {
        let mut p = alloc::vec![0.0; n];
        p[i] = p_max;
        for (&j, &k) in free.iter().zip(&digits) {
            p[j] = step(k);
        }
        let r = ch.rates_unchecked(&p);
        grid.push((PowerVector::new(p), RatePoint::new(r)));
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < grid_res {
                break;
            }
            *d = 0;
        }
    }
    Ok(SurfaceSample {
        surface_index: i,
        grid,
    })
}

pub(crate) fn checked_grid_size(m: usize, dims: usize) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..dims {
        total = total.saturating_mul(m as u64);
        if total > MAX_SURFACE_POINTS {
            return Err(Error::CapExceeded {
                requested: total,
                cap: MAX_SURFACE_POINTS,
            });
        }
    }
    Ok(total)
}

/// Classifies `r` against the power-control region and its convex hull.
///
/// The convex hull is taken over the frontier sampled with
/// [`frontier2::DEFAULT_SAMPLES`] points per interval plus the axis
/// endpoints.
pub fn membership_2user(params: &TwoUserParams, r: &RatePoint) -> Result<Membership> {
    params.validate()?;
    if r.len() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: r.len(),
        });
    }
    let (r1, r2) = (r[0], r[1]);
    if !(r1 >= 0.0 && r2 >= 0.0) {
        return Err(Error::InvalidParameter("rates must be >= 0"));
    }
    let tol = crate::crystallize::BOUNDARY_TOL;
    let x_max = frontier2::max_r1(params);
    if r1 > x_max + tol {
        return Ok(Membership::Outside);
    }
    let edge = frontier2::frontier_unchecked(params, r1.min(x_max)).r2;
    if r2 <= edge + tol {
        return Ok(Membership::InsidePowerControl);
    }
    let trace = frontier2::trace_frontier(params, frontier2::DEFAULT_SAMPLES)?;
    let mut pts: Vec<[f64; 2]> = trace.samples.iter().map(|s| [s.r1, s.r2]).collect();
    pts.push([x_max, 0.0]);
    let envelope = upper_envelope(&pts);
    if r2 <= envelope_at(&envelope, r1) + tol {
        Ok(Membership::InsideConvexHullOnly)
    } else {
        Ok(Membership::Outside)
    }
}

/// Upper concave envelope of points sorted by increasing x.
pub(crate) fn upper_envelope(pts: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut chain: Vec<[f64; 2]> = Vec::new();
    for &p in pts {
        while chain.len() >= 2 {
            let o = chain[chain.len() - 2];
            let a = chain[chain.len() - 1];
            let turn = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0]);
            if turn >= 0.0 {
                chain.pop();
            } else {
                break;
            }
        }
        chain.push(p);
    }
    chain
}

/// Piecewise-linear evaluation; the largest y at a repeated x.
pub(crate) fn envelope_at(chain: &[[f64; 2]], x: f64) -> f64 {
    let mut best = f64::NEG_INFINITY;
    for w in chain.windows(2) {
        let (p, q) = (w[0], w[1]);
        if x >= p[0] && x <= q[0] {
            let y = if q[0] == p[0] {
                p[1].max(q[1])
            } else {
                p[1] + (q[1] - p[1]) * (x - p[0]) / (q[0] - p[0])
            };
            best = best.max(y);
        }
    }
    if chain.len() == 1 && chain[0][0] == x {
        best = chain[0][1];
    }
    best
}

/// `(‖OB‖, ‖OB'‖)` for the symmetric `n`-user channel.
pub fn ob_lengths(a: f64, b: f64, p_max: f64, n: usize) -> Result<(f64, f64)> {
    check_symmetric(a, b, p_max, n)?;
    let nf = n as f64;
    let ob = math::sqrt(nf) * math::log2_1p(a * p_max / (1.0 + (nf - 1.0) * b * p_max));
    let obprime = math::log2_1p(a * p_max) / math::sqrt(nf);
    Ok((ob, obprime))
}

/// Cross gain at and above which TDM beats simultaneous full power on a
/// symmetric `n`-user channel.
pub fn tdm_threshold_n(a: f64, p_max: f64, n: usize) -> Result<f64> {
    check_symmetric(a, 0.0, p_max, n)?;
    let nf = n as f64;
    let ap = a * p_max;
    // (1 + aP)^(1/n) - 1, computed without cancellation for large n
    let root_m1 = libm::expm1(math::ln_1p(ap) / nf);
    Ok((ap / root_m1 - 1.0) / ((nf - 1.0) * p_max))
}

/// Limit of [`tdm_threshold_n`] as `n` grows.
pub fn asymptotic_threshold(a: f64, p_max: f64) -> Result<f64> {
    check_symmetric(a, 0.0, p_max, 2)?;
    Ok(a / math::ln_1p(a * p_max))
}

pub fn symmetric_geometry(a: f64, b: f64, p_max: f64, n: usize) -> Result<SymmetricGeometry> {
    let (ob_len, obprime_len) = ob_lengths(a, b, p_max, n)?;
    Ok(SymmetricGeometry {
        n,
        a,
        b,
        p_max,
        ob_len,
        obprime_len,
        b_star_n: tdm_threshold_n(a, p_max, n)?,
        b_star_inf: asymptotic_threshold(a, p_max)?,
    })
}

fn check_symmetric(a: f64, b: f64, p_max: f64, n: usize) -> Result<()> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::InvalidParameter("a must be finite and > 0"));
    }
    if !(b.is_finite() && b >= 0.0) {
        return Err(Error::InvalidParameter("b must be finite and >= 0"));
    }
    if !(p_max.is_finite() && p_max > 0.0) {
        return Err(Error::InvalidParameter("p_max must be finite and > 0"));
    }
    if n < 2 {
        return Err(Error::InvalidParameter("n must be >= 2"));
    }
    Ok(())
}
