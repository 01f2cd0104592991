//! Crystallized rate region: time-sharing between on/off corner points.
//!
//! Corner `k` (1-based, `1..2^n`) switches on transmitter `i` exactly when bit
//! `i` of `k` is set. The crystallized region is the down-closed convex hull
//! of the corner rates.

use alloc::vec::Vec;

use itertools::Itertools;

use crate::channel::{ChannelInstance, RatePoint};
use crate::error::{Error, Result};
use crate::linalg;
use crate::math;

/// Largest `n` for which corner masks are enumerated.
pub const MAX_USERS: usize = 16;
/// Largest `n` for the exact (subset-enumeration) algorithms.
pub const MAX_EXACT_USERS: usize = 5;
/// Default number of support directions for the sampled hull.
pub const DEFAULT_SUPPORT_DIRECTIONS: usize = 1024;
/// Boundary membership tolerance in rate units.
pub const BOUNDARY_TOL: f64 = 1e-9;

const SIMPLEX_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct CornerPoint {
    /// 1-based corner index.
    pub k: usize,
    /// On/off action per transmitter.
    pub mask: Vec<bool>,
    pub rates: RatePoint,
}

/// Time-sharing weights over the `2^n - 1` corners, on the simplex.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaVector(Vec<f64>);

impl ThetaVector {
    pub fn new(theta: Vec<f64>) -> Result<Self> {
        let sum: f64 = theta.iter().sum();
        if theta.is_empty()
            || theta.iter().any(|t| !(t.is_finite() && *t >= 0.0))
            || (sum - 1.0).abs() > SIMPLEX_TOL
        {
            return Err(Error::SimplexViolation);
        }
        Ok(Self(theta))
    }

    /// All weight on corner `k` (1-based) out of `len` corners.
    pub fn unit(len: usize, k: usize) -> Self {
        let mut theta = alloc::vec![0.0; len];
        theta[k - 1] = 1.0;
        Self(theta)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of strictly positive weights.
    pub fn support_size(&self) -> usize {
        self.0.iter().filter(|t| **t > 0.0).count()
    }

    fn from_sparse(len: usize, entries: &[(usize, f64)]) -> Self {
        let mut theta = alloc::vec![0.0; len];
        let total: f64 = entries.iter().map(|e| e.1.max(0.0)).sum();
        for &(idx, w) in entries {
            let w = w.max(0.0) / total;
            if w > 1e-15 {
                theta[idx] = w;
            }
        }
        Self(theta)
    }
}

/// Boundary description of the crystallized hull.
#[derive(Debug, Clone, PartialEq)]
pub enum HullBoundary {
    /// Single user: the largest rate.
    Point(f64),
    /// Two users: upper-right boundary from `(0, max r2)` to `(max r1, 0)`.
    Polyline(Vec<HullVertex>),
    /// Three users: supporting triangles, as triples of 1-based corner indices.
    Facets(Vec<[usize; 3]>),
    /// Any `n`: support function sampled over non-negative directions.
    Support(Vec<SupportSample>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HullVertex {
    pub point: [f64; 2],
    /// Corner index when the vertex is a corner, `None` for axis endpoints.
    pub corner: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SupportSample {
    /// Unit direction with non-negative entries.
    pub direction: Vec<f64>,
    /// `max_k <direction, R_k>`.
    pub value: f64,
    /// 1-based corner attaining the maximum.
    pub corner: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrystallizedHull {
    pub corners: Vec<CornerPoint>,
    pub boundary: HullBoundary,
    /// 1-based indices of corners strictly inside the hull.
    pub dominated: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullMode {
    /// Polyline/facets with exact dominance; `n <= 5`.
    Exact,
    /// Support-function samples over the given number of directions.
    Support(usize),
}

/// Corner masks in binary-counting order.
pub fn corner_masks(n: usize) -> Result<Vec<Vec<bool>>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1"));
    }
    if n > MAX_USERS {
        return Err(Error::CapExceeded {
            requested: n as u64,
            cap: MAX_USERS as u64,
        });
    }
    Ok((1..(1usize << n))
        .map(|k| (0..n).map(|i| k >> i & 1 == 1).collect())
        .collect())
}

/// Rates of every corner point.
pub fn corner_rates(ch: &ChannelInstance) -> Result<Vec<CornerPoint>> {
    let p_max = ch.p_max();
    Ok(corner_masks(ch.n())?
        .into_iter()
        .enumerate()
        .map(|(idx, mask)| {
            let p: Vec<f64> = mask
                .iter()
                .map(|&on| if on { p_max } else { 0.0 })
                .collect();
            CornerPoint {
                k: idx + 1,
                rates: RatePoint::new(ch.rates_unchecked(&p)),
                mask,
            }
        })
        .collect())
}

fn corner_matrix(ch: &ChannelInstance) -> Result<Vec<Vec<f64>>> {
    Ok(corner_rates(ch)?
        .into_iter()
        .map(|c| c.rates.into_vec())
        .collect())
}

/// Rates obtained by time-sharing the corners with weights `theta`.
///
/// Evaluated directly from the per-corner SINR with noise-normalized gains.
pub fn theta_rates(ch: &ChannelInstance, theta: &ThetaVector) -> Result<RatePoint> {
    let n = ch.n();
    if n > MAX_USERS {
        return Err(Error::CapExceeded {
            requested: n as u64,
            cap: MAX_USERS as u64,
        });
    }
    let corners = (1usize << n) - 1;
    if theta.len() != corners {
        return Err(Error::DimensionMismatch {
            expected: corners,
            found: theta.len(),
        });
    }
    let s = ch.noise_var();
    let p = ch.p_max();
    let mut out = alloc::vec![0.0; n];
    for (idx, &w) in theta.as_slice().iter().enumerate() {
        if w == 0.0 {
            continue;
        }
        let k = idx + 1;
        for (i, r) in out.iter_mut().enumerate() {
            if k >> i & 1 == 0 {
                continue;
            }
            let interference: f64 = (0..n)
                .filter(|&j| j != i && k >> j & 1 == 1)
                .map(|j| ch.gain(i, j) / s)
                .sum::<f64>()
                * p;
            *r += w * math::log2_1p(ch.gain(i, i) / s * p / (1.0 + interference));
        }
    }
    Ok(RatePoint::new(out))
}

fn check_exact(n: usize) -> Result<()> {
    if n > MAX_EXACT_USERS {
        return Err(Error::CapExceeded {
            requested: n as u64,
            cap: MAX_EXACT_USERS as u64,
        });
    }
    Ok(())
}

/// Largest `s` such that `s · direction` lies in the crystallized region.
///
/// Enumerates the basic solutions of
/// `max s  s.t.  Σ θ_k R_k ≥ s·direction, Σ θ_k = 1, θ ≥ 0`:
/// each basis picks `m` corners and leaves `n - m` rate constraints slack.
/// Bases are visited with `m` increasing and corners in lexicographic order;
/// a later basis replaces the incumbent only on strict improvement, so the
/// witness is the sparsest, lexicographically first optimum.
pub fn max_scale(ch: &ChannelInstance, direction: &RatePoint) -> Result<(f64, ThetaVector)> {
    let n = ch.n();
    check_exact(n)?;
    if direction.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: direction.len(),
        });
    }
    let dir = direction.as_slice();
    if dir.iter().any(|d| !(*d >= 0.0 && d.is_finite())) || dir.iter().all(|d| *d == 0.0) {
        return Err(Error::ZeroDirection);
    }
    let rates = corner_matrix(ch)?;
    Ok(max_scale_with(&rates, dir))
}

pub(crate) fn max_scale_with(rates: &[Vec<f64>], dir: &[f64]) -> (f64, ThetaVector) {
    let n = dir.len();
    let corners = rates.len();
    let size = n + 1;
    let mut best: Option<(f64, Vec<(usize, f64)>)> = None;
    let feas = 1e-12;
    for m in 1..=n {
        for subset in (0..corners).combinations(m) {
            for slack in (0..n).combinations(n - m) {
                let mut mat = alloc::vec![0.0; size * size];
                for i in 0..n {
                    for (col, &k) in subset.iter().enumerate() {
                        mat[i * size + col] = rates[k][i];
                    }
                    mat[i * size + m] = -dir[i];
                }
                for (t, &i) in slack.iter().enumerate() {
                    mat[i * size + m + 1 + t] = -1.0;
                }
                for col in 0..m {
                    mat[n * size + col] = 1.0;
                }
                let mut rhs = alloc::vec![0.0; size];
                rhs[n] = 1.0;
                let Some(x) = linalg::solve(mat, rhs, size) else {
                    continue;
                };
                let s = x[m];
                if x.iter().enumerate().any(|(i, v)| i != m && *v < -feas) || s < 0.0 {
                    continue;
                }
                let improves = match &best {
                    None => true,
                    Some((b, _)) => s > *b + 1e-12 * b.abs().max(1.0),
                };
                if improves {
                    let entries = subset.iter().copied().zip(x[..m].iter().copied()).collect();
                    best = Some((s, entries));
                }
            }
        }
    }
    match best {
        Some((s, entries)) => (s, ThetaVector::from_sparse(corners, &entries)),
        None => (0.0, ThetaVector::unit(corners, 1)),
    }
}

/// Time-sharing weights reaching (or dominating) `target`.
///
/// The witness of [`max_scale`] is returned when it reproduces the target;
/// otherwise the sparsest, lexicographically first corner subset that
/// represents the target exactly is searched for, and failing that the
/// dominating witness is returned.
pub fn decompose(ch: &ChannelInstance, target: &RatePoint) -> Result<ThetaVector> {
    let n = ch.n();
    check_exact(n)?;
    if target.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: target.len(),
        });
    }
    let t = target.as_slice();
    if t.iter().any(|v| !(*v >= 0.0 && v.is_finite())) {
        return Err(Error::InvalidParameter(
            "target rates must be finite and >= 0",
        ));
    }
    let rates = corner_matrix(ch)?;
    if t.iter().all(|v| *v == 0.0) {
        return Ok(ThetaVector::unit(rates.len(), 1));
    }
    let (s, theta) = max_scale_with(&rates, t);
    if s < 1.0 - BOUNDARY_TOL {
        return Err(Error::OutsideHull);
    }
    let reached = combine(&rates, theta.as_slice(), n);
    if max_abs_diff(&reached, t) <= BOUNDARY_TOL {
        return Ok(theta);
    }
    Ok(exact_representation(&rates, t).unwrap_or(theta))
}

fn exact_representation(rates: &[Vec<f64>], target: &[f64]) -> Option<ThetaVector> {
    let n = target.len();
    let rows = n + 1;
    let mut y = target.to_vec();
    y.push(1.0);
    for m in 1..=n {
        for subset in (0..rates.len()).combinations(m) {
            let mut a = alloc::vec![0.0; rows * m];
            for (col, &k) in subset.iter().enumerate() {
                for i in 0..n {
                    a[i * m + col] = rates[k][i];
                }
                a[n * m + col] = 1.0;
            }
            let Some(x) = linalg::least_squares(&a, &y, rows, m) else {
                continue;
            };
            if x.iter().any(|v| *v < -SIMPLEX_TOL) {
                continue;
            }
            let residual = (0..rows)
                .map(|r| {
                    let fit: f64 = (0..m).map(|c| a[r * m + c] * x[c]).sum();
                    (fit - y[r]).abs()
                })
                .fold(0.0, f64::max);
            if residual <= 1e-10 {
                let entries: Vec<(usize, f64)> = subset.into_iter().zip(x).collect();
                return Some(ThetaVector::from_sparse(rates.len(), &entries));
            }
        }
    }
    None
}

fn combine(rates: &[Vec<f64>], theta: &[f64], n: usize) -> Vec<f64> {
    let mut out = alloc::vec![0.0; n];
    for (row, &w) in rates.iter().zip(theta) {
        for (o, r) in out.iter_mut().zip(row) {
            *o += w * r;
        }
    }
    out
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Crystallized hull in exact mode.
pub fn hull(ch: &ChannelInstance) -> Result<CrystallizedHull> {
    hull_with(ch, HullMode::Exact)
}

pub fn hull_with(ch: &ChannelInstance, mode: HullMode) -> Result<CrystallizedHull> {
    let corners = corner_rates(ch)?;
    let rates: Vec<Vec<f64>> = corners
        .iter()
        .map(|c| c.rates.as_slice().to_vec())
        .collect();
    let n = ch.n();
    match mode {
        HullMode::Exact => {
            check_exact(n)?;
            let dominated = rates
                .iter()
                .enumerate()
                .filter(|(_, r)| {
                    r.iter().all(|v| *v == 0.0) || max_scale_with(&rates, r).0 > 1.0 + BOUNDARY_TOL
                })
                .map(|(idx, _)| idx + 1)
                .collect();
            let boundary = match n {
                1 => HullBoundary::Point(rates[0][0]),
                2 => HullBoundary::Polyline(upper_polyline(&rates)),
                3 => HullBoundary::Facets(supporting_facets(&rates)),
                _ => HullBoundary::Support(support_samples(&rates, DEFAULT_SUPPORT_DIRECTIONS)),
            };
            Ok(CrystallizedHull {
                corners,
                boundary,
                dominated,
            })
        }
        HullMode::Support(count) => {
            let samples = support_samples(&rates, count.max(1));
            let dominated = (1..=rates.len())
                .filter(|k| !samples.iter().any(|s| s.corner == *k))
                .collect();
            Ok(CrystallizedHull {
                corners,
                boundary: HullBoundary::Support(samples),
                dominated,
            })
        }
    }
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Upper-right boundary of the down-closed hull of two-user corner rates.
fn upper_polyline(rates: &[Vec<f64>]) -> Vec<HullVertex> {
    let x_max = rates.iter().map(|r| r[0]).fold(0.0, f64::max);
    let y_max = rates.iter().map(|r| r[1]).fold(0.0, f64::max);
    let mut pts: Vec<HullVertex> = rates
        .iter()
        .enumerate()
        .map(|(idx, r)| HullVertex {
            point: [r[0], r[1]],
            corner: Some(idx + 1),
        })
        .collect();
    pts.push(HullVertex {
        point: [0.0, y_max],
        corner: None,
    });
    // Corners first among equal points so that they keep their label.
    pts.sort_by(|p, q| {
        p.point[0]
            .total_cmp(&q.point[0])
            .then(q.point[1].total_cmp(&p.point[1]))
            .then(q.corner.is_some().cmp(&p.corner.is_some()))
    });
    let top_right = pts
        .iter()
        .filter(|p| p.point[0] == x_max)
        .map(|p| p.point[1])
        .fold(0.0, f64::max);
    let mut chain: Vec<HullVertex> = Vec::new();
    for p in pts {
        if p.point[0] == x_max && p.point[1] < top_right {
            continue;
        }
        if chain.last().is_some_and(|l| l.point == p.point) {
            continue;
        }
        while chain.len() >= 2
            && cross(
                chain[chain.len() - 2].point,
                chain[chain.len() - 1].point,
                p.point,
            ) >= 0.0
        {
            chain.pop();
        }
        chain.push(p);
    }
    if top_right > 0.0 {
        chain.push(HullVertex {
            point: [x_max, 0.0],
            corner: rates
                .iter()
                .position(|r| r[0] == x_max && r[1] == 0.0)
                .map(|i| i + 1),
        });
    }
    chain
}

/// Corner triples spanning a supporting plane with a non-negative normal.
fn supporting_facets(rates: &[Vec<f64>]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for tri in (0..rates.len()).combinations(3) {
        let (p, q, r) = (&rates[tri[0]], &rates[tri[1]], &rates[tri[2]]);
        let u = [q[0] - p[0], q[1] - p[1], q[2] - p[2]];
        let v = [r[0] - p[0], r[1] - p[1], r[2] - p[2]];
        let mut w = [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ];
        let norm = math::sqrt(w.iter().map(|x| x * x).sum());
        if norm < 1e-12 {
            continue;
        }
        let sum: f64 = w.iter().sum();
        let biggest = w
            .iter()
            .copied()
            .fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
        if sum < 0.0 || (sum == 0.0 && biggest < 0.0) {
            w.iter_mut().for_each(|x| *x = -*x);
        }
        let eps = 1e-12 * norm;
        if w.iter().any(|x| *x < -eps) {
            continue;
        }
        let h: f64 = (0..3).map(|i| w[i] * p[i]).sum();
        let supports = rates
            .iter()
            .all(|c| (0..3).map(|i| w[i] * c[i]).sum::<f64>() <= h + BOUNDARY_TOL * norm);
        if supports {
            out.push([tri[0] + 1, tri[1] + 1, tri[2] + 1]);
        }
    }
    out
}

const PRIMES: [u32; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

fn radical_inverse(mut index: u64, base: u32) -> f64 {
    let b = base as u64;
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut out = 0.0;
    while index > 0 {
        out += f * (index % b) as f64;
        index /= b;
        f *= inv;
    }
    out
}

/// Deterministic non-negative unit directions from a Halton sequence.
///
/// Halton points are mapped to the simplex through exponential spacings and
/// then scaled to unit Euclidean length.
pub fn support_directions(n: usize, count: usize) -> Vec<Vec<f64>> {
    (1..=count as u64)
        .map(|idx| {
            let mut w: Vec<f64> = (0..n)
                .map(|i| -math::ln(radical_inverse(idx, PRIMES[i % PRIMES.len()])))
                .collect();
            let norm = math::sqrt(w.iter().map(|x| x * x).sum());
            w.iter_mut().for_each(|x| *x /= norm);
            w
        })
        .collect()
}

fn support_samples(rates: &[Vec<f64>], count: usize) -> Vec<SupportSample> {
    let n = rates[0].len();
    support_directions(n, count)
        .into_iter()
        .map(|direction| {
            let (idx, value) = rates
                .iter()
                .map(|r| r.iter().zip(&direction).map(|(a, b)| a * b).sum::<f64>())
                .enumerate()
                .fold(
                    (0, f64::NEG_INFINITY),
                    |acc, x| if x.1 > acc.1 { x } else { acc },
                );
            SupportSample {
                direction,
                value,
                corner: idx + 1,
            }
        })
        .collect()
}

/// Support function `max_k <w, R_k>` of the crystallized region.
pub fn support_value(ch: &ChannelInstance, direction: &[f64]) -> Result<f64> {
    let rates = corner_matrix(ch)?;
    if direction.len() != ch.n() {
        return Err(Error::DimensionMismatch {
            expected: ch.n(),
            found: direction.len(),
        });
    }
    Ok(rates
        .iter()
        .map(|r| r.iter().zip(direction).map(|(a, b)| a * b).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max))
}
