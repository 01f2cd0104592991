//! Physical channel description and the treat-interference-as-noise rate.
//!
//! Gains are stored row-per-receiver: entry `(i, j)` is the linear power gain
//! seen at receiver `i` from transmitter `j`. For two users the raw matrix
//! `[[g11, g12], [g21, g22]]` therefore maps to the normalized parameters
//! `a = g11/σ², b = g12/σ², d = g21/σ², c = g22/σ²`. Note the order: the
//! bottom-left entry is `d`, the bottom-right entry is `c`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// An `n`-user Gaussian interference channel with a shared peak power.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelInstance {
    n: usize,
    gains: Vec<f64>,
    noise_var: f64,
    p_max: f64,
    degenerate: bool,
}

impl ChannelInstance {
    /// Builds a channel from a row-per-receiver gain matrix.
    ///
    /// Every direct gain must be strictly positive; use
    /// [`ChannelInstance::new_degenerate`] to allow silent links.
    pub fn new(gains: Vec<Vec<f64>>, noise_var: f64, p_max: f64) -> Result<Self> {
        Self::build(gains, noise_var, p_max, false)
    }

    /// Like [`ChannelInstance::new`] but accepts zero direct gains.
    pub fn new_degenerate(gains: Vec<Vec<f64>>, noise_var: f64, p_max: f64) -> Result<Self> {
        Self::build(gains, noise_var, p_max, true)
    }

    fn build(rows: Vec<Vec<f64>>, noise_var: f64, p_max: f64, degenerate: bool) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidParameter("gain matrix is empty"));
        }
        if !(noise_var.is_finite() && noise_var > 0.0) {
            return Err(Error::InvalidParameter("noise_var must be finite and > 0"));
        }
        if !(p_max.is_finite() && p_max > 0.0) {
            return Err(Error::InvalidParameter("p_max must be finite and > 0"));
        }
        let mut gains = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: row.len(),
                });
            }
            for (j, g) in row.into_iter().enumerate() {
                if !(g.is_finite() && g >= 0.0) {
                    return Err(Error::InvalidParameter("gains must be finite and >= 0"));
                }
                if i == j && g == 0.0 && !degenerate {
                    return Err(Error::DegenerateChannel);
                }
                gains.push(g);
            }
        }
        Ok(Self {
            n,
            gains,
            noise_var,
            p_max,
            degenerate,
        })
    }

    /// Symmetric channel: every direct gain `direct`, every cross gain `cross`.
    pub fn symmetric(
        n: usize,
        direct: f64,
        cross: f64,
        noise_var: f64,
        p_max: f64,
    ) -> Result<Self> {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { direct } else { cross })
                    .collect()
            })
            .collect();
        Self::new(rows, noise_var, p_max)
    }

    /// Two-user channel from already-normalized parameters (σ² = 1).
    pub fn from_two_user(params: &TwoUserParams) -> Result<Self> {
        Self::new(
            alloc::vec![
                alloc::vec![params.a, params.b],
                alloc::vec![params.d, params.c]
            ],
            1.0,
            params.p_max,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn noise_var(&self) -> f64 {
        self.noise_var
    }

    pub fn p_max(&self) -> f64 {
        self.p_max
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Gain at receiver `i` from transmitter `j` (zero-based).
    #[inline]
    pub fn gain(&self, i: usize, j: usize) -> f64 {
        self.gains[i * self.n + j]
    }

    /// Gain matrix as rows.
    pub fn gain_rows(&self) -> Vec<Vec<f64>> {
        self.gains.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Returns a copy with gain `(i, j)` replaced.
    pub fn with_gain(&self, i: usize, j: usize, value: f64) -> Result<Self> {
        let mut rows = self.gain_rows();
        rows[i][j] = value;
        Self::build(rows, self.noise_var, self.p_max, self.degenerate)
    }

    fn check_powers(&self, p: &PowerVector) -> Result<()> {
        if p.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: p.len(),
            });
        }
        for (index, &value) in p.as_slice().iter().enumerate() {
            if !(value >= 0.0 && value <= self.p_max) {
                return Err(Error::PowerOutOfRange { index, value });
            }
        }
        Ok(())
    }

    /// SINR at receiver `i` without argument checks.
    #[inline]
    pub(crate) fn sinr_unchecked(&self, p: &[f64], i: usize) -> f64 {
        let row = &self.gains[i * self.n..(i + 1) * self.n];
        let mut interference = self.noise_var;
        for (j, (&g, &pj)) in row.iter().zip(p).enumerate() {
            if j != i {
                interference += g * pj;
            }
        }
        row[i] * p[i] / interference
    }

    pub(crate) fn rates_unchecked(&self, p: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| math::log2_1p(self.sinr_unchecked(p, i)))
            .collect()
    }
}

/// Transmit powers, one per user, in linear units.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerVector(Vec<f64>);

impl PowerVector {
    pub fn new(p: Vec<f64>) -> Self {
        Self(p)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl From<Vec<f64>> for PowerVector {
    fn from(p: Vec<f64>) -> Self {
        Self(p)
    }
}

/// Rates in bits per channel use.
#[derive(Debug, Clone, PartialEq)]
pub struct RatePoint(Vec<f64>);

impl RatePoint {
    pub fn new(r: Vec<f64>) -> Self {
        Self(r)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl From<Vec<f64>> for RatePoint {
    fn from(r: Vec<f64>) -> Self {
        Self(r)
    }
}

impl core::ops::Index<usize> for PowerVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl core::ops::Index<usize> for RatePoint {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

/// Noise-normalized two-user parameters.
///
/// `a = g11/σ²`, `b = g12/σ²`, `c = g22/σ²`, `d = g21/σ²`: user 1 sees
/// interference `b·P2`, user 2 sees interference `d·P1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoUserParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub p_max: f64,
}

impl TwoUserParams {
    /// Validated constructor.
    pub fn new(a: f64, b: f64, c: f64, d: f64, p_max: f64) -> Result<Self> {
        let p = Self { a, b, c, d, p_max };
        p.validate()?;
        Ok(p)
    }

    /// Symmetric pair: `a = c`, `b = d`.
    pub fn symmetric(a: f64, b: f64, p_max: f64) -> Result<Self> {
        Self::new(a, b, a, b, p_max)
    }

    pub fn validate(&self) -> Result<()> {
        let all = [self.a, self.b, self.c, self.d, self.p_max];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidParameter(
                "two-user parameters must be finite",
            ));
        }
        if self.b < 0.0 || self.d < 0.0 {
            return Err(Error::InvalidParameter("cross gains must be >= 0"));
        }
        if self.p_max <= 0.0 {
            return Err(Error::InvalidParameter("p_max must be > 0"));
        }
        if self.a <= 0.0 || self.c <= 0.0 {
            return Err(Error::DegenerateChannel);
        }
        Ok(())
    }

    /// Users swapped: `(a, b, c, d) -> (c, d, a, b)`.
    pub fn swapped(&self) -> Self {
        Self {
            a: self.c,
            b: self.d,
            c: self.a,
            d: self.b,
            p_max: self.p_max,
        }
    }

    /// `R1(p1, p2)`.
    #[inline]
    pub fn r1(&self, p1: f64, p2: f64) -> f64 {
        math::log2_1p(self.a * p1 / (1.0 + self.b * p2))
    }

    /// `R2(p1, p2)`.
    #[inline]
    pub fn r2(&self, p1: f64, p2: f64) -> f64 {
        math::log2_1p(self.c * p2 / (1.0 + self.d * p1))
    }

    /// Both rates at `(p1, p2)`.
    #[inline]
    pub fn rates(&self, p1: f64, p2: f64) -> (f64, f64) {
        (self.r1(p1, p2), self.r2(p1, p2))
    }
}

/// Rates of every user under the power vector `p`.
pub fn rate_vector(ch: &ChannelInstance, p: &PowerVector) -> Result<RatePoint> {
    ch.check_powers(p)?;
    Ok(RatePoint(ch.rates_unchecked(p.as_slice())))
}

/// SINR at receiver `i` (zero-based).
pub fn sinr(ch: &ChannelInstance, p: &PowerVector, i: usize) -> Result<f64> {
    ch.check_powers(p)?;
    if i >= ch.n {
        return Err(Error::IndexOutOfRange { index: i, n: ch.n });
    }
    Ok(ch.sinr_unchecked(p.as_slice(), i))
}

/// Divides the two-user gains by the noise variance.
pub fn normalize_two_user(ch: &ChannelInstance) -> Result<TwoUserParams> {
    if ch.n != 2 {
        return Err(Error::WrongDimension {
            expected: 2,
            found: ch.n,
        });
    }
    let s = ch.noise_var;
    let params = TwoUserParams {
        a: ch.gain(0, 0) / s,
        b: ch.gain(0, 1) / s,
        c: ch.gain(1, 1) / s,
        d: ch.gain(1, 0) / s,
        p_max: ch.p_max,
    };
    params.validate()?;
    Ok(params)
}

/// Power gain in dB to linear.
pub fn db_to_linear(db: f64) -> f64 {
    math::powf(10.0, db / 10.0)
}
