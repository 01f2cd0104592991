//! Two-user power-control frontiers.
//!
//! The frontier splits at point B = Φ(P, P). To the left (interval 1) user 2
//! stays at full power and the boundary is Φ2; to the right (interval 2) user 1
//! stays at full power and the boundary is Φ1. Both are closed forms in `r1`.

use alloc::vec::Vec;

use crate::channel::TwoUserParams;
use crate::error::{Error, Result};
use crate::math;

/// Default number of samples per frontier interval.
pub const DEFAULT_SAMPLES: usize = 512;

const DOMAIN_SLACK: f64 = 1e-12;

/// Which potential line a trace follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontierId {
    /// Φ(P, :), user 1 at full power.
    Phi1,
    /// Φ(:, P), user 2 at full power.
    Phi2,
    /// Φ2 on interval 1 followed by Φ1 on interval 2.
    Combined,
}

/// One frontier sample: rates and the unique powers achieving them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontierSample {
    pub r1: f64,
    pub r2: f64,
    pub p1: f64,
    pub p2: f64,
}

/// Sampled frontier, ordered by strictly increasing `r1`.
#[derive(Debug, Clone, PartialEq)]
pub struct FrontierTrace {
    pub frontier_id: FrontierId,
    pub samples: Vec<FrontierSample>,
}

/// The three on/off corner points of the two-user region.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CornerSet2 {
    /// Φ(0, P): user 1 silent.
    pub point_a: (f64, f64),
    /// Φ(P, P): both at full power.
    pub point_b: (f64, f64),
    /// Φ(P, 0): user 2 silent.
    pub point_c: (f64, f64),
}

/// Convexity class of a frontier.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Convexity {
    Concave,
    /// Concave up to the given power, convex after it.
    Inflection(f64),
    Convex,
}

/// Operating strategy that traces the outer boundary of the region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Both frontiers concave: power control alone is optimal.
    PowerControlOnly,
    /// Power control up to an inflection point, time-sharing beyond it.
    ConcaveThenTimeShareFromD,
    /// A convex frontier is bridged by time-sharing through B (or a concave
    /// part of the other frontier).
    TimeShareThroughB,
    /// Time division between A and C.
    PureTdm,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexityReport {
    /// Inflection threshold for Φ2 (`+∞` when `d = 0`).
    pub q1: f64,
    /// Inflection threshold for Φ1 (`+∞` when `b = 0`).
    pub q2: f64,
    pub class_phi2: Convexity,
    pub class_phi1: Convexity,
    /// Rate point on Φ2 where `p1 = q1`, if Φ2 has an inflection.
    pub inflection_d: Option<(f64, f64)>,
    pub tdm_optimal: bool,
    pub strategy: Strategy,
}

fn check_domain(value: f64, lo: f64, hi: f64) -> Result<f64> {
    let slack = DOMAIN_SLACK * hi.abs().max(1.0);
    if !(value >= lo - slack && value <= hi + slack) {
        return Err(Error::OutOfDomain { value, lo, hi });
    }
    Ok(value.clamp(lo, hi))
}

/// `R1(P, P)`, the junction between the two intervals.
pub fn junction_r1(params: &TwoUserParams) -> f64 {
    params.r1(params.p_max, params.p_max)
}

/// `R1(P, 0)`, the largest rate user 1 can reach.
pub fn max_r1(params: &TwoUserParams) -> f64 {
    math::log2_1p(params.a * params.p_max)
}

/// `R2(0, P)`, the largest rate user 2 can reach.
pub fn max_r2(params: &TwoUserParams) -> f64 {
    math::log2_1p(params.c * params.p_max)
}

/// Power of user 1 needed for rate `r1` when user 2 transmits `p2`.
#[inline]
pub fn p1_given_r1(params: &TwoUserParams, r1: f64, p2: f64) -> f64 {
    (1.0 + params.b * p2) * math::exp2_m1(r1) / params.a
}

/// User 2's rate along the line `R1 = r1` as a function of `p2`, with `p1`
/// eliminated. No power-box check on the implied `p1`.
#[inline]
pub fn r2_given_r1(params: &TwoUserParams, r1: f64, p2: f64) -> f64 {
    let t = math::exp2_m1(r1);
    let denom = 1.0 + params.d / params.a * (1.0 + params.b * p2) * t;
    math::log2_1p(params.c * p2 / denom)
}

/// Frontier Φ2 on interval 1: user 2 at full power.
pub fn phi2(params: &TwoUserParams, r1: f64) -> Result<f64> {
    params.validate()?;
    let r1 = check_domain(r1, 0.0, junction_r1(params))?;
    Ok(r2_given_r1(params, r1, params.p_max))
}

/// Frontier Φ1 on interval 2: user 1 at full power.
pub fn phi1(params: &TwoUserParams, r1: f64) -> Result<f64> {
    params.validate()?;
    if params.b == 0.0 {
        return Err(Error::NoInterference);
    }
    let r1 = check_domain(r1, junction_r1(params), max_r1(params))?;
    Ok(phi1_unchecked(params, r1))
}

fn phi1_unchecked(params: &TwoUserParams, r1: f64) -> f64 {
    let p = params.p_max;
    let t = math::exp2_m1(r1);
    let head = (params.a * p - t).max(0.0);
    math::log2_1p(params.c / params.b * head / (t * (1.0 + params.d * p)))
}

/// Power of user 2 on Φ1 for rate `r1` (user 1 at full power).
fn p2_on_phi1(params: &TwoUserParams, r1: f64) -> f64 {
    let t = math::exp2_m1(r1);
    ((params.a * params.p_max / t - 1.0) / params.b).clamp(0.0, params.p_max)
}

/// Largest `r2` reachable by power control at `r1`, with its powers.
///
/// For `b = 0` the whole range is interval 1 and the right edge of the
/// region is vertical at `r1 = R1(P, 0)`; the value returned there is the top
/// of that edge.
pub fn frontier(params: &TwoUserParams, r1: f64) -> Result<FrontierSample> {
    params.validate()?;
    let hi = max_r1(params);
    let r1 = check_domain(r1, 0.0, hi)?;
    Ok(frontier_unchecked(params, r1))
}

pub(crate) fn frontier_unchecked(params: &TwoUserParams, r1: f64) -> FrontierSample {
    let p = params.p_max;
    let rb = junction_r1(params);
    if r1 <= rb || params.b == 0.0 {
        let p1 = if r1 >= rb {
            p
        } else {
            p1_given_r1(params, r1, p).min(p)
        };
        FrontierSample {
            r1,
            r2: r2_given_r1(params, r1, p),
            p1,
            p2: p,
        }
    } else {
        FrontierSample {
            r1,
            r2: phi1_unchecked(params, r1),
            p1: p,
            p2: p2_on_phi1(params, r1),
        }
    }
}

/// Unique power pair that achieves `(r1, r2)`.
pub fn rate_to_power(params: &TwoUserParams, r1: f64, r2: f64) -> Result<(f64, f64)> {
    params.validate()?;
    if !(r1 >= 0.0 && r2 >= 0.0) {
        return Err(Error::Infeasible);
    }
    let TwoUserParams { a, b, c, d, p_max } = *params;
    let t1 = math::exp2_m1(r1);
    let t2 = math::exp2_m1(r2);
    let det = 1.0 - t1 * t2 * b * d / (a * c);
    if !(det > 0.0) {
        return Err(Error::Infeasible);
    }
    let p1 = t1 / a * (1.0 + b * t2 / c) / det;
    let p2 = t2 / c * (1.0 + d * t1 / a) / det;
    let slack = 1e-9 * p_max.max(1.0);
    if !(p1 <= p_max + slack && p2 <= p_max + slack) {
        return Err(Error::Infeasible);
    }
    Ok((p1.min(p_max), p2.min(p_max)))
}

pub fn corner_points(params: &TwoUserParams) -> Result<CornerSet2> {
    params.validate()?;
    let p = params.p_max;
    Ok(CornerSet2 {
        point_a: params.rates(0.0, p),
        point_b: params.rates(p, p),
        point_c: params.rates(p, 0.0),
    })
}

/// Closed form whose sign is the sign of `d²Φ2/dr1²` at `p1`.
pub fn second_derivative_phi2(params: &TwoUserParams, p1: f64) -> f64 {
    let TwoUserParams { a, b, c, d, p_max } = *params;
    let alpha = d * (1.0 + b * p_max);
    let lead = alpha + a * d * p1;
    lead * lead - (a - alpha) * (a - alpha + a * c * p_max)
}

/// Inflection thresholds `(q1, q2)` for Φ2 and Φ1.
///
/// A zero cross gain makes the corresponding frontier flat (and concave);
/// its threshold is reported as `+∞`.
pub fn inflection_thresholds(params: &TwoUserParams) -> Result<(f64, f64)> {
    params.validate()?;
    let TwoUserParams { a, b, c, d, p_max } = *params;
    if b == 0.0 && d == 0.0 {
        return Err(Error::NoInterference);
    }
    let q1 = if d == 0.0 {
        f64::INFINITY
    } else {
        let alpha = d * (1.0 + b * p_max);
        (math::re_sqrt((a - alpha) * (a - alpha + a * c * p_max)) - alpha) / (a * d)
    };
    let q2 = if b == 0.0 {
        f64::INFINITY
    } else {
        let beta = b * (1.0 + d * p_max);
        (math::re_sqrt((c - beta) * (c - beta + a * c * p_max)) - beta) / (c * b)
    };
    Ok((q1, q2))
}

fn class_of(q: f64, p_max: f64) -> Convexity {
    let tol = 1e-9 * p_max.max(1.0);
    if q >= p_max - tol {
        Convexity::Concave
    } else if q <= tol {
        Convexity::Convex
    } else {
        Convexity::Inflection(q)
    }
}

pub fn classify(params: &TwoUserParams) -> Result<ConvexityReport> {
    params.validate()?;
    let (q1, q2) = match inflection_thresholds(params) {
        Ok(q) => q,
        Err(Error::NoInterference) => (f64::INFINITY, f64::INFINITY),
        Err(e) => return Err(e),
    };
    let class_phi2 = class_of(q1, params.p_max);
    let class_phi1 = class_of(q2, params.p_max);
    let inflection_d = match class_phi2 {
        Convexity::Inflection(q) => Some(params.rates(q, params.p_max)),
        _ => None,
    };
    let tdm = tdm_optimal(params)?;
    let strategy = if tdm {
        Strategy::PureTdm
    } else {
        match (class_phi2, class_phi1) {
            (Convexity::Concave, Convexity::Concave) => Strategy::PowerControlOnly,
            (Convexity::Convex, _) | (_, Convexity::Convex) => Strategy::TimeShareThroughB,
            _ => Strategy::ConcaveThenTimeShareFromD,
        }
    };
    Ok(ConvexityReport {
        q1,
        q2,
        class_phi2,
        class_phi1,
        inflection_d,
        tdm_optimal: tdm,
        strategy,
    })
}

/// Whether time division between A and C beats every point using B.
///
/// Ties count as TDM-optimal.
pub fn tdm_optimal(params: &TwoUserParams) -> Result<bool> {
    params.validate()?;
    let TwoUserParams {
        a,
        b,
        c,
        d,
        p_max: p,
    } = *params;
    let gamma = math::log2_1p(c * p) / math::log2_1p(a * p);
    let lhs = (1.0 + c * p) * (1.0 + d * p) / (1.0 + c * p + d * p);
    let rhs = math::powf((1.0 + a * p + b * p) / (1.0 + b * p), gamma);
    Ok(lhs >= rhs)
}

/// Signed gap between the A–C chord and point B at `r1 = R1(P, P)`.
///
/// Non-negative exactly when the chord passes on or above B.
pub fn chord_margin(params: &TwoUserParams) -> Result<f64> {
    let CornerSet2 {
        point_a,
        point_b,
        point_c,
    } = corner_points(params)?;
    let chord = point_a.1 * (1.0 - point_b.0 / point_c.0);
    Ok(chord - point_b.1)
}

/// Cross gain above which TDM is optimal on a symmetric two-user channel.
pub fn symmetric_threshold_b2(a: f64, p_max: f64) -> f64 {
    math::sqrt(1.0 + a * p_max) / p_max
}

fn uniform(lo: f64, hi: f64, samples: usize) -> impl Iterator<Item = f64> {
    let steps = (samples - 1) as f64;
    (0..samples).map(move |k| {
        if k + 1 == samples {
            hi
        } else {
            lo + (hi - lo) * (k as f64 / steps)
        }
    })
}

/// Samples Φ2 over interval 1 (`samples` points, endpoints exact).
pub fn trace_phi2(params: &TwoUserParams, samples: usize) -> Result<FrontierTrace> {
    params.validate()?;
    let samples = samples.max(2);
    let rb = junction_r1(params);
    let mut out: Vec<FrontierSample> = uniform(0.0, rb, samples)
        .map(|r1| frontier_unchecked(params, r1))
        .collect();
    if let Some(last) = out.last_mut() {
        *last = junction_sample(params);
    }
    Ok(FrontierTrace {
        frontier_id: FrontierId::Phi2,
        samples: out,
    })
}

/// Samples Φ1 over interval 2 (`samples` points, endpoints exact).
pub fn trace_phi1(params: &TwoUserParams, samples: usize) -> Result<FrontierTrace> {
    params.validate()?;
    if params.b == 0.0 {
        return Err(Error::NoInterference);
    }
    let samples = samples.max(2);
    let rb = junction_r1(params);
    let hi = max_r1(params);
    let mut out: Vec<FrontierSample> = uniform(rb, hi, samples)
        .map(|r1| FrontierSample {
            r1,
            r2: phi1_unchecked(params, r1),
            p1: params.p_max,
            p2: p2_on_phi1(params, r1),
        })
        .collect();
    out[0] = junction_sample(params);
    let last = out.len() - 1;
    out[last] = FrontierSample {
        r1: hi,
        r2: 0.0,
        p1: params.p_max,
        p2: 0.0,
    };
    Ok(FrontierTrace {
        frontier_id: FrontierId::Phi1,
        samples: out,
    })
}

/// Full power-control frontier: Φ2 then Φ1, junction B included once.
pub fn trace_frontier(params: &TwoUserParams, samples: usize) -> Result<FrontierTrace> {
    let mut trace = trace_phi2(params, samples)?;
    if params.b > 0.0 {
        let right = trace_phi1(params, samples)?;
        trace.samples.extend(right.samples.into_iter().skip(1));
    }
    trace.frontier_id = FrontierId::Combined;
    Ok(trace)
}

fn junction_sample(params: &TwoUserParams) -> FrontierSample {
    let p = params.p_max;
    let (r1, r2) = params.rates(p, p);
    FrontierSample {
        r1,
        r2,
        p1: p,
        p2: p,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, b: f64, c: f64, d: f64) -> TwoUserParams {
        TwoUserParams::new(a, b, c, d, 1.0).unwrap()
    }

    #[test]
    fn phi2_examples() {
        let s = p(10.0, 1.0, 10.0, 1.0);
        let v = phi2(&s, 1.0).unwrap();
        assert!((v - (1.0 + 10.0 / 1.2f64).log2()).abs() < 1e-12);
        assert!((v - 3.2224).abs() < 1e-4);
        assert!((phi2(&s, 0.0).unwrap() - 11f64.log2()).abs() < 1e-12);
        assert!((phi2(&s, 6f64.log2()).unwrap() - 6f64.log2()).abs() < 1e-12);
        assert!(matches!(phi2(&s, 2.7), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn phi1_examples() {
        let s = p(10.0, 1.0, 10.0, 1.0);
        let v = phi1(&s, 3.0).unwrap();
        assert!((v - (1.0 + 30.0 / 14.0f64).log2()).abs() < 1e-12);
        assert!((v - 1.6521).abs() < 1e-4);
        assert!(phi1(&s, 11f64.log2()).unwrap().abs() < 1e-12);
        assert!((phi1(&s, 6f64.log2()).unwrap() - 6f64.log2()).abs() < 1e-12);
        assert!(matches!(phi1(&s, 1.0), Err(Error::OutOfDomain { .. })));
        assert_eq!(
            phi1(&p(10.0, 0.0, 10.0, 1.0), 3.0),
            Err(Error::NoInterference)
        );
    }

    #[test]
    fn frontier_examples() {
        let s = p(10.0, 1.0, 10.0, 1.0);
        let f = frontier(&s, 1.0).unwrap();
        assert!((f.r2 - 3.2224).abs() < 1e-4);
        assert!((f.p1 - 0.2).abs() < 1e-12);
        assert_eq!(f.p2, 1.0);
        let f = frontier(&s, 0.0).unwrap();
        assert_eq!((f.p1, f.p2), (0.0, 1.0));
        assert!((f.r2 - 11f64.log2()).abs() < 1e-12);
        let f = frontier(&s, 11f64.log2()).unwrap();
        assert!(f.r2.abs() < 1e-12);
        assert_eq!(f.p1, 1.0);
        assert!(f.p2.abs() < 1e-12);
    }

    #[test]
    fn rate_to_power_examples() {
        let s = p(10.0, 1.0, 10.0, 1.0);
        let (p1, p2) = rate_to_power(&s, 6f64.log2(), 6f64.log2()).unwrap();
        assert!((p1 - 1.0).abs() < 1e-9 && (p2 - 1.0).abs() < 1e-9);
        let (p1, p2) = rate_to_power(&s, 11f64.log2(), 0.0).unwrap();
        assert!((p1 - 1.0).abs() < 1e-9 && p2 == 0.0);
        let r2 = phi2(&s, 1.0).unwrap();
        let (p1, p2) = rate_to_power(&s, 1.0, r2).unwrap();
        assert!((p1 - 0.2).abs() < 1e-9 && (p2 - 1.0).abs() < 1e-9);
        assert_eq!(rate_to_power(&s, 3.0, 3.0), Err(Error::Infeasible));
        assert_eq!(rate_to_power(&s, 3.4, 0.5), Err(Error::Infeasible));
    }

    #[test]
    fn corner_examples() {
        let c = corner_points(&p(1.0, 3.0, 1.0, 3.0)).unwrap();
        assert_eq!(c.point_a, (0.0, 1.0));
        assert_eq!(c.point_c, (1.0, 0.0));
        assert!((c.point_b.0 - 0.3219).abs() < 1e-4 && (c.point_b.1 - 0.3219).abs() < 1e-4);
        let c = corner_points(&p(10.0, 1.0, 10.0, 1.0)).unwrap();
        assert!((c.point_b.0 - 2.5850).abs() < 1e-4);
        let c = corner_points(&p(3.0, 0.0, 7.0, 0.0)).unwrap();
        assert_eq!(c.point_b, (c.point_c.0, c.point_a.1));
    }

    #[test]
    fn second_derivative_examples() {
        assert_eq!(
            second_derivative_phi2(&p(10.0, 1.0, 10.0, 1.0), 0.0),
            -860.0
        );
        assert_eq!(
            second_derivative_phi2(&p(10.0, 15.0, 10.0, 4.0), 0.0),
            6580.0
        );
        let s = p(10.0, 1.0, 10.0, 4.0);
        let (q1, _) = inflection_thresholds(&s).unwrap();
        assert!(second_derivative_phi2(&s, q1).abs() < 1e-6);
    }

    #[test]
    fn threshold_examples() {
        let (q1, q2) = inflection_thresholds(&p(10.0, 1.0, 10.0, 1.0)).unwrap();
        assert!((q1 - 2.7394).abs() < 1e-4 && (q1 - q2).abs() < 1e-12);
        let (q1, q2) = inflection_thresholds(&p(10.0, 1.0, 10.0, 4.0)).unwrap();
        assert!((q1 - 0.15707).abs() < 1e-5);
        assert!((q2 - 1.7913).abs() < 1e-4);
        let (q1, q2) = inflection_thresholds(&p(10.0, 15.0, 10.0, 4.0)).unwrap();
        assert!((q1 + 1.6).abs() < 1e-12 && (q2 + 0.5).abs() < 1e-12);
        assert_eq!(
            inflection_thresholds(&p(10.0, 0.0, 10.0, 0.0)),
            Err(Error::NoInterference)
        );
        let (q1, q2) = inflection_thresholds(&p(10.0, 0.0, 10.0, 4.0)).unwrap();
        assert!(q1.is_finite() && q2 == f64::INFINITY);
    }

    #[test]
    fn classify_examples() {
        let r = classify(&p(10.0, 1.0, 10.0, 1.0)).unwrap();
        assert_eq!(
            (r.class_phi2, r.class_phi1),
            (Convexity::Concave, Convexity::Concave)
        );
        assert_eq!(r.strategy, Strategy::PowerControlOnly);
        assert!(r.inflection_d.is_none());

        let r = classify(&p(10.0, 1.0, 10.0, 4.0)).unwrap();
        match r.class_phi2 {
            Convexity::Inflection(q) => assert!((q - 0.15707).abs() < 1e-5),
            other => panic!("expected inflection, got {other:?}"),
        }
        assert_eq!(r.class_phi1, Convexity::Concave);
        let d = r.inflection_d.unwrap();
        assert_eq!(d, s_rates(&p(10.0, 1.0, 10.0, 4.0), r.q1));
        assert_eq!(r.strategy, Strategy::ConcaveThenTimeShareFromD);

        let r = classify(&p(10.0, 1.0, 10.0, 6.0)).unwrap();
        assert_eq!(
            (r.class_phi2, r.class_phi1),
            (Convexity::Convex, Convexity::Concave)
        );

        let r = classify(&p(10.0, 0.0, 10.0, 0.0)).unwrap();
        assert_eq!(
            (r.class_phi2, r.class_phi1),
            (Convexity::Concave, Convexity::Concave)
        );
        assert!(!r.tdm_optimal);

        let r = classify(&p(1.0, 3.0, 1.0, 3.0)).unwrap();
        assert!(r.tdm_optimal);
        assert_eq!(r.strategy, Strategy::PureTdm);
    }

    fn s_rates(s: &TwoUserParams, q: f64) -> (f64, f64) {
        s.rates(q, s.p_max)
    }

    #[test]
    fn classification_band_prefers_end_classes() {
        assert_eq!(class_of(1.0 - 1e-10, 1.0), Convexity::Concave);
        assert_eq!(class_of(1e-10, 1.0), Convexity::Convex);
        assert_eq!(class_of(0.5, 1.0), Convexity::Inflection(0.5));
    }

    #[test]
    fn tdm_examples() {
        assert!(tdm_optimal(&p(1.0, 3.0, 1.0, 3.0)).unwrap());
        assert!(!tdm_optimal(&p(1.0, 0.2, 1.0, 0.2)).unwrap());
        assert!(!tdm_optimal(&p(4.0, 0.0, 2.0, 0.0)).unwrap());
        assert!(chord_margin(&p(1.0, 3.0, 1.0, 3.0)).unwrap() > 0.0);
        assert!(chord_margin(&p(1.0, 0.2, 1.0, 0.2)).unwrap() < 0.0);
    }

    #[test]
    fn symmetric_threshold_examples() {
        assert!((symmetric_threshold_b2(1.0, 1.0) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(symmetric_threshold_b2(3.0, 1.0), 2.0);
        let t = symmetric_threshold_b2(1e6, 1.0);
        assert!((t - 1000.0005).abs() < 1e-4);
        assert!((t / 1e3 - 1.0).abs() < 1e-3);
    }

    #[test]
    fn trace_shape() {
        let s = p(10.0, 1.0, 10.0, 4.0);
        let t = trace_frontier(&s, DEFAULT_SAMPLES).unwrap();
        assert_eq!(t.samples.len(), 2 * DEFAULT_SAMPLES - 1);
        assert_eq!(t.samples[0].r1, 0.0);
        assert_eq!(t.samples.last().unwrap().r1, max_r1(&s));
        assert!(t.samples.windows(2).all(|w| w[0].r1 < w[1].r1));
        let b = &t.samples[DEFAULT_SAMPLES - 1];
        assert_eq!((b.p1, b.p2), (1.0, 1.0));

        let flat = trace_frontier(&p(10.0, 0.0, 10.0, 2.0), 16).unwrap();
        assert_eq!(flat.samples.len(), 16);
        assert_eq!(
            flat.samples.last().unwrap().r1,
            max_r1(&p(10.0, 0.0, 10.0, 2.0))
        );
    }

    #[test]
    fn one_sided_interference_keeps_rectangle_edge() {
        let s = p(10.0, 0.0, 10.0, 2.0);
        let f = frontier(&s, max_r1(&s)).unwrap();
        assert!((f.r2 - (13.0f64 / 3.0).log2()).abs() < 1e-12);
        assert_eq!((f.p1, f.p2), (1.0, 1.0));
        let r = classify(&s).unwrap();
        assert_eq!(r.class_phi1, Convexity::Concave);
    }
}
