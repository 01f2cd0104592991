//! Thin wrappers over `libm` so the crate builds without `std`.

#[inline]
pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub(crate) fn ln_1p(x: f64) -> f64 {
    libm::log1p(x)
}

/// `2^x - 1` without cancellation for small `x`.
#[inline]
pub(crate) fn exp2_m1(x: f64) -> f64 {
    libm::expm1(x * core::f64::consts::LN_2)
}

#[inline]
pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub(crate) fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline]
pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

#[inline]
pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

/// `log2(1 + x)`.
#[inline]
pub(crate) fn log2_1p(x: f64) -> f64 {
    libm::log1p(x) / core::f64::consts::LN_2
}

/// Real part of the principal square root of a real number.
#[inline]
pub(crate) fn re_sqrt(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        libm::sqrt(x)
    }
}
