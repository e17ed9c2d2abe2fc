//! Thin wrappers over `libm` so the crate stays `no_std`.
//!
//! All floating-point math in the library goes through these helpers; the
//! inherent `f64` methods (`sqrt`, `log10`, …) live in `std` and are not
//! available here.

pub(crate) fn log10(x: f64) -> f64 {
    libm::log10(x)
}

/// `10^x`.
pub(crate) fn pow10(x: f64) -> f64 {
    libm::pow(10.0, x)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

pub(crate) fn fmax(a: f64, b: f64) -> f64 {
    libm::fmax(a, b)
}

pub(crate) fn fmod(x: f64, y: f64) -> f64 {
    libm::fmod(x, y)
}

/// Power in dB relative to unit linear power.
pub(crate) fn db_from_linear(p: f64) -> f64 {
    10.0 * log10(p)
}

/// Linear power from dB.
pub(crate) fn linear_from_db(db: f64) -> f64 {
    pow10(db / 10.0)
}
