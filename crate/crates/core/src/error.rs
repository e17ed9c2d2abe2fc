//! Error type shared by all library modules.

use alloc::string::String;
use core::fmt;

/// Failure modes of the library operations.
///
/// Dataset validation findings are *not* errors — they are returned as data
/// by [`crate::dataset::validate`]. Errors signal inputs an operation cannot
/// work with at all.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Carrier frequency must be positive and finite.
    InvalidFrequency(f64),
    /// Distance lies inside the 1 m close-in reference distance.
    DistanceBelowReference(f64),
    /// The named input must not be empty.
    EmptyInput(&'static str),
    /// The fit slope is unidentifiable (fewer than two distinct distances,
    /// or every point at the reference distance).
    DegenerateGeometry(&'static str),
    /// Log-domain statistics require strictly positive samples.
    NonPositiveSample(f64),
    /// Not a known statistic column name.
    UnknownField(String),
    /// A selected record lacks the requested statistic.
    MissingValue {
        band_ghz: f64,
        tx_id: String,
        rx_id: String,
        field: &'static str,
    },
    /// A value violates a type invariant; the payload states the rule.
    InvalidInput(&'static str),
    /// No published reference constants exist for the requested key.
    UnknownReference(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidFrequency(v) => {
                write!(f, "carrier frequency must be positive and finite, got {v} GHz")
            }
            Error::DistanceBelowReference(d) => {
                write!(f, "distance {d} m lies inside the 1 m reference distance")
            }
            Error::EmptyInput(what) => write!(f, "{what} must not be empty"),
            Error::DegenerateGeometry(why) => write!(f, "degenerate fit geometry: {why}"),
            Error::NonPositiveSample(v) => {
                write!(f, "log-domain statistics require positive samples, got {v}")
            }
            Error::UnknownField(name) => write!(f, "unknown statistic column `{name}`"),
            Error::MissingValue {
                band_ghz,
                tx_id,
                rx_id,
                field,
            } => write!(
                f,
                "record {band_ghz} GHz {tx_id}-{rx_id} has no value for `{field}`"
            ),
            Error::InvalidInput(rule) => write!(f, "invalid input: {rule}"),
            Error::UnknownReference(key) => {
                write!(f, "no published reference values for {key}")
            }
        }
    }
}

impl core::error::Error for Error {}
