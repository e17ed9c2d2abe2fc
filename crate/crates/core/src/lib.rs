//! Channel-statistics toolkit for upper mid-band (6.75 / 16.95 GHz) urban
//! microcell measurements.
//!
//! The crate ingests per-location link statistics from an outdoor UMi
//! measurement campaign, fits close-in (CI) path-loss and log-normal spread
//! models, computes RMS delay spread and angular-spread metrics from power
//! profiles, and generates seeded Monte Carlo channel-statistic samples from
//! fitted or published model parameters.
//!
//! The crate is `no_std` (with `alloc`); file formats and the command-line
//! front end live in the companion `midband-cli` crate.
//!
//! Modules:
//! - [`types`] — shared vocabulary: bands, link states, records, profiles.
//! - [`dataset`] — bundled campaign data, validation, filtered selection.
//! - [`pathloss`] — FSPL anchor, CI / floating-intercept fits, shadow fading.
//! - [`pdp`] — power-delay-profile thresholding, RMS delay spread, omni synthesis.
//! - [`angular`] — angular spread and lobe segmentation of power angular profiles.
//! - [`lognormal`] — log-domain statistics and comparison against published values.
//! - [`reference`] — published campaign and 3GPP TR 38.901 reference constants.
//! - [`simulate`] — seeded Monte Carlo generation of per-link statistics.
//! - [`units`] — dB ↔ linear power conversions.

#![cfg_attr(not(test), no_std)]
// Validation guards use the `!(x > 0.0)` form on purpose: the negation
// rejects NaN, which the suggested `x <= 0.0` would wave through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod angular;
pub mod dataset;
pub mod error;
pub mod lognormal;
mod math;
pub mod pathloss;
pub mod pdp;
pub mod reference;
pub mod simulate;
pub mod types;
pub mod units;

pub use error::Error;
