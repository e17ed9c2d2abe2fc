//! Published reference constants for the two campaign bands.
//!
//! Two sources are distinguished: the published campaign statistics
//! themselves (`Source::Nyu`, after the measurement programme that produced
//! them) and the 3GPP TR 38.901 UMi street-canyon model evaluated over the
//! same geometry (`Source::ThreeGpp`). All getters return `None` when the
//! requested combination was never published — e.g. 3GPP values for
//! directional statistics, or any value outside the 6.75 / 16.95 GHz bands.

use crate::lognormal::CompareMetric;
use crate::types::{DirLinkState, FrequencyBand, LinkState};

/// Where a reference constant comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Source {
    /// Published statistics of the measurement campaign itself.
    #[cfg_attr(feature = "serde", serde(rename = "nyu"))]
    Nyu,
    /// 3GPP TR 38.901 UMi street-canyon model values.
    #[cfg_attr(feature = "serde", serde(rename = "3gpp"))]
    ThreeGpp,
}

/// Published close-in path-loss parameters: exponent and shadow-fading σ.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PlRef {
    pub ple: f64,
    pub sigma_db: f64,
}

/// Published log-normal spread statistics: log-domain mean and standard
/// deviation plus the expectation the publication derives from them.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpreadRef {
    pub mu_lg: f64,
    pub sigma_lg: f64,
    pub expectation: f64,
}

const fn pl(ple: f64, sigma_db: f64) -> PlRef {
    PlRef { ple, sigma_db }
}

const fn spread(mu_lg: f64, sigma_lg: f64, expectation: f64) -> SpreadRef {
    SpreadRef {
        mu_lg,
        sigma_lg,
        expectation,
    }
}

/// True when `band` is one of the two campaign carriers.
fn is_fr1c(band: FrequencyBand) -> Option<bool> {
    if band == FrequencyBand::FR1C {
        Some(true)
    } else if band == FrequencyBand::FR3 {
        Some(false)
    } else {
        None
    }
}

/// Published omnidirectional close-in path-loss parameters.
pub fn pl_omni(band: FrequencyBand, state: LinkState, source: Source) -> Option<PlRef> {
    let low = is_fr1c(band)?;
    Some(match (source, state, low) {
        (Source::Nyu, LinkState::Los, true) => pl(1.79, 2.57),
        (Source::Nyu, LinkState::Nlos, true) => pl(2.56, 6.53),
        (Source::Nyu, LinkState::Los, false) => pl(1.85, 4.05),
        (Source::Nyu, LinkState::Nlos, false) => pl(2.59, 8.78),
        // The 3GPP UMi model quotes one pair per link state for both bands.
        (Source::ThreeGpp, LinkState::Los, _) => pl(2.1, 4.0),
        (Source::ThreeGpp, LinkState::Nlos, _) => pl(3.19, 8.2),
    })
}

/// Published directional (best-beam) close-in path-loss parameters; these
/// exist only for the campaign source.
pub fn pl_dir(band: FrequencyBand, state: DirLinkState) -> Option<PlRef> {
    let low = is_fr1c(band)?;
    Some(match (state, low) {
        (DirLinkState::Los, true) => pl(1.89, 2.05),
        (DirLinkState::NlosBest, true) => pl(2.68, 6.5),
        (DirLinkState::Nlos, true) => pl(3.25, 12.25),
        (DirLinkState::Los, false) => pl(1.97, 3.41),
        (DirLinkState::NlosBest, false) => pl(2.74, 10.29),
        (DirLinkState::Nlos, false) => pl(3.51, 14.02),
    })
}

/// Published expected omnidirectional RMS delay spread in nanoseconds.
pub fn ds_omni_expectation(band: FrequencyBand, state: LinkState, source: Source) -> Option<f64> {
    let low = is_fr1c(band)?;
    Some(match (source, state, low) {
        (Source::Nyu, LinkState::Los, true) => 62.8,
        (Source::Nyu, LinkState::Nlos, true) => 75.6,
        (Source::Nyu, LinkState::Los, false) => 46.5,
        (Source::Nyu, LinkState::Nlos, false) => 65.8,
        (Source::ThreeGpp, LinkState::Los, true) => 52.7,
        (Source::ThreeGpp, LinkState::Nlos, true) => 111.1,
        (Source::ThreeGpp, LinkState::Los, false) => 42.9,
        (Source::ThreeGpp, LinkState::Nlos, false) => 96.65,
    })
}

/// Published expected directional RMS delay spread in nanoseconds
/// (single strongest beam); campaign source only.
pub fn ds_dir_expectation(band: FrequencyBand, state: LinkState, source: Source) -> Option<f64> {
    let low = is_fr1c(band)?;
    match source {
        Source::Nyu => Some(match (state, low) {
            (LinkState::Los, true) => 29.1,
            (LinkState::Nlos, true) => 35.6,
            (LinkState::Los, false) => 28.1,
            (LinkState::Nlos, false) => 31.7,
        }),
        Source::ThreeGpp => None,
    }
}

/// Alternate prose-quoted 6.75 GHz delay-spread expectations
/// (LOS, NLOS) in nanoseconds: the running-text figures differ slightly
/// from the tabulated ones and are kept for traceability.
pub const DS_DIR_TEXT_VARIANT_FR1C_NS: (f64, f64) = (27.0, 35.9);
/// Omnidirectional counterpart of [`DS_DIR_TEXT_VARIANT_FR1C_NS`].
pub const DS_OMNI_TEXT_VARIANT_FR1C_NS: (f64, f64) = (63.5, 74.1);

/// Published log-normal angular-spread statistics (degrees). `metric` must
/// be [`CompareMetric::Asa`] or [`CompareMetric::Asd`]; other metrics return
/// `None`.
pub fn angular_spread(
    band: FrequencyBand,
    state: LinkState,
    metric: CompareMetric,
    source: Source,
) -> Option<SpreadRef> {
    let low = is_fr1c(band)?;
    let asa = match metric {
        CompareMetric::Asa => true,
        CompareMetric::Asd => false,
        _ => return None,
    };
    Some(match (source, asa, state, low) {
        (Source::Nyu, true, LinkState::Los, true) => spread(1.28, 0.32, 21.44),
        (Source::Nyu, true, LinkState::Nlos, true) => spread(1.50, 0.23, 33.61),
        (Source::Nyu, true, LinkState::Los, false) => spread(1.12, 0.36, 15.30),
        (Source::Nyu, true, LinkState::Nlos, false) => spread(1.36, 0.20, 23.99),
        (Source::Nyu, false, LinkState::Los, true) => spread(1.31, 0.11, 20.70),
        (Source::Nyu, false, LinkState::Nlos, true) => spread(1.67, 0.15, 48.00),
        (Source::Nyu, false, LinkState::Los, false) => spread(1.18, 0.13, 15.43),
        (Source::Nyu, false, LinkState::Nlos, false) => spread(1.49, 0.21, 32.51),
        (Source::ThreeGpp, true, LinkState::Los, true) => spread(1.66, 0.29, 50.36),
        (Source::ThreeGpp, true, LinkState::Nlos, true) => spread(1.74, 0.34, 62.78),
        (Source::ThreeGpp, true, LinkState::Los, false) => spread(1.63, 0.30, 47.31),
        (Source::ThreeGpp, true, LinkState::Nlos, false) => spread(1.71, 0.36, 59.54),
        (Source::ThreeGpp, false, LinkState::Los, true) => spread(1.16, 0.41, 17.54),
        (Source::ThreeGpp, false, LinkState::Nlos, true) => spread(1.32, 0.43, 25.85),
        (Source::ThreeGpp, false, LinkState::Los, false) => spread(1.15, 0.41, 17.14),
        (Source::ThreeGpp, false, LinkState::Nlos, false) => spread(1.24, 0.47, 22.41),
    })
}

/// Number of locations behind each published angular-spread statistic
/// (the ≤ 180 m measurement set): 5 LOS, 8 NLOS.
pub fn angular_spread_n_points(state: LinkState) -> usize {
    match state {
        LinkState::Los => 5,
        LinkState::Nlos => 8,
    }
}

/// Maximum measurable path loss of the sounder in dB, per band. Recorded
/// path losses above this bound indicate corrupted data.
pub fn max_measurable_pl_db(band: FrequencyBand) -> Option<f64> {
    let low = is_fr1c(band)?;
    Some(if low { 155.6 } else { 159.2 })
}
