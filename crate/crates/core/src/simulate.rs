//! Seeded Monte Carlo generation of link-level channel statistics.
//!
//! A [`ChannelStatModel`] bundles one band/state's close-in path-loss fit
//! with log-normal delay- and angular-spread statistics. [`sample_campaign`]
//! draws one [`LinkSample`] per requested TX-RX separation, reproducibly:
//! every sample depends only on the seed, the separation value, and how many
//! times that separation has already occurred — never on list position — so
//! permuting the distance list permutes the output identically.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::dataset::{self, Campaign, SelectOptions, DEFAULT_ANGULAR_MAX_DIST_M};
use crate::error::Error;
use crate::lognormal;
use crate::math;
use crate::pathloss;
use crate::reference::{self, Source};
use crate::types::{CiFit, FrequencyBand, LinkState, LogNormalStat, StatField};

/// Ceiling applied to generated azimuth spreads. A fully isotropic azimuth
/// profile has a wrapped spread of 360/√12 ≈ 104°, so log-normal draws above
/// it are physically meaningless and are clamped (and counted).
pub const DEFAULT_AS_CEILING_DEG: f64 = 104.0;

/// Where a model's parameters came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum ModelSource {
    /// Fitted from a campaign by [`ChannelStatModel::fitted_from`].
    #[cfg_attr(feature = "serde", serde(rename = "fitted"))]
    Fitted,
    /// The published campaign statistics themselves.
    #[cfg_attr(feature = "serde", serde(rename = "published"))]
    Published,
    /// 3GPP TR 38.901 UMi street-canyon values.
    #[cfg_attr(feature = "serde", serde(rename = "3gpp"))]
    ThreeGpp,
}

/// Per-(band, state) channel-statistic model: path loss plus log-normal
/// omnidirectional delay spread, azimuth spread of arrival, and azimuth
/// spread of departure.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ChannelStatModel {
    pub band: FrequencyBand,
    pub state: LinkState,
    pub pl: CiFit,
    pub ds: LogNormalStat,
    pub asa: LogNormalStat,
    pub asd: LogNormalStat,
    pub source: ModelSource,
    /// Azimuth-spread ceiling in degrees; defaults to
    /// [`DEFAULT_AS_CEILING_DEG`].
    pub as_ceiling_deg: f64,
}

/// Selection used by every delay-spread fit: single-MPC rows are excluded
/// (their exact-0 spreads are undefined in the log domain), no distance cap.
fn ds_options() -> SelectOptions {
    SelectOptions {
        exclude_single_mpc: true,
        ..SelectOptions::default()
    }
}

fn values(pairs: Vec<(f64, f64)>) -> Vec<f64> {
    pairs.into_iter().map(|(_, v)| v).collect()
}

impl ChannelStatModel {
    /// Fits every component from a campaign: path loss over all distances,
    /// delay spread excluding single-MPC rows, angular spreads under the
    /// conventional 180 m cap.
    pub fn fitted_from(
        campaign: &Campaign,
        band: FrequencyBand,
        state: LinkState,
    ) -> Result<Self, Error> {
        let angular = SelectOptions {
            max_dist_m: Some(DEFAULT_ANGULAR_MAX_DIST_M),
            ..SelectOptions::default()
        };
        let pl_points = dataset::select(
            campaign,
            band,
            state,
            StatField::OmniPlVvDb,
            &SelectOptions::default(),
        )?;
        let ds_values = values(dataset::select(
            campaign,
            band,
            state,
            StatField::OmniDsNs,
            &ds_options(),
        )?);
        let asa_values = values(dataset::select(
            campaign,
            band,
            state,
            StatField::OmniAsaDeg,
            &angular,
        )?);
        let asd_values = values(dataset::select(
            campaign,
            band,
            state,
            StatField::OmniAsdDeg,
            &angular,
        )?);
        Ok(ChannelStatModel {
            band,
            state,
            pl: pathloss::ci_fit(&pl_points, band)?,
            ds: lognormal::fit_lognormal(&ds_values)?,
            asa: lognormal::fit_lognormal(&asa_values)?,
            asd: lognormal::fit_lognormal(&asd_values)?,
            source: ModelSource::Fitted,
            as_ceiling_deg: DEFAULT_AS_CEILING_DEG,
        })
    }

    /// The published campaign model. Path loss and angular spreads take the
    /// published parameters verbatim; the delay spread — published only as
    /// an expectation — is re-fitted from the bundled campaign, which the
    /// published expectation summarizes.
    pub fn from_published(band: FrequencyBand, state: LinkState) -> Result<Self, Error> {
        let pl_ref = reference::pl_omni(band, state, Source::Nyu)
            .ok_or(Error::UnknownReference("published path loss at this band"))?;
        let spread = |metric| {
            reference::angular_spread(band, state, metric, Source::Nyu)
                .ok_or(Error::UnknownReference("published angular spread at this band"))
        };
        let asa = spread(lognormal::CompareMetric::Asa)?;
        let asd = spread(lognormal::CompareMetric::Asd)?;
        let n_angular = reference::angular_spread_n_points(state);
        let n_pl = match state {
            LinkState::Los => 7,
            LinkState::Nlos => 11,
        };
        let bundled = dataset::load_bundled();
        let ds_values = values(dataset::select(
            &bundled,
            band,
            state,
            StatField::OmniDsNs,
            &ds_options(),
        )?);
        Ok(ChannelStatModel {
            band,
            state,
            pl: CiFit::new(band, pl_ref.ple, pl_ref.sigma_db, n_pl)?,
            ds: lognormal::fit_lognormal(&ds_values)?,
            asa: LogNormalStat::new(asa.mu_lg, asa.sigma_lg, n_angular)?,
            asd: LogNormalStat::new(asd.mu_lg, asd.sigma_lg, n_angular)?,
            source: ModelSource::Published,
            as_ceiling_deg: DEFAULT_AS_CEILING_DEG,
        })
    }

    /// The 3GPP TR 38.901 UMi comparison model. The delay spread is pinned
    /// degenerately (σ = 0) at the published expectation: 38.901
    /// parameterizes its delay-spread distribution by frequency and
    /// geometry, and only the resulting expectation over this campaign's
    /// geometry was published. `n_points` is 1 throughout — these are
    /// adopted parameters, not fits.
    pub fn from_3gpp(band: FrequencyBand, state: LinkState) -> Result<Self, Error> {
        let pl_ref = reference::pl_omni(band, state, Source::ThreeGpp)
            .ok_or(Error::UnknownReference("3GPP path loss at this band"))?;
        let ds_e = reference::ds_omni_expectation(band, state, Source::ThreeGpp)
            .ok_or(Error::UnknownReference("3GPP delay spread at this band"))?;
        let spread = |metric| {
            reference::angular_spread(band, state, metric, Source::ThreeGpp)
                .ok_or(Error::UnknownReference("3GPP angular spread at this band"))
        };
        let asa = spread(lognormal::CompareMetric::Asa)?;
        let asd = spread(lognormal::CompareMetric::Asd)?;
        Ok(ChannelStatModel {
            band,
            state,
            pl: CiFit::new(band, pl_ref.ple, pl_ref.sigma_db, 1)?,
            ds: LogNormalStat::new(math::log10(ds_e), 0.0, 1)?,
            asa: LogNormalStat::new(asa.mu_lg, asa.sigma_lg, 1)?,
            asd: LogNormalStat::new(asd.mu_lg, asd.sigma_lg, 1)?,
            source: ModelSource::ThreeGpp,
            as_ceiling_deg: DEFAULT_AS_CEILING_DEG,
        })
    }
}

/// One generated link: path loss plus spreads at a TX-RX separation.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LinkSample {
    pub d_m: f64,
    pub pl_db: f64,
    pub ds_ns: f64,
    pub asa_deg: f64,
    pub asd_deg: f64,
}

/// A full generated campaign plus how many angular draws hit the ceiling.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CampaignRun {
    pub samples: Vec<LinkSample>,
    pub clamp_events: u32,
}

/// Draws one link from the model: four standard-normal draws in the fixed
/// order path loss, delay spread, ASA, ASD. Returns the sample and how many
/// of the two angular values were clamped to the ceiling.
pub fn sample_link<R: Rng + ?Sized>(
    model: &ChannelStatModel,
    d_m: f64,
    rng: &mut R,
) -> Result<(LinkSample, u32), Error> {
    let mean_pl = pathloss::ci_predict(&model.pl, d_m)?;
    let z_pl: f64 = rng.sample(StandardNormal);
    let z_ds: f64 = rng.sample(StandardNormal);
    let z_asa: f64 = rng.sample(StandardNormal);
    let z_asd: f64 = rng.sample(StandardNormal);

    let mut clamps = 0;
    let mut angular = |stat: &LogNormalStat, z: f64| {
        let v = math::pow10(stat.mu_lg() + stat.sigma_lg() * z);
        if v > model.as_ceiling_deg {
            clamps += 1;
            model.as_ceiling_deg
        } else {
            v
        }
    };
    let asa_deg = angular(&model.asa, z_asa);
    let asd_deg = angular(&model.asd, z_asd);

    Ok((
        LinkSample {
            d_m,
            pl_db: mean_pl + model.pl.sigma_db() * z_pl,
            ds_ns: math::pow10(model.ds.mu_lg() + model.ds.sigma_lg() * z_ds),
            asa_deg,
            asd_deg,
        },
        clamps,
    ))
}

/// SplitMix64 finalizer; decorrelates substream ids derived from nearby
/// bit patterns.
fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Substream id for the `occurrence`-th appearance of a separation value.
fn substream(d_m: f64, occurrence: u64) -> u64 {
    splitmix64(splitmix64(d_m.to_bits()) ^ occurrence)
}

/// Generates one [`LinkSample`] per separation. Each sample comes from its
/// own cipher substream keyed by the separation value and its occurrence
/// count, under a key derived from `seed`; the draw is independent of where
/// the separation sits in the list.
pub fn sample_campaign(
    model: &ChannelStatModel,
    distances_m: &[f64],
    seed: u64,
) -> Result<CampaignRun, Error> {
    let mut samples = Vec::with_capacity(distances_m.len());
    let mut clamp_events: u32 = 0;
    let mut occurrences: BTreeMap<u64, u64> = BTreeMap::new();
    for &d in distances_m {
        let occurrence = {
            let counter = occurrences.entry(d.to_bits()).or_insert(0);
            let current = *counter;
            *counter += 1;
            current
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(substream(d, occurrence));
        let (sample, clamps) = sample_link(model, d, &mut rng)?;
        samples.push(sample);
        clamp_events += clamps;
    }
    Ok(CampaignRun {
        samples,
        clamp_events,
    })
}
