//! Shared vocabulary: frequency bands, link states, per-location measurement
//! records, fitted-model parameter bundles, and signal-domain profiles.
//!
//! All types are immutable value objects and safe to share across threads.
//! Powers are stored linear internally; dB appears only at ingestion and
//! emission boundaries. Absent measurements are explicit (`Option`), never
//! encoded as `0` or NaN — `0` is a legitimate delay-spread value for
//! single-MPC locations.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::math;

/// Carrier frequency in GHz.
///
/// The bundled campaign measures 6.75 GHz (FR1(C)) and 16.95 GHz (FR3);
/// arbitrary positive carriers are accepted for generic use.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct FrequencyBand {
    carrier_ghz: f64,
}

impl FrequencyBand {
    /// 6.75 GHz, the FR1(C) campaign band.
    pub const FR1C: FrequencyBand = FrequencyBand { carrier_ghz: 6.75 };
    /// 16.95 GHz, the FR3 campaign band.
    pub const FR3: FrequencyBand = FrequencyBand { carrier_ghz: 16.95 };

    pub fn new(carrier_ghz: f64) -> Result<Self, Error> {
        if !(carrier_ghz > 0.0) || !carrier_ghz.is_finite() {
            return Err(Error::InvalidFrequency(carrier_ghz));
        }
        Ok(FrequencyBand { carrier_ghz })
    }

    pub fn carrier_ghz(&self) -> f64 {
        self.carrier_ghz
    }
}

/// Sight condition of a measured link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "UPPERCASE"))]
pub enum LinkState {
    Los,
    Nlos,
}

impl LinkState {
    pub fn as_str(&self) -> &'static str {
        match self {
            LinkState::Los => "LOS",
            LinkState::Nlos => "NLOS",
        }
    }
}

/// Sight condition in *directional* path-loss contexts, where the
/// best-pointing NLOS case is modelled separately from arbitrary pointing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum DirLinkState {
    Los,
    /// NLOS restricted to the single direction with the highest received power.
    NlosBest,
    Nlos,
}

/// The twelve per-location statistic columns of a [`LocationRecord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum StatField {
    OmniPlVvDb,
    OmniPlVhDb,
    MeanDirDsNs,
    OmniDsNs,
    MeanLobeAsaDeg,
    OmniAsaDeg,
    MeanLobeAsdDeg,
    OmniAsdDeg,
    MeanLobeZsaDeg,
    OmniZsaDeg,
    MeanLobeZsdDeg,
    OmniZsdDeg,
}

impl StatField {
    pub const ALL: [StatField; 12] = [
        StatField::OmniPlVvDb,
        StatField::OmniPlVhDb,
        StatField::MeanDirDsNs,
        StatField::OmniDsNs,
        StatField::MeanLobeAsaDeg,
        StatField::OmniAsaDeg,
        StatField::MeanLobeAsdDeg,
        StatField::OmniAsdDeg,
        StatField::MeanLobeZsaDeg,
        StatField::OmniZsaDeg,
        StatField::MeanLobeZsdDeg,
        StatField::OmniZsdDeg,
    ];

    /// Canonical column name, as used in the campaign CSV schema.
    pub fn as_str(&self) -> &'static str {
        match self {
            StatField::OmniPlVvDb => "omni_pl_vv_db",
            StatField::OmniPlVhDb => "omni_pl_vh_db",
            StatField::MeanDirDsNs => "mean_dir_ds_ns",
            StatField::OmniDsNs => "omni_ds_ns",
            StatField::MeanLobeAsaDeg => "mean_lobe_asa_deg",
            StatField::OmniAsaDeg => "omni_asa_deg",
            StatField::OmniAsdDeg => "omni_asd_deg",
            StatField::MeanLobeAsdDeg => "mean_lobe_asd_deg",
            StatField::MeanLobeZsaDeg => "mean_lobe_zsa_deg",
            StatField::OmniZsaDeg => "omni_zsa_deg",
            StatField::MeanLobeZsdDeg => "mean_lobe_zsd_deg",
            StatField::OmniZsdDeg => "omni_zsd_deg",
        }
    }

    /// Parses a column name; the unit suffix (`_db`, `_ns`, `_deg`) may be
    /// omitted (`omni_asa` and `omni_asa_deg` name the same column).
    pub fn parse(name: &str) -> Result<Self, Error> {
        for field in StatField::ALL {
            let canonical = field.as_str();
            if name == canonical {
                return Ok(field);
            }
            if let Some(stem) = canonical
                .strip_suffix("_db")
                .or_else(|| canonical.strip_suffix("_ns"))
                .or_else(|| canonical.strip_suffix("_deg"))
            {
                if name == stem {
                    return Ok(field);
                }
            }
        }
        Err(Error::UnknownField(String::from(name)))
    }

    /// True for angular statistics (degrees); these default to the 180 m
    /// separation cap when fitting log-normal models.
    pub fn is_angular(&self) -> bool {
        matches!(
            self,
            StatField::MeanLobeAsaDeg
                | StatField::OmniAsaDeg
                | StatField::MeanLobeAsdDeg
                | StatField::OmniAsdDeg
                | StatField::MeanLobeZsaDeg
                | StatField::OmniZsaDeg
                | StatField::MeanLobeZsdDeg
                | StatField::OmniZsdDeg
        )
    }

    /// True for delay-spread statistics (ns); these default to excluding
    /// single-MPC rows, whose 0 ns values are undefined in the log domain.
    pub fn is_delay_spread(&self) -> bool {
        matches!(self, StatField::MeanDirDsNs | StatField::OmniDsNs)
    }
}

/// One TX-RX link's measured statistics: a single campaign table row.
///
/// Either `outage` is true and every statistic is absent, or the record
/// carries at least the V-V omnidirectional path loss.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LocationRecord {
    pub band: FrequencyBand,
    pub tx_id: String,
    pub rx_id: String,
    pub link_state: LinkState,
    /// 3D TX-RX separation in meters.
    pub tr_sep_m: f64,
    pub omni_pl_vv_db: Option<f64>,
    pub omni_pl_vh_db: Option<f64>,
    pub mean_dir_ds_ns: Option<f64>,
    pub omni_ds_ns: Option<f64>,
    pub mean_lobe_asa_deg: Option<f64>,
    pub omni_asa_deg: Option<f64>,
    pub mean_lobe_asd_deg: Option<f64>,
    pub omni_asd_deg: Option<f64>,
    pub mean_lobe_zsa_deg: Option<f64>,
    pub omni_zsa_deg: Option<f64>,
    pub mean_lobe_zsd_deg: Option<f64>,
    pub omni_zsd_deg: Option<f64>,
    /// The receiver detected no energy above the measurable path-loss limit.
    pub outage: bool,
    /// Only one multipath component from a single direction was observed;
    /// both delay spreads are exactly 0 at such locations.
    pub single_mpc: bool,
}

impl LocationRecord {
    /// Value of one statistic column, if present.
    pub fn stat(&self, field: StatField) -> Option<f64> {
        match field {
            StatField::OmniPlVvDb => self.omni_pl_vv_db,
            StatField::OmniPlVhDb => self.omni_pl_vh_db,
            StatField::MeanDirDsNs => self.mean_dir_ds_ns,
            StatField::OmniDsNs => self.omni_ds_ns,
            StatField::MeanLobeAsaDeg => self.mean_lobe_asa_deg,
            StatField::OmniAsaDeg => self.omni_asa_deg,
            StatField::MeanLobeAsdDeg => self.mean_lobe_asd_deg,
            StatField::OmniAsdDeg => self.omni_asd_deg,
            StatField::MeanLobeZsaDeg => self.mean_lobe_zsa_deg,
            StatField::OmniZsaDeg => self.omni_zsa_deg,
            StatField::MeanLobeZsdDeg => self.mean_lobe_zsd_deg,
            StatField::OmniZsdDeg => self.omni_zsd_deg,
        }
    }

    /// All twelve statistic values in column order.
    pub fn stats(&self) -> [Option<f64>; 12] {
        let mut out = [None; 12];
        for (slot, field) in out.iter_mut().zip(StatField::ALL) {
            *slot = self.stat(field);
        }
        out
    }
}

/// Fitted close-in (CI) path-loss model: `PL(d) = FSPL(f_c, 1 m) +
/// 10·n·log10(d) + χ_σ` with `χ_σ` zero-mean Gaussian shadow fading.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CiFit {
    band: FrequencyBand,
    ple: f64,
    sigma_db: f64,
    n_points: usize,
    /// Free-space path loss at the 1 m reference distance, full precision.
    fspl_1m_db: f64,
}

impl CiFit {
    /// Bundles fitted CI parameters; the FSPL anchor is always recomputed
    /// from the band so the two can never disagree.
    pub fn new(
        band: FrequencyBand,
        ple: f64,
        sigma_db: f64,
        n_points: usize,
    ) -> Result<Self, Error> {
        if !(sigma_db >= 0.0) {
            return Err(Error::InvalidInput("shadow-fading sigma must be >= 0 dB"));
        }
        if n_points < 1 {
            return Err(Error::InvalidInput("a CI fit needs at least one point"));
        }
        Ok(CiFit {
            band,
            ple,
            sigma_db,
            n_points,
            fspl_1m_db: crate::pathloss::fspl_1m(band),
        })
    }

    pub fn band(&self) -> FrequencyBand {
        self.band
    }

    /// Path-loss exponent n.
    pub fn ple(&self) -> f64 {
        self.ple
    }

    /// Shadow-fading standard deviation in dB.
    pub fn sigma_db(&self) -> f64 {
        self.sigma_db
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn fspl_1m_db(&self) -> f64 {
        self.fspl_1m_db
    }
}

/// Fitted floating-intercept (FI) model: `PL(d) = α + β·10·log10(d)` with
/// residual standard deviation σ.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct FiFit {
    alpha_db: f64,
    beta: f64,
    sigma_db: f64,
    n_points: usize,
}

impl FiFit {
    pub fn new(alpha_db: f64, beta: f64, sigma_db: f64, n_points: usize) -> Result<Self, Error> {
        if n_points < 2 {
            return Err(Error::InvalidInput(
                "an FI fit needs at least two points (two free parameters)",
            ));
        }
        if !(sigma_db >= 0.0) {
            return Err(Error::InvalidInput("residual sigma must be >= 0 dB"));
        }
        Ok(FiFit {
            alpha_db,
            beta,
            sigma_db,
            n_points,
        })
    }

    /// Intercept α at d = 1 m, in dB.
    pub fn alpha_db(&self) -> f64 {
        self.alpha_db
    }

    /// Dimensionless slope β.
    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn sigma_db(&self) -> f64 {
        self.sigma_db
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }
}

/// Log-normal statistic of a positive-valued spread: mean and standard
/// deviation of `log10(value)` plus the expected linear value under the
/// `10^(μ + σ²/2)` convention used by the published campaign tables.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LogNormalStat {
    mu_lg: f64,
    sigma_lg: f64,
    n_points: usize,
    expectation: f64,
}

impl LogNormalStat {
    /// Bundles log-domain parameters; the expectation is always recomputed
    /// from (μ, σ) by [`crate::lognormal::expectation_paper`]. `n_points`
    /// is provenance metadata: the sample count behind a fit, or 1 for
    /// parameters adopted from a published model rather than fitted here.
    pub fn new(mu_lg: f64, sigma_lg: f64, n_points: usize) -> Result<Self, Error> {
        if !(sigma_lg >= 0.0) {
            return Err(Error::InvalidInput("sigma_lg must be >= 0"));
        }
        if n_points < 1 {
            return Err(Error::InvalidInput("a log-normal fit needs at least one sample"));
        }
        Ok(LogNormalStat {
            mu_lg,
            sigma_lg,
            n_points,
            expectation: crate::lognormal::expectation_paper(mu_lg, sigma_lg),
        })
    }

    /// Mean of `log10(value)`.
    pub fn mu_lg(&self) -> f64 {
        self.mu_lg
    }

    /// Standard deviation of `log10(value)` (n−1 denominator).
    pub fn sigma_lg(&self) -> f64 {
        self.sigma_lg
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Expected linear value, `10^(μ + σ²/2)`.
    pub fn expectation(&self) -> f64 {
        self.expectation
    }
}

/// Power-delay profile: delay taps with linear power above a noise floor.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Pdp {
    /// `(delay_ns, power_linear)` taps, strictly increasing in delay.
    taps: Vec<(f64, f64)>,
    /// Noise floor in dB, on the same scale as `10·log10(power_linear)`.
    noise_floor_db: f64,
}

impl Pdp {
    pub fn new(taps: Vec<(f64, f64)>, noise_floor_db: f64) -> Result<Self, Error> {
        if taps.is_empty() {
            return Err(Error::EmptyInput("PDP tap list"));
        }
        if !noise_floor_db.is_finite() {
            return Err(Error::InvalidInput("noise floor must be finite"));
        }
        let mut prev = f64::NEG_INFINITY;
        for &(delay, power) in &taps {
            if !delay.is_finite() || delay < 0.0 {
                return Err(Error::InvalidInput("tap delays must be finite and >= 0"));
            }
            if delay <= prev {
                return Err(Error::InvalidInput("tap delays must be strictly increasing"));
            }
            if !(power > 0.0) || !power.is_finite() {
                return Err(Error::InvalidInput("tap powers must be positive and finite"));
            }
            prev = delay;
        }
        Ok(Pdp {
            taps,
            noise_floor_db,
        })
    }

    pub fn taps(&self) -> &[(f64, f64)] {
        &self.taps
    }

    pub fn noise_floor_db(&self) -> f64 {
        self.noise_floor_db
    }

    /// Peak tap power in dB.
    pub fn peak_db(&self) -> f64 {
        let peak = self
            .taps
            .iter()
            .map(|&(_, p)| p)
            .fold(f64::NEG_INFINITY, math::fmax);
        math::db_from_linear(peak)
    }
}

/// Plane of a power angular profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Plane {
    /// Full circle, angles in `[0°, 360°)`, wraparound applies.
    Azimuth,
    /// Polar angle in `[0°, 180°]`; no wraparound.
    Zenith,
}

/// Received power versus angle in one plane.
///
/// Samples are sorted by angle at construction; angles are unique and powers
/// strictly positive.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PowerAngularProfile {
    /// `(angle_deg, power_linear)` samples sorted by angle.
    samples: Vec<(f64, f64)>,
    plane: Plane,
}

impl PowerAngularProfile {
    pub fn new(mut samples: Vec<(f64, f64)>, plane: Plane) -> Result<Self, Error> {
        if samples.is_empty() {
            return Err(Error::EmptyInput("angular profile sample list"));
        }
        for &(angle, power) in &samples {
            if !angle.is_finite() || !(0.0..360.0).contains(&angle) {
                return Err(Error::InvalidInput("angles must lie in [0, 360)"));
            }
            if plane == Plane::Zenith && angle > 180.0 {
                return Err(Error::InvalidInput("zenith angles must lie in [0, 180]"));
            }
            if !(power > 0.0) || !power.is_finite() {
                return Err(Error::InvalidInput("sample powers must be positive and finite"));
            }
        }
        samples.sort_by(|a, b| a.0.total_cmp(&b.0));
        if samples.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput("sample angles must be unique"));
        }
        Ok(PowerAngularProfile { samples, plane })
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    pub fn plane(&self) -> Plane {
        self.plane
    }
}
