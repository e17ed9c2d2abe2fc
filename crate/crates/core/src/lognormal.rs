//! Log-domain statistics of positive-valued spreads and comparison against
//! published reference constants.
//!
//! Spreads (delay spread, angular spreads) are characterized as log-normal:
//! `log10(value)` is modelled Gaussian with mean `μ_lg` and standard
//! deviation `σ_lg`. Two expectation conventions are provided: the
//! convention used by the published campaign tables, `10^(μ + σ²/2)` (which
//! reproduces every published expectation from its two-decimal (μ, σ) pair),
//! and the textbook log-normal mean for contrast.

use alloc::vec::Vec;

use crate::error::Error;
use crate::math;
use crate::reference::{self, Source};
use crate::types::{CiFit, FrequencyBand, LinkState, LogNormalStat};

/// Fits a log-normal statistic: `μ_lg` is the mean of `log10(samples)` and
/// `σ_lg` the standard deviation with the n−1 denominator (0 for one
/// sample). The n−1 choice reproduces the published campaign statistics;
/// the population denominator does not.
///
/// Zero samples are rejected: single-MPC locations record a 0 ns delay
/// spread, which callers must filter out before fitting.
pub fn fit_lognormal(samples: &[f64]) -> Result<LogNormalStat, Error> {
    if samples.is_empty() {
        return Err(Error::EmptyInput("log-normal sample list"));
    }
    let mut logs: Vec<f64> = Vec::with_capacity(samples.len());
    for &v in samples {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::NonPositiveSample(v));
        }
        logs.push(math::log10(v));
    }
    let n = logs.len();
    let mu = logs.iter().sum::<f64>() / n as f64;
    let sigma = if n > 1 {
        let ss: f64 = logs.iter().map(|l| (l - mu) * (l - mu)).sum();
        math::sqrt(ss / (n - 1) as f64)
    } else {
        0.0
    };
    LogNormalStat::new(mu, sigma, n)
}

/// Expected linear value under the published-table convention:
/// `10^(mu_lg + sigma_lg²/2)`.
pub fn expectation_paper(mu_lg: f64, sigma_lg: f64) -> f64 {
    math::pow10(mu_lg + sigma_lg * sigma_lg / 2.0)
}

/// Textbook log-normal mean: `10^mu_lg · exp((sigma_lg·ln 10)²/2)`.
///
/// Provided for contrast with [`expectation_paper`]; for (1.28, 0.32) this
/// gives 24.997 where the published convention gives 21.44.
pub fn expectation_strict(mu_lg: f64, sigma_lg: f64) -> f64 {
    let s = sigma_lg * core::f64::consts::LN_10;
    math::pow10(mu_lg) * math::exp(s * s / 2.0)
}

/// Statistic kinds that have published reference values to compare against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CompareMetric {
    OmniPathLoss,
    OmniDelaySpread,
    /// Mean directional delay spread; published campaign expectation only.
    DirDelaySpread,
    Asa,
    Asd,
}

impl CompareMetric {
    pub fn as_str(&self) -> &'static str {
        match self {
            CompareMetric::OmniPathLoss => "omni_path_loss",
            CompareMetric::OmniDelaySpread => "omni_delay_spread",
            CompareMetric::DirDelaySpread => "dir_delay_spread",
            CompareMetric::Asa => "asa",
            CompareMetric::Asd => "asd",
        }
    }
}

/// A computed statistic being held against the reference constants.
#[derive(Debug, Clone, Copy)]
pub enum Computed<'a> {
    PathLoss(&'a CiFit),
    Spread(&'a LogNormalStat),
}

/// One parameter row of a comparison: the computed value next to the
/// published values and absolute deltas, where published values exist.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ParamDelta {
    pub name: &'static str,
    pub computed: f64,
    pub published_nyu: Option<f64>,
    pub published_3gpp: Option<f64>,
    pub delta_nyu: Option<f64>,
    pub delta_3gpp: Option<f64>,
}

impl ParamDelta {
    fn new(
        name: &'static str,
        computed: f64,
        published_nyu: Option<f64>,
        published_3gpp: Option<f64>,
    ) -> Self {
        ParamDelta {
            name,
            computed,
            published_nyu,
            published_3gpp,
            delta_nyu: published_nyu.map(|v| math::abs(computed - v)),
            delta_3gpp: published_3gpp.map(|v| math::abs(computed - v)),
        }
    }
}

/// Comparison of one computed statistic against the published constants for
/// its (band, state, metric) key.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct ComparisonRecord {
    pub band: FrequencyBand,
    pub state: LinkState,
    pub metric: CompareMetric,
    pub params: Vec<ParamDelta>,
}

/// Rounds to two decimals, the precision at which the campaign parameters
/// are published.
fn round2(x: f64) -> f64 {
    math::round(x * 100.0) / 100.0
}

/// Compares a computed statistic against the published reference constants.
///
/// Spread comparisons report the expectation twice: at full parameter
/// precision, and recomputed from two-decimal-rounded (μ, σ) — the rounding
/// pipeline behind the published expectations. Errors if the key has no
/// published constants or the computed statistic kind does not match the
/// metric.
pub fn compare(
    computed: Computed<'_>,
    band: FrequencyBand,
    state: LinkState,
    metric: CompareMetric,
) -> Result<ComparisonRecord, Error> {
    let params = match (computed, metric) {
        (Computed::PathLoss(fit), CompareMetric::OmniPathLoss) => {
            let nyu = reference::pl_omni(band, state, Source::Nyu)
                .ok_or(Error::UnknownReference("omni path loss at this band/state"))?;
            let gpp = reference::pl_omni(band, state, Source::ThreeGpp);
            alloc::vec![
                ParamDelta::new("ple", fit.ple(), Some(nyu.ple), gpp.map(|g| g.ple)),
                ParamDelta::new(
                    "sigma_db",
                    fit.sigma_db(),
                    Some(nyu.sigma_db),
                    gpp.map(|g| g.sigma_db),
                ),
            ]
        }
        (Computed::Spread(stat), CompareMetric::OmniDelaySpread | CompareMetric::DirDelaySpread) => {
            let pick = |source| match metric {
                CompareMetric::OmniDelaySpread => reference::ds_omni_expectation(band, state, source),
                _ => reference::ds_dir_expectation(band, state, source),
            };
            let nyu = pick(Source::Nyu)
                .ok_or(Error::UnknownReference("delay-spread expectation at this band/state"))?;
            let gpp = pick(Source::ThreeGpp);
            let rounded = expectation_paper(round2(stat.mu_lg()), round2(stat.sigma_lg()));
            alloc::vec![
                ParamDelta::new("expectation", stat.expectation(), Some(nyu), gpp),
                ParamDelta::new("expectation_rounded_params", rounded, Some(nyu), gpp),
            ]
        }
        (Computed::Spread(stat), CompareMetric::Asa | CompareMetric::Asd) => {
            let pick = |source| reference::angular_spread(band, state, metric, source);
            let nyu = pick(Source::Nyu)
                .ok_or(Error::UnknownReference("angular-spread statistics at this band/state"))?;
            let gpp = pick(Source::ThreeGpp);
            let rounded = expectation_paper(round2(stat.mu_lg()), round2(stat.sigma_lg()));
            alloc::vec![
                ParamDelta::new("mu_lg", stat.mu_lg(), Some(nyu.mu_lg), gpp.map(|g| g.mu_lg)),
                ParamDelta::new(
                    "sigma_lg",
                    stat.sigma_lg(),
                    Some(nyu.sigma_lg),
                    gpp.map(|g| g.sigma_lg),
                ),
                ParamDelta::new(
                    "expectation",
                    stat.expectation(),
                    Some(nyu.expectation),
                    gpp.map(|g| g.expectation),
                ),
                ParamDelta::new(
                    "expectation_rounded_params",
                    rounded,
                    Some(nyu.expectation),
                    gpp.map(|g| g.expectation),
                ),
            ]
        }
        (Computed::PathLoss(_), _) => {
            return Err(Error::InvalidInput(
                "a path-loss fit compares only against the omni_path_loss metric",
            ))
        }
        (Computed::Spread(_), CompareMetric::OmniPathLoss) => {
            return Err(Error::InvalidInput(
                "a spread statistic does not compare against the path-loss metric",
            ))
        }
    };
    Ok(ComparisonRecord {
        band,
        state,
        metric,
        params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    #[test]
    fn fit_of_published_los_asa_samples_matches_published_parameters() {
        // 6.75 GHz LOS omnidirectional ASA values within the 180 m cap.
        let stat = fit_lognormal(&[23.5, 14.5, 63.0, 10.5, 10.8]).unwrap();
        assert!((stat.mu_lg() - 1.2772778937034361).abs() < TOL);
        assert!((stat.sigma_lg() - 0.32397040246750686).abs() < TOL);
        // Published pair (1.28, 0.32), each within ±0.005.
        assert!((stat.mu_lg() - 1.28).abs() < 0.005);
        assert!((stat.sigma_lg() - 0.32).abs() < 0.005);
        assert_eq!(stat.n_points(), 5);
    }

    #[test]
    fn fit_of_degenerate_samples_is_exact() {
        let stat = fit_lognormal(&[10.0, 10.0, 10.0]).unwrap();
        assert!((stat.mu_lg() - 1.0).abs() < TOL);
        assert_eq!(stat.sigma_lg(), 0.0);
        assert!((stat.expectation() - 10.0).abs() < TOL);
    }

    #[test]
    fn fit_rejects_empty_and_non_positive_samples() {
        assert!(matches!(fit_lognormal(&[]), Err(Error::EmptyInput(_))));
        assert!(matches!(
            fit_lognormal(&[10.0, 0.0]),
            Err(Error::NonPositiveSample(_))
        ));
        assert!(matches!(
            fit_lognormal(&[10.0, -3.0]),
            Err(Error::NonPositiveSample(_))
        ));
    }

    #[test]
    fn paper_expectation_reproduces_published_values_from_rounded_params() {
        assert!((expectation_paper(1.28, 0.32) - 21.43877665973507).abs() < TOL);
        assert!((expectation_paper(1.74, 0.34) - 62.77691938382178).abs() < TOL);
        // Published cells: 21.44 and 62.78.
        assert!((expectation_paper(1.28, 0.32) - 21.44).abs() < 0.005);
        assert!((expectation_paper(1.74, 0.34) - 62.78).abs() < 0.005);
    }

    #[test]
    fn expectations_coincide_at_zero_sigma() {
        for mu in [0.0, 1.28, 2.5] {
            assert!((expectation_paper(mu, 0.0) - math::pow10(mu)).abs() < TOL);
            assert!((expectation_strict(mu, 0.0) - math::pow10(mu)).abs() < TOL);
        }
    }

    #[test]
    fn strict_expectation_matches_direct_evaluation() {
        assert!((expectation_strict(1.28, 0.32) - 24.997257085999347).abs() < TOL);
    }

    #[test]
    fn strict_expectation_is_monotone_in_sigma() {
        let mut prev = expectation_strict(1.28, 0.0);
        for i in 1..=40 {
            let sigma = i as f64 * 0.025;
            let next = expectation_strict(1.28, sigma);
            assert!(next > prev, "not monotone at sigma={sigma}");
            prev = next;
        }
    }

    #[test]
    fn paper_expectation_dominates_median() {
        for &(mu, sigma) in &[(1.28, 0.32), (1.5, 0.23), (0.0, 1.0)] {
            assert!(expectation_paper(mu, sigma) > math::pow10(mu));
        }
        assert_eq!(expectation_paper(1.28, 0.0), math::pow10(1.28));
    }

    #[test]
    fn scaling_samples_shifts_mu_and_preserves_sigma() {
        let base = [23.5, 14.5, 63.0, 10.5, 10.8];
        let c = 7.5;
        let scaled: Vec<f64> = base.iter().map(|v| v * c).collect();
        let a = fit_lognormal(&base).unwrap();
        let b = fit_lognormal(&scaled).unwrap();
        assert!((b.mu_lg() - (a.mu_lg() + math::log10(c))).abs() < 1e-12);
        assert!((b.sigma_lg() - a.sigma_lg()).abs() < 1e-12);
    }

    #[test]
    fn compare_reports_deltas_against_both_sources() {
        // 6.75 GHz NLOS ASA: published campaign pair (1.50, 0.23), 3GPP pair
        // (1.74, 0.34).
        let stat = fit_lognormal(&[68.7, 18.4, 34.0, 23.8, 55.7, 16.1, 24.2, 46.5]).unwrap();
        let rec = compare(
            Computed::Spread(&stat),
            FrequencyBand::FR1C,
            LinkState::Nlos,
            CompareMetric::Asa,
        )
        .unwrap();
        let mu = rec.params.iter().find(|p| p.name == "mu_lg").unwrap();
        assert!(mu.delta_nyu.unwrap() < 0.005);
        assert!((mu.delta_3gpp.unwrap() - (1.74 - stat.mu_lg())).abs() < TOL);
    }

    #[test]
    fn compare_rejects_unknown_keys_and_kind_mismatches() {
        let stat = fit_lognormal(&[10.0, 20.0]).unwrap();
        let off_band = FrequencyBand::new(28.0).unwrap();
        assert!(matches!(
            compare(
                Computed::Spread(&stat),
                off_band,
                LinkState::Los,
                CompareMetric::Asa
            ),
            Err(Error::UnknownReference(_))
        ));
        let fit = CiFit::new(FrequencyBand::FR1C, 2.0, 1.0, 3).unwrap();
        assert!(matches!(
            compare(
                Computed::PathLoss(&fit),
                FrequencyBand::FR1C,
                LinkState::Los,
                CompareMetric::Asa
            ),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn compare_path_loss_against_3gpp_reference() {
        let fit = CiFit::new(FrequencyBand::FR3, 1.85, 4.05, 7).unwrap();
        let rec = compare(
            Computed::PathLoss(&fit),
            FrequencyBand::FR3,
            LinkState::Los,
            CompareMetric::OmniPathLoss,
        )
        .unwrap();
        let ple = rec.params.iter().find(|p| p.name == "ple").unwrap();
        assert_eq!(ple.published_3gpp, Some(2.1));
        assert!((ple.delta_3gpp.unwrap() - 0.25).abs() < TOL);
    }
}
