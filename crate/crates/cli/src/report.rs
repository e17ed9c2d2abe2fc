//! The consolidated analysis report.
//!
//! A report runs every standard fit over a campaign — close-in path
//! loss on V-V omnidirectional data, log-normal spreads for the
//! omnidirectional delay and azimuth columns — and lays the results
//! next to the published reference constants, together with the
//! validation findings. It is a pure function of the campaign: the
//! same records produce a byte-identical JSON document, which makes
//! reports safe to diff across runs and across machines.
//!
//! Entries appear in a fixed order (band ascending, LOS before NLOS,
//! delay spread before arrival before departure azimuth spread), and
//! pairs with no usable rows are simply absent rather than padded
//! with placeholders.

use midband_core::dataset::{self, Campaign, Finding, SelectOptions, DEFAULT_ANGULAR_MAX_DIST_M};
use midband_core::lognormal::{self, CompareMetric, Computed, ComparisonRecord};
use midband_core::pathloss;
use midband_core::types::{CiFit, FrequencyBand, LinkState, LogNormalStat, StatField};

/// One close-in path-loss fit row.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct PlFitEntry {
    pub band: FrequencyBand,
    pub state: LinkState,
    pub fspl_1m_db: f64,
    pub ple: f64,
    pub sigma_db: f64,
    pub n_points: usize,
}

/// One log-normal spread fit row.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SpreadFitEntry {
    pub band: FrequencyBand,
    pub state: LinkState,
    pub metric: StatField,
    pub mu_lg: f64,
    pub sigma_lg: f64,
    pub n_points: usize,
    /// Expected linear value at full parameter precision.
    pub expectation: f64,
    /// Expected linear value recomputed from two-decimal-rounded (μ, σ),
    /// the precision at which reference parameters are published.
    pub expectation_rounded_params: f64,
    pub max_dist_m: Option<f64>,
    pub single_mpc_excluded: bool,
}

/// The full report document. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ReportDocument {
    pub tool_version: &'static str,
    pub provenance: String,
    pub path_loss_fits: Vec<PlFitEntry>,
    pub spread_fits: Vec<SpreadFitEntry>,
    pub comparisons: Vec<ComparisonRecord>,
    pub findings: Vec<Finding>,
}

/// The spread columns a report fits, with their selection conventions.
const SPREAD_METRICS: [StatField; 3] = [
    StatField::OmniDsNs,
    StatField::OmniAsaDeg,
    StatField::OmniAsdDeg,
];

fn spread_options(metric: StatField) -> SelectOptions {
    SelectOptions {
        max_dist_m: metric.is_angular().then_some(DEFAULT_ANGULAR_MAX_DIST_M),
        exclude_single_mpc: metric.is_delay_spread(),
        exclude_missing: true,
    }
}

fn compare_metric(metric: StatField) -> CompareMetric {
    match metric {
        StatField::OmniAsaDeg => CompareMetric::Asa,
        StatField::OmniAsdDeg => CompareMetric::Asd,
        _ => CompareMetric::OmniDelaySpread,
    }
}

/// Two-decimal rounding, matching the published parameter precision.
pub(crate) fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

/// Distinct bands present in the campaign, ascending.
fn bands_of(campaign: &Campaign) -> Vec<FrequencyBand> {
    let mut bands: Vec<FrequencyBand> = Vec::new();
    for record in &campaign.records {
        if !bands.contains(&record.band) {
            bands.push(record.band);
        }
    }
    bands.sort_by(|a, b| a.carrier_ghz().total_cmp(&b.carrier_ghz()));
    bands
}

/// Builds the report for a campaign.
///
/// Every fit that has data contributes an entry; a comparison appears
/// only where reference constants exist for the (band, state, metric)
/// key. Fits that cannot run (no matching rows, or too few for a
/// slope) are omitted.
pub fn build_report(campaign: &Campaign) -> ReportDocument {
    let findings = dataset::validate(campaign);
    let mut path_loss_fits = Vec::new();
    let mut spread_fits = Vec::new();
    let mut comparisons = Vec::new();

    for band in bands_of(campaign) {
        for state in [LinkState::Los, LinkState::Nlos] {
            if let Some(fit) = fit_pl(campaign, band, state) {
                if let Ok(record) = lognormal::compare(
                    Computed::PathLoss(&fit),
                    band,
                    state,
                    CompareMetric::OmniPathLoss,
                ) {
                    comparisons.push(record);
                }
                path_loss_fits.push(PlFitEntry {
                    band,
                    state,
                    fspl_1m_db: fit.fspl_1m_db(),
                    ple: fit.ple(),
                    sigma_db: fit.sigma_db(),
                    n_points: fit.n_points(),
                });
            }
            for metric in SPREAD_METRICS {
                let opts = spread_options(metric);
                let Some(stat) = fit_spread(campaign, band, state, metric, &opts) else {
                    continue;
                };
                if let Ok(record) =
                    lognormal::compare(Computed::Spread(&stat), band, state, compare_metric(metric))
                {
                    comparisons.push(record);
                }
                spread_fits.push(SpreadFitEntry {
                    band,
                    state,
                    metric,
                    mu_lg: stat.mu_lg(),
                    sigma_lg: stat.sigma_lg(),
                    n_points: stat.n_points(),
                    expectation: stat.expectation(),
                    expectation_rounded_params: lognormal::expectation_paper(
                        round2(stat.mu_lg()),
                        round2(stat.sigma_lg()),
                    ),
                    max_dist_m: opts.max_dist_m,
                    single_mpc_excluded: opts.exclude_single_mpc,
                });
            }
        }
    }

    ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION"),
        provenance: campaign.provenance.clone(),
        path_loss_fits,
        spread_fits,
        comparisons,
        findings,
    }
}

fn fit_pl(campaign: &Campaign, band: FrequencyBand, state: LinkState) -> Option<CiFit> {
    let points = dataset::select(
        campaign,
        band,
        state,
        StatField::OmniPlVvDb,
        &SelectOptions::default(),
    )
    .ok()?;
    pathloss::ci_fit(&points, band).ok()
}

fn fit_spread(
    campaign: &Campaign,
    band: FrequencyBand,
    state: LinkState,
    metric: StatField,
    opts: &SelectOptions,
) -> Option<LogNormalStat> {
    let points = dataset::select(campaign, band, state, metric, opts).ok()?;
    let values: Vec<f64> = points.into_iter().map(|(_, v)| v).collect();
    lognormal::fit_lognormal(&values).ok()
}

/// Renders the report as pretty JSON with a trailing newline.
///
/// Serialization follows struct field order, so equal documents render
/// to equal bytes.
pub fn render_json(report: &ReportDocument) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("report serialization is infallible");
    text.push('\n');
    text
}
