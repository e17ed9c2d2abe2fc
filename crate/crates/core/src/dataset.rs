//! The bundled measurement campaign, record validation, and row selection.
//!
//! The campaign surveyed 20 TX-RX links in an urban-microcell street grid at
//! each of the two carriers (6.75 and 16.95 GHz), 40 records total. Two
//! locations per band are outages (no measurable energy) and one is a
//! single-MPC location whose delay spreads are exactly 0 ns. [`select`]
//! turns the table into `(distance, value)` pairs under explicit filtering
//! rules so every fit in the toolkit states its selection up front.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::reference;
use crate::types::{FrequencyBand, LinkState, LocationRecord, StatField};

/// Conventional separation cap for angular-spread fits: beyond ~180 m the
/// campaign's angular statistics are dominated by a handful of far links,
/// so the published angular models fit only the near set.
pub const DEFAULT_ANGULAR_MAX_DIST_M: f64 = 180.0;

/// A set of location records plus where they came from (`"bundled"` or an
/// input path).
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Campaign {
    pub records: Vec<LocationRecord>,
    pub provenance: String,
}

/// One validation defect, attached to the record that exhibits it.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Finding {
    pub band_ghz: f64,
    pub tx_id: String,
    pub rx_id: String,
    pub message: String,
}

/// Row layout of the embedded table: band, TX, RX, state, separation, the
/// twelve statistics in column order, outage, single-MPC.
type RawRow = (
    f64,
    &'static str,
    &'static str,
    LinkState,
    f64,
    [Option<f64>; 12],
    bool,
    bool,
);

#[rustfmt::skip]
const BUNDLED_ROWS: [RawRow; 40] = [
    (6.75, "TX1", "RX1", LinkState::Los, 40.0, [Some(74.63), Some(84.77), Some(41.1), Some(29.3), Some(23.5), Some(23.5), Some(19.3), Some(24.6), Some(9.0), Some(12.2), Some(2.8), Some(8.6)], false, false),
    (6.75, "TX1", "RX2", LinkState::Los, 100.0, [Some(82.85), Some(106.7), Some(46.5), Some(60.5), Some(14.5), Some(14.5), Some(13.9), Some(22.3), Some(18.2), Some(18.2), Some(1.7), Some(8.5)], false, false),
    (6.75, "TX1", "RX3", LinkState::Los, 193.0, [Some(86.89), Some(104.6), Some(23.5), Some(121.3), Some(6.4), Some(6.4), Some(6.3), Some(65.1), Some(6.4), Some(19.8), Some(2.7), Some(12.9)], false, false),
    (6.75, "TX1", "RX4", LinkState::Nlos, 560.0, [Some(110.0), Some(136.6), Some(2.2), Some(66.4), Some(10.7), Some(10.7), Some(12.9), Some(22.0), Some(4.4), Some(15.4), Some(2.3), Some(9.5)], false, false),
    (6.75, "TX1", "RX5", LinkState::Nlos, 880.0, [Some(124.8), None, Some(0.0), Some(0.0), Some(5.8), Some(5.8), Some(5.8), Some(5.8), Some(5.8), Some(13.1), Some(5.8), Some(5.8)], false, true),
    (6.75, "TX1", "RX6", LinkState::Nlos, 1000.0, [None, None, None, None, None, None, None, None, None, None, None, None], true, false),
    (6.75, "TX1", "RX7", LinkState::Los, 424.0, [Some(100.2), Some(121.8), Some(37.5), Some(184.6), Some(10.4), Some(10.4), Some(10.5), Some(81.6), Some(4.1), Some(15.4), Some(7.4), Some(13.3)], false, false),
    (6.75, "TX2", "RX1", LinkState::Los, 58.0, [Some(80.74), Some(95.28), Some(25.2), Some(60.9), Some(18.8), Some(63.0), Some(21.9), Some(24.0), Some(21.5), Some(20.8), Some(3.3), Some(9.8)], false, false),
    (6.75, "TX2", "RX2", LinkState::Nlos, 51.5, [Some(88.93), Some(107.3), Some(34.6), Some(117.7), Some(13.6), Some(68.7), Some(18.9), Some(35.5), Some(17.4), Some(16.5), Some(3.3), Some(9.8)], false, false),
    (6.75, "TX2", "RX3", LinkState::Nlos, 100.9, [Some(101.2), Some(125.5), Some(71.4), Some(105.5), Some(18.4), Some(18.4), Some(18.1), Some(65.9), Some(2.6), Some(14.3), Some(5.6), Some(13.9)], false, false),
    (6.75, "TX3", "RX1", LinkState::Nlos, 71.0, [Some(101.0), Some(117.7), Some(60.4), Some(171.4), Some(34.0), Some(34.0), Some(34.4), Some(36.4), Some(11.7), Some(11.7), Some(7.8), Some(7.8)], false, false),
    (6.75, "TX3", "RX2", LinkState::Nlos, 45.0, [Some(88.92), Some(109.2), Some(47.5), Some(55.7), Some(23.8), Some(23.8), Some(39.8), Some(47.8), Some(9.7), Some(12.9), Some(8.8), Some(8.6)], false, false),
    (6.75, "TX3", "RX3", LinkState::Nlos, 125.0, [Some(100.6), Some(125.3), Some(24.6), Some(66.5), Some(18.3), Some(55.7), Some(33.4), Some(37.1), Some(9.9), Some(15.9), Some(10.0), Some(9.8)], false, false),
    (6.75, "TX4", "RX1", LinkState::Nlos, 88.7, [Some(97.7), Some(117.1), Some(35.4), Some(49.5), Some(16.1), Some(16.1), Some(69.2), Some(70.2), Some(2.3), Some(13.8), Some(7.8), Some(8.1)], false, false),
    (6.75, "TX4", "RX2", LinkState::Los, 120.0, [Some(87.25), Some(110.2), Some(70.3), Some(22.8), Some(10.5), Some(10.5), Some(10.6), Some(13.4), Some(4.3), Some(14.8), Some(4.4), Some(11.4)], false, false),
    (6.75, "TX4", "RX3", LinkState::Nlos, 216.0, [None, None, None, None, None, None, None, None, None, None, None, None], true, false),
    (6.75, "TX4", "RX4", LinkState::Nlos, 185.0, [Some(124.5), None, Some(31.0), Some(34.0), Some(12.6), Some(12.6), Some(16.5), Some(16.5), Some(4.5), Some(4.5), Some(3.2), Some(3.2)], false, false),
    (6.75, "TX5", "RX1", LinkState::Los, 52.0, [Some(81.98), Some(102.8), Some(35.1), Some(26.8), Some(10.8), Some(10.8), Some(11.2), Some(19.1), Some(4.3), Some(15.5), Some(4.4), Some(10.5)], false, false),
    (6.75, "TX5", "RX2", LinkState::Nlos, 170.0, [Some(101.5), Some(125.1), Some(31.5), Some(46.2), Some(24.2), Some(24.2), Some(10.5), Some(32.6), Some(3.8), Some(12.6), Some(4.2), Some(12.1)], false, false),
    (6.75, "TX5", "RX3", LinkState::Nlos, 141.0, [Some(106.3), Some(129.9), Some(40.0), Some(89.4), Some(46.5), Some(46.5), Some(22.0), Some(75.8), Some(2.3), Some(10.1), Some(7.1), Some(10.7)], false, false),
    (16.95, "TX1", "RX1", LinkState::Los, 40.0, [Some(82.14), Some(113.4), Some(35.9), Some(34.0), Some(11.8), Some(11.8), Some(10.9), Some(15.2), Some(5.2), Some(7.3), Some(0.9), Some(4.0)], false, false),
    (16.95, "TX1", "RX2", LinkState::Los, 100.0, [Some(91.39), Some(121.4), Some(28.7), Some(56.2), Some(7.2), Some(7.2), Some(8.2), Some(18.7), Some(9.6), Some(9.6), Some(2.4), Some(5.6)], false, false),
    (16.95, "TX1", "RX3", LinkState::Los, 193.0, [Some(96.04), Some(124.1), Some(26.5), Some(118.5), Some(6.6), Some(67.0), Some(7.3), Some(57.1), Some(7.6), Some(12.4), Some(1.8), Some(5.6)], false, false),
    (16.95, "TX1", "RX4", LinkState::Nlos, 560.0, [Some(112.8), Some(138.9), Some(14.7), Some(168.6), Some(10.1), Some(10.1), Some(6.9), Some(78.0), Some(2.7), Some(8.0), Some(4.2), Some(7.7)], false, false),
    (16.95, "TX1", "RX5", LinkState::Nlos, 880.0, [Some(130.1), None, Some(0.0), Some(0.0), Some(5.8), Some(5.8), Some(5.8), Some(5.8), Some(5.4), Some(5.4), Some(5.4), Some(5.4)], false, true),
    (16.95, "TX1", "RX6", LinkState::Nlos, 1000.0, [None, None, None, None, None, None, None, None, None, None, None, None], true, false),
    (16.95, "TX1", "RX7", LinkState::Los, 410.0, [Some(113.1), Some(138.4), Some(65.9), Some(97.9), Some(5.8), Some(5.8), Some(10.4), Some(47.8), Some(5.4), Some(11.5), Some(7.3), Some(9.0)], false, false),
    (16.95, "TX2", "RX1", LinkState::Los, 58.0, [Some(86.3), Some(106.8), Some(46.2), Some(16.9), Some(16.6), Some(16.6), Some(6.7), Some(22.0), Some(3.2), Some(8.3), Some(4.1), Some(8.9)], false, false),
    (16.95, "TX2", "RX2", LinkState::Nlos, 51.5, [Some(89.61), Some(118.8), Some(94.5), Some(37.3), Some(8.0), Some(8.0), Some(7.5), Some(25.1), Some(7.0), Some(9.6), Some(4.0), Some(7.3)], false, false),
    (16.95, "TX2", "RX3", LinkState::Nlos, 100.9, [Some(115.2), Some(138.1), Some(104.9), Some(146.2), Some(19.5), Some(19.5), Some(9.3), Some(20.4), Some(6.3), Some(7.6), Some(6.1), Some(9.7)], false, false),
    (16.95, "TX3", "RX1", LinkState::Nlos, 71.0, [Some(114.4), Some(141.1), Some(83.7), Some(180.8), Some(20.9), Some(28.0), Some(10.4), Some(28.4), Some(2.9), Some(8.1), Some(4.7), Some(8.4)], false, false),
    (16.95, "TX3", "RX2", LinkState::Nlos, 45.0, [Some(103.9), Some(128.6), Some(9.7), Some(34.3), Some(5.6), Some(19.8), Some(10.5), Some(31.4), Some(8.8), Some(12.1), Some(7.1), Some(9.8)], false, false),
    (16.95, "TX3", "RX3", LinkState::Nlos, 125.0, [Some(111.4), Some(123.8), Some(25.6), Some(64.5), Some(14.4), Some(33.5), Some(15.0), Some(23.5), Some(11.4), Some(13.6), Some(11.9), Some(11.5)], false, false),
    (16.95, "TX4", "RX1", LinkState::Nlos, 88.7, [Some(102.9), Some(126.2), Some(19.2), Some(31.9), Some(7.7), Some(33.9), Some(7.3), Some(80.4), Some(4.1), Some(9.9), Some(6.3), Some(8.1)], false, false),
    (16.95, "TX4", "RX2", LinkState::Los, 120.0, [Some(95.46), Some(123.8), Some(34.7), Some(22.1), Some(4.8), Some(46.8), Some(6.3), Some(10.9), Some(8.0), Some(9.8), Some(3.6), Some(7.6)], false, false),
    (16.95, "TX4", "RX3", LinkState::Nlos, 216.0, [None, None, None, None, None, None, None, None, None, None, None, None], true, false),
    (16.95, "TX4", "RX4", LinkState::Nlos, 185.0, [Some(129.5), None, Some(18.0), Some(18.0), Some(11.9), Some(11.9), Some(9.9), Some(24.2), Some(4.8), Some(4.8), Some(5.6), Some(5.2)], false, false),
    (16.95, "TX5", "RX1", LinkState::Los, 52.0, [Some(91.11), Some(115.9), Some(86.4), Some(23.6), Some(5.8), Some(5.8), Some(5.8), Some(12.0), Some(5.4), Some(11.6), Some(5.4), Some(8.9)], false, false),
    (16.95, "TX5", "RX2", LinkState::Nlos, 170.0, [Some(111.7), None, Some(17.5), Some(28.1), Some(25.6), Some(25.6), Some(9.1), Some(18.5), Some(9.3), Some(9.3), Some(4.2), Some(7.2)], false, false),
    (16.95, "TX5", "RX3", LinkState::Nlos, 141.0, [Some(122.5), None, Some(28.9), Some(60.5), Some(28.3), Some(28.3), Some(9.5), Some(47.7), Some(5.5), Some(7.3), Some(3.5), Some(4.2)], false, false),
];

/// The compiled-in campaign table. Infallible; validated by construction
/// (and re-checked by the test suite via [`validate`]).
pub fn load_bundled() -> Campaign {
    let mut records = Vec::with_capacity(BUNDLED_ROWS.len());
    for (ghz, tx, rx, state, d, s, outage, single_mpc) in BUNDLED_ROWS {
        let band = FrequencyBand::new(ghz).expect("bundled carrier is positive");
        records.push(LocationRecord {
            band,
            tx_id: String::from(tx),
            rx_id: String::from(rx),
            link_state: state,
            tr_sep_m: d,
            omni_pl_vv_db: s[0],
            omni_pl_vh_db: s[1],
            mean_dir_ds_ns: s[2],
            omni_ds_ns: s[3],
            mean_lobe_asa_deg: s[4],
            omni_asa_deg: s[5],
            mean_lobe_asd_deg: s[6],
            omni_asd_deg: s[7],
            mean_lobe_zsa_deg: s[8],
            omni_zsa_deg: s[9],
            mean_lobe_zsd_deg: s[10],
            omni_zsd_deg: s[11],
            outage,
            single_mpc,
        });
    }
    Campaign {
        records,
        provenance: String::from("bundled"),
    }
}

/// Checks every record against the campaign's structural rules and returns
/// one finding per defect (empty means valid):
///
/// * separation positive and finite;
/// * an outage row carries no statistics; a non-outage row carries at least
///   the V-V omnidirectional path loss;
/// * a single-MPC row records exactly 0 ns for both delay spreads;
/// * all statistics finite; spreads non-negative; angular spreads within
///   [0°, 360°);
/// * path losses within the per-band maximum measurable bound;
/// * no duplicate (band, TX, RX) key.
pub fn validate(campaign: &Campaign) -> Vec<Finding> {
    let mut findings = Vec::new();
    let mut seen: Vec<(u64, &str, &str)> = Vec::new();
    for r in &campaign.records {
        let mut report = |message: String| {
            findings.push(Finding {
                band_ghz: r.band.carrier_ghz(),
                tx_id: r.tx_id.clone(),
                rx_id: r.rx_id.clone(),
                message,
            });
        };

        if !(r.tr_sep_m > 0.0) || !r.tr_sep_m.is_finite() {
            report(format!("separation {} m is not positive", r.tr_sep_m));
        }

        let present = r.stats().iter().filter(|v| v.is_some()).count();
        if r.outage && present > 0 {
            report(format!("outage row carries {present} statistic(s)"));
        }
        if !r.outage && r.omni_pl_vv_db.is_none() {
            report(String::from("non-outage row lacks omni_pl_vv_db"));
        }

        if r.single_mpc {
            for field in [StatField::MeanDirDsNs, StatField::OmniDsNs] {
                if r.stat(field) != Some(0.0) {
                    report(format!(
                        "single-MPC row must record 0 ns for {}",
                        field.as_str()
                    ));
                }
            }
        }

        for field in StatField::ALL {
            let Some(v) = r.stat(field) else { continue };
            if !v.is_finite() {
                report(format!("{} is not finite", field.as_str()));
                continue;
            }
            if (field.is_delay_spread() || field.is_angular()) && v < 0.0 {
                report(format!("{} is negative ({v})", field.as_str()));
            }
            if field.is_angular() && v >= 360.0 {
                report(format!("{} exceeds the angular domain ({v}°)", field.as_str()));
            }
        }

        if let Some(limit) = reference::max_measurable_pl_db(r.band) {
            for field in [StatField::OmniPlVvDb, StatField::OmniPlVhDb] {
                if let Some(pl) = r.stat(field) {
                    if pl > limit {
                        report(format!(
                            "{} = {pl} dB exceeds the {limit} dB measurable bound",
                            field.as_str()
                        ));
                    }
                }
            }
        }

        let key = (r.band.carrier_ghz().to_bits(), r.tx_id.as_str(), r.rx_id.as_str());
        if seen.contains(&key) {
            report(String::from("duplicate (band, TX, RX) key"));
        } else {
            seen.push(key);
        }
    }
    findings
}

/// Filters applied by [`select`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectOptions {
    /// Keep only rows with separation ≤ this bound (inclusive). `None`
    /// keeps all distances. Angular-spread fits conventionally cap at 180 m.
    pub max_dist_m: Option<f64>,
    /// Drop single-MPC rows; required when fitting delay spreads in the log
    /// domain, where their exact-0 values are undefined.
    pub exclude_single_mpc: bool,
    /// Silently drop rows where the requested column is absent (default).
    /// When false, an absent value is an error.
    pub exclude_missing: bool,
}

impl Default for SelectOptions {
    fn default() -> Self {
        SelectOptions {
            max_dist_m: None,
            exclude_single_mpc: false,
            exclude_missing: true,
        }
    }
}

/// Extracts `(separation_m, value)` pairs for one statistic column from all
/// records matching the band and link state, in table order. Outage rows
/// never contribute. See [`SelectOptions`] for the remaining filters.
pub fn select(
    campaign: &Campaign,
    band: FrequencyBand,
    state: LinkState,
    field: StatField,
    opts: &SelectOptions,
) -> Result<Vec<(f64, f64)>, Error> {
    let mut out = Vec::new();
    for r in &campaign.records {
        if r.band != band || r.link_state != state || r.outage {
            continue;
        }
        if let Some(cap) = opts.max_dist_m {
            if r.tr_sep_m > cap {
                continue;
            }
        }
        if opts.exclude_single_mpc && r.single_mpc {
            continue;
        }
        match r.stat(field) {
            Some(v) => out.push((r.tr_sep_m, v)),
            None if opts.exclude_missing => continue,
            None => {
                return Err(Error::MissingValue {
                    band_ghz: r.band.carrier_ghz(),
                    tx_id: r.tx_id.clone(),
                    rx_id: r.rx_id.clone(),
                    field: field.as_str(),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundled() -> Campaign {
        load_bundled()
    }

    /// Sorted copies compare sets of floats without ordering assumptions.
    fn sorted(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn bundled_table_has_twenty_records_per_band() {
        let c = bundled();
        assert_eq!(c.records.len(), 40);
        for band in [FrequencyBand::FR1C, FrequencyBand::FR3] {
            assert_eq!(c.records.iter().filter(|r| r.band == band).count(), 20);
        }
        assert_eq!(c.provenance, "bundled");
    }

    #[test]
    fn bundled_transmitter_counts_match_the_survey_layout() {
        let c = bundled();
        for (tx, n) in [("TX1", 7), ("TX2", 3), ("TX3", 3), ("TX4", 4), ("TX5", 3)] {
            for band in [FrequencyBand::FR1C, FrequencyBand::FR3] {
                assert_eq!(
                    c.records
                        .iter()
                        .filter(|r| r.band == band && r.tx_id == tx)
                        .count(),
                    n,
                    "{tx}"
                );
            }
        }
    }

    #[test]
    fn bundled_outages_and_states_per_band() {
        let c = bundled();
        for band in [FrequencyBand::FR1C, FrequencyBand::FR3] {
            let outages: Vec<_> = c
                .records
                .iter()
                .filter(|r| r.band == band && r.outage)
                .map(|r| (r.tx_id.as_str(), r.rx_id.as_str()))
                .collect();
            assert_eq!(outages, [("TX1", "RX6"), ("TX4", "RX3")]);
            let los = c
                .records
                .iter()
                .filter(|r| r.band == band && r.link_state == LinkState::Los)
                .count();
            assert_eq!(los, 7);
            assert_eq!(
                c.records.iter().filter(|r| r.band == band).count() - los,
                13
            );
        }
    }

    #[test]
    fn bundled_tx1_rx7_separation_differs_between_bands() {
        let c = bundled();
        let sep = |band| {
            c.records
                .iter()
                .find(|r| r.band == band && r.tx_id == "TX1" && r.rx_id == "RX7")
                .unwrap()
                .tr_sep_m
        };
        assert_eq!(sep(FrequencyBand::FR1C), 424.0);
        assert_eq!(sep(FrequencyBand::FR3), 410.0);
    }

    #[test]
    fn bundled_table_validates_clean() {
        assert_eq!(validate(&bundled()), Vec::new());
    }

    #[test]
    fn select_los_path_loss_yields_seven_pairs() {
        let pairs = select(
            &bundled(),
            FrequencyBand::FR1C,
            LinkState::Los,
            StatField::OmniPlVvDb,
            &SelectOptions::default(),
        )
        .unwrap();
        assert_eq!(pairs.len(), 7);
        assert!(pairs.contains(&(40.0, 74.63)));
        assert!(pairs.contains(&(424.0, 100.2)));
    }

    #[test]
    fn select_nlos_asa_under_cap_yields_the_eight_capped_values() {
        let pairs = select(
            &bundled(),
            FrequencyBand::FR1C,
            LinkState::Nlos,
            StatField::OmniAsaDeg,
            &SelectOptions {
                max_dist_m: Some(180.0),
                ..SelectOptions::default()
            },
        )
        .unwrap();
        let values = sorted(pairs.iter().map(|&(_, v)| v).collect());
        assert_eq!(
            values,
            sorted(alloc::vec![68.7, 18.4, 34.0, 23.8, 55.7, 16.1, 24.2, 46.5])
        );
        // The 185 m row misses the inclusive 180 m cap; 185 itself passes.
        assert!(pairs.iter().all(|&(d, _)| d <= 180.0));
    }

    #[test]
    fn distance_cap_is_inclusive() {
        let pairs = select(
            &bundled(),
            FrequencyBand::FR1C,
            LinkState::Nlos,
            StatField::OmniAsaDeg,
            &SelectOptions {
                max_dist_m: Some(185.0),
                ..SelectOptions::default()
            },
        )
        .unwrap();
        assert!(pairs.contains(&(185.0, 12.6)));
        assert_eq!(pairs.len(), 9);
    }

    #[test]
    fn select_nlos_delay_spread_excluding_single_mpc_yields_ten_values() {
        let pairs = select(
            &bundled(),
            FrequencyBand::FR1C,
            LinkState::Nlos,
            StatField::OmniDsNs,
            &SelectOptions {
                exclude_single_mpc: true,
                ..SelectOptions::default()
            },
        )
        .unwrap();
        let values = sorted(pairs.iter().map(|&(_, v)| v).collect());
        assert_eq!(
            values,
            sorted(alloc::vec![
                66.4, 117.7, 105.5, 171.4, 55.7, 66.5, 49.5, 34.0, 46.2, 89.4
            ])
        );
    }

    #[test]
    fn single_mpc_rows_stay_unless_excluded() {
        let with = select(
            &bundled(),
            FrequencyBand::FR1C,
            LinkState::Nlos,
            StatField::OmniDsNs,
            &SelectOptions::default(),
        )
        .unwrap();
        assert_eq!(with.len(), 11);
        assert!(with.contains(&(880.0, 0.0)));
    }

    #[test]
    fn missing_values_error_when_not_excluded() {
        // TX1-RX5 at 6.75 GHz lacks the V-H path loss.
        let res = select(
            &bundled(),
            FrequencyBand::FR1C,
            LinkState::Nlos,
            StatField::OmniPlVhDb,
            &SelectOptions {
                exclude_missing: false,
                ..SelectOptions::default()
            },
        );
        assert!(matches!(
            res,
            Err(Error::MissingValue { field: "omni_pl_vh_db", .. })
        ));
        let skipped = select(
            &bundled(),
            FrequencyBand::FR1C,
            LinkState::Nlos,
            StatField::OmniPlVhDb,
            &SelectOptions::default(),
        )
        .unwrap();
        assert_eq!(skipped.len(), 9);
    }

    #[test]
    fn validate_flags_seeded_defects() {
        let mut c = bundled();
        // Outage row given a statistic.
        c.records[5].omni_asa_deg = Some(10.0);
        // Single-MPC row with nonzero delay spread.
        c.records[4].omni_ds_ns = Some(3.0);
        // Path loss beyond the measurable bound.
        c.records[0].omni_pl_vv_db = Some(200.0);
        // Angular value out of domain.
        c.records[1].omni_asa_deg = Some(400.0);
        // Negative separation.
        c.records[2].tr_sep_m = -5.0;
        // Duplicate key.
        let dup = c.records[3].clone();
        c.records.push(dup);
        let findings = validate(&c);
        let hit = |needle: &str| {
            findings
                .iter()
                .filter(|f| f.message.contains(needle))
                .count()
        };
        assert_eq!(hit("outage row carries"), 1);
        assert_eq!(hit("single-MPC row"), 1);
        assert_eq!(hit("measurable bound"), 1);
        assert_eq!(hit("angular domain"), 1);
        assert_eq!(hit("not positive"), 1);
        assert_eq!(hit("duplicate"), 1);
        assert_eq!(findings.len(), 6);
    }

    #[test]
    fn validate_attaches_findings_to_the_offending_record() {
        let mut c = bundled();
        c.records[8].omni_pl_vv_db = None;
        let findings = validate(&c);
        assert_eq!(findings.len(), 1);
        assert_eq!(findings[0].tx_id, "TX2");
        assert_eq!(findings[0].rx_id, "RX2");
        assert_eq!(findings[0].band_ghz, 6.75);
        assert!(findings[0].message.contains("omni_pl_vv_db"));
    }
}
