//! File formats: campaign CSV, power-delay profiles, power-angular profiles.
//!
//! Three plain-text formats cross the tool boundary:
//!
//! * **Campaign CSV** — one row per TX-RX location with the nineteen
//!   columns of the bundled table, in a fixed order. Parsed with an
//!   exact header check so a silently reordered or renamed column is a
//!   schema error, not a misread number.
//! * **PDP file** — comment lines carrying a required
//!   `# noise_floor_db=<dB>` directive, a `delay_ns,power_db` header,
//!   then one tap per line. Powers are in dB on disk and converted to
//!   linear on ingest.
//! * **PAS file** — same shape with a required `# plane=azimuth|zenith`
//!   directive and an `angle_deg,power_db` header.
//!
//! Emitters round-trip with the parsers: floats are written in Rust's
//! shortest round-trip decimal form, so parse(emit(x)) reproduces x
//! bit for bit (PDP powers excepted, which pass through a dB/linear
//! conversion each way).

use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use midband_core::dataset::Campaign;
use midband_core::types::{FrequencyBand, LinkState, LocationRecord, Pdp, Plane, PowerAngularProfile, StatField};
use midband_core::units::{db_from_linear, linear_from_db};

use crate::failure::Failure;

/// The campaign CSV header, in column order.
pub const CAMPAIGN_HEADER: [&str; 19] = [
    "band_ghz",
    "tx_id",
    "rx_id",
    "link_state",
    "tr_sep_m",
    "omni_pl_vv_db",
    "omni_pl_vh_db",
    "mean_dir_ds_ns",
    "omni_ds_ns",
    "mean_lobe_asa_deg",
    "omni_asa_deg",
    "mean_lobe_asd_deg",
    "omni_asd_deg",
    "mean_lobe_zsa_deg",
    "omni_zsa_deg",
    "mean_lobe_zsd_deg",
    "omni_zsd_deg",
    "outage",
    "single_mpc",
];

// ---------------------------------------------------------------------------
// Campaign CSV
// ---------------------------------------------------------------------------

#[derive(serde::Deserialize)]
struct CampaignRow {
    band_ghz: f64,
    tx_id: String,
    rx_id: String,
    link_state: String,
    tr_sep_m: f64,
    omni_pl_vv_db: Option<f64>,
    omni_pl_vh_db: Option<f64>,
    mean_dir_ds_ns: Option<f64>,
    omni_ds_ns: Option<f64>,
    mean_lobe_asa_deg: Option<f64>,
    omni_asa_deg: Option<f64>,
    mean_lobe_asd_deg: Option<f64>,
    omni_asd_deg: Option<f64>,
    mean_lobe_zsa_deg: Option<f64>,
    omni_zsa_deg: Option<f64>,
    mean_lobe_zsd_deg: Option<f64>,
    omni_zsd_deg: Option<f64>,
    outage: u8,
    single_mpc: u8,
}

/// Parse a campaign CSV file into a [`Campaign`].
///
/// The header must match [`CAMPAIGN_HEADER`] exactly, including order.
/// Empty cells become absent statistics; `outage` and `single_mpc`
/// must be `0` or `1`; `link_state` accepts `LOS`/`NLOS` in any case.
pub fn parse_campaign_csv(path: &Path) -> Result<Campaign, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_campaign_str(&text, &path.display().to_string())
}

/// Parse campaign CSV text; `provenance` labels the result.
pub fn parse_campaign_str(text: &str, provenance: &str) -> Result<Campaign, Failure> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let headers = reader
        .headers()
        .map_err(|e| Failure::input(format!("{provenance}: {e}")))?
        .clone();
    if headers.len() != CAMPAIGN_HEADER.len() {
        return Err(Failure::input(format!(
            "{provenance}: campaign schema mismatch: expected {} columns, found {}",
            CAMPAIGN_HEADER.len(),
            headers.len()
        )));
    }
    for (i, expected) in CAMPAIGN_HEADER.iter().enumerate() {
        let got = &headers[i];
        if got != *expected {
            return Err(Failure::input(format!(
                "{provenance}: campaign schema mismatch at column {}: expected `{expected}`, found `{got}`",
                i + 1
            )));
        }
    }

    let mut records = Vec::new();
    for (idx, row) in reader.deserialize::<CampaignRow>().enumerate() {
        let row = row.map_err(|e| Failure::input(format!("{provenance}: {e}")))?;
        records.push(record_from_row(row).map_err(|msg| {
            Failure::input(format!("{provenance}: record {}: {msg}", idx + 1))
        })?);
    }

    Ok(Campaign {
        records,
        provenance: provenance.to_string(),
    })
}

fn record_from_row(row: CampaignRow) -> Result<LocationRecord, String> {
    let band = FrequencyBand::new(row.band_ghz)
        .map_err(|_| format!("bad band_ghz value `{}`", row.band_ghz))?;
    let link_state = if row.link_state.eq_ignore_ascii_case("los") {
        LinkState::Los
    } else if row.link_state.eq_ignore_ascii_case("nlos") {
        LinkState::Nlos
    } else {
        return Err(format!("bad link_state value `{}`", row.link_state));
    };
    let flag = |name: &str, v: u8| match v {
        0 => Ok(false),
        1 => Ok(true),
        other => Err(format!("bad {name} value `{other}` (expected 0 or 1)")),
    };
    Ok(LocationRecord {
        band,
        tx_id: row.tx_id,
        rx_id: row.rx_id,
        link_state,
        tr_sep_m: row.tr_sep_m,
        omni_pl_vv_db: row.omni_pl_vv_db,
        omni_pl_vh_db: row.omni_pl_vh_db,
        mean_dir_ds_ns: row.mean_dir_ds_ns,
        omni_ds_ns: row.omni_ds_ns,
        mean_lobe_asa_deg: row.mean_lobe_asa_deg,
        omni_asa_deg: row.omni_asa_deg,
        mean_lobe_asd_deg: row.mean_lobe_asd_deg,
        omni_asd_deg: row.omni_asd_deg,
        mean_lobe_zsa_deg: row.mean_lobe_zsa_deg,
        omni_zsa_deg: row.omni_zsa_deg,
        mean_lobe_zsd_deg: row.mean_lobe_zsd_deg,
        omni_zsd_deg: row.omni_zsd_deg,
        outage: flag("outage", row.outage)?,
        single_mpc: flag("single_mpc", row.single_mpc)?,
    })
}

/// Write a campaign as CSV, round-tripping with [`parse_campaign_str`].
pub fn emit_campaign_csv<W: io::Write>(campaign: &Campaign, writer: W) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record(CAMPAIGN_HEADER)
        .map_err(|e| Failure::input(format!("writing campaign CSV: {e}")))?;
    for record in &campaign.records {
        let mut fields: Vec<String> = vec![
            fmt_f64(record.band.carrier_ghz()),
            record.tx_id.clone(),
            record.rx_id.clone(),
            record.link_state.as_str().to_string(),
            fmt_f64(record.tr_sep_m),
        ];
        for field in StatField::ALL {
            fields.push(record.stat(field).map(fmt_f64).unwrap_or_default());
        }
        fields.push(flag_str(record.outage).to_string());
        fields.push(flag_str(record.single_mpc).to_string());
        w.write_record(&fields)
            .map_err(|e| Failure::input(format!("writing campaign CSV: {e}")))?;
    }
    w.flush()
        .map_err(|e| Failure::input(format!("writing campaign CSV: {e}")))?;
    Ok(())
}

fn flag_str(v: bool) -> &'static str {
    if v {
        "1"
    } else {
        "0"
    }
}

/// Shortest decimal form that parses back to the same f64.
fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

// ---------------------------------------------------------------------------
// PDP files
// ---------------------------------------------------------------------------

/// Parse a power-delay-profile file.
pub fn parse_pdp_file(path: &Path) -> Result<Pdp, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_pdp_str(&text).map_err(|msg| Failure::input(format!("{}: {msg}", path.display())))
}

/// Parse PDP text: `# noise_floor_db=<dB>`, a `delay_ns,power_db`
/// header, then `delay,power` lines. Power is dB on disk, linear in
/// the returned [`Pdp`]. Taps are sorted by delay; duplicate delay
/// bins are rejected.
pub fn parse_pdp_str(text: &str) -> Result<Pdp, String> {
    let mut noise_floor_db: Option<f64> = None;
    let mut taps: Vec<(f64, f64)> = Vec::new();
    let mut header_seen = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(value) = comment.strip_prefix("noise_floor_db=") {
                let value = value.trim();
                noise_floor_db = Some(value.parse().map_err(|_| {
                    format!("line {line_no}: bad noise_floor_db value `{value}`")
                })?);
            }
            continue;
        }
        if !header_seen {
            if line != "delay_ns,power_db" {
                return Err(format!(
                    "line {line_no}: expected header `delay_ns,power_db`, found `{line}`"
                ));
            }
            header_seen = true;
            continue;
        }
        let (delay, power) = split_pair(line, line_no)?;
        taps.push((delay, linear_from_db(power)));
    }

    if !header_seen {
        return Err("missing `delay_ns,power_db` header".to_string());
    }
    let floor = noise_floor_db.ok_or("missing `# noise_floor_db=<dB>` directive")?;
    taps.sort_by(|a, b| a.0.total_cmp(&b.0));
    Pdp::new(taps, floor).map_err(|e| e.to_string())
}

/// Write a [`Pdp`] in the file format [`parse_pdp_str`] reads.
pub fn emit_pdp<W: io::Write>(pdp: &Pdp, mut writer: W) -> Result<(), Failure> {
    let text = pdp_to_string(pdp);
    writer
        .write_all(text.as_bytes())
        .map_err(|e| Failure::input(format!("writing PDP: {e}")))
}

/// Render a [`Pdp`] as PDP file text.
pub fn pdp_to_string(pdp: &Pdp) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# noise_floor_db={}", fmt_f64(pdp.noise_floor_db()));
    out.push_str("delay_ns,power_db\n");
    for &(delay_ns, power) in pdp.taps() {
        let _ = writeln!(out, "{},{}", fmt_f64(delay_ns), fmt_f64(db_from_linear(power)));
    }
    out
}

// ---------------------------------------------------------------------------
// PAS files
// ---------------------------------------------------------------------------

/// Parse a power-angular-profile file.
pub fn parse_pas_file(path: &Path) -> Result<PowerAngularProfile, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_pas_str(&text).map_err(|msg| Failure::input(format!("{}: {msg}", path.display())))
}

/// Parse PAS text: `# plane=azimuth|zenith`, an `angle_deg,power_db`
/// header, then `angle,power` lines. Power is dB on disk, linear in
/// the returned profile.
pub fn parse_pas_str(text: &str) -> Result<PowerAngularProfile, String> {
    let mut plane: Option<Plane> = None;
    let mut samples: Vec<(f64, f64)> = Vec::new();
    let mut header_seen = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(value) = comment.strip_prefix("plane=") {
                plane = Some(match value.trim() {
                    "azimuth" => Plane::Azimuth,
                    "zenith" => Plane::Zenith,
                    other => {
                        return Err(format!(
                            "line {line_no}: bad plane value `{other}` (expected azimuth or zenith)"
                        ))
                    }
                });
            }
            continue;
        }
        if !header_seen {
            if line != "angle_deg,power_db" {
                return Err(format!(
                    "line {line_no}: expected header `angle_deg,power_db`, found `{line}`"
                ));
            }
            header_seen = true;
            continue;
        }
        let (angle, power) = split_pair(line, line_no)?;
        samples.push((angle, linear_from_db(power)));
    }

    if !header_seen {
        return Err("missing `angle_deg,power_db` header".to_string());
    }
    let plane = plane.ok_or("missing `# plane=azimuth|zenith` directive")?;
    PowerAngularProfile::new(samples, plane).map_err(|e| e.to_string())
}

fn split_pair(line: &str, line_no: usize) -> Result<(f64, f64), String> {
    let (a, b) = line
        .split_once(',')
        .ok_or_else(|| format!("line {line_no}: expected two comma-separated values, found `{line}`"))?;
    let a: f64 = a
        .trim()
        .parse()
        .map_err(|_| format!("line {line_no}: bad number `{}`", a.trim()))?;
    let b: f64 = b
        .trim()
        .parse()
        .map_err(|_| format!("line {line_no}: bad number `{}`", b.trim()))?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use midband_core::dataset;

    const TOL: f64 = 1e-12;

    #[test]
    fn bundled_campaign_round_trips_through_csv() {
        let campaign = dataset::load_bundled();
        let mut buf = Vec::new();
        emit_campaign_csv(&campaign, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let back = parse_campaign_str(&text, "round-trip").unwrap();
        assert_eq!(back.records, campaign.records);
        assert_eq!(back.provenance, "round-trip");
    }

    #[test]
    fn campaign_header_mismatch_is_a_schema_error() {
        let text = "band_ghz,tx_id,rx_id\n6.75,TX1,RX1\n";
        let err = parse_campaign_str(text, "t").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.message().contains("schema mismatch"), "{}", err.message());

        let mut renamed: Vec<&str> = CAMPAIGN_HEADER.to_vec();
        renamed[4] = "tr_sep_meters";
        let text = format!("{}\n", renamed.join(","));
        let err = parse_campaign_str(&text, "t").unwrap_err();
        assert!(err.message().contains("tr_sep_m"), "{}", err.message());
    }

    #[test]
    fn campaign_rows_validate_their_fields() {
        let header = CAMPAIGN_HEADER.join(",");
        let bad_state = format!("{header}\n6.75,TX1,RX1,SEMI,40,74.63,,,,,,,,,,,,0,0\n");
        let err = parse_campaign_str(&bad_state, "t").unwrap_err();
        assert!(err.message().contains("link_state"), "{}", err.message());

        let bad_flag = format!("{header}\n6.75,TX1,RX1,LOS,40,74.63,,,,,,,,,,,,2,0\n");
        let err = parse_campaign_str(&bad_flag, "t").unwrap_err();
        assert!(err.message().contains("outage"), "{}", err.message());

        let bad_band = format!("{header}\n-1,TX1,RX1,LOS,40,74.63,,,,,,,,,,,,0,0\n");
        let err = parse_campaign_str(&bad_band, "t").unwrap_err();
        assert!(err.message().contains("band_ghz"), "{}", err.message());
    }

    #[test]
    fn campaign_empty_cells_become_missing_stats() {
        let header = CAMPAIGN_HEADER.join(",");
        let text = format!("{header}\n6.75,TX1,RX1,LOS,40,74.63,,,,,,,,,,,,0,0\n");
        let campaign = parse_campaign_str(&text, "t").unwrap();
        let record = &campaign.records[0];
        assert_eq!(record.omni_pl_vv_db, Some(74.63));
        assert_eq!(record.omni_pl_vh_db, None);
        assert_eq!(record.omni_ds_ns, None);
        assert!(!record.outage);
    }

    #[test]
    fn pdp_parses_directive_header_and_taps() {
        let text = "# noise_floor_db=-95\n\
                    delay_ns,power_db\n\
                    0,-20\n\
                    100,-20\n";
        let pdp = parse_pdp_str(text).unwrap();
        assert_eq!(pdp.noise_floor_db(), -95.0);
        assert_eq!(pdp.taps().len(), 2);
        assert!((pdp.taps()[0].1 - linear_from_db(-20.0)).abs() < TOL);
    }

    #[test]
    fn pdp_sorts_taps_by_delay() {
        let text = "# noise_floor_db=-95\ndelay_ns,power_db\n100,-30\n0,-20\n";
        let pdp = parse_pdp_str(text).unwrap();
        assert_eq!(pdp.taps()[0].0, 0.0);
        assert_eq!(pdp.taps()[1].0, 100.0);
    }

    #[test]
    fn pdp_rejects_duplicate_delays_and_missing_directive() {
        let dup = "# noise_floor_db=-95\ndelay_ns,power_db\n50,-20\n50,-25\n";
        assert!(parse_pdp_str(dup).is_err());

        let missing = "delay_ns,power_db\n0,-20\n";
        let err = parse_pdp_str(missing).unwrap_err();
        assert!(err.contains("noise_floor_db"), "{err}");

        let bad_header = "# noise_floor_db=-95\ntime,power\n0,-20\n";
        let err = parse_pdp_str(bad_header).unwrap_err();
        assert!(err.contains("delay_ns,power_db"), "{err}");
    }

    #[test]
    fn pdp_round_trips_through_text() {
        let text = "# noise_floor_db=-95\ndelay_ns,power_db\n0,-20\n50,-23.5\n400,-60\n";
        let pdp = parse_pdp_str(text).unwrap();
        let back = parse_pdp_str(&pdp_to_string(&pdp)).unwrap();
        assert_eq!(back.noise_floor_db(), pdp.noise_floor_db());
        assert_eq!(back.taps().len(), pdp.taps().len());
        for (a, b) in back.taps().iter().zip(pdp.taps()) {
            assert_eq!(a.0, b.0);
            assert!((a.1 - b.1).abs() <= TOL * b.1.abs());
        }
    }

    #[test]
    fn pas_parses_plane_and_samples() {
        let text = "# plane=azimuth\nangle_deg,power_db\n0,-10\n90,-13\n";
        let profile = parse_pas_str(text).unwrap();
        assert_eq!(profile.plane(), Plane::Azimuth);
        assert_eq!(profile.samples().len(), 2);
    }

    #[test]
    fn pas_rejects_missing_or_bad_plane() {
        let missing = "angle_deg,power_db\n0,-10\n";
        let err = parse_pas_str(missing).unwrap_err();
        assert!(err.contains("plane"), "{err}");

        let bad = "# plane=elevation\nangle_deg,power_db\n0,-10\n";
        let err = parse_pas_str(bad).unwrap_err();
        assert!(err.contains("elevation"), "{err}");
    }

    #[test]
    fn pas_zenith_angles_are_bounded() {
        let text = "# plane=zenith\nangle_deg,power_db\n0,-10\n181,-10\n";
        assert!(parse_pas_str(text).is_err());
        let ok = "# plane=zenith\nangle_deg,power_db\n10,-10\n170,-10\n";
        assert!(parse_pas_str(ok).is_ok());
    }

    #[test]
    fn blank_lines_and_extra_comments_are_ignored() {
        let text = "# produced by a test\n\n# noise_floor_db=-90\n\ndelay_ns,power_db\n\n10,-20\n";
        let pdp = parse_pdp_str(text).unwrap();
        assert_eq!(pdp.taps().len(), 1);
        assert_eq!(pdp.noise_floor_db(), -90.0);
    }
}
