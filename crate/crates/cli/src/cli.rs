//! Argument grammar and command dispatch.
//!
//! Eight subcommands cover the pipeline: `validate` checks a campaign
//! against the structural rules, `fit-pl` and `fit-spreads` fit the
//! statistical models, `pdp-metrics`, `pas-metrics`, and `synth-omni`
//! process profile files, `simulate` draws seeded Monte Carlo link
//! samples, and `report` renders the full fits-and-comparisons
//! document.
//!
//! Three flags apply everywhere: `--json` switches stdout to
//! machine-readable JSON with a stable key set, `--input <csv>` reads
//! a campaign file, and `--bundled` (the default) uses the compiled-in
//! table.
//!
//! Exit codes: 0 on success, 1 when the data refuses the request
//! (validation findings, empty selections, keys with no published
//! reference), 2 on I/O, parse, or usage errors. All payload output
//! goes to stdout; warnings go to stderr.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use midband_core::angular::{self, Lobe, DEFAULT_LOBE_THRESHOLD_DB};
use midband_core::dataset::{self, Campaign, Finding, SelectOptions, DEFAULT_ANGULAR_MAX_DIST_M};
use midband_core::lognormal;
use midband_core::pathloss;
use midband_core::pdp::{self, DsOptions};
use midband_core::simulate::{self, ChannelStatModel, LinkSample};
use midband_core::types::{FrequencyBand, LinkState, Plane, StatField};
use midband_core::units::db_from_linear;
use midband_core::Error;

use crate::failure::Failure;
use crate::formats;
use crate::report;

// ---------------------------------------------------------------------------
// Argument grammar
// ---------------------------------------------------------------------------

/// Top-level command line.
#[derive(Debug, Parser)]
#[command(
    name = "midband",
    version,
    about = "Upper mid-band urban-microcell channel measurement analysis"
)]
pub struct Cli {
    /// Emit machine-readable JSON instead of human-readable text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Read the campaign from a CSV file with the 19-column location schema.
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// Use the compiled-in measurement campaign (the default).
    #[arg(long, global = true, conflicts_with = "input")]
    pub bundled: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the campaign against the structural validation rules.
    Validate,
    /// Fit a path-loss model to one band and link state.
    FitPl(FitPlArgs),
    /// Fit a log-normal model to a spread statistic column.
    FitSpreads(FitSpreadsArgs),
    /// Threshold a power-delay profile and compute its RMS delay spread.
    PdpMetrics(PdpMetricsArgs),
    /// Angular spread and lobe statistics of a power-angular profile.
    PasMetrics(PasMetricsArgs),
    /// Synthesize an omnidirectional PDP from directional PDP files.
    SynthOmni(SynthOmniArgs),
    /// Draw seeded Monte Carlo channel-statistic samples.
    Simulate(SimulateArgs),
    /// Render the full fits-and-comparisons report as JSON.
    Report(ReportArgs),
}

/// Link state selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StateArg {
    Los,
    Nlos,
}

impl StateArg {
    fn core(self) -> LinkState {
        match self {
            StateArg::Los => LinkState::Los,
            StateArg::Nlos => LinkState::Nlos,
        }
    }
}

/// Antenna-pattern mode of the path-loss column. Per-location path
/// loss is tabulated for omnidirectional synthesis only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Omni,
}

/// Path-loss model family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    /// Close-in free-space reference model (1 m anchor, one slope).
    Ci,
    /// Floating-intercept model (ordinary least squares in log-distance).
    Fi,
}

/// Polarization column selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolarizationArg {
    /// Co-polarized vertical-vertical measurements.
    Vv,
    /// Cross-polarized vertical-horizontal measurements.
    Vh,
}

impl PolarizationArg {
    fn field(self) -> StatField {
        match self {
            PolarizationArg::Vv => StatField::OmniPlVvDb,
            PolarizationArg::Vh => StatField::OmniPlVhDb,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            PolarizationArg::Vv => "vv",
            PolarizationArg::Vh => "vh",
        }
    }
}

/// Where simulation model parameters come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SourceArg {
    /// Fit the model from the selected campaign.
    Fitted,
    /// Published campaign statistics (delay spread re-fitted from the
    /// bundled table, whose published form is an expectation only).
    #[value(alias = "paper")]
    Published,
    /// 3GPP TR 38.901 UMi street-canyon parameters.
    #[value(name = "3gpp")]
    ThreeGpp,
}

#[derive(Debug, Args)]
pub struct FitPlArgs {
    /// Carrier frequency in GHz.
    #[arg(long)]
    pub band: f64,
    /// Link state of the rows to fit.
    #[arg(long, value_enum)]
    pub state: StateArg,
    /// Antenna-pattern mode of the path-loss column.
    #[arg(long, value_enum, default_value = "omni")]
    pub mode: ModeArg,
    /// Path-loss model family.
    #[arg(long, value_enum, default_value = "ci")]
    pub model: ModelArg,
    /// Polarization column (cross-polarized fits carry a warning).
    #[arg(long, value_enum, default_value = "vv")]
    pub polarization: PolarizationArg,
}

#[derive(Debug, Args)]
pub struct FitSpreadsArgs {
    /// Carrier frequency in GHz.
    #[arg(long)]
    pub band: f64,
    /// Link state of the rows to fit.
    #[arg(long, value_enum)]
    pub state: StateArg,
    /// Statistic column to fit (e.g. omni_ds_ns, omni_asa_deg; the
    /// _db/_ns/_deg suffix may be omitted).
    #[arg(long)]
    pub metric: String,
    /// Separation cap in meters. Angular metrics default to 180 m;
    /// delay spreads default to no cap.
    #[arg(long, value_name = "M", conflicts_with = "no_max_dist")]
    pub max_dist: Option<f64>,
    /// Lift the default 180 m cap on angular metrics.
    #[arg(long)]
    pub no_max_dist: bool,
}

#[derive(Debug, Args)]
pub struct PdpMetricsArgs {
    /// Power-delay-profile file to analyze.
    #[arg(long, value_name = "PATH")]
    pub pdp: PathBuf,
    /// Keep taps within this many dB of the peak.
    #[arg(long, value_name = "DB", default_value_t = 25.0)]
    pub threshold_db: f64,
    /// Never keep taps below noise floor plus this margin.
    #[arg(long, value_name = "DB", default_value_t = 5.0)]
    pub noise_margin_db: f64,
}

#[derive(Debug, Args)]
pub struct PasMetricsArgs {
    /// Power-angular-profile file to analyze.
    #[arg(long, value_name = "PATH")]
    pub pas: PathBuf,
    /// Lobes are contiguous runs within this many dB of the peak.
    #[arg(long, value_name = "DB", default_value_t = DEFAULT_LOBE_THRESHOLD_DB)]
    pub lobe_threshold_db: f64,
}

#[derive(Debug, Args)]
pub struct SynthOmniArgs {
    /// Directional PDP file; repeat the flag for each direction.
    #[arg(long = "pdp", value_name = "PATH", required = true)]
    pub pdps: Vec<PathBuf>,
    /// Write the synthesized PDP here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Carrier frequency in GHz.
    #[arg(long)]
    pub band: f64,
    /// Link state to model.
    #[arg(long, value_enum)]
    pub state: StateArg,
    /// TX-RX separations in meters (comma-separated or repeated).
    #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
    pub dist: Vec<f64>,
    /// Samples to draw per separation.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Random seed; equal seeds reproduce equal samples byte for byte.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Model parameter source.
    #[arg(long, value_enum, default_value = "fitted")]
    pub source: SourceArg,
    /// Write samples here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

// ---------------------------------------------------------------------------
// Dispatch and shared plumbing
// ---------------------------------------------------------------------------

/// Runs one parsed command line to completion.
pub fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Validate => cmd_validate(cli),
        Command::FitPl(args) => cmd_fit_pl(cli, args),
        Command::FitSpreads(args) => cmd_fit_spreads(cli, args),
        Command::PdpMetrics(args) => cmd_pdp_metrics(cli, args),
        Command::PasMetrics(args) => cmd_pas_metrics(cli, args),
        Command::SynthOmni(args) => cmd_synth_omni(cli, args),
        Command::Simulate(args) => cmd_simulate(cli, args),
        Command::Report(args) => cmd_report(cli, args),
    }
}

fn load_campaign(cli: &Cli) -> Result<Campaign, Failure> {
    match &cli.input {
        Some(path) => formats::parse_campaign_csv(path),
        None => Ok(dataset::load_bundled()),
    }
}

/// Analysis commands refuse campaigns that fail validation; `validate`
/// itself reports the findings, and `report` embeds them.
fn ensure_clean(campaign: &Campaign) -> Result<(), Failure> {
    let findings = dataset::validate(campaign);
    if findings.is_empty() {
        Ok(())
    } else {
        Err(Failure::domain(format!(
            "campaign failed validation with {} {}; run `validate` for details",
            findings.len(),
            plural(findings.len(), "finding", "findings")
        )))
    }
}

fn domain_err(e: Error) -> Failure {
    Failure::domain(e.to_string())
}

fn input_err(e: Error) -> Failure {
    Failure::input(e.to_string())
}

fn band_arg(band_ghz: f64) -> Result<FrequencyBand, Failure> {
    FrequencyBand::new(band_ghz).map_err(input_err)
}

fn plural<'a>(n: usize, one: &'a str, many: &'a str) -> &'a str {
    if n == 1 {
        one
    } else {
        many
    }
}

/// Four-decimal rendering for fitted quantities in human output.
fn fmt4(v: f64) -> String {
    format!("{v:.4}")
}

fn json_string<T: serde::Serialize>(value: &T) -> String {
    let mut text =
        serde_json::to_string_pretty(value).expect("output serialization is infallible");
    text.push('\n');
    text
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Resolves the separation cap for a spread fit: an explicit value wins,
/// `--no-max-dist` lifts it, and otherwise angular metrics cap at the
/// measurement-supported 180 m while delay spreads take everything.
fn effective_cap(metric: StatField, max_dist: Option<f64>, no_max_dist: bool) -> Option<f64> {
    if no_max_dist {
        None
    } else {
        max_dist.or_else(|| metric.is_angular().then_some(DEFAULT_ANGULAR_MAX_DIST_M))
    }
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct ValidateOutput<'a> {
    command: &'static str,
    provenance: &'a str,
    records: usize,
    count: usize,
    findings: &'a [Finding],
}

fn cmd_validate(cli: &Cli) -> Result<(), Failure> {
    let campaign = load_campaign(cli)?;
    let findings = dataset::validate(&campaign);
    if cli.json {
        print!(
            "{}",
            json_string(&ValidateOutput {
                command: "validate",
                provenance: &campaign.provenance,
                records: campaign.records.len(),
                count: findings.len(),
                findings: &findings,
            })
        );
    } else {
        println!("provenance: {}", campaign.provenance);
        println!("records: {}", campaign.records.len());
        for f in &findings {
            println!("[{} GHz {}-{}] {}", f.band_ghz, f.tx_id, f.rx_id, f.message);
        }
        println!(
            "{} {}",
            findings.len(),
            plural(findings.len(), "finding", "findings")
        );
    }
    if findings.is_empty() {
        Ok(())
    } else {
        Err(Failure::domain(format!(
            "{} validation {}",
            findings.len(),
            plural(findings.len(), "finding", "findings")
        )))
    }
}

// ---------------------------------------------------------------------------
// fit-pl
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct FitPlCiOutput<'a> {
    command: &'static str,
    model: &'static str,
    band: FrequencyBand,
    state: LinkState,
    mode: &'static str,
    polarization: &'static str,
    provenance: &'a str,
    n_points: usize,
    fspl_1m_db: f64,
    ple: f64,
    sigma_db: f64,
}

#[derive(serde::Serialize)]
struct FitPlFiOutput<'a> {
    command: &'static str,
    model: &'static str,
    band: FrequencyBand,
    state: LinkState,
    mode: &'static str,
    polarization: &'static str,
    provenance: &'a str,
    n_points: usize,
    alpha_db: f64,
    beta: f64,
    sigma_db: f64,
}

fn cmd_fit_pl(cli: &Cli, args: &FitPlArgs) -> Result<(), Failure> {
    let band = band_arg(args.band)?;
    let state = args.state.core();
    if args.polarization == PolarizationArg::Vh {
        eprintln!(
            "warning: cross-polarized (V-H) path loss includes the polarization \
             mismatch; reference models are co-polarized (V-V)"
        );
    }
    let campaign = load_campaign(cli)?;
    ensure_clean(&campaign)?;
    let points = dataset::select(
        &campaign,
        band,
        state,
        args.polarization.field(),
        &SelectOptions::default(),
    )
    .map_err(domain_err)?;
    if points.is_empty() {
        return Err(Failure::domain("no matching records"));
    }

    match args.model {
        ModelArg::Ci => {
            let fit = pathloss::ci_fit(&points, band).map_err(domain_err)?;
            if cli.json {
                print!(
                    "{}",
                    json_string(&FitPlCiOutput {
                        command: "fit-pl",
                        model: "ci",
                        band,
                        state,
                        mode: "omni",
                        polarization: args.polarization.as_str(),
                        provenance: &campaign.provenance,
                        n_points: fit.n_points(),
                        fspl_1m_db: fit.fspl_1m_db(),
                        ple: fit.ple(),
                        sigma_db: fit.sigma_db(),
                    })
                );
            } else {
                println!("close-in path-loss fit");
                println!("  band_ghz: {}", band.carrier_ghz());
                println!("  state: {}", state.as_str());
                println!("  mode: omni");
                println!("  polarization: {}", args.polarization.as_str());
                println!("  provenance: {}", campaign.provenance);
                println!("  n_points: {}", fit.n_points());
                println!("  fspl_1m_db: {}", fmt4(fit.fspl_1m_db()));
                println!("  ple: {}", fmt4(fit.ple()));
                println!("  sigma_db: {}", fmt4(fit.sigma_db()));
            }
        }
        ModelArg::Fi => {
            let fit = pathloss::fi_fit(&points).map_err(domain_err)?;
            if cli.json {
                print!(
                    "{}",
                    json_string(&FitPlFiOutput {
                        command: "fit-pl",
                        model: "fi",
                        band,
                        state,
                        mode: "omni",
                        polarization: args.polarization.as_str(),
                        provenance: &campaign.provenance,
                        n_points: fit.n_points(),
                        alpha_db: fit.alpha_db(),
                        beta: fit.beta(),
                        sigma_db: fit.sigma_db(),
                    })
                );
            } else {
                println!("floating-intercept path-loss fit");
                println!("  band_ghz: {}", band.carrier_ghz());
                println!("  state: {}", state.as_str());
                println!("  mode: omni");
                println!("  polarization: {}", args.polarization.as_str());
                println!("  provenance: {}", campaign.provenance);
                println!("  n_points: {}", fit.n_points());
                println!("  alpha_db: {}", fmt4(fit.alpha_db()));
                println!("  beta: {}", fmt4(fit.beta()));
                println!("  sigma_db: {}", fmt4(fit.sigma_db()));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// fit-spreads
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct FitSpreadsOutput<'a> {
    command: &'static str,
    band: FrequencyBand,
    state: LinkState,
    metric: StatField,
    provenance: &'a str,
    max_dist_m: Option<f64>,
    single_mpc_excluded: bool,
    n_points: usize,
    mu_lg: f64,
    sigma_lg: f64,
    expectation: f64,
    expectation_rounded_params: f64,
}

fn cmd_fit_spreads(cli: &Cli, args: &FitSpreadsArgs) -> Result<(), Failure> {
    let band = band_arg(args.band)?;
    let state = args.state.core();
    let metric = StatField::parse(&args.metric).map_err(input_err)?;
    let opts = SelectOptions {
        max_dist_m: effective_cap(metric, args.max_dist, args.no_max_dist),
        exclude_single_mpc: metric.is_delay_spread(),
        exclude_missing: true,
    };
    let campaign = load_campaign(cli)?;
    ensure_clean(&campaign)?;
    let points = dataset::select(&campaign, band, state, metric, &opts).map_err(domain_err)?;
    if points.is_empty() {
        return Err(Failure::domain("no matching records"));
    }
    let values: Vec<f64> = points.into_iter().map(|(_, v)| v).collect();
    let stat = lognormal::fit_lognormal(&values).map_err(domain_err)?;
    let rounded = lognormal::expectation_paper(
        report::round2(stat.mu_lg()),
        report::round2(stat.sigma_lg()),
    );

    if cli.json {
        print!(
            "{}",
            json_string(&FitSpreadsOutput {
                command: "fit-spreads",
                band,
                state,
                metric,
                provenance: &campaign.provenance,
                max_dist_m: opts.max_dist_m,
                single_mpc_excluded: opts.exclude_single_mpc,
                n_points: stat.n_points(),
                mu_lg: stat.mu_lg(),
                sigma_lg: stat.sigma_lg(),
                expectation: stat.expectation(),
                expectation_rounded_params: rounded,
            })
        );
    } else {
        println!("log-normal spread fit");
        println!("  band_ghz: {}", band.carrier_ghz());
        println!("  state: {}", state.as_str());
        println!("  metric: {}", metric.as_str());
        println!("  provenance: {}", campaign.provenance);
        match opts.max_dist_m {
            Some(cap) => println!("  max_dist_m: {cap}"),
            None => println!("  max_dist_m: none"),
        }
        println!("  single_mpc_excluded: {}", opts.exclude_single_mpc);
        println!("  n_points: {}", stat.n_points());
        println!("  mu_lg: {}", fmt4(stat.mu_lg()));
        println!("  sigma_lg: {}", fmt4(stat.sigma_lg()));
        println!("  expectation: {}", fmt4(stat.expectation()));
        println!("  expectation_rounded_params: {}", fmt4(rounded));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// pdp-metrics
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct PdpMetricsOutput {
    command: &'static str,
    file: String,
    peak_threshold_db: f64,
    noise_margin_db: f64,
    n_taps: usize,
    n_surviving_taps: usize,
    peak_db: f64,
    noise_floor_db: f64,
    rms_delay_spread_ns: f64,
}

fn cmd_pdp_metrics(cli: &Cli, args: &PdpMetricsArgs) -> Result<(), Failure> {
    let profile = formats::parse_pdp_file(&args.pdp)?;
    let opts = DsOptions::new(args.threshold_db, args.noise_margin_db).map_err(input_err)?;
    let surviving = pdp::threshold_pdp(&profile, &opts);
    let spread = pdp::rms_delay_spread(&profile, &opts);
    let out = PdpMetricsOutput {
        command: "pdp-metrics",
        file: args.pdp.display().to_string(),
        peak_threshold_db: opts.peak_threshold_db,
        noise_margin_db: opts.noise_margin_db,
        n_taps: profile.taps().len(),
        n_surviving_taps: surviving.taps().len(),
        peak_db: profile.peak_db(),
        noise_floor_db: profile.noise_floor_db(),
        rms_delay_spread_ns: spread,
    };
    if cli.json {
        print!("{}", json_string(&out));
    } else {
        println!("PDP metrics");
        println!("  file: {}", out.file);
        println!("  peak_threshold_db: {}", out.peak_threshold_db);
        println!("  noise_margin_db: {}", out.noise_margin_db);
        println!("  n_taps: {}", out.n_taps);
        println!("  n_surviving_taps: {}", out.n_surviving_taps);
        println!("  peak_db: {}", fmt4(out.peak_db));
        println!("  noise_floor_db: {}", out.noise_floor_db);
        println!("  rms_delay_spread_ns: {}", fmt4(out.rms_delay_spread_ns));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// pas-metrics
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct PasMetricsOutput {
    command: &'static str,
    file: String,
    plane: Plane,
    lobe_threshold_db: f64,
    n_samples: usize,
    omni_spread_deg: f64,
    n_lobes: usize,
    mean_lobe_spread_deg: f64,
    lobes: Vec<Lobe>,
}

fn cmd_pas_metrics(cli: &Cli, args: &PasMetricsArgs) -> Result<(), Failure> {
    if args.lobe_threshold_db.is_nan() || args.lobe_threshold_db <= 0.0 {
        return Err(Failure::input("lobe threshold must be positive"));
    }
    let profile = formats::parse_pas_file(&args.pas)?;
    let omni = angular::omni_angular_spread(&profile);
    let lobes = angular::segment_lobes(&profile, args.lobe_threshold_db);
    let mean = angular::mean_lobe_spread(&lobes).map_err(domain_err)?;
    let out = PasMetricsOutput {
        command: "pas-metrics",
        file: args.pas.display().to_string(),
        plane: profile.plane(),
        lobe_threshold_db: args.lobe_threshold_db,
        n_samples: profile.samples().len(),
        omni_spread_deg: omni,
        n_lobes: lobes.len(),
        mean_lobe_spread_deg: mean,
        lobes,
    };
    if cli.json {
        print!("{}", json_string(&out));
    } else {
        println!("PAS metrics");
        println!("  file: {}", out.file);
        println!("  plane: {}", plane_str(out.plane));
        println!("  lobe_threshold_db: {}", out.lobe_threshold_db);
        println!("  n_samples: {}", out.n_samples);
        println!("  omni_spread_deg: {}", fmt4(out.omni_spread_deg));
        println!("  n_lobes: {}", out.n_lobes);
        println!("  mean_lobe_spread_deg: {}", fmt4(out.mean_lobe_spread_deg));
        for (i, lobe) in out.lobes.iter().enumerate() {
            println!(
                "  lobe {}: start_deg {} end_deg {} power_fraction {} spread_deg {}",
                i + 1,
                lobe.start_deg,
                lobe.end_deg,
                fmt4(lobe.power_fraction),
                fmt4(lobe.spread_deg)
            );
        }
    }
    Ok(())
}

fn plane_str(plane: Plane) -> &'static str {
    match plane {
        Plane::Azimuth => "azimuth",
        Plane::Zenith => "zenith",
    }
}

// ---------------------------------------------------------------------------
// synth-omni
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct TapOut {
    delay_ns: f64,
    power_db: f64,
}

#[derive(serde::Serialize)]
struct SynthOmniOutput {
    command: &'static str,
    inputs: Vec<String>,
    noise_floor_db: f64,
    n_taps: usize,
    taps: Vec<TapOut>,
}

fn cmd_synth_omni(cli: &Cli, args: &SynthOmniArgs) -> Result<(), Failure> {
    let mut profiles = Vec::with_capacity(args.pdps.len());
    for path in &args.pdps {
        profiles.push(formats::parse_pdp_file(path)?);
    }
    let omni = pdp::synthesize_omni(&profiles).map_err(domain_err)?;

    if cli.json {
        let out = SynthOmniOutput {
            command: "synth-omni",
            inputs: args.pdps.iter().map(|p| p.display().to_string()).collect(),
            noise_floor_db: omni.noise_floor_db(),
            n_taps: omni.taps().len(),
            taps: omni
                .taps()
                .iter()
                .map(|&(delay_ns, power)| TapOut {
                    delay_ns,
                    power_db: db_from_linear(power),
                })
                .collect(),
        };
        write_output(args.out.as_deref(), &json_string(&out))
    } else {
        let text = formats::pdp_to_string(&omni);
        match &args.out {
            Some(path) => {
                fs::write(path, &text)
                    .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
                println!("wrote {} ({} taps)", path.display(), omni.taps().len());
                Ok(())
            }
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

#[derive(serde::Serialize)]
struct SimulateOutput<'a> {
    command: &'static str,
    seed: u64,
    n_per_distance: u32,
    distances: &'a [f64],
    model: &'a ChannelStatModel,
    clamp_events: u32,
    samples: &'a [LinkSample],
}

fn cmd_simulate(cli: &Cli, args: &SimulateArgs) -> Result<(), Failure> {
    let band = band_arg(args.band)?;
    let state = args.state.core();
    let model = match args.source {
        SourceArg::Fitted => {
            let campaign = load_campaign(cli)?;
            ensure_clean(&campaign)?;
            ChannelStatModel::fitted_from(&campaign, band, state).map_err(domain_err)?
        }
        SourceArg::Published => {
            ChannelStatModel::from_published(band, state).map_err(domain_err)?
        }
        SourceArg::ThreeGpp => ChannelStatModel::from_3gpp(band, state).map_err(domain_err)?,
    };

    let mut distances = Vec::with_capacity(args.dist.len() * args.n as usize);
    for &d in &args.dist {
        for _ in 0..args.n {
            distances.push(d);
        }
    }
    let run = simulate::sample_campaign(&model, &distances, args.seed).map_err(domain_err)?;
    if run.clamp_events > 0 {
        eprintln!(
            "warning: {} azimuth-spread {} clamped at the {}° ceiling",
            run.clamp_events,
            plural(run.clamp_events as usize, "draw", "draws"),
            model.as_ceiling_deg
        );
    }

    let text = if cli.json {
        json_string(&SimulateOutput {
            command: "simulate",
            seed: args.seed,
            n_per_distance: args.n,
            distances: &distances,
            model: &model,
            clamp_events: run.clamp_events,
            samples: &run.samples,
        })
    } else {
        let mut csv = String::from("d_m,pl_db,ds_ns,asa_deg,asd_deg\n");
        for s in &run.samples {
            let _ = writeln!(
                csv,
                "{},{},{},{},{}",
                s.d_m, s.pl_db, s.ds_ns, s.asa_deg, s.asd_deg
            );
        }
        csv
    };
    write_output(args.out.as_deref(), &text)
}

// ---------------------------------------------------------------------------
// report
// ---------------------------------------------------------------------------

fn cmd_report(cli: &Cli, args: &ReportArgs) -> Result<(), Failure> {
    let campaign = load_campaign(cli)?;
    let document = report::build_report(&campaign);
    write_output(args.out.as_deref(), &report::render_json(&document))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn argument_grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn source_accepts_the_published_alias() {
        let cli = Cli::try_parse_from([
            "midband", "simulate", "--band", "6.75", "--state", "nlos", "--dist", "100",
            "--source", "paper",
        ])
        .unwrap();
        match cli.command {
            Command::Simulate(args) => assert_eq!(args.source, SourceArg::Published),
            _ => panic!("expected simulate"),
        }
    }

    #[test]
    fn source_names_include_3gpp() {
        let cli = Cli::try_parse_from([
            "midband", "simulate", "--band", "6.75", "--state", "los", "--dist", "50,60",
            "--source", "3gpp",
        ])
        .unwrap();
        match cli.command {
            Command::Simulate(args) => {
                assert_eq!(args.source, SourceArg::ThreeGpp);
                assert_eq!(args.dist, vec![50.0, 60.0]);
            }
            _ => panic!("expected simulate"),
        }
    }

    #[test]
    fn input_conflicts_with_bundled() {
        let result = Cli::try_parse_from([
            "midband", "--input", "x.csv", "--bundled", "validate",
        ]);
        assert!(result.is_err());
    }

    #[test]
    fn effective_cap_defaults_follow_the_metric() {
        assert_eq!(
            effective_cap(StatField::OmniAsaDeg, None, false),
            Some(DEFAULT_ANGULAR_MAX_DIST_M)
        );
        assert_eq!(effective_cap(StatField::OmniDsNs, None, false), None);
        assert_eq!(
            effective_cap(StatField::OmniAsaDeg, Some(50.0), false),
            Some(50.0)
        );
        assert_eq!(effective_cap(StatField::OmniAsaDeg, None, true), None);
    }

    #[test]
    fn simulate_rejects_zero_samples_per_distance() {
        let result = Cli::try_parse_from([
            "midband", "simulate", "--band", "6.75", "--state", "los", "--dist", "100", "--n",
            "0",
        ]);
        assert!(result.is_err());
    }
}
