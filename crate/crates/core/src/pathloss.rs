//! Close-in (CI) path-loss model: FSPL anchor, prediction, MMSE fitting, the
//! floating-intercept (FI) alternative, and best-direction selection.
//!
//! The CI model is `PL(d) = FSPL(f_c, 1 m) + 10·n·log10(d / 1 m) + χ_σ`,
//! anchored at a 1 m free-space reference distance, with a single fitted
//! parameter n (the path-loss exponent) and zero-mean Gaussian shadow fading
//! χ_σ of standard deviation σ dB.


use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::Error;
use crate::math;
use crate::types::{CiFit, FiFit, FrequencyBand};

/// Free-space path loss at the 1 m reference distance:
/// `32.4 + 20·log10(f_c / 1 GHz)` dB, full precision.
///
/// 6.75 GHz gives 48.988… dB and 16.95 GHz gives 56.983… dB (commonly quoted
/// rounded to 49 and 57 dB). Fitting always uses the full-precision value:
/// anchoring at the rounded 49.0 shifts the fitted exponent by more than 0.01.
pub fn fspl_1m(band: FrequencyBand) -> f64 {
    32.4 + 20.0 * math::log10(band.carrier_ghz())
}

/// Deterministic part of the CI model: `fspl_1m + 10·n·log10(d_m)`.
///
/// Distances inside the 1 m reference distance are outside the model domain
/// and rejected.
pub fn ci_predict(fit: &CiFit, d_m: f64) -> Result<f64, Error> {
    if !(d_m >= 1.0) {
        return Err(Error::DistanceBelowReference(d_m));
    }
    Ok(fit.fspl_1m_db() + 10.0 * fit.ple() * math::log10(d_m))
}

/// MMSE fit of the CI path-loss exponent to `(d_m, pl_db)` points.
///
/// With `A_i = pl_i − fspl_1m` and `B_i = 10·log10(d_i)`, the least-squares
/// exponent is the closed form `n = Σ(A_i·B_i) / Σ(B_i²)`, and the
/// shadow-fading deviation is `σ = sqrt(Σ(A_i − n·B_i)² / N)` — the
/// *population* denominator N, which reproduces the published campaign
/// parameters.
pub fn ci_fit(points: &[(f64, f64)], band: FrequencyBand) -> Result<CiFit, Error> {
    if points.is_empty() {
        return Err(Error::EmptyInput("CI fit point list"));
    }
    let fspl = fspl_1m(band);
    let mut sum_ab = 0.0;
    let mut sum_bb = 0.0;
    for &(d_m, pl_db) in points {
        if !(d_m >= 1.0) {
            return Err(Error::DistanceBelowReference(d_m));
        }
        let a = pl_db - fspl;
        let b = 10.0 * math::log10(d_m);
        sum_ab += a * b;
        sum_bb += b * b;
    }
    if sum_bb == 0.0 {
        return Err(Error::DegenerateGeometry(
            "every point sits at the 1 m reference distance; the exponent is unidentifiable",
        ));
    }
    let n = sum_ab / sum_bb;
    let mut sse = 0.0;
    for &(d_m, pl_db) in points {
        let r = pl_db - fspl - 10.0 * n * math::log10(d_m);
        sse += r * r;
    }
    let sigma = math::sqrt(sse / points.len() as f64);
    CiFit::new(band, n, sigma, points.len())
}

/// Ordinary least squares of `pl_db` on `10·log10(d_m)`: the two-parameter
/// floating-intercept model `PL(d) = α + β·10·log10(d)`.
///
/// σ is the population residual standard deviation, as in [`ci_fit`].
pub fn fi_fit(points: &[(f64, f64)]) -> Result<FiFit, Error> {
    if points.len() < 2 {
        return Err(Error::DegenerateGeometry(
            "an FI fit needs at least two points",
        ));
    }
    let n = points.len() as f64;
    let mut sum_x = 0.0;
    let mut sum_y = 0.0;
    for &(d_m, pl_db) in points {
        if !(d_m > 0.0) {
            return Err(Error::DegenerateGeometry("distances must be positive"));
        }
        sum_x += 10.0 * math::log10(d_m);
        sum_y += pl_db;
    }
    let mean_x = sum_x / n;
    let mean_y = sum_y / n;
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for &(d_m, pl_db) in points {
        let dx = 10.0 * math::log10(d_m) - mean_x;
        sxx += dx * dx;
        sxy += dx * (pl_db - mean_y);
    }
    if sxx == 0.0 {
        return Err(Error::DegenerateGeometry(
            "an FI fit needs at least two distinct distances",
        ));
    }
    let beta = sxy / sxx;
    let alpha = mean_y - beta * mean_x;
    let mut sse = 0.0;
    for &(d_m, pl_db) in points {
        let r = pl_db - alpha - beta * 10.0 * math::log10(d_m);
        sse += r * r;
    }
    let sigma = math::sqrt(sse / n);
    FiFit::new(alpha, beta, sigma, points.len())
}

/// Path loss of the best pointing direction: the *minimum* loss (highest
/// received power) across the measured directions of one location.
pub fn best_direction_pl(directional_pls: &[f64]) -> Result<f64, Error> {
    if directional_pls.is_empty() {
        return Err(Error::EmptyInput("directional path-loss list"));
    }
    Ok(directional_pls.iter().copied().fold(f64::INFINITY, |a, b| a.min(b)))
}

/// One shadow-fading realization: `ci_predict(fit, d_m) + g` with
/// `g ~ N(0, sigma_db²)`.
pub fn shadow_fading_sample<R: Rng + ?Sized>(
    fit: &CiFit,
    d_m: f64,
    rng: &mut R,
) -> Result<f64, Error> {
    let mean = ci_predict(fit, d_m)?;
    let g: f64 = StandardNormal.sample(rng);
    Ok(mean + fit.sigma_db() * g)
}

/// Residual sum of squares of the CI model at exponent `n` — the objective
/// [`ci_fit`] minimizes. Exposed for oracle-style verification of the closed
/// form.
pub fn ci_sse(points: &[(f64, f64)], band: FrequencyBand, n: f64) -> f64 {
    let fspl = fspl_1m(band);
    let mut sse = 0.0;
    for &(d_m, pl_db) in points {
        let r = pl_db - fspl - 10.0 * n * math::log10(d_m);
        sse += r * r;
    }
    sse
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TOL: f64 = 1e-9;

    #[test]
    fn fspl_matches_published_anchors() {
        // Full-precision anchors; the published table rounds them to 49 / 57 dB.
        assert!((fspl_1m(FrequencyBand::FR1C) - 48.9860754566205).abs() < TOL);
        assert!((fspl_1m(FrequencyBand::FR3) - 56.98339405078202).abs() < TOL);
        assert_eq!(math::round(fspl_1m(FrequencyBand::FR1C)), 49.0);
        assert_eq!(math::round(fspl_1m(FrequencyBand::FR3)), 57.0);
    }

    #[test]
    fn fspl_is_exactly_intercept_at_one_ghz() {
        assert_eq!(fspl_1m(FrequencyBand::new(1.0).unwrap()), 32.4);
    }

    #[test]
    fn ci_predict_at_reference_distance_is_fspl() {
        let fit = CiFit::new(FrequencyBand::FR1C, 2.0, 0.0, 1).unwrap();
        assert!((ci_predict(&fit, 1.0).unwrap() - fspl_1m(FrequencyBand::FR1C)).abs() < TOL);
    }

    #[test]
    fn ci_predict_one_decade_at_free_space_slope() {
        let fit = CiFit::new(FrequencyBand::FR3, 2.0, 0.0, 1).unwrap();
        let expect = fspl_1m(FrequencyBand::FR3) + 20.0;
        assert!((ci_predict(&fit, 10.0).unwrap() - expect).abs() < TOL);
    }

    #[test]
    fn ci_predict_matches_hand_value_at_100m() {
        let fit = CiFit::new(FrequencyBand::FR1C, 1.79, 0.0, 1).unwrap();
        // 48.9860754566205 + 35.8
        assert!((ci_predict(&fit, 100.0).unwrap() - 84.7860754566205).abs() < TOL);
    }

    #[test]
    fn ci_predict_rejects_sub_reference_distance() {
        let fit = CiFit::new(FrequencyBand::FR1C, 2.0, 0.0, 1).unwrap();
        assert!(matches!(
            ci_predict(&fit, 0.5),
            Err(Error::DistanceBelowReference(_))
        ));
    }

    #[test]
    fn ci_fit_single_point_is_exact() {
        let band = FrequencyBand::FR1C;
        let pl = fspl_1m(band) + 20.0;
        let fit = ci_fit(&[(10.0, pl)], band).unwrap();
        assert!((fit.ple() - 2.0).abs() < TOL);
        assert!(fit.sigma_db().abs() < TOL);
        assert_eq!(fit.n_points(), 1);
    }

    #[test]
    fn ci_fit_rejects_empty_sub_reference_and_all_reference_inputs() {
        let band = FrequencyBand::FR1C;
        assert!(matches!(ci_fit(&[], band), Err(Error::EmptyInput(_))));
        assert!(matches!(
            ci_fit(&[(0.5, 60.0)], band),
            Err(Error::DistanceBelowReference(_))
        ));
        assert!(matches!(
            ci_fit(&[(1.0, 60.0), (1.0, 70.0)], band),
            Err(Error::DegenerateGeometry(_))
        ));
    }

    #[test]
    fn ci_fit_recovers_exact_model() {
        let band = FrequencyBand::FR3;
        let truth = CiFit::new(band, 2.37, 0.0, 1).unwrap();
        let points: Vec<(f64, f64)> = [1.0, 7.0, 40.0, 120.0, 880.0]
            .iter()
            .map(|&d| (d, ci_predict(&truth, d).unwrap()))
            .collect();
        let fit = ci_fit(&points, band).unwrap();
        assert!((fit.ple() - 2.37).abs() < TOL);
        assert!(fit.sigma_db() < TOL);
    }

    #[test]
    fn fi_fit_exact_line_through_two_points() {
        let fit = fi_fit(&[(10.0, 60.0), (100.0, 80.0)]).unwrap();
        assert!((fit.alpha_db() - 40.0).abs() < TOL);
        assert!((fit.beta() - 2.0).abs() < TOL);
        assert!(fit.sigma_db() < TOL);
    }

    #[test]
    fn fi_fit_recovers_collinear_triple() {
        let points: Vec<(f64, f64)> = [2.0, 30.0, 500.0]
            .iter()
            .map(|&d| (d, 50.0 + 3.0 * 10.0 * math::log10(d)))
            .collect();
        let fit = fi_fit(&points).unwrap();
        assert!((fit.alpha_db() - 50.0).abs() < TOL);
        assert!((fit.beta() - 3.0).abs() < TOL);
        assert!(fit.sigma_db() < TOL);
    }

    #[test]
    fn fi_fit_rejects_rank_deficient_input() {
        assert!(fi_fit(&[(10.0, 60.0)]).is_err());
        assert!(matches!(
            fi_fit(&[(10.0, 60.0), (10.0, 61.0)]),
            Err(Error::DegenerateGeometry(_))
        ));
    }

    #[test]
    fn best_direction_takes_minimum_loss() {
        assert_eq!(best_direction_pl(&[110.2, 104.7, 121.0]).unwrap(), 104.7);
        assert_eq!(best_direction_pl(&[99.0]).unwrap(), 99.0);
        assert!(best_direction_pl(&[]).is_err());
    }

    #[test]
    fn shadow_fading_degenerate_sigma_is_exact_prediction() {
        let fit = CiFit::new(FrequencyBand::FR1C, 2.1, 0.0, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let pl = shadow_fading_sample(&fit, 50.0, &mut rng).unwrap();
        assert_eq!(pl, ci_predict(&fit, 50.0).unwrap());
    }

    #[test]
    fn shadow_fading_same_seed_same_sequence() {
        let fit = CiFit::new(FrequencyBand::FR1C, 2.1, 5.5, 3).unwrap();
        let draw = |seed: u64| -> Vec<f64> {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..32)
                .map(|_| shadow_fading_sample(&fit, 50.0, &mut rng).unwrap())
                .collect()
        };
        assert_eq!(draw(42), draw(42));
        assert_ne!(draw(42), draw(43));
    }

    #[test]
    fn shadow_fading_mean_converges_to_prediction() {
        let fit = CiFit::new(FrequencyBand::FR1C, 2.1, 5.5, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(12345);
        let n = 100_000;
        let mut sum = 0.0;
        for _ in 0..n {
            sum += shadow_fading_sample(&fit, 50.0, &mut rng).unwrap();
        }
        let mean = sum / n as f64;
        let predicted = ci_predict(&fit, 50.0).unwrap();
        let bound = 3.0 * fit.sigma_db() / math::sqrt(n as f64);
        assert!(
            (mean - predicted).abs() < bound,
            "sample mean {mean} departs from {predicted} by more than {bound}"
        );
    }

    #[test]
    fn ci_exponent_shifts_exactly_under_slope_offset() {
        let band = FrequencyBand::FR1C;
        let points = vec![(40.0, 74.63), (100.0, 82.85), (193.0, 86.89), (424.0, 100.2)];
        let base = ci_fit(&points, band).unwrap();
        for delta in [0.5, -0.25, 1.0] {
            let shifted: Vec<(f64, f64)> = points
                .iter()
                .map(|&(d, pl)| (d, pl + 10.0 * delta * math::log10(d)))
                .collect();
            let fit = ci_fit(&shifted, band).unwrap();
            assert!(
                (fit.ple() - (base.ple() + delta)).abs() < 1e-12,
                "slope offset {delta} must shift the exponent exactly"
            );
        }
    }

    #[test]
    fn fi_intercept_shifts_exactly_under_constant_offset() {
        let points = vec![(40.0, 74.63), (100.0, 82.85), (193.0, 86.89), (424.0, 100.2)];
        let base = fi_fit(&points).unwrap();
        let shifted: Vec<(f64, f64)> = points.iter().map(|&(d, pl)| (d, pl + 7.25)).collect();
        let fit = fi_fit(&shifted).unwrap();
        assert!((fit.alpha_db() - (base.alpha_db() + 7.25)).abs() < 1e-9);
        assert!((fit.beta() - base.beta()).abs() < 1e-12);
    }
}
