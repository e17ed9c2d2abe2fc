//! Power-delay-profile metrics: power thresholding, RMS delay spread, and
//! omnidirectional synthesis from directional sweeps.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::math;
use crate::types::Pdp;

/// Thresholding rule for delay-spread computation: taps survive when they are
/// within `peak_threshold_db` of the PDP maximum *and* at least
/// `noise_margin_db` above the noise floor.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DsOptions {
    pub peak_threshold_db: f64,
    pub noise_margin_db: f64,
}

impl Default for DsOptions {
    /// The campaign processing rule: 25 dB below the PDP maximum, floored at
    /// 5 dB above the noise floor.
    fn default() -> Self {
        DsOptions {
            peak_threshold_db: 25.0,
            noise_margin_db: 5.0,
        }
    }
}

impl DsOptions {
    pub fn new(peak_threshold_db: f64, noise_margin_db: f64) -> Result<Self, Error> {
        if !(peak_threshold_db > 0.0) || !(noise_margin_db > 0.0) {
            return Err(Error::InvalidInput(
                "peak threshold and noise margin must be positive",
            ));
        }
        Ok(DsOptions {
            peak_threshold_db,
            noise_margin_db,
        })
    }

    /// Cut level in dB for a given peak power: the more restrictive of the
    /// two rules, so noise taps are never admitted.
    fn cut_db(&self, peak_db: f64, noise_floor_db: f64) -> f64 {
        math::fmax(
            peak_db - self.peak_threshold_db,
            noise_floor_db + self.noise_margin_db,
        )
    }
}

/// Drops taps below the threshold rule of `opts`.
///
/// The peak tap always survives, even when the noise margin would place the
/// cut above it (taps tied at the peak power all survive).
pub fn threshold_pdp(pdp: &Pdp, opts: &DsOptions) -> Pdp {
    let peak_db = pdp.peak_db();
    let cut_db = pdp.peak_db().min(opts.cut_db(peak_db, pdp.noise_floor_db()));
    let taps: Vec<(f64, f64)> = pdp
        .taps()
        .iter()
        .copied()
        .filter(|&(_, p)| math::db_from_linear(p) >= cut_db)
        .collect();
    // Cannot fail: the peak tap passes `cut_db` by construction, and the
    // surviving subset keeps the strictly-increasing delay order.
    Pdp::new(taps, pdp.noise_floor_db()).expect("thresholding preserves PDP validity")
}

/// RMS delay spread in nanoseconds of the thresholded PDP: the square root
/// of the power-weighted second central moment of delay,
/// `sqrt(Σp·(τ−τ̄)²/Σp)` with `τ̄ = Σp·τ/Σp`, over surviving taps.
///
/// Computed in two passes about the mean rather than as `E[τ²]−E[τ]²`,
/// whose cancellation loses all significance for compact profiles (a lone
/// tap at 95 ns comes out near 1e-6 ns instead of 0 that way).
///
/// A single surviving tap gives 0 ns — the value recorded at single-MPC
/// campaign locations.
pub fn rms_delay_spread(pdp: &Pdp, opts: &DsOptions) -> f64 {
    let kept = threshold_pdp(pdp, opts);
    let mut sum_p = 0.0;
    let mut sum_pt = 0.0;
    for &(delay, power) in kept.taps() {
        sum_p += power;
        sum_pt += power * delay;
    }
    let mean = sum_pt / sum_p;
    let mut var = 0.0;
    for &(delay, power) in kept.taps() {
        let dev = delay - mean;
        var += power * dev * dev;
    }
    math::sqrt(var / sum_p)
}

/// Synthesizes an omnidirectional PDP as the bin-wise sum of linear powers
/// over the union of delay bins of unique-pointing directional PDPs.
///
/// Inputs must share one absolute delay reference and one noise-floor scale;
/// delay bins are matched exactly (no re-gridding). The output noise floor is
/// the maximum input noise floor.
pub fn synthesize_omni(directional: &[Pdp]) -> Result<Pdp, Error> {
    if directional.is_empty() {
        return Err(Error::EmptyInput("directional PDP list"));
    }
    // Non-negative finite delays order identically by bit pattern and by
    // value, so the raw bits serve as an exact-match bin key.
    let mut bins: BTreeMap<u64, f64> = BTreeMap::new();
    let mut noise_floor_db = f64::NEG_INFINITY;
    for pdp in directional {
        noise_floor_db = math::fmax(noise_floor_db, pdp.noise_floor_db());
        for &(delay, power) in pdp.taps() {
            *bins.entry(delay.to_bits()).or_insert(0.0) += power;
        }
    }
    let taps: Vec<(f64, f64)> = bins
        .into_iter()
        .map(|(bits, power)| (f64::from_bits(bits), power))
        .collect();
    Pdp::new(taps, noise_floor_db)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOL: f64 = 1e-9;

    fn pdp(taps: &[(f64, f64)], floor_db: f64) -> Pdp {
        Pdp::new(taps.to_vec(), floor_db).unwrap()
    }

    #[test]
    fn threshold_drops_taps_below_peak_rule() {
        // Relative powers 0, -10, -30 dB with the floor far below: the
        // -25 dB peak rule alone decides, cutting the third tap.
        let p = pdp(
            &[(0.0, 1.0), (10.0, 0.1), (20.0, 0.001)],
            -40.0,
        );
        let kept = threshold_pdp(&p, &DsOptions::default());
        assert_eq!(kept.taps().len(), 2);
        assert_eq!(kept.taps()[1].0, 10.0);
    }

    #[test]
    fn threshold_noise_margin_branch_dominates() {
        // Floor at -20 dB relative to peak: the cut is max(-25, -15) = -15,
        // keeping {0, -10} and dropping the -16 dB tap.
        let p = pdp(
            &[(0.0, 1.0), (10.0, 0.1), (20.0, math::linear_from_db(-16.0))],
            -20.0,
        );
        let kept = threshold_pdp(&p, &DsOptions::default());
        assert_eq!(kept.taps().len(), 2);
    }

    #[test]
    fn threshold_keeps_single_tap_pdp_unchanged() {
        let p = pdp(&[(12.5, 0.25)], -30.0);
        let kept = threshold_pdp(&p, &DsOptions::default());
        assert_eq!(kept, p);
    }

    #[test]
    fn threshold_peak_survives_even_below_noise_margin() {
        // Noise floor above the peak: every tap fails the margin rule, but
        // the peak must survive.
        let p = pdp(&[(0.0, 1.0), (10.0, 0.5)], 10.0);
        let kept = threshold_pdp(&p, &DsOptions::default());
        assert_eq!(kept.taps(), &[(0.0, 1.0)]);
    }

    #[test]
    fn ds_of_single_tap_is_zero() {
        let p = pdp(&[(123.0, 2.0)], -40.0);
        assert_eq!(rms_delay_spread(&p, &DsOptions::default()), 0.0);
    }

    #[test]
    fn ds_of_equal_power_pair_is_half_separation() {
        let p = pdp(&[(0.0, 1.0), (100.0, 1.0)], -40.0);
        assert!((rms_delay_spread(&p, &DsOptions::default()) - 50.0).abs() < TOL);
    }

    #[test]
    fn ds_matches_hand_computed_thresholded_example() {
        // Taps (0, 1.0), (50, 0.1), (200, 0.001) over a -40 dB floor: the
        // third tap is cut by the -25 dB rule and the surviving pair gives
        // sqrt(250/1.1 - (5/1.1)^2) = 14.3739… ns.
        let p = pdp(&[(0.0, 1.0), (50.0, 0.1), (200.0, 0.001)], -40.0);
        let ds = rms_delay_spread(&p, &DsOptions::default());
        assert!((ds - 14.373989364401723).abs() < TOL);
    }

    #[test]
    fn ds_is_invariant_to_delay_offset() {
        let base = pdp(&[(0.0, 1.0), (50.0, 0.1), (90.0, 0.02)], -40.0);
        let shifted = pdp(&[(300.0, 1.0), (350.0, 0.1), (390.0, 0.02)], -40.0);
        let opts = DsOptions::default();
        assert!(
            (rms_delay_spread(&base, &opts) - rms_delay_spread(&shifted, &opts)).abs() < 1e-6
        );
    }

    #[test]
    fn ds_is_invariant_to_common_power_scaling() {
        let opts = DsOptions::default();
        let base = pdp(&[(0.0, 1.0), (50.0, 0.1), (90.0, 0.02)], -40.0);
        let scale = 1e3;
        let scaled = pdp(
            &[(0.0, 1.0 * scale), (50.0, 0.1 * scale), (90.0, 0.02 * scale)],
            -40.0 + 10.0 * math::log10(scale),
        );
        let kept_base = threshold_pdp(&base, &opts);
        let kept_scaled = threshold_pdp(&scaled, &opts);
        assert_eq!(kept_base.taps().len(), kept_scaled.taps().len());
        assert!(
            (rms_delay_spread(&base, &opts) - rms_delay_spread(&scaled, &opts)).abs() < 1e-9
        );
    }

    #[test]
    fn synthesize_single_input_is_identity() {
        let p = pdp(&[(0.0, 1.0), (50.0, 0.1)], -40.0);
        assert_eq!(synthesize_omni(core::slice::from_ref(&p)).unwrap(), p);
    }

    #[test]
    fn synthesize_disjoint_supports_is_union() {
        let a = pdp(&[(0.0, 1.0), (50.0, 0.1)], -40.0);
        let b = pdp(&[(25.0, 0.5), (75.0, 0.2)], -35.0);
        let omni = synthesize_omni(&[a, b]).unwrap();
        assert_eq!(
            omni.taps(),
            &[(0.0, 1.0), (25.0, 0.5), (50.0, 0.1), (75.0, 0.2)]
        );
        assert_eq!(omni.noise_floor_db(), -35.0);
    }

    #[test]
    fn synthesize_sums_shared_bins() {
        let a = pdp(&[(0.0, 1.0), (50.0, 0.1)], -40.0);
        let b = pdp(&[(50.0, 0.3)], -40.0);
        let omni = synthesize_omni(&[a, b]).unwrap();
        assert_eq!(omni.taps(), &[(0.0, 1.0), (50.0, 0.4)]);
    }

    #[test]
    fn synthesize_rejects_empty_input() {
        assert!(matches!(synthesize_omni(&[]), Err(Error::EmptyInput(_))));
    }

    #[test]
    fn ds_bounded_by_surviving_delay_extent() {
        let opts = DsOptions::default();
        let p = pdp(
            &[(5.0, 0.9), (35.0, 1.0), (90.0, 0.4), (130.0, 0.05)],
            -50.0,
        );
        let kept = threshold_pdp(&p, &opts);
        let extent = kept.taps().last().unwrap().0 - kept.taps()[0].0;
        assert!(rms_delay_spread(&p, &opts) <= extent);
    }
}
