//! dB ↔ linear power conversions.
//!
//! Profiles store power linear; files and displays use dB. These helpers
//! are the single conversion point for both directions.

use crate::math;

/// Linear power from a dB value: `10^(db/10)`.
pub fn linear_from_db(db: f64) -> f64 {
    math::linear_from_db(db)
}

/// dB from a linear power: `10·log10(power)`.
pub fn db_from_linear(power: f64) -> f64 {
    math::db_from_linear(power)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_db_is_unit_power() {
        assert_eq!(linear_from_db(0.0), 1.0);
        assert_eq!(db_from_linear(1.0), 0.0);
    }

    #[test]
    fn ten_db_per_decade() {
        assert!((linear_from_db(10.0) - 10.0).abs() < 1e-12);
        assert!((linear_from_db(-30.0) - 1e-3).abs() < 1e-15);
        assert!((db_from_linear(100.0) - 20.0).abs() < 1e-12);
    }

    #[test]
    fn conversions_round_trip() {
        for db in [-87.5, -25.0, 0.0, 3.01, 44.4] {
            assert!((db_from_linear(linear_from_db(db)) - db).abs() < 1e-9);
        }
    }
}
