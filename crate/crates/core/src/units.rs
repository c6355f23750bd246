//! Decibel and dBm conversions.
//!
//! Internal computations are all linear (watts, dimensionless power gains).
//! Decibels appear only at I/O boundaries: antenna pattern definitions,
//! configuration, and reports.

/// Converts a decibel quantity to linear scale.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// Converts a linear power ratio to decibels.
pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// Converts a power level in dBm to watts.
pub fn dbm_to_watts(dbm: f64) -> f64 {
    10f64.powf(dbm / 10.0) * 1e-3
}

/// Converts a power level in watts to dBm.
pub fn watts_to_dbm(watts: f64) -> f64 {
    10.0 * (watts / 1e-3).log10()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn db_round_trip() {
        for &db in &[-100.0, -3.0, 0.0, 8.0, 55.0] {
            let back = linear_to_db(db_to_linear(db));
            assert!((back - db).abs() < 1e-12, "round trip failed for {db} dB");
        }
    }

    #[test]
    fn dbm_reference_points() {
        assert!((dbm_to_watts(0.0) - 1e-3).abs() < 1e-18);
        assert!((dbm_to_watts(30.0) - 1.0).abs() < 1e-12);
        assert!((dbm_to_watts(55.0) - 316.227_766_016_837_9).abs() < 1e-9);
        assert!((dbm_to_watts(-100.0) - 1e-13).abs() < 1e-25);
        assert!((watts_to_dbm(1.0) - 30.0).abs() < 1e-12);
    }
}
