//! Deployment geometry: user drops, look angles, free-space path loss.
//!
//! The platform hovers at altitude `h` above the origin of a ground plane;
//! users live on a disk of radius `coverage_radius` around the sub-platform
//! point. Directions from the platform are described by the off-nadir
//! elevation angle `theta` (0 = straight down) and the azimuth `phi`
//! measured from the +x axis.

use crate::config::ScenarioConfig;
use crate::error::Error;
use crate::rng::{realization_stream, StreamLane};
use rand::Rng;

/// Speed of light, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// One user's position and derived link geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct UeGeometry {
    /// Index of the user within its realization, `0..num_ues`.
    pub ue_id: usize,
    /// Ground-plane position (x, y), meters.
    pub position: (f64, f64),
    /// Off-nadir elevation angle seen from the platform, radians, `[0, pi/2)`.
    pub elevation: f64,
    /// Azimuth seen from the platform, radians, `[-pi, pi)`; 0 at nadir.
    pub azimuth: f64,
    /// Slant distance platform-to-user, meters.
    pub distance: f64,
    /// Free-space path loss, linear (>= 1 for far-field distances).
    pub path_loss: f64,
}

/// Maps a ground position to `(elevation, azimuth, distance)` seen from the
/// platform at `altitude` above the origin.
///
/// The azimuth of the exact nadir point is 0 by convention, and the result
/// is normalized to `[-pi, pi)`.
pub fn compute_angles(position: (f64, f64), altitude: f64) -> (f64, f64, f64) {
    let (x, y) = position;
    let horizontal = x.hypot(y);
    let theta = horizontal.atan2(altitude);
    // atan2 on signed zeros would yield +/-pi for a (-0.0, +/-0.0) position;
    // pin the undefined nadir azimuth to 0 instead.
    let phi = if horizontal == 0.0 {
        0.0
    } else {
        normalize_azimuth(y.atan2(x))
    };
    let distance = (horizontal * horizontal + altitude * altitude).sqrt();
    (theta, phi, distance)
}

/// Wraps an angle into `[-pi, pi)`.
pub fn normalize_azimuth(phi: f64) -> f64 {
    let mut p = phi.rem_euclid(2.0 * std::f64::consts::PI);
    if p >= std::f64::consts::PI {
        p -= 2.0 * std::f64::consts::PI;
    }
    p
}

/// Free-space path loss `(4 pi d f / c)^2`, linear.
///
/// Errors on non-positive distance or frequency.
pub fn fspl(distance: f64, carrier_freq: f64) -> Result<f64, Error> {
    if !(distance.is_finite() && distance > 0.0) {
        return Err(Error::invalid(format!(
            "fspl distance must be positive, got {distance}"
        )));
    }
    if !(carrier_freq.is_finite() && carrier_freq > 0.0) {
        return Err(Error::invalid(format!(
            "fspl carrier frequency must be positive, got {carrier_freq}"
        )));
    }
    Ok(fspl_unchecked(distance, carrier_freq))
}

fn fspl_unchecked(distance: f64, carrier_freq: f64) -> f64 {
    let x = 4.0 * std::f64::consts::PI * distance * carrier_freq / SPEED_OF_LIGHT;
    x * x
}

/// Drops `config.num_ues` users uniformly by area on the coverage disk.
///
/// The draw is a pure function of `(config.rng_seed, realization_index)`;
/// users are identified by their draw order.
pub fn generate_ues(config: &ScenarioConfig, realization_index: usize) -> Vec<UeGeometry> {
    let mut rng = realization_stream(config.rng_seed, realization_index, StreamLane::Geometry);
    (0..config.num_ues)
        .map(|ue_id| {
            // r = R * sqrt(u) makes the density uniform in area, not radius.
            let radial: f64 = rng.gen::<f64>().sqrt() * config.coverage_radius;
            let angle: f64 = rng.gen::<f64>() * 2.0 * std::f64::consts::PI;
            let position = (radial * angle.cos(), radial * angle.sin());
            let (elevation, azimuth, distance) = compute_angles(position, config.haps_altitude);
            UeGeometry {
                ue_id,
                position,
                elevation,
                azimuth,
                distance,
                path_loss: fspl_unchecked(distance, config.carrier_freq),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::units::linear_to_db;

    fn approx_eq(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn angles_of_edge_user() {
        let (theta, phi, d) = compute_angles((2_000.0, 0.0), 20_000.0);
        assert!(
            approx_eq(theta, 0.1f64.atan(), 1e-15),
            "elevation should be atan(0.1), got {theta}"
        );
        assert!(approx_eq(phi, 0.0, 1e-15), "azimuth should be 0, got {phi}");
        assert!(approx_eq(d, 20_099.751_242_241_78, 1e-6), "distance, got {d}");
    }

    #[test]
    fn nadir_azimuth_is_zero() {
        let (theta, phi, d) = compute_angles((0.0, 0.0), 20_000.0);
        assert_eq!(theta, 0.0);
        assert_eq!(phi, 0.0);
        assert_eq!(d, 20_000.0);
    }

    #[test]
    fn azimuth_lies_in_half_open_range() {
        for &(x, y) in &[
            (1.0, 0.0),
            (-1.0, 0.0),
            (-1.0, -1e-12),
            (0.0, 1.0),
            (0.0, -1.0),
            (-3.0, 2.0),
        ] {
            let (_, phi, _) = compute_angles((x, y), 20_000.0);
            assert!(
                (-std::f64::consts::PI..std::f64::consts::PI).contains(&phi),
                "azimuth {phi} out of [-pi, pi) for ({x}, {y})"
            );
        }
    }

    #[test]
    fn angles_round_trip_to_position() {
        let h = 20_000.0;
        for &(x, y) in &[(2_000.0, 0.0), (-1_500.0, 700.0), (3.0, -4.0), (0.0, 1_999.0)] {
            let (theta, phi, _) = compute_angles((x, y), h);
            let back_x = h * theta.tan() * phi.cos();
            let back_y = h * theta.tan() * phi.sin();
            let scale = x.hypot(y).max(1.0);
            assert!(
                approx_eq(back_x, x, 1e-12 * scale) && approx_eq(back_y, y, 1e-12 * scale),
                "round trip ({x}, {y}) -> ({back_x}, {back_y})"
            );
        }
    }

    #[test]
    fn fspl_reference_value() {
        let pl_db = linear_to_db(fspl(20_000.0, 2.545e9).unwrap());
        assert!(
            approx_eq(pl_db, 126.58, 0.01),
            "20 km at 2.545 GHz should lose 126.58 dB, got {pl_db}"
        );
    }

    #[test]
    fn fspl_doubles_by_six_db() {
        let a = linear_to_db(fspl(10_000.0, 2.545e9).unwrap());
        let b = linear_to_db(fspl(20_000.0, 2.545e9).unwrap());
        assert!(
            approx_eq(b - a, 20.0 * 2f64.log10(), 1e-9),
            "doubling distance should add exactly 20*log10(2) dB, got {}",
            b - a
        );
    }

    #[test]
    fn fspl_is_one_at_unit_gain_distance() {
        let fc = 2.545e9;
        let d = SPEED_OF_LIGHT / (4.0 * std::f64::consts::PI * fc);
        let pl = fspl(d, fc).unwrap();
        assert!(approx_eq(pl, 1.0, 1e-12), "unit-gain distance should give PL=1, got {pl}");
    }

    #[test]
    fn fspl_monotone_in_distance_and_frequency() {
        let mut prev = 0.0;
        for km in 1..=40 {
            let pl = fspl(km as f64 * 1_000.0, 2.545e9).unwrap();
            assert!(pl > prev, "fspl must grow with distance");
            prev = pl;
        }
        assert!(fspl(20_000.0, 3e9).unwrap() > fspl(20_000.0, 2e9).unwrap());
    }

    #[test]
    fn fspl_rejects_bad_domain() {
        assert!(fspl(0.0, 2.545e9).is_err());
        assert!(fspl(-5.0, 2.545e9).is_err());
        assert!(fspl(20_000.0, 0.0).is_err());
        assert!(fspl(f64::NAN, 2.545e9).is_err());
    }

    #[test]
    fn drops_are_deterministic_per_realization() {
        let cfg = ScenarioConfig::default();
        let a = generate_ues(&cfg, 3);
        let b = generate_ues(&cfg, 3);
        let c = generate_ues(&cfg, 4);
        assert_eq!(a, b, "same (seed, realization) must reproduce the drop");
        assert_ne!(a, c, "different realizations must differ");
        assert_eq!(a.len(), cfg.num_ues);
        for (i, ue) in a.iter().enumerate() {
            assert_eq!(ue.ue_id, i);
            let r = ue.position.0.hypot(ue.position.1);
            assert!(r <= cfg.coverage_radius + 1e-9, "user outside the disk: r={r}");
        }
    }

    #[test]
    fn drops_are_uniform_by_area() {
        // The half-radius disk holds a quarter of the area; with 1e5 draws the
        // binomial deviation of the observed fraction is about 0.0014, so a
        // 0.01 window is a 7-sigma check.
        let mut cfg = ScenarioConfig::default();
        cfg.num_ues = 100_000;
        let ues = generate_ues(&cfg, 0);
        let inside = ues
            .iter()
            .filter(|ue| ue.position.0.hypot(ue.position.1) <= cfg.coverage_radius / 2.0)
            .count();
        let fraction = inside as f64 / cfg.num_ues as f64;
        assert!(
            approx_eq(fraction, 0.25, 0.01),
            "half-radius disk should hold 25% of users, got {fraction}"
        );
    }

    #[test]
    fn degenerate_disk_stacks_users_at_nadir() {
        let mut cfg = ScenarioConfig::default();
        cfg.coverage_radius = 0.0;
        cfg.num_ues = 5;
        for ue in generate_ues(&cfg, 0) {
            assert_eq!(ue.position, (0.0, 0.0));
            assert_eq!(ue.elevation, 0.0);
            assert_eq!(ue.azimuth, 0.0);
            assert_eq!(ue.distance, cfg.haps_altitude);
        }
    }
}
