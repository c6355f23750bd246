//! Planar-array antenna model: element pattern, array factor, beam gains.
//!
//! Each beam is formed by an N_x x N_y uniform planar array facing the
//! ground, with conjugate (phase-only) steering weights normalized to unit
//! total energy. The composite gain toward a direction is the product of a
//! single-element pattern and the array factor; the end-to-end channel gain
//! of a beam toward a user divides that by the user's free-space path loss.
//!
//! The element pattern follows the ITU-R M.2101 composite shape with the
//! vertical cut recentered so `theta` is measured off nadir:
//!
//! ```text
//! A_E(theta, phi) = G_max - min( att_H(phi) + att_V(theta), A_m )
//! att_H(phi)   = min( 12 (phi / phi_3dB)^2,   A_m )      [degrees]
//! att_V(theta) = min( 12 (theta / theta_3dB)^2, SLA_v )  [degrees]
//! ```
//!
//! The array factor of an N-element uniform line with spacing d (in
//! wavelengths) reduces to the closed form `sin^2(N D/2) / sin^2(D/2)` with
//! `D = 2 pi d (sin t cos p - sin t0 cos p0)`; the planar array factorizes
//! into the x and y line factors. Unit tests verify the closed form against
//! direct complex summation of the steering weights.

use crate::config::ScenarioConfig;
use crate::error::Error;
use crate::geometry::UeGeometry;
use crate::units::db_to_linear;

/// Linear floor applied to the array factor so gains stay positive and
/// finite even at exact pattern nulls.
const ARRAY_FACTOR_FLOOR: f64 = 1e-300;

/// One beam: steering direction plus array and element pattern parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamConfig {
    /// Steering direction `(theta, phi)` in radians.
    pub boresight: (f64, f64),
    /// Elements along x.
    pub nx: usize,
    /// Elements along y.
    pub ny: usize,
    /// Element spacing in wavelengths, both axes.
    pub spacing: f64,
    /// Peak element gain, dBi.
    pub element_gain_max_dbi: f64,
    /// Horizontal 3 dB beamwidth of the element, degrees.
    pub phi_3db_deg: f64,
    /// Vertical 3 dB beamwidth of the element, degrees.
    pub theta_3db_deg: f64,
    /// Front-to-back ratio A_m capping the total element attenuation, dB.
    pub front_to_back_db: f64,
    /// Vertical sidelobe attenuation cap SLA_v, dB.
    pub sla_v_db: f64,
}

impl BeamConfig {
    /// Builds a beam from scenario-level antenna parameters.
    ///
    /// SLA_v is not a scenario field; it is set equal to the front-to-back
    /// ratio, the conventional default.
    pub fn from_scenario(config: &ScenarioConfig, boresight: (f64, f64)) -> Self {
        BeamConfig {
            boresight,
            nx: config.array_nx,
            ny: config.array_ny,
            spacing: 0.5,
            element_gain_max_dbi: config.element_gain_max,
            phi_3db_deg: config.beamwidth_3db,
            theta_3db_deg: config.beamwidth_3db,
            front_to_back_db: config.front_to_back,
            sla_v_db: config.front_to_back,
        }
    }

    /// Checks every field against its domain.
    pub fn validate(&self) -> Result<(), Error> {
        if self.nx == 0 || self.ny == 0 {
            return Err(Error::invalid("array dimensions must be at least 1x1"));
        }
        if !(self.spacing.is_finite() && self.spacing > 0.0) {
            return Err(Error::invalid("element spacing must be positive"));
        }
        if !(self.phi_3db_deg > 0.0 && self.theta_3db_deg > 0.0) {
            return Err(Error::invalid("element beamwidths must be positive"));
        }
        if !(self.front_to_back_db > 0.0 && self.sla_v_db > 0.0) {
            return Err(Error::invalid("pattern attenuation caps must be positive"));
        }
        if !(self.boresight.0.is_finite() && self.boresight.1.is_finite()) {
            return Err(Error::invalid("boresight angles must be finite"));
        }
        Ok(())
    }
}

/// Single-element gain toward `(theta, phi)`, dBi.
///
/// `theta` is off-nadir in `[0, pi]`, `phi` in `[-pi, pi)`. Independent of
/// the beam's boresight.
pub fn element_gain_db(theta: f64, phi: f64, beam: &BeamConfig) -> f64 {
    let phi_deg = phi.to_degrees();
    let theta_deg = theta.to_degrees();
    let att_h = (12.0 * (phi_deg / beam.phi_3db_deg).powi(2)).min(beam.front_to_back_db);
    let att_v = (12.0 * (theta_deg / beam.theta_3db_deg).powi(2)).min(beam.sla_v_db);
    beam.element_gain_max_dbi - (att_h + att_v).min(beam.front_to_back_db)
}

/// Direction cosines `(sin t cos p, sin t sin p)` of a direction.
pub fn direction_cosines(theta: f64, phi: f64) -> (f64, f64) {
    let st = theta.sin();
    (st * phi.cos(), st * phi.sin())
}

/// `|sum_{m=0}^{n-1} exp(j m delta)|^2`, the coherent line-sum magnitude.
fn coherent_ratio(delta: f64, n: usize) -> f64 {
    let half = 0.5 * delta;
    let s = half.sin();
    // At delta = 2 pi k both sines vanish and the ratio tends to n^2.
    if s.abs() < 1e-9 {
        (n * n) as f64
    } else {
        let t = (n as f64 * half).sin() / s;
        t * t
    }
}

/// Normalized linear array factor from direction-cosine deltas.
pub(crate) fn array_factor_linear_from_deltas(
    du: f64,
    dv: f64,
    nx: usize,
    ny: usize,
    spacing: f64,
) -> f64 {
    let k = 2.0 * std::f64::consts::PI * spacing;
    let f = coherent_ratio(k * du, nx) * coherent_ratio(k * dv, ny) / (nx * ny) as f64;
    f.max(ARRAY_FACTOR_FLOOR)
}

/// Array-factor gain toward `(theta, phi)` for a steered beam, dB.
///
/// Equals `10 log10 |sum_{m,n} w_{m,n} v_{m,n}|^2` for conjugate steering
/// weights `w` of unit total energy; peaks at `10 log10(nx ny)` in the
/// steering direction.
pub fn array_factor_gain_db(theta: f64, phi: f64, beam: &BeamConfig) -> f64 {
    let (u, v) = direction_cosines(theta, phi);
    let (u0, v0) = direction_cosines(beam.boresight.0, beam.boresight.1);
    10.0 * array_factor_linear_from_deltas(u - u0, v - v0, beam.nx, beam.ny, beam.spacing).log10()
}

/// Composite element-plus-array gain toward `(theta, phi)`, dB.
pub fn effective_gain_db(theta: f64, phi: f64, beam: &BeamConfig) -> f64 {
    element_gain_db(theta, phi, beam) + array_factor_gain_db(theta, phi, beam)
}

/// Composite gain toward `(theta, phi)`, linear.
pub fn effective_gain_linear(theta: f64, phi: f64, beam: &BeamConfig) -> f64 {
    db_to_linear(effective_gain_db(theta, phi, beam))
}

/// End-to-end channel gains of every beam toward every user.
///
/// Entry `(l, u)` is the composite antenna gain of beam `l` toward user `u`
/// divided by the user's free-space path loss. All entries are positive and
/// finite.
#[derive(Debug, Clone, PartialEq)]
pub struct GainMatrix {
    num_beams: usize,
    num_ues: usize,
    values: Vec<f64>,
}

impl GainMatrix {
    /// Wraps raw values (row-major by beam). Intended for tests and small
    /// hand-built instances.
    pub fn from_values(num_beams: usize, num_ues: usize, values: Vec<f64>) -> Self {
        assert_eq!(values.len(), num_beams * num_ues, "gain matrix shape mismatch");
        GainMatrix { num_beams, num_ues, values }
    }

    pub fn num_beams(&self) -> usize {
        self.num_beams
    }

    pub fn num_ues(&self) -> usize {
        self.num_ues
    }

    /// Channel gain of beam `l` toward user `u`, linear.
    pub fn get(&self, beam: usize, ue: usize) -> f64 {
        self.values[beam * self.num_ues + ue]
    }
}

/// Builds the beam-by-user channel gain matrix.
pub fn build_gain_matrix(beams: &[BeamConfig], ues: &[UeGeometry]) -> GainMatrix {
    let mut values = Vec::with_capacity(beams.len() * ues.len());
    for beam in beams {
        for ue in ues {
            let g = effective_gain_linear(ue.elevation, ue.azimuth, beam) / ue.path_loss;
            debug_assert!(g.is_finite() && g > 0.0, "channel gain must be positive and finite");
            values.push(g);
        }
    }
    GainMatrix::from_values(beams.len(), ues.len(), values)
}
