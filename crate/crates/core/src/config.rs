//! Scenario configuration and the key-value config file format.
//!
//! A config file is plain text, one `key = value` pair per line, with `#`
//! comments. Keys are exactly the field names of [`ScenarioConfig`]; values
//! are in SI units (meters, hertz, watts) except the antenna-pattern fields,
//! which keep their conventional dB units. Unknown keys are rejected so
//! typos cannot silently fall back to defaults.
//!
//! ```text
//! # 60 users, 10 resource blocks, reproducible seed
//! num_ues = 60
//! num_rbs = 10
//! rng_seed = 7
//! ```

use crate::error::Error;
use serde::Serialize;
use std::path::Path;

/// Full description of one simulated deployment.
///
/// `bandwidth` defaults to 1 Hz so that every reported rate is directly a
/// spectral efficiency in bit/s/Hz.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioConfig {
    /// Number of ground users dropped on the coverage disk.
    pub num_ues: usize,
    /// Number of orthogonal resource blocks; also the per-cluster capacity.
    pub num_rbs: usize,
    /// Platform altitude above the coverage plane, meters.
    pub haps_altitude: f64,
    /// Radius of the coverage disk, meters.
    pub coverage_radius: f64,
    /// Carrier frequency, hertz.
    pub carrier_freq: f64,
    /// Resource-block bandwidth, hertz.
    pub bandwidth: f64,
    /// Noise power per resource block, watts.
    pub noise_power: f64,
    /// Total transmit power budget shared by all beams, watts.
    pub total_power: f64,
    /// Array elements along x.
    pub array_nx: usize,
    /// Array elements along y.
    pub array_ny: usize,
    /// Peak element gain, dBi.
    pub element_gain_max: f64,
    /// Element 3 dB beamwidth (both planes), degrees.
    pub beamwidth_3db: f64,
    /// Element front-to-back ratio, dB.
    pub front_to_back: f64,
    /// Iteration cap for the successive convex approximation loop.
    pub sca_max_iters: usize,
    /// Relative objective-change tolerance that stops the SCA loop.
    pub sca_tol: f64,
    /// Base seed for all random streams.
    pub rng_seed: u64,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            num_ues: 60,
            num_rbs: 10,
            haps_altitude: 20_000.0,
            coverage_radius: 2_000.0,
            carrier_freq: 2.545e9,
            bandwidth: 1.0,
            noise_power: 1e-13,
            total_power: 316.227_766_016_837_9,
            array_nx: 8,
            array_ny: 8,
            element_gain_max: 8.0,
            beamwidth_3db: 65.0,
            front_to_back: 30.0,
            sca_max_iters: 20,
            sca_tol: 1e-3,
            rng_seed: 42,
        }
    }
}

impl ScenarioConfig {
    /// Number of clusters (= beams): `ceil(num_ues / num_rbs)`.
    pub fn num_clusters(&self) -> usize {
        self.num_ues.div_ceil(self.num_rbs)
    }

    /// Checks every field against its domain.
    pub fn validate(&self) -> Result<(), Error> {
        fn positive(name: &str, v: f64) -> Result<(), Error> {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::invalid(format!("{name} must be positive, got {v}")))
            }
        }
        if self.num_ues == 0 {
            return Err(Error::invalid("num_ues must be at least 1"));
        }
        if self.num_rbs == 0 {
            return Err(Error::invalid("num_rbs must be at least 1"));
        }
        if self.array_nx == 0 || self.array_ny == 0 {
            return Err(Error::invalid("array_nx and array_ny must be at least 1"));
        }
        if self.sca_max_iters == 0 {
            return Err(Error::invalid("sca_max_iters must be at least 1"));
        }
        positive("haps_altitude", self.haps_altitude)?;
        if !self.coverage_radius.is_finite() || self.coverage_radius < 0.0 {
            return Err(Error::invalid(format!(
                "coverage_radius must be non-negative, got {}",
                self.coverage_radius
            )));
        }
        positive("carrier_freq", self.carrier_freq)?;
        positive("bandwidth", self.bandwidth)?;
        positive("noise_power", self.noise_power)?;
        positive("total_power", self.total_power)?;
        positive("beamwidth_3db", self.beamwidth_3db)?;
        positive("front_to_back", self.front_to_back)?;
        positive("sca_tol", self.sca_tol)?;
        if !self.element_gain_max.is_finite() {
            return Err(Error::invalid("element_gain_max must be finite"));
        }
        Ok(())
    }

    /// Parses a key-value config file, starting from defaults.
    pub fn from_file(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)?;
        Self::from_str_contents(&text)
    }

    /// Parses config file contents, starting from defaults.
    pub fn from_str_contents(text: &str) -> Result<Self, Error> {
        let mut cfg = ScenarioConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(Error::ConfigParse {
                line: idx + 1,
                reason: format!("expected `key = value`, got `{line}`"),
            })?;
            cfg.set(key.trim(), value.trim()).map_err(|e| Error::ConfigParse {
                line: idx + 1,
                reason: e.to_string(),
            })?;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    /// Sets one field by name from its string representation.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), Error> {
        fn parse<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, Error> {
            value
                .parse()
                .map_err(|_| Error::invalid(format!("cannot parse `{value}` for key `{key}`")))
        }
        match key {
            "num_ues" => self.num_ues = parse(key, value)?,
            "num_rbs" => self.num_rbs = parse(key, value)?,
            "haps_altitude" => self.haps_altitude = parse(key, value)?,
            "coverage_radius" => self.coverage_radius = parse(key, value)?,
            "carrier_freq" => self.carrier_freq = parse(key, value)?,
            "bandwidth" => self.bandwidth = parse(key, value)?,
            "noise_power" => self.noise_power = parse(key, value)?,
            "total_power" => self.total_power = parse(key, value)?,
            "array_nx" => self.array_nx = parse(key, value)?,
            "array_ny" => self.array_ny = parse(key, value)?,
            "element_gain_max" => self.element_gain_max = parse(key, value)?,
            "beamwidth_3db" => self.beamwidth_3db = parse(key, value)?,
            "front_to_back" => self.front_to_back = parse(key, value)?,
            "sca_max_iters" => self.sca_max_iters = parse(key, value)?,
            "sca_tol" => self.sca_tol = parse(key, value)?,
            "rng_seed" => self.rng_seed = parse(key, value)?,
            other => return Err(Error::invalid(format!("unknown config key `{other}`"))),
        }
        Ok(())
    }
}
