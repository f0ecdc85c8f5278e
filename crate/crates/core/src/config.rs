//! Hyperparameters for the distillation pipeline.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::masks::GridSpec;

/// All knobs of the distillation math in one bag.
///
/// Loads from a flat JSON file; unknown keys are rejected so typos in
/// hyperparameter names fail loudly instead of silently using a default.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DistillConfig {
    /// Scale anchor for the major-axis radius of range-azimuth ellipses, meters.
    pub alpha_l: f64,
    /// Scale anchor for the minor-axis radius, meters.
    pub alpha_w: f64,
    /// Normalization range for the ego-distance exponent, meters.
    pub r_max: f64,
    /// Mask threshold: merged Gaussian values must strictly exceed it to survive.
    pub tau: f64,
    /// Velocity gate for temporal ellipses, compared against the squared speed, (m/s)^2.
    pub tau_v: f64,
    /// Temporal back-shift duration for trajectory ellipses, seconds.
    pub t_s: f64,
    /// Confidence threshold for affinity position selection.
    pub tau_cls: f64,
    /// Cap on the number of positions entering the affinity map.
    pub k_max: usize,
    /// Weight of the range-azimuth loss in the total objective.
    pub lambda_ra: f64,
    /// Weight of the temporal loss.
    pub lambda_t: f64,
    /// Weight of the relational (affinity) loss.
    pub lambda_rd: f64,
    /// When true, the range-azimuth loss uses the squared per-cell norm
    /// instead of the plain Euclidean norm.
    pub rakd_squared: bool,
    /// The BEV grid everything is rasterized onto.
    pub grid: GridSpec,
}

impl Default for DistillConfig {
    fn default() -> Self {
        DistillConfig {
            alpha_l: 8.0,
            alpha_w: 4.0,
            r_max: 51.2,
            tau: 0.1,
            tau_v: 0.25,
            t_s: 0.5,
            tau_cls: 0.1,
            k_max: 512,
            lambda_ra: 1.0,
            lambda_t: 1.0,
            lambda_rd: 1.0,
            rakd_squared: false,
            grid: GridSpec::new(64, 64, (-25.2, -25.2), 0.8).expect("default grid is valid"),
        }
    }
}

impl DistillConfig {
    /// Check every invariant; call after editing fields by hand.
    pub fn validate(&self) -> Result<()> {
        fn positive(name: &str, v: f64) -> Result<()> {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidConfig(format!("{name} must be > 0, got {v}")))
            }
        }
        positive("alpha_l", self.alpha_l)?;
        positive("alpha_w", self.alpha_w)?;
        positive("r_max", self.r_max)?;
        positive("t_s", self.t_s)?;
        if !(0.0..1.0).contains(&self.tau) {
            return Err(Error::InvalidConfig(format!(
                "tau must be in [0, 1), got {}",
                self.tau
            )));
        }
        if !(0.0..1.0).contains(&self.tau_cls) {
            return Err(Error::InvalidConfig(format!(
                "tau_cls must be in [0, 1), got {}",
                self.tau_cls
            )));
        }
        if !self.tau_v.is_finite() || self.tau_v < 0.0 {
            return Err(Error::InvalidConfig(format!(
                "tau_v must be >= 0, got {}",
                self.tau_v
            )));
        }
        for (name, v) in [
            ("lambda_ra", self.lambda_ra),
            ("lambda_t", self.lambda_t),
            ("lambda_rd", self.lambda_rd),
        ] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidConfig(format!("{name} must be >= 0, got {v}")));
            }
        }
        if self.k_max == 0 {
            return Err(Error::InvalidConfig("k_max must be >= 1".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        DistillConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_tau() {
        let mut cfg = DistillConfig::default();
        cfg.tau = 1.0;
        assert!(cfg.validate().is_err());
        cfg.tau = -0.1;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn rejects_nonpositive_scales() {
        let mut cfg = DistillConfig::default();
        cfg.alpha_l = 0.0;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn unknown_json_key_is_an_error() {
        let text = r#"{"alpha_l": 8.0, "alpa_w": 4.0}"#;
        let parsed: std::result::Result<DistillConfig, _> = serde_json::from_str(text);
        assert!(parsed.is_err());
    }

    #[test]
    fn partial_json_fills_defaults() {
        let text = r#"{"tau": 0.2}"#;
        let cfg: DistillConfig = serde_json::from_str(text).unwrap();
        assert_eq!(cfg.tau, 0.2);
        assert_eq!(cfg.alpha_l, 8.0);
    }
}
