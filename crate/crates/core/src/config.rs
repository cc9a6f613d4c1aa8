//! Shared analysis configuration.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::RegimeThresholds;

/// How the maximum on-chip signal distance is estimated from the die area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MaxDistanceMode {
    /// Diagonal of a square die: sqrt(2 * area).
    Diagonal,
    /// Edge of a square die: sqrt(area).
    Edge,
}

impl std::fmt::Display for MaxDistanceMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MaxDistanceMode::Diagonal => "diagonal",
            MaxDistanceMode::Edge => "edge",
        })
    }
}

/// Table output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        })
    }
}

/// Configuration shared by every analysis.
///
/// The velocity factor models effective on-chip signal propagation as a
/// fraction of the medium speed. It applies to chip-scale records, where
/// resistive interconnect slows signals far below light speed; room-scale
/// machines signal over plain wires and keep the full medium speed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalysisConfig {
    /// Effective on-chip propagation speed as a fraction of the medium speed, in (0, 1].
    pub velocity_factor: f64,
    /// Estimator for the farthest-elements distance.
    pub max_distance_mode: MaxDistanceMode,
    /// Bus length in meters assumed for chip records that do not state one.
    pub default_bus_length: f64,
    /// Regime classification thresholds.
    pub regime_thresholds: RegimeThresholds,
    /// Table output format.
    pub output_format: OutputFormat,
    /// Whether diagram emission is enabled.
    pub svg_enabled: bool,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        Self {
            velocity_factor: 1.0,
            max_distance_mode: MaxDistanceMode::Diagonal,
            default_bus_length: 0.1,
            regime_thresholds: RegimeThresholds::default(),
            output_format: OutputFormat::Csv,
            svg_enabled: true,
        }
    }
}

impl AnalysisConfig {
    pub fn validate(&self) -> Result<()> {
        if !self.velocity_factor.is_finite()
            || self.velocity_factor <= 0.0
            || self.velocity_factor > 1.0
        {
            return Err(Error::InvalidVelocityFactor(self.velocity_factor));
        }
        if !self.default_bus_length.is_finite() || self.default_bus_length < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "default bus length must be non-negative, got {}",
                self.default_bus_length
            )));
        }
        self.regime_thresholds.validate()
    }

    /// One-line `key=value` summary embedded in output headers so every
    /// emitted table or diagram records the configuration that produced it.
    pub fn summary(&self) -> String {
        format!(
            "velocity_factor={} max_distance_mode={} default_bus_length_m={} sound_threshold={} vitiated_threshold={}",
            self.velocity_factor,
            self.max_distance_mode,
            self.default_bus_length,
            self.regime_thresholds.sound_max,
            self.regime_thresholds.vitiated_min,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_config_is_valid() {
        assert!(AnalysisConfig::default().validate().is_ok());
    }

    #[test]
    fn velocity_factor_range_enforced() {
        let mut c = AnalysisConfig::default();
        c.velocity_factor = 0.0;
        assert!(c.validate().is_err());
        c.velocity_factor = 1.5;
        assert!(c.validate().is_err());
        c.velocity_factor = 1e-4;
        assert!(c.validate().is_ok());
    }

    #[test]
    fn summary_names_the_load_bearing_settings() {
        let s = AnalysisConfig::default().summary();
        assert!(s.contains("velocity_factor=1"));
        assert!(s.contains("max_distance_mode=diagonal"));
    }
}
