//! Time-space foundation: positions measured in light-time and the regime
//! ratio that tells whether transfer time may be neglected.
//!
//! Components are placed at coordinates pre-divided by the limiting signal
//! speed, so the Euclidean distance between two points *is* the signal
//! transfer time between them. [`TimeSpacePoint::from_meters`] converts
//! metric positions into this system for a given [`PropagationMedium`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Speed of light in vacuum, m/s. Hard ceiling for any propagation medium.
pub const VACUUM_LIGHT_SPEED: f64 = 299_792_458.0;

/// Signal propagation speed along a path, bounded by vacuum light speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationMedium {
    speed: f64,
}

impl PropagationMedium {
    /// Medium with the given propagation speed in m/s.
    pub fn new(speed: f64) -> Result<Self> {
        if !speed.is_finite() || speed <= 0.0 || speed > VACUUM_LIGHT_SPEED {
            return Err(Error::InvalidSpeed(speed));
        }
        Ok(Self { speed })
    }

    /// Vacuum: signals travel at light speed.
    pub fn vacuum() -> Self {
        Self {
            speed: VACUUM_LIGHT_SPEED,
        }
    }

    /// Fraction of light speed, factor in (0, 1].
    pub fn with_velocity_factor(factor: f64) -> Result<Self> {
        if !factor.is_finite() || factor <= 0.0 || factor > 1.0 {
            return Err(Error::InvalidVelocityFactor(factor));
        }
        Self::new(VACUUM_LIGHT_SPEED * factor)
    }

    /// Propagation speed in m/s.
    pub fn speed(&self) -> f64 {
        self.speed
    }
}

impl Default for PropagationMedium {
    fn default() -> Self {
        Self::vacuum()
    }
}

/// A position in light-time coordinates: both components are seconds.
///
/// Distances between these points are transfer times. Two dimensions cover
/// every placement scenario handled by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimeSpacePoint {
    pub x: f64,
    pub y: f64,
}

impl TimeSpacePoint {
    pub const ORIGIN: Self = Self { x: 0.0, y: 0.0 };

    /// Point from light-time coordinates. Coordinates must be finite.
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite coordinate");
        Self { x, y }
    }

    /// Converts a metric position to light-time by dividing by the medium speed.
    pub fn from_meters(x_m: f64, y_m: f64, medium: &PropagationMedium) -> Self {
        Self::new(x_m / medium.speed(), y_m / medium.speed())
    }

    /// Signal transfer time to `other`: the Euclidean distance in light-time.
    ///
    /// Symmetric, non-negative, zero exactly for coincident points.
    pub fn transfer_time(&self, other: &Self) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Ratio of transfer time to processing time.
///
/// Small values mean the instant-interaction approximation is justified;
/// values near or above one mean it is not. `processing` must be positive.
pub fn regime_ratio(transfer: f64, processing: f64) -> Result<f64> {
    if !processing.is_finite() || processing <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "processing time must be positive, got {processing}"
        )));
    }
    if !transfer.is_finite() || transfer < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "transfer time must be non-negative, got {transfer}"
        )));
    }
    Ok(transfer / processing)
}

/// Classification of a technology operating point by its transfer/processing ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// Transfer time negligible; the instant-interaction model is sound.
    Sound,
    /// Between the two thresholds; neglecting transfer is questionable.
    Marginal,
    /// Transfer time comparable to processing time; the model is vitiated.
    Vitiated,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Regime::Sound => "sound",
            Regime::Marginal => "marginal",
            Regime::Vitiated => "vitiated",
        };
        f.write_str(s)
    }
}

/// Ratio thresholds separating the three regimes.
///
/// These are configuration, not physical constants: the defaults bracket the
/// classic vacuum-tube operating point (ratio ~1e-3, sound) and the
/// hundred-fold-frequency point (ratio ~1e-1, vitiated).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeThresholds {
    /// Ratios at or below this are classified sound.
    pub sound_max: f64,
    /// Ratios at or above this are classified vitiated.
    pub vitiated_min: f64,
}

impl RegimeThresholds {
    pub fn new(sound_max: f64, vitiated_min: f64) -> Result<Self> {
        let t = Self {
            sound_max,
            vitiated_min,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.sound_max.is_finite()
            && self.vitiated_min.is_finite()
            && self.sound_max > 0.0
            && self.sound_max < self.vitiated_min;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidThresholds {
                sound: self.sound_max,
                vitiated: self.vitiated_min,
            })
        }
    }

    pub fn classify(&self, ratio: f64) -> Regime {
        if ratio <= self.sound_max {
            Regime::Sound
        } else if ratio >= self.vitiated_min {
            Regime::Vitiated
        } else {
            Regime::Marginal
        }
    }
}

impl Default for RegimeThresholds {
    fn default() -> Self {
        Self {
            sound_max: 1e-2,
            vitiated_min: 1e-1,
        }
    }
}
