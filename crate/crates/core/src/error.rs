//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the analysis modules.
#[derive(Debug, Error)]
pub enum Error {
    /// Propagation speed outside (0, c].
    #[error("propagation speed {0} m/s must be finite and in (0, {c}]", c = crate::space::VACUUM_LIGHT_SPEED)]
    InvalidSpeed(f64),

    /// Velocity factor outside (0, 1].
    #[error("velocity factor {0} must be finite and in (0, 1]")]
    InvalidVelocityFactor(f64),

    /// A numeric argument violated its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Regime thresholds are not ordered sound < vitiated.
    #[error("regime thresholds must satisfy 0 < sound ({sound}) < vitiated ({vitiated})")]
    InvalidThresholds { sound: f64, vitiated: f64 },

    /// A netlist failed structural validation.
    #[error("netlist error: {0}")]
    Netlist(String),

    /// A netlist text line could not be parsed.
    #[error("netlist parse error at line {line}: {message}")]
    NetlistParse { line: usize, message: String },

    /// A simulation request was inconsistent with the netlist.
    #[error("simulation error: {0}")]
    Simulation(String),

    /// A requested entity (gate, output, core) does not exist.
    #[error("unknown {kind} '{name}'")]
    Unknown { kind: &'static str, name: String },

    /// A processor record violated its invariants.
    #[error("invalid processor record '{name}': {message}")]
    InvalidRecord { name: String, message: String },

    /// A scenario description was malformed.
    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    /// An input stream could not be read or decoded at all.
    #[error("input error: {0}")]
    Io(#[from] std::io::Error),

    /// Tabular input could not be decoded.
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    /// JSON input could not be decoded.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
