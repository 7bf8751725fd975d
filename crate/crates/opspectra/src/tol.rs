//! Numeric tolerances used across the spectral machinery.
//!
//! Double precision at order <= 64 leaves ample headroom, so the defaults
//! are conservative. All three knobs can be overridden from a JSON config
//! file (see [`Tolerances::from_config_str`]); the CLI loads the file
//! named by the `OPSPECTRA_CONFIG` environment variable.

use serde::{Deserialize, Serialize};

/// Maximum `‖Ax − λx‖∞` accepted from an eigensolver.
pub const RESIDUAL: f64 = 1e-9;

/// Slack for comparing two independently computed eigenvalues.
pub const COMPARE: f64 = 1e-8;

/// Margin required before an inequality is reported as strict.
pub const STRICT_MARGIN: f64 = 1e-10;

/// Slack allowed when checking `f(A)y <= r·y` coordinate-wise.
pub const CERT_SLACK: f64 = 1e-12;

/// Runtime-adjustable copy of the tolerance set.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Tolerances {
    #[serde(default = "default_residual")]
    pub residual: f64,
    #[serde(default = "default_compare")]
    pub compare: f64,
    #[serde(default = "default_strict_margin")]
    pub strict_margin: f64,
    #[serde(default = "default_cert_slack")]
    pub cert_slack: f64,
}

fn default_residual() -> f64 {
    RESIDUAL
}
fn default_compare() -> f64 {
    COMPARE
}
fn default_strict_margin() -> f64 {
    STRICT_MARGIN
}
fn default_cert_slack() -> f64 {
    CERT_SLACK
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual: RESIDUAL,
            compare: COMPARE,
            strict_margin: STRICT_MARGIN,
            cert_slack: CERT_SLACK,
        }
    }
}

impl Tolerances {
    /// Parses a JSON object such as `{"residual": 1e-10}`; absent keys
    /// keep their defaults.
    pub fn from_config_str(s: &str) -> crate::Result<Self> {
        serde_json::from_str(s)
            .map_err(|e| crate::Error::BadInput(format!("tolerance config: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_overrides_single_field() {
        let t = Tolerances::from_config_str(r#"{"residual": 1e-12}"#).unwrap();
        assert_eq!(t.residual, 1e-12);
        assert_eq!(t.compare, COMPARE);
    }
}
