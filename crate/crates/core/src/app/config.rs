//! Scenario files.
//!
//! Scenarios are TOML documents; every table rejects unknown keys. See
//! `configs/reference.toml` for the full layout.

use std::path::{Path, PathBuf};

use serde::Deserialize;
use thiserror::Error;

use crate::error::Error;
use crate::noma::{HarvestModel, NomaNetwork, NomaUser};
use crate::sensing::SensingParams;
use crate::throughput::{PowerPolicy, ScenarioConfig, TrafficModel};

/// The reference scenario as shipped in `configs/reference.toml`.
pub const REFERENCE_CONFIG: &str = include_str!("../../configs/reference.toml");

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{origin}:{line}:{column}: {message}")]
    Parse {
        origin: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{origin}: invalid {field}: {source}")]
    Invalid {
        origin: String,
        field: String,
        #[source]
        source: Error,
    },
}

impl ConfigError {
    /// Dotted path of the offending key, when known.
    pub fn field(&self) -> Option<&str> {
        match self {
            ConfigError::Invalid { field, .. } => Some(field),
            _ => None,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    frame_duration: f64,
    sensing: RawSensing,
    traffic: RawTraffic,
    harvest: RawHarvest,
    network: RawNetwork,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSensing {
    pu_snr: f64,
    noise_variance: f64,
    sample_rate: f64,
    target_pd: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTraffic {
    p_h0: f64,
    alpha: f64,
    beta: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawHarvest {
    bs_power: f64,
}

#[derive(Debug, Deserialize, Clone, Copy, Default)]
#[serde(rename_all = "kebab-case")]
enum RawPolicy {
    #[default]
    Explicit,
    UniformFromHarvest,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNetwork {
    bandwidth: f64,
    noise_density: f64,
    pu_interference: f64,
    #[serde(default)]
    power_policy: RawPolicy,
    #[serde(default)]
    user: Vec<RawUser>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawUser {
    gain: f64,
    power: Option<f64>,
}

/// Reads and validates a scenario file.
pub fn load_config(path: &Path) -> Result<ScenarioConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text, &path.display().to_string())
}

/// Parses a scenario document; `origin` labels error messages.
pub fn parse_config(text: &str, origin: &str) -> Result<ScenarioConfig, ConfigError> {
    let raw: RawScenario = toml::from_str(text).map_err(|e| {
        let offset = e.span().map(|s| s.start).unwrap_or(0);
        let (line, column) = line_column(text, offset);
        ConfigError::Parse {
            origin: origin.to_string(),
            line,
            column,
            message: e.message().to_string(),
        }
    })?;
    build(raw, origin)
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map(|i| i + 1).unwrap_or(0) + 1;
    (line, column)
}

fn build(raw: RawScenario, origin: &str) -> Result<ScenarioConfig, ConfigError> {
    let invalid = |field: String| {
        let origin = origin.to_string();
        move |source: Error| ConfigError::Invalid {
            origin,
            field,
            source,
        }
    };

    let s = &raw.sensing;
    let sensing = SensingParams::new(
        s.pu_snr,
        s.noise_variance,
        s.sample_rate,
        raw.frame_duration,
        s.target_pd,
    )
    .map_err(|e| {
        let field = match &e {
            Error::OutOfRange {
                name: "frame_duration",
                ..
            } => "frame_duration".to_string(),
            Error::OutOfRange { name, .. } => format!("sensing.{name}"),
            _ => "sensing".to_string(),
        };
        invalid(field)(e)
    })?;

    let t = &raw.traffic;
    let traffic = TrafficModel::new(t.p_h0, t.alpha, t.beta).map_err(|e| {
        let field = match &e {
            Error::OutOfRange { name, .. } => format!("traffic.{name}"),
            _ => "traffic".to_string(),
        };
        invalid(field)(e)
    })?;

    let harvest =
        HarvestModel::new(raw.harvest.bs_power).map_err(invalid("harvest.bs_power".into()))?;

    let n = &raw.network;
    let power_policy = match n.power_policy {
        RawPolicy::Explicit => PowerPolicy::Explicit,
        RawPolicy::UniformFromHarvest => PowerPolicy::UniformFromHarvest,
    };
    let mut users = Vec::with_capacity(n.user.len());
    for (i, u) in n.user.iter().enumerate() {
        let power = match (u.power, power_policy) {
            (Some(p), _) => p,
            (None, PowerPolicy::UniformFromHarvest) => 0.0,
            (None, PowerPolicy::Explicit) => {
                return Err(invalid(format!("network.user[{i}].power"))(
                    Error::InvalidArgument(
                        "a power is required for every user under the explicit power policy".into(),
                    ),
                ))
            }
        };
        let user = NomaUser::new(u.gain, power).map_err(|e| {
            let key = if matches!(e, Error::OutOfRange { name: "power", .. }) {
                "power"
            } else {
                "gain"
            };
            invalid(format!("network.user[{i}].{key}"))(e)
        })?;
        users.push(user);
    }
    let network = NomaNetwork::new(users, n.bandwidth, n.noise_density, n.pu_interference)
        .map_err(|e| {
            let field = match &e {
                Error::OutOfRange { name, .. } => format!("network.{name}"),
                _ => "network.user".to_string(),
            };
            invalid(field)(e)
        })?;

    Ok(ScenarioConfig {
        sensing,
        network,
        harvest,
        traffic,
        power_policy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_file_matches_builtin() {
        let parsed = parse_config(REFERENCE_CONFIG, "reference.toml").unwrap();
        assert_eq!(parsed, ScenarioConfig::reference());
    }

    #[test]
    fn out_of_range_prior_names_field() {
        let text = REFERENCE_CONFIG.replace("p_h0 = 0.8", "p_h0 = 1.2");
        let err = parse_config(&text, "x.toml").unwrap_err();
        assert_eq!(err.field(), Some("traffic.p_h0"));
        let msg = err.to_string();
        assert!(msg.contains("p_h0") && msg.contains("(0, 1)"), "{msg}");
    }

    #[test]
    fn powers_optional_under_uniform_policy() {
        let text = REFERENCE_CONFIG
            .replace(
                "power_policy = \"explicit\"",
                "power_policy = \"uniform-from-harvest\"",
            )
            .replace("power = 1.0\n", "");
        let s = parse_config(&text, "x.toml").unwrap();
        assert_eq!(s.power_policy, PowerPolicy::UniformFromHarvest);

        let text = REFERENCE_CONFIG.replace("power = 1.0\n", "");
        let err = parse_config(&text, "x.toml").unwrap_err();
        assert_eq!(err.field(), Some("network.user[0].power"));
    }

    #[test]
    fn unordered_users_rejected() {
        let text = REFERENCE_CONFIG.replace("gain = 0.5", "gain = 1.5");
        let err = parse_config(&text, "x.toml").unwrap_err();
        assert!(err.to_string().contains("h_1 > h_2 > … > h_n"), "{err}");
    }

    #[test]
    fn unknown_key_reports_line() {
        let text = REFERENCE_CONFIG.replace("alpha = 0.5", "alpah = 0.5");
        let line = text.lines().position(|l| l.starts_with("alpah")).unwrap() + 1;
        match parse_config(&text, "x.toml").unwrap_err() {
            ConfigError::Parse {
                line: got, message, ..
            } => {
                assert_eq!(got, line);
                assert!(message.contains("alpah"), "{message}");
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn missing_file() {
        let err = load_config(Path::new("/nonexistent/scenario.toml")).unwrap_err();
        assert!(matches!(err, ConfigError::Io { .. }));
    }

    #[test]
    fn line_column_counts_from_one() {
        assert_eq!(line_column("ab\ncd", 0), (1, 1));
        assert_eq!(line_column("ab\ncd", 4), (2, 2));
    }
}
