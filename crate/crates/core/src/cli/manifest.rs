use std::fmt::Write as _;

use crate::error::{Error, Result};

use super::config::RunConfig;

/// Record of one run: tool version, timestamp, the resolved configuration
/// and a `result.` namespace of numeric outcomes.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub version: String,
    pub timestamp: String,
    pub config: RunConfig,
    pub results: Vec<(String, f64)>,
}

impl RunManifest {
    pub fn new(config: RunConfig, results: Vec<(String, f64)>) -> Self {
        RunManifest {
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
            config,
            results,
        }
    }

    pub fn result(&self, key: &str) -> Option<f64> {
        self.results.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    pub fn emit(&self) -> String {
        let mut s = String::new();
        writeln!(s, "version = {}", self.version).unwrap();
        writeln!(s, "timestamp = {}", self.timestamp).unwrap();
        s.push_str(&self.config.emit());
        for (k, v) in &self.results {
            writeln!(s, "result.{k} = {v:e}").unwrap();
        }
        s
    }

    pub fn parse(text: &str, origin: &str) -> Result<Self> {
        let mut version = None;
        let mut timestamp = None;
        let mut results = Vec::new();
        let mut config_lines = String::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            let Some((key, value)) = line.split_once('=') else {
                if !line.is_empty() {
                    return Err(Error::config(
                        origin,
                        n + 1,
                        format!("expected `key = value`, got `{line}`"),
                    ));
                }
                config_lines.push('\n');
                continue;
            };
            let (key, value) = (key.trim(), value.trim());
            if key == "version" {
                version = Some(value.to_string());
            } else if key == "timestamp" {
                timestamp = Some(value.to_string());
            } else if let Some(name) = key.strip_prefix("result.") {
                let v = value.parse::<f64>().map_err(|_| {
                    Error::config(origin, n + 1, format!("`{key}`: `{value}` is not a number"))
                })?;
                results.push((name.to_string(), v));
            } else {
                config_lines.push_str(line);
                config_lines.push('\n');
                continue;
            }
            config_lines.push('\n');
        }
        let config = RunConfig::parse(&config_lines, origin)?;
        Ok(RunManifest {
            version: version.ok_or_else(|| Error::config(origin, 0, "missing `version`"))?,
            timestamp: timestamp.ok_or_else(|| Error::config(origin, 0, "missing `timestamp`"))?,
            config,
            results,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_round_trip() {
        let m = RunManifest::new(
            RunConfig::featured(),
            vec![
                ("t_jm_zero".into(), 0.15599371963093106),
                ("alpha_l".into(), 8.895834781),
            ],
        );
        let text = m.emit();
        assert!(text.contains("result.t_jm_zero = "));
        let back = RunManifest::parse(&text, "m").unwrap();
        assert_eq!(back, m);
        assert_eq!(back.result("alpha_l"), Some(8.895834781));
    }

    #[test]
    fn errors_point_at_line() {
        let text = "version = 0.1.0\ntimestamp = now\nresult.x = nope\n";
        assert!(matches!(
            RunManifest::parse(text, "m"),
            Err(Error::Config { line: 3, .. })
        ));
        let text = "version = 0.1.0\ntimestamp = now\nt_l = hot\n";
        assert!(matches!(
            RunManifest::parse(text, "m"),
            Err(Error::Config { line: 3, .. })
        ));
    }
}
