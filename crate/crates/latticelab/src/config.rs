//! Run settings: built-in defaults, then a TOML file, then `LATTICELAB_*`
//! environment variables, then command-line flags.

use std::path::Path;

use latticelab_core::numeric::{default_guard, DEFAULT_DIGITS};
use serde::{Deserialize, Serialize};

pub const ENV_PREFIX: &str = "LATTICELAB_";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Config {
    pub precision: u32,
    pub guard_digits: u32,
    pub parallelism: usize,
    pub timeout_secs: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision: DEFAULT_DIGITS,
            guard_digits: default_guard(DEFAULT_DIGITS),
            parallelism: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            timeout_secs: 600,
        }
    }
}

/// Any subset of the keys; later layers replace earlier ones key by key.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Layer {
    pub precision: Option<u32>,
    pub guard_digits: Option<u32>,
    pub parallelism: Option<usize>,
    pub timeout_secs: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum ConfigError {
    #[error("reading {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("config file {path}: {source}")]
    Toml { path: String, source: toml::de::Error },
    #[error("environment variable {name}={value}: expected a non-negative integer")]
    Env { name: String, value: String },
    #[error("{0} must be positive")]
    Zero(&'static str),
}

impl Layer {
    pub fn from_toml(text: &str, path: &str) -> Result<Layer, ConfigError> {
        toml::from_str(text).map_err(|source| ConfigError::Toml { path: path.into(), source })
    }

    pub fn from_file(path: &Path) -> Result<Layer, ConfigError> {
        let p = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: p.clone(), source })?;
        Layer::from_toml(&text, &p)
    }

    /// Reads `LATTICELAB_PRECISION`, `LATTICELAB_GUARD_DIGITS`,
    /// `LATTICELAB_PARALLELISM` and `LATTICELAB_TIMEOUT_SECS` from `vars`.
    pub fn from_env<I, K, V>(vars: I) -> Result<Layer, ConfigError>
    where
        I: IntoIterator<Item = (K, V)>,
        K: AsRef<str>,
        V: AsRef<str>,
    {
        let mut layer = Layer::default();
        for (k, v) in vars {
            let Some(key) = k.as_ref().strip_prefix(ENV_PREFIX) else { continue };
            let value = v.as_ref().trim();
            let num = || -> Result<u64, ConfigError> {
                value.parse().map_err(|_| ConfigError::Env { name: k.as_ref().into(), value: value.into() })
            };
            match key {
                "PRECISION" => layer.precision = Some(num()? as u32),
                "GUARD_DIGITS" => layer.guard_digits = Some(num()? as u32),
                "PARALLELISM" => layer.parallelism = Some(num()? as usize),
                "TIMEOUT_SECS" => layer.timeout_secs = Some(num()?),
                _ => {}
            }
        }
        Ok(layer)
    }
}

impl Config {
    /// Applies a layer. Raising the precision without naming guard digits
    /// moves the guard to the default for the new precision.
    pub fn apply(mut self, layer: &Layer) -> Config {
        if let Some(p) = layer.precision {
            if layer.guard_digits.is_none() && self.guard_digits == default_guard(self.precision) {
                self.guard_digits = default_guard(p);
            }
            self.precision = p;
        }
        if let Some(g) = layer.guard_digits {
            self.guard_digits = g;
        }
        if let Some(n) = layer.parallelism {
            self.parallelism = n;
        }
        if let Some(t) = layer.timeout_secs {
            self.timeout_secs = t;
        }
        self
    }

    pub fn validate(self) -> Result<Config, ConfigError> {
        if self.precision == 0 {
            return Err(ConfigError::Zero("precision"));
        }
        if self.parallelism == 0 {
            return Err(ConfigError::Zero("parallelism"));
        }
        if self.timeout_secs == 0 {
            return Err(ConfigError::Zero("timeout_secs"));
        }
        Ok(self)
    }

    /// Defaults, then `file` if given, then the process environment, then
    /// `flags`.
    pub fn load(file: Option<&Path>, flags: &Layer) -> Result<Config, ConfigError> {
        let mut c = Config::default();
        if let Some(path) = file {
            c = c.apply(&Layer::from_file(path)?);
        }
        c = c.apply(&Layer::from_env(std::env::vars())?);
        c.apply(flags).validate()
    }
}
