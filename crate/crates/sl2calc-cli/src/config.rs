//! Run configuration: defaults, an optional TOML file and command-line
//! overrides, validated against hard caps.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::CliError;

/// Environment variable holding the path of the default config file.
pub const CONFIG_ENV: &str = "SL2CALC_CONFIG";

/// Largest nilHecke rank any suite may be asked to reach (`a!` blow-up).
pub const RANK_CAP: usize = 6;
/// Largest weight cutoff for truncated symmetric functions.
pub const WEIGHT_CAP: u32 = 12;
/// Largest `|n|` for weight ranges.
pub const WEIGHT_RANGE_CAP: i64 = 12;
/// Largest divided-power exponent.
pub const POWER_CAP: u32 = 6;

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Nilhecke,
    Symfun,
    Grassmannian,
    Udot,
    Partitions,
    All,
}

impl Suite {
    /// The individual suites, in report order.
    pub const INDIVIDUAL: [Suite; 5] = [Suite::Grassmannian, Suite::Nilhecke, Suite::Partitions, Suite::Symfun, Suite::Udot];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Nilhecke => "nilhecke",
            Suite::Symfun => "symfun",
            Suite::Grassmannian => "grassmannian",
            Suite::Udot => "udot",
            Suite::Partitions => "partitions",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nilhecke" => Ok(Suite::Nilhecke),
            "symfun" => Ok(Suite::Symfun),
            "grassmannian" => Ok(Suite::Grassmannian),
            "udot" => Ok(Suite::Udot),
            "partitions" => Ok(Suite::Partitions),
            "all" => Ok(Suite::All),
            other => Err(CliError::UnknownSuite(other.to_string())),
        }
    }
}

/// Report format.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Settings that may come from a config file; every field is optional.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
pub struct FileConfig {
    pub rank_max: Option<usize>,
    pub weight_cutoff: Option<u32>,
    pub n_max: Option<i64>,
    pub power_max: Option<u32>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
    pub samples: Option<usize>,
    pub format: Option<Format>,
    pub timings: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::ConfigIo { path: path.display().to_string(), source })?;
        toml::from_str(&text).map_err(|source| CliError::ConfigParse { path: path.display().to_string(), source })
    }

    /// Fields set in `other` take precedence.
    pub fn merged_with(self, other: FileConfig) -> FileConfig {
        FileConfig {
            rank_max: other.rank_max.or(self.rank_max),
            weight_cutoff: other.weight_cutoff.or(self.weight_cutoff),
            n_max: other.n_max.or(self.n_max),
            power_max: other.power_max.or(self.power_max),
            seed: other.seed.or(self.seed),
            jobs: other.jobs.or(self.jobs),
            samples: other.samples.or(self.samples),
            format: other.format.or(self.format),
            timings: other.timings.or(self.timings),
        }
    }
}

/// Fully resolved parameters of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suite: Suite,
    /// Largest nilHecke rank (`a`, `a+b`, `a+b+c`) exercised.
    pub rank_max: usize,
    /// Weight cutoff for truncated symmetric functions.
    pub weight_cutoff: u32,
    /// Weights `n` range over `-n_max..=n_max`.
    pub n_max: i64,
    /// Divided powers `E^{(a)}`, `F^{(b)}` range over `a, b ≤ power_max`.
    pub power_max: u32,
    /// Seed for the randomized checks.
    pub seed: u64,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    /// Number of random samples per randomized check.
    pub samples: usize,
    pub format: Format,
    /// Record wall-clock times; off by default so that reports are
    /// byte-identical across runs.
    pub timings: bool,
}

impl SuiteConfig {
    pub const DEFAULT_RANK_MAX: usize = 5;
    pub const DEFAULT_WEIGHT_CUTOFF: u32 = 8;
    pub const DEFAULT_N_MAX: i64 = 6;
    pub const DEFAULT_POWER_MAX: u32 = 3;
    pub const DEFAULT_SAMPLES: usize = 16;

    /// Defaults for `suite`.
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            rank_max: Self::DEFAULT_RANK_MAX,
            weight_cutoff: Self::DEFAULT_WEIGHT_CUTOFF,
            n_max: Self::DEFAULT_N_MAX,
            power_max: Self::DEFAULT_POWER_MAX,
            seed: 0,
            jobs: 0,
            samples: Self::DEFAULT_SAMPLES,
            format: Format::Text,
            timings: false,
        }
    }

    /// Defaults overridden by the set fields of `file`, then validated.
    pub fn resolve(suite: Suite, file: &FileConfig) -> Result<Self, CliError> {
        let d = Self::new(suite);
        let cfg = SuiteConfig {
            suite,
            rank_max: file.rank_max.unwrap_or(d.rank_max),
            weight_cutoff: file.weight_cutoff.unwrap_or(d.weight_cutoff),
            n_max: file.n_max.unwrap_or(d.n_max),
            power_max: file.power_max.unwrap_or(d.power_max),
            seed: file.seed.unwrap_or(d.seed),
            jobs: file.jobs.unwrap_or(d.jobs),
            samples: file.samples.unwrap_or(d.samples),
            format: file.format.unwrap_or(d.format),
            timings: file.timings.unwrap_or(d.timings),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Checks every range against its cap.
    pub fn validate(&self) -> Result<(), CliError> {
        fn within(name: &'static str, value: i64, min: i64, cap: i64) -> Result<(), CliError> {
            if value < min {
                Err(CliError::BelowMinimum { name, value, min })
            } else if value > cap {
                Err(CliError::AboveCap { name, value, cap })
            } else {
                Ok(())
            }
        }
        within("rank-max", self.rank_max as i64, 1, RANK_CAP as i64)?;
        within("weight-cutoff", self.weight_cutoff as i64, 0, WEIGHT_CAP as i64)?;
        within("n-max", self.n_max, 0, WEIGHT_RANGE_CAP)?;
        within("power-max", self.power_max as i64, 0, POWER_CAP as i64)?;
        within("samples", self.samples as i64, 0, 10_000)?;
        Ok(())
    }

    /// The same configuration for another suite.
    pub fn for_suite(&self, suite: Suite) -> Self {
        SuiteConfig { suite, ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::INDIVIDUAL.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(CliError::UnknownSuite(_))));
    }

    #[test]
    fn caps_are_enforced() {
        let mut cfg = SuiteConfig::new(Suite::All);
        assert!(cfg.validate().is_ok());
        cfg.rank_max = 7;
        assert!(matches!(cfg.validate(), Err(CliError::AboveCap { name: "rank-max", .. })));
        cfg.rank_max = 0;
        assert!(cfg.validate().is_err());
        let file = FileConfig { weight_cutoff: Some(13), ..Default::default() };
        assert!(SuiteConfig::resolve(Suite::Udot, &file).is_err());
    }

    #[test]
    fn file_values_and_overrides() {
        let file: FileConfig = toml::from_str("rank-max = 3\nseed = 7\nformat = \"json\"").unwrap();
        let cli = FileConfig { seed: Some(9), ..Default::default() };
        let cfg = SuiteConfig::resolve(Suite::Nilhecke, &file.merged_with(cli)).unwrap();
        assert_eq!((cfg.rank_max, cfg.seed, cfg.format), (3, 9, Format::Json));
        assert!(toml::from_str::<FileConfig>("rank_maximum = 3").is_err());
    }
}
