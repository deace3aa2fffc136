//! Option resolution: command-line flag, then `--config` file, then default.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use morse_core::{Grid64, Morse64, Options64};

use crate::args::{CommonArgs, Format};
use crate::error::CliError;

const KNOWN_KEYS: &[&str] = &[
    "alpha",
    "x0",
    "mass",
    "hbar",
    "h",
    "x-max",
    "adaptive-domain",
    "tolerance",
    "format",
    "out",
    "c",
    "c-min",
    "c-max",
    "c-step",
    "c-list",
    "n",
    "decimate",
    "c1",
    "c2",
    "spectra",
    "energy",
    "samples",
    "from-angles",
    "to-angles",
    "amplitude",
];

/// Parsed `key = value` pairs. Blank lines and `#` comments are skipped;
/// `x_max` and `x-max` spell the same key.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Invalid(format!("config line {}: expected key=value", i + 1)))?;
            let key = key.trim().replace('_', "-");
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(CliError::Invalid(format!("config line {}: unknown key `{key}`", i + 1)));
            }
            entries.insert(key, value.trim().to_string());
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Invalid(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        self.raw(key)
            .map(|v| v.parse().map_err(|_| CliError::Invalid(format!("config key `{key}`: cannot parse `{v}`"))))
            .transpose()
    }

    /// Flag value if given, otherwise the file value.
    pub fn pick<T: FromStr>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.get(key),
        }
    }

    pub fn pick_enum<T: ValueEnum>(&self, flag: Option<T>, key: &str) -> Result<Option<T>, CliError> {
        if flag.is_some() {
            return Ok(flag);
        }
        self.raw(key)
            .map(|v| T::from_str(v, true).map_err(|_| CliError::Invalid(format!("config key `{key}`: bad value `{v}`"))))
            .transpose()
    }
}

/// Fully resolved shared settings.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub alpha: f64,
    pub x0: f64,
    pub mass: f64,
    pub hbar: f64,
    pub h: f64,
    pub x_max: f64,
    pub adaptive_domain: bool,
    pub tolerance: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub file: ConfigFile,
}

impl RunConfig {
    pub fn resolve(args: &CommonArgs) -> Result<Self, CliError> {
        let file = match &args.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        let adaptive_domain = args.adaptive_domain || file.get::<bool>("adaptive-domain")?.unwrap_or(false);
        let cfg = Self {
            alpha: file.pick(args.alpha, "alpha")?.unwrap_or(2.0),
            x0: file.pick(args.x0, "x0")?.unwrap_or(1.0),
            mass: file.pick(args.mass, "mass")?.unwrap_or(1.0),
            hbar: file.pick(args.hbar, "hbar")?.unwrap_or(1.0),
            h: file.pick(args.h, "h")?.unwrap_or(1e-3),
            x_max: file.pick(args.x_max, "x-max")?.unwrap_or(12.0),
            adaptive_domain,
            tolerance: file.pick(args.tolerance, "tolerance")?.unwrap_or(1e-9),
            format: file.pick_enum(args.format, "format")?.unwrap_or(Format::Csv),
            out: file.pick(args.out.clone(), "out")?,
            file,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Rejects bad shared settings before anything is solved.
    pub fn validate(&self) -> Result<(), CliError> {
        Morse64::new(1.0, self.alpha, self.x0, self.mass, self.hbar)?;
        Grid64::new(0.0, self.x_max, self.h)?;
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(CliError::Invalid(format!("tolerance must be > 0, got {}", self.tolerance)));
        }
        Ok(())
    }

    pub fn potential(&self, c: f64) -> Result<Morse64, CliError> {
        Ok(Morse64::new(c, self.alpha, self.x0, self.mass, self.hbar)?)
    }

    /// Solver options for `p`, wide enough for level `top` when the
    /// adaptive domain is on.
    pub fn options(&self, p: &Morse64, top: usize) -> Result<Options64, CliError> {
        let grid = if self.adaptive_domain {
            Grid64::adaptive(p, top, self.h)?
        } else {
            Grid64::new(0.0, self.x_max, self.h)?
        };
        Ok(Options64::new(grid).with_tolerance(self.tolerance))
    }
}

/// Comma-separated list of values.
pub fn parse_list<T: FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    let items: Result<Vec<T>, _> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<T>().map_err(|_| CliError::Invalid(format!("{what}: cannot parse `{s}`"))))
        .collect();
    let items = items?;
    if items.is_empty() {
        return Err(CliError::Invalid(format!("{what}: empty list")));
    }
    Ok(items)
}
