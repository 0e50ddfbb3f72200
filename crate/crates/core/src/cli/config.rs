//! Run configuration: JSON file merged with command-line overrides.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::model::{PotentialSpec, QuantumNumbers};
use crate::oracle::{GridSpec, Spacing};

/// Result files a run may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputKind {
    Spectrum,
    Wavefunctions,
    Validation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// The configuration file as written; every key is optional so that flags
/// can supply or override it.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub mass: Option<f64>,
    pub alpha: Option<f64>,
    pub q: Option<f64>,
    pub v0: Option<f64>,
    pub s0: Option<f64>,
    pub dim: Option<u32>,
    pub l_max: Option<u32>,
    pub n_max: Option<u32>,
    pub r_max: Option<f64>,
    pub points: Option<usize>,
    pub spacing: Option<Spacing>,
    pub outputs: Option<Vec<OutputKind>>,
    pub output_dir: Option<PathBuf>,
    pub format: Option<Format>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }

    /// Values present in `over` replace those in `self`.
    pub fn overlay(self, over: ConfigFile) -> ConfigFile {
        ConfigFile {
            mass: over.mass.or(self.mass),
            alpha: over.alpha.or(self.alpha),
            q: over.q.or(self.q),
            v0: over.v0.or(self.v0),
            s0: over.s0.or(self.s0),
            dim: over.dim.or(self.dim),
            l_max: over.l_max.or(self.l_max),
            n_max: over.n_max.or(self.n_max),
            r_max: over.r_max.or(self.r_max),
            points: over.points.or(self.points),
            spacing: over.spacing.or(self.spacing),
            outputs: over.outputs.or(self.outputs),
            output_dir: over.output_dir.or(self.output_dir),
            format: over.format.or(self.format),
        }
    }
}

pub const DEFAULT_DIM: u32 = 3;
pub const DEFAULT_N_MAX: u32 = 10;
pub const DEFAULT_POINTS: usize = 2000;

/// A complete, validated configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub spec: PotentialSpec,
    pub dim: u32,
    pub l_max: u32,
    pub n_max: u32,
    pub grid: GridSpec,
    pub outputs: BTreeSet<OutputKind>,
    pub output_dir: PathBuf,
    pub format: Format,
}

impl RunConfig {
    pub fn from_file(file: ConfigFile) -> Result<Self, String> {
        let need = |v: Option<f64>, key: &str| v.ok_or_else(|| format!("missing required key '{key}'"));
        let spec = PotentialSpec::new(
            need(file.mass, "mass")?,
            need(file.alpha, "alpha")?,
            need(file.q, "q")?,
            need(file.v0, "v0")?,
            need(file.s0, "s0")?,
        )
        .map_err(|e| e.to_string())?;
        let dim = file.dim.unwrap_or(DEFAULT_DIM);
        QuantumNumbers::new(dim, 0, 0).map_err(|e| e.to_string())?;
        let grid = GridSpec::new(
            file.r_max.unwrap_or(60.0 / spec.alpha),
            file.points.unwrap_or(DEFAULT_POINTS),
            file.spacing.unwrap_or(Spacing::Log),
        )
        .map_err(|e| e.to_string())?;
        let outputs: BTreeSet<OutputKind> = file
            .outputs
            .unwrap_or_else(|| vec![OutputKind::Spectrum])
            .into_iter()
            .collect();
        Ok(Self {
            spec,
            dim,
            l_max: file.l_max.unwrap_or(0),
            n_max: file.n_max.unwrap_or(DEFAULT_N_MAX),
            grid,
            outputs,
            output_dir: file.output_dir.unwrap_or_else(|| PathBuf::from(".")),
            format: file.format.unwrap_or(Format::Csv),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desk() -> ConfigFile {
        serde_json::from_str(r#"{"mass": 1, "alpha": 0.2, "q": 1, "v0": 0, "s0": 0.1}"#).unwrap()
    }

    #[test]
    fn defaults_fill_in() {
        let c = RunConfig::from_file(desk()).unwrap();
        assert_eq!(c.dim, 3);
        assert_eq!(c.grid.points, 2000);
        assert!((c.grid.r_max - 300.0).abs() < 1e-12);
        assert_eq!(c.format, Format::Csv);
        assert!(c.outputs.contains(&OutputKind::Spectrum));
    }

    #[test]
    fn unknown_keys_rejected() {
        assert!(serde_json::from_str::<ConfigFile>(r#"{"mass": 1, "masss": 2}"#).is_err());
    }

    #[test]
    fn overlay_prefers_flags() {
        let over = ConfigFile {
            q: Some(0.5),
            ..ConfigFile::default()
        };
        let c = RunConfig::from_file(desk().overlay(over)).unwrap();
        assert_eq!(c.spec.q, 0.5);
        assert_eq!(c.spec.alpha, 0.2);
    }

    #[test]
    fn pole_is_reported() {
        let over = ConfigFile {
            q: Some(1.5),
            ..ConfigFile::default()
        };
        let err = RunConfig::from_file(desk().overlay(over)).unwrap_err();
        assert!(err.contains("pole"));
    }

    #[test]
    fn full_key_set_parses() {
        let text = r#"{"mass": 1, "alpha": 0.2, "q": 1, "v0": 0, "s0": 0.1, "dim": 3, "l_max": 1,
            "n_max": 5, "r_max": 250, "points": 500, "spacing": "uniform",
            "outputs": ["spectrum", "wavefunctions"], "output_dir": "out", "format": "json"}"#;
        let c = RunConfig::from_file(serde_json::from_str(text).unwrap()).unwrap();
        assert_eq!(c.grid.spacing, Spacing::Uniform);
        assert_eq!(c.format, Format::Json);
        assert_eq!(c.outputs.len(), 2);
    }
}
