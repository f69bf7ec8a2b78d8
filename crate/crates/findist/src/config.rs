use std::path::{Path, PathBuf};

use findist_core::FieldSpec;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::generate::Generator;
use crate::HarnessError;

/// The only supported generator: ChaCha with 8 rounds, seeded from a u64.
pub const RNG_ALGORITHM: &str = "chacha8";

/// Everything a run depends on. Identical configs give byte-identical reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub field: FieldSpec,
    #[serde(default)]
    pub generator: Generator,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_rng")]
    pub rng: String,
    /// Identity checks to report; empty means all.
    #[serde(default)]
    pub checks: Vec<String>,
    #[serde(default)]
    pub outputs: Outputs,
    #[serde(default)]
    pub thresholds: Thresholds,
    #[serde(default)]
    pub sweep: Option<SweepConfig>,
    /// Sample count for randomized kinematic and Clifford checks.
    #[serde(default = "default_samples")]
    pub samples: usize,
    /// Worker threads; None uses the global pool.
    #[serde(default)]
    pub workers: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Outputs {
    pub report: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    /// Full reduction witnesses for instances where the counts differ.
    pub witnesses: Option<PathBuf>,
}

/// Exponent num/den as a pair of small integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u32,
    pub den: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Thresholds {
    /// Floor for pind(A)/|A|^{2/3}.
    #[serde(default = "default_pind_floor")]
    pub pind_ratio_min: f64,
    /// Ceiling for the incidence surrogate ratio, frozen after calibration.
    #[serde(default)]
    pub incidence_ceiling: Option<f64>,
    /// Corpus size limit |A| ≤ p^{num/den}.
    #[serde(default = "default_size_exponent")]
    pub size_exponent: Ratio,
    /// Largest share of A allowed on one isotropic line.
    #[serde(default = "default_isotropic_share")]
    pub isotropic_share: Ratio,
    /// Treat the monitored ratios as hard assertions.
    #[serde(default)]
    pub enforce_monitors: bool,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            pind_ratio_min: default_pind_floor(),
            incidence_ceiling: None,
            size_exponent: default_size_exponent(),
            isotropic_share: default_isotropic_share(),
            enforce_monitors: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub fields: Vec<FieldSpec>,
    /// Sizes of uniformly random sets, one row each per repeat.
    #[serde(default)]
    pub sizes: Vec<usize>,
    #[serde(default = "default_repeats")]
    pub repeats: usize,
    /// Further generators run once per field.
    #[serde(default)]
    pub extra: Vec<Generator>,
}

fn default_rng() -> String {
    RNG_ALGORITHM.into()
}

fn default_samples() -> usize {
    1000
}

fn default_pind_floor() -> f64 {
    0.25
}

fn default_size_exponent() -> Ratio {
    Ratio { num: 4, den: 3 }
}

fn default_isotropic_share() -> Ratio {
    Ratio { num: 1, den: 3 }
}

fn default_repeats() -> usize {
    1
}

impl ExperimentConfig {
    pub fn new(field: FieldSpec, generator: Generator) -> Self {
        ExperimentConfig {
            field,
            generator,
            seed: 0,
            rng: default_rng(),
            checks: Vec::new(),
            outputs: Outputs::default(),
            thresholds: Thresholds::default(),
            sweep: None,
            samples: default_samples(),
            workers: None,
        }
    }

    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = std::fs::read_to_string(path).map_err(|e| HarnessError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let config: ExperimentConfig = serde_json::from_str(text).map_err(|e| HarnessError::Config(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.rng != RNG_ALGORITHM {
            return Err(HarnessError::Config(format!("unsupported rng {:?}, expected {RNG_ALGORITHM:?}", self.rng)));
        }
        if self.workers == Some(0) {
            return Err(HarnessError::Config("workers must be positive".into()));
        }
        for r in [self.thresholds.size_exponent, self.thresholds.isotropic_share] {
            if r.den == 0 {
                return Err(HarnessError::Config("ratio with zero denominator".into()));
            }
        }
        Ok(())
    }

    /// SHA-256 of the canonical JSON form, leaving out the worker count,
    /// which never changes results.
    pub fn digest(&self) -> String {
        let canonical = ExperimentConfig { workers: None, ..self.clone() };
        let bytes = serde_json::to_vec(&canonical).expect("config serializes");
        hex::encode(Sha256::digest(bytes))
    }
}

/// Parses `p` or `p,r`.
pub fn parse_field(text: &str) -> Result<FieldSpec, HarnessError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let num = |s: &str| s.parse::<u64>().map_err(|_| HarnessError::Config(format!("bad field {text:?}")));
    match parts.as_slice() {
        [p] => Ok(FieldSpec::prime(num(p)?)),
        [p, r] => Ok(FieldSpec::extension(num(p)?, num(r)? as u32)),
        _ => Err(HarnessError::Config(format!("bad field {text:?}, expected p or p,r"))),
    }
}
