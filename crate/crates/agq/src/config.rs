//! TOML configuration for `suite`. Every field is optional.

use std::path::Path;

use serde::Deserialize;

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub precision: usize,
    pub seed: u64,
    pub formal: FormalConfig,
    pub numeric: NumericConfig,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct FormalConfig {
    pub theorem_m_max: usize,
    pub theorem_order: usize,
    pub t_value_m_max: usize,
    pub t_value_n_max: usize,
    pub ag_m_max: usize,
    pub ag_order: usize,
    pub jacobi_order: usize,
    pub jacobi_x_range: usize,
    pub h_m_max: usize,
    pub h_order: usize,
    pub bridge_m_max: usize,
    pub bridge_order: usize,
    pub bc_a_max: usize,
    pub bc_order: usize,
    pub bailey_n_max: usize,
    pub bailey_samples: usize,
    pub delta_n_max: usize,
    pub delta_order: usize,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(default, deny_unknown_fields)]
pub struct NumericConfig {
    pub kashaev_n_max: usize,
    pub omega_n_max: usize,
    pub asymptotic_n: Vec<usize>,
    pub poisson_m_max: usize,
    pub matrix_m_max: usize,
    pub nearly_modular_m_max: usize,
    pub nearly_modular_n: Vec<usize>,
    /// Denominators `d` of `t0 = 1/d`; the bound is checked at the first.
    pub mellin_t0_denominators: Vec<i64>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            precision: 256,
            seed: agq_core::qseries::DEFAULT_SEED,
            formal: FormalConfig::default(),
            numeric: NumericConfig::default(),
        }
    }
}

impl Default for FormalConfig {
    fn default() -> Self {
        FormalConfig {
            theorem_m_max: 4,
            theorem_order: 12,
            t_value_m_max: 5,
            t_value_n_max: 20,
            ag_m_max: 4,
            ag_order: 60,
            jacobi_order: 40,
            jacobi_x_range: 20,
            h_m_max: 3,
            h_order: 12,
            bridge_m_max: 3,
            bridge_order: 25,
            bc_a_max: 8,
            bc_order: 40,
            bailey_n_max: 6,
            bailey_samples: 100,
            delta_n_max: 6,
            delta_order: 30,
        }
    }
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            kashaev_n_max: 60,
            omega_n_max: 50,
            asymptotic_n: vec![25, 50, 100, 200],
            poisson_m_max: 4,
            matrix_m_max: 6,
            nearly_modular_m_max: 2,
            nearly_modular_n: vec![50, 100, 200],
            mellin_t0_denominators: vec![100, 200],
        }
    }
}

#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let cfg: SuiteConfig = toml::from_str(text).map_err(|e| ConfigError(e.to_string()))?;
        if cfg.precision < 96 {
            return Err(ConfigError("precision must be at least 96 bits".into()));
        }
        if cfg.numeric.mellin_t0_denominators.iter().any(|&d| d <= 0) {
            return Err(ConfigError("mellin_t0_denominators must be positive".into()));
        }
        Ok(cfg)
    }

    /// A missing file gives the defaults.
    pub fn load(path: Option<&Path>) -> Result<Self, ConfigError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        match std::fs::read_to_string(path) {
            Ok(text) => Self::parse(&text).map_err(|e| ConfigError(format!("{}: {e}", path.display()))),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(Self::default()),
            Err(e) => Err(ConfigError(format!("{}: {e}", path.display()))),
        }
    }
}
