//! Runtime configuration: enumeration caps, parallelism, and the default
//! Cartan type, loaded from a small TOML file.
//!
//! Resolution order: an explicit path wins, then the `ADLV_CONFIG`
//! environment variable, then built-in defaults. Unknown keys are rejected
//! so a typo in the file fails loudly instead of silently using a default.

use crate::search::Caps;
use crate::{Error, Result};
use serde::Deserialize;
use std::path::Path;

/// The environment variable naming the config file when no path is given.
pub const CONFIG_ENV_VAR: &str = "ADLV_CONFIG";

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    /// Node-visit cap for each folding enumeration; exceeding it marks the
    /// answer non-exhaustive instead of returning a wrong value.
    pub max_branches: u64,
    /// Worker threads for direction scans and table rows; 0 means one per
    /// logical core.
    pub threads: usize,
    /// Cartan type assumed when a command omits `--type`.
    pub default_type: String,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            max_branches: Caps::default().max_branches,
            threads: 0,
            default_type: "A2".to_string(),
        }
    }
}

impl Config {
    pub fn from_toml_str(text: &str) -> Result<Config> {
        toml::from_str(text).map_err(|e| Error::Parse {
            input: text.to_string(),
            msg: format!("invalid config: {e}"),
        })
    }

    /// Load from `path`, falling back to `$ADLV_CONFIG`, then to defaults
    /// when neither names a file.
    pub fn load(path: Option<&Path>) -> Result<Config> {
        let chosen = match path {
            Some(p) => Some(p.to_path_buf()),
            None => std::env::var_os(CONFIG_ENV_VAR).map(std::path::PathBuf::from),
        };
        match chosen {
            Some(p) => {
                let text = std::fs::read_to_string(&p).map_err(|e| Error::Parse {
                    input: p.display().to_string(),
                    msg: format!("cannot read config file: {e}"),
                })?;
                Config::from_toml_str(&text)
            }
            None => Ok(Config::default()),
        }
    }

    /// The enumeration caps this configuration dictates.
    pub fn caps(&self) -> Caps {
        Caps {
            max_branches: self.max_branches,
            max_folds: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_match_the_search_caps() {
        let cfg = Config::default();
        assert_eq!(cfg.caps(), Caps::default());
        assert_eq!(cfg.threads, 0);
        assert_eq!(cfg.default_type, "A2");
    }

    #[test]
    fn toml_overrides_and_partial_files_work() {
        let cfg = Config::from_toml_str(
            "max_branches = 5000\nthreads = 2\ndefault_type = \"C2\"\n",
        )
        .unwrap();
        assert_eq!(cfg.max_branches, 5000);
        assert_eq!(cfg.threads, 2);
        assert_eq!(cfg.default_type, "C2");

        // Omitted keys keep their defaults.
        let partial = Config::from_toml_str("threads = 4\n").unwrap();
        assert_eq!(partial.max_branches, Caps::default().max_branches);
        assert_eq!(partial.threads, 4);
    }

    #[test]
    fn unknown_keys_and_bad_types_are_rejected() {
        assert!(matches!(
            Config::from_toml_str("max_branchez = 5\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Config::from_toml_str("threads = \"many\"\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn loading_a_file_and_missing_files_behave() {
        let dir = std::env::temp_dir().join("adlv-config-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("config.toml");
        std::fs::write(&path, "max_branches = 77\n").unwrap();
        let cfg = Config::load(Some(&path)).unwrap();
        assert_eq!(cfg.max_branches, 77);
        assert!(matches!(
            Config::load(Some(&dir.join("missing.toml"))),
            Err(Error::Parse { .. })
        ));
    }
}
