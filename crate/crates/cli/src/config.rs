//! Optional TOML configuration; command-line flags take precedence.

use std::path::Path;

use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// Keys: `bound`, `beta`, `window` (scan rectangle), `plot_window` (figure viewport).
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub bound: Option<i64>,
    pub beta: Option<String>,
    pub window: Option<String>,
    pub plot_window: Option<String>,
}

impl Config {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        toml::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys() {
        let c: Config = toml::from_str("bound = 4\nwindow = \"-1/2,1/2,0,1/16\"").unwrap();
        assert_eq!(c.bound, Some(4));
        assert_eq!(c.window.as_deref(), Some("-1/2,1/2,0,1/16"));
        assert!(toml::from_str::<Config>("unknown = 1").is_err());
    }
}
