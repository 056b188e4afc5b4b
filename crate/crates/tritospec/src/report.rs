use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

/// Output of one command invocation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    /// The matrix spec and options as given.
    pub input: Value,
    pub results: Value,
    pub warnings: Vec<String>,
    pub versions: BTreeMap<String, String>,
    pub seed: u64,
}

impl RunReport {
    pub fn new(command: &str, input: Value, results: impl Serialize, seed: u64) -> Result<Self, CliError> {
        let results = serde_json::to_value(results).map_err(|e| CliError::Io(format!("cannot encode results: {e}")))?;
        let versions = BTreeMap::from([
            ("tritospec".to_string(), env!("CARGO_PKG_VERSION").to_string()),
            ("tritospec-core".to_string(), tritospec_core::VERSION.to_string()),
        ]);
        Ok(RunReport { command: command.to_string(), input, results, warnings: Vec::new(), versions, seed })
    }

    pub fn with_warnings(mut self, warnings: Vec<String>) -> Self {
        self.warnings = warnings;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only JSON-safe values")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Io(format!("invalid report: {e}")))
    }
}
