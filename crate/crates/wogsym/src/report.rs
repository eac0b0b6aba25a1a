use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Bumped whenever a field changes meaning or disappears.
pub const SCHEMA_VERSION: u32 = 1;

/// What every command prints under `--json`.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    /// `sha256:<hex>` of the input file bytes, when the command reads one.
    pub input_digest: Option<String>,
    /// False when a check, fact or oracle comparison failed.
    pub ok: bool,
    pub results: Value,
    pub warnings: Vec<String>,
    /// Absent from fuzz reports, which must be reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: &str, results: Value) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input_digest: None,
            ok: true,
            results,
            warnings: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("reports always serialize");
        out.push('\n');
        out
    }
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

pub fn millis(d: std::time::Duration) -> f64 {
    (d.as_secs_f64() * 1e6).round() / 1e3
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_sha256() {
        assert_eq!(digest(b"abc"), "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    #[test]
    fn elapsed_is_omitted_when_unset() {
        let r = RunReport::new("fuzz", serde_json::json!({}));
        assert!(!r.to_json().contains("elapsed_ms"));
    }
}
