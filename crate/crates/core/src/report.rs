//! JSON report envelope: tool version, the effective configuration, a hash
//! of the input, and the result. Output is deterministic for a fixed
//! configuration; no timestamps are recorded.

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Serialize)]
pub struct Report<'a, C: Serialize, T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub config: &'a C,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_sha256: Option<String>,
    pub result: &'a T,
}

impl<'a, C: Serialize, T: Serialize> Report<'a, C, T> {
    pub fn new(command: &'a str, config: &'a C, input: Option<&[u8]>, result: &'a T) -> Self {
        Self { tool: "lagrangia", version: VERSION, command, config, input_sha256: input.map(sha256_hex), result }
    }

    /// Compact JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_json_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}
