//! Run reports: command echo, input hashes, verdicts and timing, emitted as
//! prose or JSON. Reports are deterministic given identical inputs and seed.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

#[derive(Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: Vec<String>,
    /// Input path -> SHA-256 of its bytes, for provenance.
    pub inputs: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub verdict: String,
    pub detail: serde_json::Value,
    pub elapsed_ms: u128,
    pub exit_code: u8,
    #[serde(skip)]
    started: Instant,
}

impl RunReport {
    pub fn new() -> Self {
        RunReport {
            tool: "obstk",
            version: env!("CARGO_PKG_VERSION"),
            command: std::env::args().collect(),
            inputs: BTreeMap::new(),
            seed: None,
            verdict: String::new(),
            detail: serde_json::Value::Null,
            elapsed_ms: 0,
            exit_code: 0,
            started: Instant::now(),
        }
    }

    pub fn input(&mut self, path: &Path, contents: &str) {
        let mut hasher = Sha256::new();
        hasher.update(contents.as_bytes());
        self.inputs
            .insert(path.display().to_string(), format!("{:x}", hasher.finalize()));
    }

    pub fn seed(&mut self, seed: u64) {
        self.seed = Some(seed);
    }

    pub fn verdict(&mut self, verdict: &str, detail: serde_json::Value) {
        self.verdict = verdict.to_string();
        self.detail = detail;
    }

    pub fn finish(&mut self, code: u8) {
        self.exit_code = code;
        self.elapsed_ms = self.started.elapsed().as_millis();
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn print_text(&self) {
        eprintln!(
            "obstk {}: {} ({} ms){}",
            self.version,
            self.verdict,
            self.elapsed_ms,
            if self.detail.is_null() {
                String::new()
            } else {
                format!(" {}", self.detail)
            }
        );
    }
}
