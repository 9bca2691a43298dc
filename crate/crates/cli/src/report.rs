//! Run reports: one JSON document per invocation, stable byte for byte.
//!
//! Reports round-trip through `serde_json::Value`, whose object maps keep
//! keys sorted, so repeated runs with the same inputs produce identical
//! bytes. The digest ties a report to its inputs: command name, every input
//! file, and the numeric arguments that influence the result.

use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fmt::Display;
use std::io::Write;
use std::path::Path;

/// Outcome of one subcommand run.
#[derive(Debug, Serialize)]
pub struct RunReport {
    /// Subcommand name.
    pub command: String,
    /// SHA-256 over the command name, input files, and numeric arguments.
    pub inputs_digest: String,
    /// Whether the property under test holds.
    pub pass: bool,
    /// Subcommand-specific payload.
    pub results: serde_json::Value,
}

impl RunReport {
    /// Serializes with sorted keys, compact or pretty, always ending in a
    /// newline.
    pub fn to_json_bytes(&self, pretty: bool) -> anyhow::Result<Vec<u8>> {
        let value = serde_json::to_value(self)?;
        let mut bytes = if pretty {
            serde_json::to_vec_pretty(&value)?
        } else {
            serde_json::to_vec(&value)?
        };
        bytes.push(b'\n');
        Ok(bytes)
    }

    /// Prints the report to stdout and, if given, writes the same bytes to a
    /// file.
    pub fn emit(&self, pretty: bool, json_path: Option<&Path>) -> anyhow::Result<()> {
        let bytes = self.to_json_bytes(pretty)?;
        std::io::stdout().write_all(&bytes)?;
        if let Some(path) = json_path {
            std::fs::write(path, &bytes)?;
        }
        Ok(())
    }
}

/// Accumulates the inputs that determine a run into a SHA-256 digest.
pub struct DigestBuilder {
    hasher: Sha256,
}

impl DigestBuilder {
    pub fn new(command: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(command.as_bytes());
        hasher.update([0u8]);
        DigestBuilder { hasher }
    }

    /// Mixes in a named scalar argument.
    pub fn arg(&mut self, label: &str, value: impl Display) -> &mut Self {
        self.hasher.update(label.as_bytes());
        self.hasher.update(*b"=");
        self.hasher.update(value.to_string().as_bytes());
        self.hasher.update([0u8]);
        self
    }

    /// Mixes in a named input file, length-prefixed so concatenations of
    /// different files cannot collide.
    pub fn file(&mut self, label: &str, bytes: &[u8]) -> &mut Self {
        self.hasher.update(label.as_bytes());
        self.hasher.update(*b":");
        self.hasher.update((bytes.len() as u64).to_le_bytes());
        self.hasher.update(bytes);
        self.hasher.update([0u8]);
        self
    }

    /// Hex digest.
    pub fn finish(self) -> String {
        let out = self.hasher.finalize();
        let mut hex = String::with_capacity(out.len() * 2);
        for b in out {
            hex.push_str(&format!("{b:02x}"));
        }
        hex
    }
}
