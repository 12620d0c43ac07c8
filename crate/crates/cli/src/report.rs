//! Report files: versioned, key order fixed by declaration order.

use repherd_core::catalog::Catalog;
use repherd_core::checks::CheckReport;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::files::{AlgebraFile, FileError};

pub const REPORT_VERSION: u32 = 1;

pub fn tool() -> String {
    format!("repherd {}", env!("CARGO_PKG_VERSION"))
}

/// SHA-256 of the canonical form of an algebra file.
pub fn digest(file: &AlgebraFile) -> Result<String, FileError> {
    Ok(hex::encode(Sha256::digest(file.canonical()?.as_bytes())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeSummary {
    pub name: String,
    pub aliases: Vec<String>,
    pub dims: Vec<usize>,
    pub projective: bool,
    pub injective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogSummary {
    pub complete: bool,
    pub nodes: usize,
    pub entries: Vec<NodeSummary>,
    /// `[X, τX]` by name
    pub tau: Vec<[String; 2]>,
}

impl CatalogSummary {
    pub fn of(cat: &Catalog) -> CatalogSummary {
        let entries = cat
            .entries
            .iter()
            .map(|e| NodeSummary {
                name: e.name.clone(),
                aliases: e.aliases.clone(),
                dims: e.module.dims().to_vec(),
                projective: e.is_projective(),
                injective: e.is_injective(),
            })
            .collect();
        let tau = cat
            .tau
            .iter()
            .enumerate()
            .filter_map(|(x, t)| t.map(|t| [cat.entries[x].name.clone(), cat.entries[t].name.clone()]))
            .collect();
        CatalogSummary { complete: cat.complete, nodes: cat.len(), entries, tau }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub check: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub version: u32,
    pub tool: String,
    pub command: String,
    pub algebra_digest: String,
    pub catalog: Option<CatalogSummary>,
    pub reports: Vec<CheckReport>,
    pub skipped: Vec<Skipped>,
}

impl ReportFile {
    pub fn new(command: &str, algebra_digest: String) -> ReportFile {
        ReportFile {
            version: REPORT_VERSION,
            tool: tool(),
            command: command.into(),
            algebra_digest,
            catalog: None,
            reports: Vec::new(),
            skipped: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }
}
