//! The JSON design file: the single interchange format for every
//! subcommand.
//!
//! Schema: `{"v": int, "labels": [string], "blocks": [[int]]}` with each
//! block strictly increasing. Serialization is canonical (fixed field
//! order, fixed block order as constructed), so identical invocations
//! produce byte-identical files.

use std::fs;
use std::path::Path;

use adesign_core::incidence::IncidenceStructure;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Serialize, Deserialize)]
pub struct DesignFile {
    pub v: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub blocks: Vec<Vec<u32>>,
}

impl DesignFile {
    pub fn from_structure(s: &IncidenceStructure) -> DesignFile {
        let labels = match s.labels() {
            Some(ls) => ls.to_vec(),
            None => (0..s.v()).map(|i| i.to_string()).collect(),
        };
        DesignFile { v: s.v(), labels, blocks: s.blocks().to_vec() }
    }

    pub fn into_structure(self) -> Result<IncidenceStructure, CliError> {
        let s = if self.labels.is_empty() {
            IncidenceStructure::new(self.v, self.blocks)
        } else {
            IncidenceStructure::with_labels(self.v, self.labels, self.blocks)
        };
        s.map_err(|e| CliError::new(format!("invalid design: {e}")))
    }

    pub fn to_canonical_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("design serialization");
        out.push('\n');
        out
    }
}

pub fn write_design(path: &Path, s: &IncidenceStructure) -> Result<String, CliError> {
    let body = DesignFile::from_structure(s).to_canonical_json();
    fs::write(path, &body)
        .map_err(|e| CliError::new(format!("cannot write {}: {e}", path.display())))?;
    Ok(body)
}

pub fn read_design(path: &Path) -> Result<(IncidenceStructure, Vec<u8>), CliError> {
    let bytes = fs::read(path)
        .map_err(|e| CliError::new(format!("cannot read {}: {e}", path.display())))?;
    let file: DesignFile = serde_json::from_slice(&bytes)
        .map_err(|e| CliError::new(format!("cannot parse {}: {e}", path.display())))?;
    Ok((file.into_structure()?, bytes))
}
