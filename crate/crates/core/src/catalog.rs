//! Append-only JSON-lines catalog of constructed and certified
//! functions. One record per line keeps the file diffable and lets
//! search pipelines append concurrently from a single process.

use std::collections::BTreeMap;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::boolfn::TruthTable;
use crate::error::Result;

/// Certification verdicts attached to one function.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Verdicts {
    pub bent: bool,
    pub degree: u32,
    pub homogeneous: bool,
    /// inside / outside / inconclusive
    pub mm: String,
    pub mm_method: String,
}

/// One catalog line: content-derived id, the construction recipe, the
/// verdicts and wall-clock timings. Re-running a recipe reproduces the
/// record except for the timings.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub recipe: BTreeMap<String, String>,
    pub verdicts: Verdicts,
    pub timings_ms: BTreeMap<String, u64>,
}

/// Deterministic id: SHA-256 over the variable count and packed table
/// bytes.
pub fn table_id(t: &TruthTable) -> String {
    let mut hasher = Sha256::new();
    hasher.update(t.n().to_le_bytes());
    let mut byte = 0u8;
    let mut nbits = 0;
    for x in 0..t.len() as u32 {
        byte |= (t.get(x) as u8) << nbits;
        nbits += 1;
        if nbits == 8 {
            hasher.update([byte]);
            byte = 0;
            nbits = 0;
        }
    }
    if nbits > 0 {
        hasher.update([byte]);
    }
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn append_record(path: &Path, record: &CatalogRecord) -> Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let line = serde_json::to_string(record)?;
    writeln!(file, "{line}")?;
    Ok(())
}

pub fn read_catalog(path: &Path) -> Result<Vec<CatalogRecord>> {
    let file = std::fs::File::open(path)?;
    let mut out = Vec::new();
    for line in BufReader::new(file).lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(serde_json::from_str(&line)?);
    }
    Ok(out)
}
