//! Catalog files: one JSON object per line.

use std::io::{BufRead, Write};

use gem_census::CatalogRecord;

use crate::CliError;

pub fn write_catalog<W: Write>(mut out: W, records: &[CatalogRecord]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Reads records, skipping blank lines. Errors name the 1-based line.
pub fn read_catalog<R: BufRead>(input: R) -> Result<Vec<CatalogRecord>, CliError> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.map_err(|e| CliError::Usage(format!("line {}: {e}", i + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|e| CliError::Usage(format!("line {}: {e}", i + 1)))?;
        out.push(record);
    }
    Ok(out)
}

/// Recomputes every record; returns one message per mismatching record.
pub fn check_catalog(records: &[CatalogRecord]) -> Vec<String> {
    records
        .iter()
        .filter_map(|r| r.check().err().map(|e| e.to_string()))
        .collect()
}
