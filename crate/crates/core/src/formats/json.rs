//! Stats records as JSON objects.
//!
//! Field names follow [`StatsRecord`]; undefined quantities are `null`.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::metrics::StatsRecord;

/// Pretty-printed JSON with a trailing newline.
pub fn stats_to_json(record: &StatsRecord) -> String {
    let mut s = serde_json::to_string_pretty(record).expect("stats records always serialize");
    s.push('\n');
    s
}

pub fn stats_from_json(text: &str) -> Result<StatsRecord> {
    serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })
}

pub fn write_stats_json(record: &StatsRecord, path: &Path) -> Result<()> {
    fs::write(path, stats_to_json(record))?;
    Ok(())
}

pub fn read_stats_json(path: &Path) -> Result<StatsRecord> {
    stats_from_json(&fs::read_to_string(path)?)
}
