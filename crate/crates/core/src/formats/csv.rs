//! Sweep tables as CSV.
//!
//! A file starts with `#` provenance lines, then a standard CSV table:
//!
//! ```text
//! # experiment: connectivity
//! # parameters: 2
//! # version: 0.1.0
//! # seed: 7
//! # map: x^2+a, 1 shifts, Distinct
//! p,d,connected,total,probability
//! 2,1,1,2,0.5
//! ```
//!
//! `parameters` is the number of leading parameter columns. `seed` is
//! omitted when the sweep is deterministic, `timestamp` unless one was set,
//! and there is one `map` line per entry. Numbers use the shortest decimal
//! form that parses back to the same value, infinities are written `inf`
//! and missing values are empty fields.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::experiments::{Cell, SweepProvenance, SweepResult, SweepRow};

fn csv_err(e: csv::Error) -> Error {
    match e.position() {
        Some(p) => Error::Parse { line: p.line() as usize, message: e.to_string() },
        None => Error::Io(e.to_string()),
    }
}

pub fn write_sweep_csv_to<W: Write>(result: &SweepResult, mut out: W) -> Result<()> {
    let prov = &result.provenance;
    writeln!(out, "# experiment: {}", result.experiment)?;
    writeln!(out, "# parameters: {}", result.param_names.len())?;
    writeln!(out, "# version: {}", prov.version)?;
    if let Some(seed) = prov.seed {
        writeln!(out, "# seed: {seed}")?;
    }
    if let Some(ts) = &prov.timestamp {
        writeln!(out, "# timestamp: {ts}")?;
    }
    for m in &prov.maps {
        writeln!(out, "# map: {m}")?;
    }
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(result.param_names.iter().chain(&result.value_names)).map_err(csv_err)?;
    for row in &result.rows {
        w.write_record(row.params.iter().chain(&row.values).map(|c| c.to_string())).map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

pub fn sweep_csv_string(result: &SweepResult) -> String {
    let mut buf = Vec::new();
    write_sweep_csv_to(result, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("cells are valid utf-8")
}

pub fn write_sweep_csv(result: &SweepResult, path: &Path) -> Result<()> {
    fs::write(path, sweep_csv_string(result))?;
    Ok(())
}

pub fn parse_sweep_csv(text: &str) -> Result<SweepResult> {
    let mut experiment = None;
    let mut n_params = None;
    let mut prov = SweepProvenance { version: String::new(), ..SweepProvenance::default() };
    let mut body_start = 0;
    let mut header_lines = 0;
    for line in text.split_inclusive('\n') {
        let Some(rest) = line.strip_prefix('#') else { break };
        header_lines += 1;
        body_start += line.len();
        let lineno = header_lines;
        let bad = |m: &str| Error::Parse { line: lineno, message: m.to_string() };
        let rest = rest.trim_end_matches(['\n', '\r']);
        let (key, value) = rest.split_once(':').ok_or_else(|| bad("expected `key: value`"))?;
        let value = value.strip_prefix(' ').unwrap_or(value).to_string();
        match key.trim() {
            "experiment" => experiment = Some(value),
            "parameters" => n_params = Some(value.parse::<usize>().map_err(|_| bad("bad parameter count"))?),
            "version" => prov.version = value,
            "seed" => prov.seed = Some(value.parse().map_err(|_| bad("bad seed"))?),
            "timestamp" => prov.timestamp = Some(value),
            "map" => prov.maps.push(value),
            other => log::debug!("ignoring provenance key {other}"),
        }
    }
    let missing = |what: &str| Error::Parse { line: header_lines + 1, message: format!("missing `# {what}:` line") };
    let experiment = experiment.ok_or_else(|| missing("experiment"))?;
    let n_params = n_params.ok_or_else(|| missing("parameters"))?;

    let mut reader = csv::ReaderBuilder::new().has_headers(true).from_reader(&text.as_bytes()[body_start..]);
    let header: Vec<String> = reader.headers().map_err(csv_err)?.iter().map(str::to_string).collect();
    if header.len() < n_params {
        return Err(Error::Parse { line: header_lines + 1, message: "fewer columns than parameters".into() });
    }
    let mut result = SweepResult {
        experiment,
        param_names: header[..n_params].to_vec(),
        value_names: header[n_params..].to_vec(),
        rows: Vec::new(),
        provenance: prov,
    };
    for rec in reader.records() {
        let rec = rec.map_err(|e| match csv_err(e) {
            Error::Parse { line, message } => Error::Parse { line: line + header_lines, message },
            other => other,
        })?;
        let mut cells: Vec<Cell> = rec.iter().map(Cell::parse).collect();
        let values = cells.split_off(n_params);
        result.rows.push(SweepRow { params: cells, values });
    }
    Ok(result)
}

pub fn read_sweep_csv(path: &Path) -> Result<SweepResult> {
    parse_sweep_csv(&fs::read_to_string(path)?)
}
