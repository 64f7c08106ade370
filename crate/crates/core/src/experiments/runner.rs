//! Row-wise sweep execution with optional resumable checkpoints.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::Result;
use crate::experiments::{Cell, SweepResult, SweepRow};
use crate::formats::csv::{read_sweep_csv, write_sweep_csv};

/// Rows finished so far are rewritten to `path` after every `every` points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub path: PathBuf,
    pub every: usize,
}

impl Checkpoint {
    /// The conventional `<out>.partial` sibling of an output file.
    pub fn for_output(out: &Path, every: usize) -> Self {
        let mut name = out.as_os_str().to_owned();
        name.push(".partial");
        Checkpoint { path: PathBuf::from(name), every: every.max(1) }
    }
}

#[derive(Debug, Clone, Default)]
pub struct SweepRunner {
    pub checkpoint: Option<Checkpoint>,
}

impl SweepRunner {
    pub fn with_checkpoint(checkpoint: Checkpoint) -> Self {
        SweepRunner { checkpoint: Some(checkpoint) }
    }

    /// Evaluate `f` on every parameter tuple and collect rows into `template`.
    ///
    /// Points already present in a compatible checkpoint file are not
    /// recomputed. Results never depend on the thread count.
    pub fn run<F>(&self, mut template: SweepResult, points: Vec<Vec<Cell>>, f: F) -> Result<SweepResult>
    where
        F: Fn(&[Cell]) -> Result<Vec<Cell>> + Sync,
    {
        let mut done: Vec<SweepRow> = match &self.checkpoint {
            Some(cp) => load_partial(&cp.path, &template),
            None => Vec::new(),
        };
        let pending: Vec<Vec<Cell>> = points
            .into_iter()
            .filter(|p| !done.iter().any(|r| same_params(&r.params, p)))
            .collect();
        if !done.is_empty() {
            log::info!("resuming {}: {} rows from checkpoint", template.experiment, done.len());
        }
        let chunk = self.checkpoint.as_ref().map_or(usize::MAX, |c| c.every);
        for batch in pending.chunks(chunk.min(pending.len().max(1))) {
            let rows: Vec<SweepRow> = batch
                .par_iter()
                .map(|p| Ok(SweepRow { params: p.clone(), values: f(p)? }))
                .collect::<Result<_>>()?;
            done.extend(rows);
            if let Some(cp) = &self.checkpoint {
                let mut partial = template.clone();
                partial.rows = done.clone();
                partial.sort_rows();
                let tmp = cp.path.with_extension("partial.tmp");
                write_sweep_csv(&partial, &tmp)?;
                fs::rename(&tmp, &cp.path)?;
            }
        }
        template.rows = done;
        template.sort_rows();
        Ok(template)
    }

    /// Drop the checkpoint file once the final output is safely written.
    pub fn finish(&self) -> Result<()> {
        if let Some(cp) = &self.checkpoint {
            if cp.path.exists() {
                fs::remove_file(&cp.path)?;
            }
        }
        Ok(())
    }
}

fn same_params(a: &[Cell], b: &[Cell]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.total_cmp(y).is_eq())
}

fn load_partial(path: &Path, template: &SweepResult) -> Vec<SweepRow> {
    if !path.exists() {
        return Vec::new();
    }
    match read_sweep_csv(path) {
        Ok(prev)
            if prev.experiment == template.experiment
                && prev.param_names == template.param_names
                && prev.value_names == template.value_names
                && prev.provenance == template.provenance =>
        {
            prev.rows
        }
        Ok(_) => {
            log::warn!("ignoring incompatible checkpoint {}", path.display());
            Vec::new()
        }
        Err(e) => {
            log::warn!("ignoring unreadable checkpoint {}: {e}", path.display());
            Vec::new()
        }
    }
}
