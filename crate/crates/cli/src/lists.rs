//! Number lists given on the command line: `7`, `2,3,5`, `10..=100`, `10..=100:10`, `1.0..=2.0:0.25`.

use crate::{CliError, CliResult};

fn usage(text: &str, what: &str) -> CliError {
    CliError::Usage(format!("`{text}` is not {what}"))
}

/// Integers; `a..b` excludes `b`, `a..=b` includes it, `:s` sets the step.
pub fn parse_u64_list(text: &str) -> CliResult<Vec<u64>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (range, step) = match part.split_once(':') {
            Some((r, s)) => (r, s.parse::<u64>().ok().filter(|&s| s > 0).ok_or_else(|| usage(part, "a valid step"))?),
            None => (part, 1),
        };
        if let Some((lo, hi)) = range.split_once("..") {
            let (hi, inclusive) = match hi.strip_prefix('=') {
                Some(h) => (h, true),
                None => (hi, false),
            };
            let lo: u64 = lo.trim().parse().map_err(|_| usage(part, "an integer range"))?;
            let hi: u64 = hi.trim().parse().map_err(|_| usage(part, "an integer range"))?;
            let end = if inclusive { hi.checked_add(1).ok_or_else(|| usage(part, "an integer range"))? } else { hi };
            out.extend((lo..end).step_by(step as usize));
        } else if step != 1 {
            return Err(usage(part, "a range"));
        } else {
            out.push(range.parse().map_err(|_| usage(part, "a non-negative integer"))?);
        }
    }
    if out.is_empty() {
        return Err(usage(text, "a non-empty list"));
    }
    Ok(out)
}

/// Reals; ranges need an explicit step and include the end point up to rounding.
pub fn parse_f64_list(text: &str) -> CliResult<Vec<f64>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let number = |s: &str| s.trim().parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(|| usage(part, "a number"));
        match part.split_once("..=") {
            Some((lo, rest)) => {
                let (hi, step) = rest.split_once(':').ok_or_else(|| usage(part, "a range with a step"))?;
                let (lo, hi, step) = (number(lo)?, number(hi)?, number(step)?);
                if step <= 0.0 {
                    return Err(usage(part, "a range with a positive step"));
                }
                let count = ((hi - lo) / step + 1e-9).floor();
                if count < 0.0 {
                    return Err(usage(part, "an increasing range"));
                }
                out.extend((0..=count as u64).map(|i| lo + i as f64 * step));
            }
            None => out.push(number(part)?),
        }
    }
    if out.is_empty() {
        return Err(usage(text, "a non-empty list"));
    }
    Ok(out)
}
