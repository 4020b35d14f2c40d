//! Dataset file ingestion.
//!
//! Two encodings are accepted, detected from the content:
//! - raw: one non-negative integer per line;
//! - frequency: `value,count` per line, values unique, counts may be zero.
//!
//! Blank lines are skipped and `#` starts a comment. Parse errors carry the
//! 1-based line number.

use crate::CliError;
use poisson_gof::CountSample;
use std::path::Path;

pub fn load(path: &Path) -> Result<CountSample, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|msg| CliError::Usage(format!("{}: {msg}", path.display())))
}

fn parse(text: &str) -> Result<CountSample, String> {
    let mut raw_values: Vec<u32> = Vec::new();
    let mut freq_pairs: Vec<(u32, u64)> = Vec::new();

    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let content = match line.find('#') {
            Some(pos) => &line[..pos],
            None => line,
        }
        .trim();
        if content.is_empty() {
            continue;
        }
        if let Some((value_text, count_text)) = content.split_once(',') {
            let value: u32 = value_text.trim().parse().map_err(|_| {
                format!(
                    "line {lineno}: `{}` is not a non-negative integer value",
                    value_text.trim()
                )
            })?;
            let count: u64 = count_text.trim().parse().map_err(|_| {
                format!(
                    "line {lineno}: `{}` is not a non-negative integer count",
                    count_text.trim()
                )
            })?;
            if freq_pairs.iter().any(|&(v, _)| v == value) {
                return Err(format!(
                    "line {lineno}: duplicate value {value} in frequency data"
                ));
            }
            freq_pairs.push((value, count));
        } else {
            let value: u32 = content
                .parse()
                .map_err(|_| format!("line {lineno}: `{content}` is not a non-negative integer"))?;
            raw_values.push(value);
        }
    }

    match (raw_values.is_empty(), freq_pairs.is_empty()) {
        (false, false) => Err("mixed raw and `value,count` lines in one file".into()),
        (true, true) => Err("no observations found".into()),
        (false, true) => CountSample::from_observations(raw_values).map_err(|e| e.to_string()),
        (true, false) => CountSample::from_frequencies(&freq_pairs).map_err(|e| e.to_string()),
    }
}
