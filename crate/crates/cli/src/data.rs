//! Plain-text data files: one number per line, `#` comments, blank lines skipped.

use std::fs;
use std::path::Path;

use crate::error::CliError;

pub fn parse_values(text: &str, origin: &str) -> Result<Vec<f64>, CliError> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let x = line.parse::<f64>().map_err(|e| CliError::Parse {
            origin: origin.to_string(),
            line: i + 1,
            message: format!("{line:?}: {e}"),
        })?;
        values.push(x);
    }
    Ok(values)
}

pub fn read_values(path: &Path) -> Result<Vec<f64>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_values(&text, &path.display().to_string())
}
