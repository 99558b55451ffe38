//! CSV dataset input with precise error positions.
//!
//! Input files are rectangular numeric CSV: comma separators, `.` decimal
//! point, one observation per line, optionally a single header line to
//! skip. Both LF and CRLF records are accepted, as is a UTF-8 byte-order
//! mark. Errors name the offending line (and column for bad cells) so a
//! malformed file can be fixed without guesswork.

use std::fs;
use std::path::Path;

use medrad_core::DataSet;

use crate::CliError;

/// Read a rectangular numeric CSV into a [`DataSet`]. With `has_header`
/// the first line is skipped. Fails on an empty file, a ragged row (named
/// by line number), or a cell that does not parse as a finite number
/// (named by line and column).
pub fn read_dataset(path: &Path, has_header: bool) -> Result<DataSet, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let text = text.strip_prefix('\u{feff}').unwrap_or(&text);

    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width: Option<usize> = None;
    for (index, line) in text.lines().enumerate() {
        let lineno = index + 1;
        if index == 0 && has_header {
            continue;
        }
        let cells: Vec<&str> = line.split(',').collect();
        if let Some(w) = width {
            if cells.len() != w {
                return Err(CliError::Input(format!(
                    "{}: line {lineno}: expected {w} columns, found {}",
                    path.display(),
                    cells.len()
                )));
            }
        } else {
            width = Some(cells.len());
        }
        let mut row = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            let value: f64 = cell.trim().parse().map_err(|_| {
                CliError::Input(format!(
                    "{}: line {lineno}, column {}: not a number: {:?}",
                    path.display(),
                    j + 1,
                    cell.trim()
                ))
            })?;
            if !value.is_finite() {
                return Err(CliError::Input(format!(
                    "{}: line {lineno}, column {}: non-finite value {:?}",
                    path.display(),
                    j + 1,
                    cell.trim()
                )));
            }
            row.push(value);
        }
        rows.push(row);
    }

    if rows.is_empty() {
        return Err(CliError::Input(format!(
            "{}: empty dataset (no data rows)",
            path.display()
        )));
    }
    DataSet::from_rows(rows).map_err(CliError::from)
}

// ====== tests ======
