//! Reading one numeric column from a text file.

use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use skewviz_core::Sample;

use crate::config::ColumnSelector;
use crate::CliError;

/// Tokens treated as missing values.
const MISSING: [&str; 7] = ["", "na", "nan", "n/a", "null", "none", "-"];

/// A parsed column together with what was skipped along the way.
#[derive(Debug, Clone, PartialEq)]
pub struct Ingested {
    pub sample: Sample,
    /// Missing-value tokens and blank lines.
    pub missing: usize,
    /// Parsed but non-finite values (e.g. `inf`).
    pub non_finite: usize,
}

impl Ingested {
    pub fn dropped(&self) -> usize {
        self.missing + self.non_finite
    }
}

fn is_missing(token: &str) -> bool {
    MISSING.contains(&token.to_ascii_lowercase().as_str())
}

fn detect_delimiter(text: &str) -> Option<u8> {
    let first = text.lines().find(|l| !l.trim().is_empty())?;
    if first.contains('\t') {
        Some(b'\t')
    } else if first.contains(',') {
        Some(b',')
    } else {
        None
    }
}

pub fn ingest(path: &Path, column: Option<&ColumnSelector>) -> Result<Ingested, CliError> {
    let text = fs::read_to_string(path).map_err(|e| match e.kind() {
        ErrorKind::NotFound => CliError::FileNotFound(path.to_path_buf()),
        _ => CliError::Read {
            path: path.to_path_buf(),
            source: e,
        },
    })?;
    parse_column(&text, column)
}

/// Parses newline-separated numbers, or one column of a comma- or
/// tab-delimited table whose first row may be a header.
pub fn parse_column(text: &str, column: Option<&ColumnSelector>) -> Result<Ingested, CliError> {
    let delimiter = detect_delimiter(text);
    let mut reader = csv::ReaderBuilder::new()
        .delimiter(delimiter.unwrap_or(b'\x1f'))
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut index: Option<usize> = match column {
        Some(ColumnSelector::Index(i)) => Some(i - 1),
        Some(ColumnSelector::Name(_)) => None,
        None => Some(0),
    };
    let mut values = Vec::new();
    let mut missing = text.lines().filter(|l| l.trim().is_empty()).count();
    let mut first = true;

    for record in reader.records() {
        let record = record.map_err(|e| CliError::Parse {
            line: e.position().map_or(0, |p| p.line()),
            token: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }

        if first {
            first = false;
            if let Some(ColumnSelector::Name(name)) = column {
                let pos = record
                    .iter()
                    .position(|h| h == name)
                    .ok_or_else(|| CliError::ColumnNotFound(name.clone()))?;
                index = Some(pos);
                continue;
            }
            let idx = index.expect("index known without a name selector");
            let field = record
                .get(idx)
                .ok_or_else(|| CliError::ColumnNotFound((idx + 1).to_string()))?;
            if !is_missing(field) && field.parse::<f64>().is_err() {
                // header row
                continue;
            }
        }

        let idx = index.expect("column resolved on the first row");
        let token = record.get(idx).unwrap_or("");
        if is_missing(token) {
            missing += 1;
            continue;
        }
        let v: f64 = token.parse().map_err(|_| CliError::Parse {
            line,
            token: token.to_owned(),
        })?;
        values.push(v);
    }

    if first {
        if let Some(ColumnSelector::Name(name)) = column {
            return Err(CliError::ColumnNotFound(name.clone()));
        }
    }
    let sample = Sample::new(values)?;
    let non_finite = sample.dropped();
    Ok(Ingested {
        sample,
        missing,
        non_finite,
    })
}
