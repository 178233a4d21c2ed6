use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::ValueEnum;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Tsv,
}

impl Format {
    pub fn delimiter(self) -> char {
        match self {
            Self::Csv => ',',
            Self::Tsv => '\t',
        }
    }
}

/// Shortest decimal string that parses back to the same `f64`.
pub fn format_number(x: f64) -> String {
    format!("{x}")
}

/// Header row plus rows of text cells, rendered with LF line endings.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        let sep = format.delimiter().to_string();
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let _ = writeln!(out, "{}", line.join(&sep));
        }
        out
    }
}

/// Writes `contents` to `path`, or to stdout when `path` is `None`.
///
/// Files are written to a temporary sibling and renamed into place, so a
/// failed run never leaves a truncated file behind.
pub fn emit(contents: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(contents.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| io_error(PathBuf::from("<stdout>"), source))
        }
        Some(path) => {
            let dir = match path.parent() {
                Some(p) if !p.as_os_str().is_empty() => p,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir)
                .map_err(|source| io_error(path.to_path_buf(), source))?;
            tmp.write_all(contents.as_bytes())
                .and_then(|_| tmp.as_file().sync_all())
                .map_err(|source| io_error(path.to_path_buf(), source))?;
            tmp.persist(path)
                .map_err(|e| io_error(path.to_path_buf(), e.error))?;
            Ok(())
        }
    }
}

fn io_error(path: PathBuf, source: std::io::Error) -> CliError {
    CliError::Io { path, source }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for x in [
            0.0,
            1.0,
            0.1,
            2.0 / 3.0,
            1e-300,
            0.519_531_25,
            f64::MIN_POSITIVE,
        ] {
            assert_eq!(
                format_number(x).parse::<f64>().unwrap().to_bits(),
                x.to_bits()
            );
        }
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(0.75), "0.75");
    }

    #[test]
    fn render_uses_delimiter_and_lf() {
        let mut t = Table::new(vec!["a".into(), "b".into()]);
        t.push(vec!["1".into(), "2".into()]);
        assert_eq!(t.render(Format::Csv), "a,b\n1,2\n");
        assert_eq!(t.render(Format::Tsv), "a\tb\n1\t2\n");
    }
}
