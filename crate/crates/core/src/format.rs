//! The three-line function text format:
//!
//! ```text
//! k=2 n=3
//! labels: 0 1
//! table: 0 0 0 1 0 0 1 0
//! ```
//!
//! Table entries are labels in row-major order. Blank lines and lines
//! starting with `#` are ignored, so several records may share a stream.

use crate::error::{Error, Result};
use crate::function::{FiniteFunction, Label};

fn header(line: &str) -> Result<(usize, usize)> {
    let mut k = None;
    let mut n = None;
    for part in line.split_whitespace() {
        let (key, val) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        let v: usize = val
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer {val:?} for {key}")))?;
        match key {
            "k" => k = Some(v),
            "n" => n = Some(v),
            _ => return Err(Error::Parse(format!("unknown header field {key:?}"))),
        }
    }
    match (k, n) {
        (Some(k), Some(n)) => Ok((k, n)),
        _ => Err(Error::Parse(format!("header must give k and n: {line:?}"))),
    }
}

fn field<'a>(line: &'a str, name: &str) -> Result<&'a str> {
    line.trim()
        .strip_prefix(name)
        .and_then(|rest| rest.strip_prefix(':'))
        .ok_or_else(|| Error::Parse(format!("expected `{name}:` line, got {line:?}")))
}

fn record(lines: &[&str]) -> Result<FiniteFunction> {
    let (k, n) = header(lines[0])?;
    let labels: Vec<String> = field(lines[1], "labels")?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    let table = field(lines[2], "table")?
        .split_whitespace()
        .map(|cell| {
            labels
                .iter()
                .position(|l| l == cell)
                .map(|i| i as Label)
                .ok_or_else(|| Error::UnknownLabel(cell.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteFunction::new(k, n, labels, table)
}

fn content_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect()
}

/// Parses exactly one function.
pub fn parse_function(text: &str) -> Result<FiniteFunction> {
    let lines = content_lines(text);
    if lines.len() != 3 {
        return Err(Error::Parse(format!("expected 3 lines, found {}", lines.len())));
    }
    record(&lines)
}

/// Parses a stream of consecutive records.
pub fn parse_functions(text: &str) -> Result<Vec<FiniteFunction>> {
    let lines = content_lines(text);
    if !lines.len().is_multiple_of(3) {
        return Err(Error::Parse(format!(
            "{} content lines do not form whole records",
            lines.len()
        )));
    }
    lines.chunks(3).map(record).collect()
}

/// Inverse of [`parse_function`]; same as `Display`.
pub fn format_function(f: &FiniteFunction) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    const QUADRATIC: &str = "k=2 n=3\nlabels: 0 1\ntable: 0 0 0 1 0 0 1 0\n";

    #[test]
    fn round_trip() {
        let f = parse_function(QUADRATIC).unwrap();
        assert_eq!(f.k(), 2);
        assert_eq!(f.n(), 3);
        assert_eq!(f.table(), &[0, 0, 0, 1, 0, 0, 1, 0]);
        assert_eq!(parse_function(&format_function(&f)).unwrap(), f);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_function("k=2 n=2\nlabels: a b\ntable: a b a\n"),
            Err(Error::TableLength { .. })
        ));
        assert!(matches!(
            parse_function("k=2 n=1\nlabels: a b\ntable: a c\n"),
            Err(Error::UnknownLabel(_))
        ));
        assert!(parse_function("k=2\nlabels: a\ntable: a a\n").is_err());
        assert!(parse_function("k=2 n=1\ntable: a a\nlabels: a\n").is_err());
        assert!(parse_function("k=2 n=1\nlabels: a a\ntable: a a\n").is_err());
        assert!(parse_function("k=x n=1\nlabels: a\ntable: a a\n").is_err());
    }

    #[test]
    fn streams_and_comments() {
        let text = format!("# two records\n{QUADRATIC}\nk=1 n=2\nlabels: z\ntable: z\n");
        let fs = parse_functions(&text).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[1].n(), 2);
        assert!(parse_functions("k=1 n=1\nlabels: z\n").is_err());
    }
}
