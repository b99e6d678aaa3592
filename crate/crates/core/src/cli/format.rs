use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::matrix::Matrix;

/// Matrix wire formats.
///
/// Plain: a line `m n`, then `m` lines of `n` whitespace-separated literals.
/// JSON: `{"field": "Q", "rows": m, "cols": n, "entries": [[...], ...]}`,
/// with literals given as strings or integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Plain,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s.trim().to_ascii_lowercase().as_str() {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            _ => Err(Error::parse(1, 1, format!("unknown format `{s}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Plain => "plain",
            Format::Json => "json",
        })
    }
}

/// Parses exactly one matrix.
pub fn parse_matrix(text: &str, fmt: Format, field: Field) -> Result<Matrix> {
    let mut all = parse_matrices(text, fmt, field)?;
    match all.len() {
        1 => Ok(all.remove(0)),
        0 => Err(Error::parse(1, 1, "no matrix in input")),
        k => Err(Error::parse(1, 1, format!("expected one matrix, found {k}"))),
    }
}

/// Parses a sequence of matrices: concatenated blocks in the plain format,
/// a top-level array (or a single object) in JSON.
pub fn parse_matrices(text: &str, fmt: Format, field: Field) -> Result<Vec<Matrix>> {
    match fmt {
        Format::Plain => parse_plain(text, field),
        Format::Json => parse_json(text, field),
    }
}

pub fn serialize_matrix(a: &Matrix, fmt: Format) -> String {
    match fmt {
        Format::Plain => a.to_plain(),
        Format::Json => {
            let entries: Vec<Vec<String>> =
                (0..a.rows()).map(|r| (0..a.cols()).map(|c| a.at(r, c).to_string()).collect()).collect();
            let value = json!({
                "field": a.field().to_string(),
                "rows": a.rows(),
                "cols": a.cols(),
                "entries": entries,
            });
            format!("{value}\n")
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..i], column: line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

fn parse_dimension(tok: &Token<'_>, line: usize) -> Result<usize> {
    match tok.text.parse::<usize>() {
        Ok(0) => Err(Error::ZeroDimension),
        Ok(d) => Ok(d),
        Err(_) => Err(Error::parse(line, tok.column, format!("expected a dimension, found `{}`", tok.text))),
    }
}

fn parse_plain(text: &str, field: Field) -> Result<Vec<Matrix>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty());
    let mut out = Vec::new();
    while let Some((line_no, header)) = lines.next() {
        let toks = tokens(header);
        if toks.len() != 2 {
            let col = toks.get(2).map_or(header.len() + 1, |t| t.column);
            return Err(Error::parse(line_no, col, "header must be `rows cols`"));
        }
        let m = parse_dimension(&toks[0], line_no)?;
        let n = parse_dimension(&toks[1], line_no)?;
        let mut rows = Vec::with_capacity(m);
        let mut last_line = line_no;
        for r in 0..m {
            let Some((row_no, row)) = lines.next() else {
                return Err(Error::parse(last_line + 1, 1, format!("expected {m} rows, found {r}")));
            };
            last_line = row_no;
            let toks = tokens(row);
            if toks.len() < n {
                let col = row.chars().count() + 1;
                return Err(Error::parse(row_no, col, format!("expected {n} entries, found {}", toks.len())));
            }
            if toks.len() > n {
                return Err(Error::parse(
                    row_no,
                    toks[n].column,
                    format!("expected {n} entries, found {}", toks.len()),
                ));
            }
            let parsed = toks
                .iter()
                .map(|t| field.parse_element(t.text).map_err(|msg| Error::parse(row_no, t.column, msg)))
                .collect::<Result<Vec<FieldElement>>>()?;
            rows.push(parsed);
        }
        out.push(Matrix::from_rows(field, rows)?);
    }
    Ok(out)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line().max(1), e.column().max(1), e.to_string())
}

fn parse_json(text: &str, field: Field) -> Result<Vec<Matrix>> {
    let value: Value = serde_json::from_str(text).map_err(json_error)?;
    match value {
        Value::Array(items) => items.iter().map(|v| matrix_from_json(v, field)).collect(),
        other => Ok(vec![matrix_from_json(&other, field)?]),
    }
}

fn matrix_from_json(v: &Value, field: Field) -> Result<Matrix> {
    let bad = |msg: String| Error::parse(1, 1, msg);
    let obj = v.as_object().ok_or_else(|| bad("matrix must be a JSON object".into()))?;
    let declared: Field =
        obj.get("field").and_then(Value::as_str).ok_or_else(|| bad("missing string member `field`".into()))?.parse()?;
    if declared != field {
        return Err(Error::FieldMismatch(field.to_string(), declared.to_string()));
    }
    let dim = |key: &str| -> Result<usize> {
        match obj.get(key).and_then(Value::as_u64) {
            Some(0) => Err(Error::ZeroDimension),
            Some(d) => Ok(d as usize),
            None => Err(bad(format!("missing positive integer member `{key}`"))),
        }
    };
    let (m, n) = (dim("rows")?, dim("cols")?);
    let rows =
        obj.get("entries").and_then(Value::as_array).ok_or_else(|| bad("missing array member `entries`".into()))?;
    if rows.len() != m {
        return Err(bad(format!("expected {m} rows, found {}", rows.len())));
    }
    let mut parsed = Vec::with_capacity(m);
    for (r, row) in rows.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| bad(format!("row {} is not an array", r + 1)))?;
        if row.len() != n {
            return Err(bad(format!("row {}: expected {n} entries, found {}", r + 1, row.len())));
        }
        let entries = row
            .iter()
            .enumerate()
            .map(|(c, x)| {
                let literal = match x {
                    Value::String(s) => s.clone(),
                    Value::Number(k) if k.is_i64() || k.is_u64() => k.to_string(),
                    other => return Err(bad(format!("entry ({}, {}): unsupported literal {other}", r + 1, c + 1))),
                };
                field.parse_element(&literal).map_err(|msg| bad(format!("entry ({}, {}): {msg}", r + 1, c + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        parsed.push(entries);
    }
    Matrix::from_rows(field, parsed)
}
