//! Reading and writing the plain-text instance format.
//!
//! An instance file looks like
//!
//! ```text
//! 3
//! 0 -inf 1/2
//! -inf 0 -inf
//! 2 -inf 0
//!
//! 0 -3 -inf
//! ```
//!
//! Line 1 holds the dimension `n`. The next `n` lines hold `n`
//! whitespace-separated tokens each: a decimal integer, a rational `p/q`,
//! or `-inf` (case-insensitive) for the bottom element. An optional blank
//! line followed by one more line of `n` tokens supplies the vector `x`.
//! Files are ASCII-only; `-inf` is the only spelling of bottom.

use maxplus_core::{Error, MaxPlusMatrix, MaxPlusScalar, MaxPlusVector, Result};

/// Parses an instance file: the matrix, plus the vector if the file has one.
pub fn parse_instance(text: &str) -> Result<(MaxPlusMatrix, Option<MaxPlusVector>)> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::invalid("empty instance: expected a dimension line"))?;
    let n: usize = header.trim().parse().map_err(|_| {
        Error::invalid(format!(
            "the first line must be the dimension, a positive integer; got {header:?}"
        ))
    })?;
    if n == 0 {
        return Err(Error::invalid("the dimension must be at least 1"));
    }

    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let line = lines.next().ok_or_else(|| {
            Error::invalid(format!("expected {n} matrix rows, found only {r}"))
        })?;
        rows.push(parse_token_line(line, n, &format!("matrix row {}", r + 1))?);
    }
    let matrix = MaxPlusMatrix::from_rows(rows)?;

    // Whatever follows the matrix is blank separators plus at most one
    // vector line.
    let mut vector = None;
    for line in lines {
        if line.trim().is_empty() {
            continue;
        }
        if vector.is_some() {
            return Err(Error::invalid(
                "unexpected extra content after the vector line",
            ));
        }
        let entries = parse_token_line(line, n, "the vector line")?;
        vector = Some(MaxPlusVector::new(entries)?);
    }

    Ok((matrix, vector))
}

/// Parses a stand-alone vector file: exactly `n` tokens, any whitespace.
pub fn parse_vector_text(text: &str, n: usize) -> Result<MaxPlusVector> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() != n {
        return Err(Error::invalid(format!(
            "the vector file has {} entries, expected {n}",
            tokens.len()
        )));
    }
    let entries = tokens
        .iter()
        .map(|t| t.parse::<MaxPlusScalar>())
        .collect::<Result<Vec<_>>>()?;
    MaxPlusVector::new(entries)
}

/// Renders an instance in canonical form: parsing the output reproduces
/// the inputs exactly.
pub fn write_instance(a: &MaxPlusMatrix, x: Option<&MaxPlusVector>) -> String {
    let n = a.n();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = a.row(i).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(x) = x {
        out.push('\n');
        let row: Vec<String> = x.entries().iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn parse_token_line(line: &str, n: usize, what: &str) -> Result<Vec<MaxPlusScalar>> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != n {
        return Err(Error::invalid(format!(
            "{what} has {} entries, expected {n}",
            tokens.len()
        )));
    }
    tokens
        .iter()
        .map(|t| {
            t.parse::<MaxPlusScalar>()
                .map_err(|e| Error::invalid(format!("{what}: {e}")))
        })
        .collect()
}
