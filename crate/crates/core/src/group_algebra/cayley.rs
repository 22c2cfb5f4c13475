//! Plain-text Cayley tables.
//!
//! ```text
//! order 2
//! 0 1
//! 1 0
//! generators omega=1
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Everything else is
//! parsed strictly; errors carry 1-based line and column numbers.

use super::table::{is_identifier, GroupTable};
use super::GroupError;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct CayleyParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> CayleyParseError {
    CayleyParseError { line, column, message: message.into() }
}

/// Splits a line into tokens together with their 1-based starting column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub fn parse_cayley_table(text: &str) -> Result<GroupTable, CayleyParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (header_no, header) = lines.next().ok_or_else(|| err(1, 1, "empty input, expected `order n`"))?;
    let header_tokens = tokens(header);
    let order = match header_tokens.as_slice() {
        [(_, "order"), (col, n)] => n
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| err(header_no, *col, format!("expected a positive integer, found `{n}`")))?,
        [(col, other), ..] if *other != "order" => {
            return Err(err(header_no, *col, format!("expected `order`, found `{other}`")))
        }
        _ => return Err(err(header_no, 1, "expected `order n`")),
    };

    let mut mul = Vec::with_capacity(order);
    for row in 0..order {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| err(header_no + row + 1, 1, format!("missing table row {row}")))?;
        let toks = tokens(line);
        if toks.len() != order {
            let col = toks.get(order).map_or(line.len() + 1, |t| t.0);
            return Err(err(line_no, col, format!("expected {order} entries, found {}", toks.len())));
        }
        let mut entries = Vec::with_capacity(order);
        for (col, tok) in toks {
            let v = tok
                .parse::<usize>()
                .map_err(|_| err(line_no, col, format!("expected an element index, found `{tok}`")))?;
            if v >= order {
                return Err(err(line_no, col, format!("index {v} out of range for order {order}")));
            }
            entries.push(v);
        }
        mul.push(entries);
    }

    let (gen_no, gen_line) = lines
        .next()
        .ok_or_else(|| err(header_no + order + 1, 1, "missing `generators` line"))?;
    let gen_tokens = tokens(gen_line);
    match gen_tokens.first() {
        Some((_, "generators")) => {}
        Some((col, other)) => {
            return Err(err(gen_no, *col, format!("expected `generators`, found `{other}`")))
        }
        None => unreachable!("blank lines are filtered"),
    }
    let mut generators = Vec::new();
    for &(col, tok) in &gen_tokens[1..] {
        let (name, idx) = tok
            .split_once('=')
            .ok_or_else(|| err(gen_no, col, format!("expected `name=index`, found `{tok}`")))?;
        if !is_identifier(name) {
            return Err(err(gen_no, col, format!("invalid generator name `{name}`")));
        }
        let idx_col = col + name.len() + 1;
        let idx = idx
            .parse::<usize>()
            .map_err(|_| err(gen_no, idx_col, format!("expected an element index, found `{idx}`")))?;
        if idx >= order {
            return Err(err(gen_no, idx_col, format!("index {idx} out of range for order {order}")));
        }
        generators.push((name.to_string(), idx));
    }

    if let Some((line_no, _)) = lines.next() {
        return Err(err(line_no, 1, "unexpected trailing content"));
    }

    GroupTable::new(mul, generators).map_err(|e: GroupError| err(gen_no, 1, e.to_string()))
}
