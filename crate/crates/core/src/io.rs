//! Input parsing and structured rendering shared by the CLI and the C API.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qstrings::DrinfeldData;

/// Parses a Drinfeld multiset written as `k:m,k:m,...`; a bare `k` means
/// multiplicity one. The empty string and `{}` give the empty multiset.
/// Repeated exponents add up.
pub fn parse_drinfeld(input: &str) -> Result<DrinfeldData> {
    let trimmed = input.trim();
    if trimmed.is_empty() || trimmed == "{}" {
        return Ok(DrinfeldData::new());
    }
    let mut dd = DrinfeldData::new();
    let mut offset = 0usize;
    for token in input.split(',') {
        let start = offset + (token.len() - token.trim_start().len());
        offset += token.len() + 1;
        let token = token.trim();
        if token.is_empty() {
            return Err(parse_err(start, "empty entry"));
        }
        let (k_str, m_str) = match token.split_once(':') {
            Some((k, m)) => (k.trim(), Some(m.trim())),
            None => (token, None),
        };
        let k: i64 = k_str
            .parse()
            .map_err(|_| parse_err(start, format!("bad exponent {k_str:?}")))?;
        let m: u64 = match m_str {
            None => 1,
            Some(m) => m
                .parse()
                .map_err(|_| parse_err(start, format!("bad multiplicity {m:?}")))?,
        };
        if m == 0 {
            return Err(parse_err(start, format!("multiplicity of exponent {k} must be positive")));
        }
        dd.insert(k, m).map_err(|_| parse_err(start, "multiplicity overflow"))?;
    }
    Ok(dd)
}

/// Parses a comma-separated list of nonnegative integers; empty input gives
/// an empty list.
pub fn parse_uint_list(input: &str) -> Result<Vec<u64>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0usize;
    for token in input.split(',') {
        let start = offset + (token.len() - token.trim_start().len());
        offset += token.len() + 1;
        let t = token.trim();
        out.push(
            t.parse()
                .map_err(|_| parse_err(start, format!("expected a nonnegative integer, got {t:?}")))?,
        );
    }
    Ok(out)
}

fn parse_err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

/// One entry of a decomposition row in its JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowEntry {
    pub simple: DrinfeldData,
    pub mult: u64,
}

pub fn row_to_entries(row: &BTreeMap<DrinfeldData, u64>) -> Vec<RowEntry> {
    row.iter()
        .map(|(simple, &mult)| RowEntry { simple: simple.clone(), mult })
        .collect()
}

pub fn entries_to_row(entries: Vec<RowEntry>) -> BTreeMap<DrinfeldData, u64> {
    entries.into_iter().map(|e| (e.simple, e.mult)).collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}
