//! Plain-text embedding model files.
//!
//! ```text
//! # optional comment lines
//! cartan: A2
//! divisors: 2
//! K = {} ; p = {}
//! K = {1} ; p = {1}
//! K = {1,2} ; p = {1,2}
//! K = {2} ; p = {2}
//! ```
//!
//! The `cartan:` line takes a catalog type (`A2`, `B3`, `G2`, ...) or a raw
//! matrix written row by row, `[[2,-1],[-2,2]]`. Blank lines and lines
//! starting with `#` are ignored. Labels are 1-based, `{}` is the empty set.
//! [`save_model`] writes the canonical form (no comments, members sorted by
//! `K`), which [`parse_model`] reads back to the same bytes.

use std::fmt::Write as _;
use std::path::Path;

use orbitposet_core::orbitposet::{parse_divisor_set, parse_parabolic_set};
use orbitposet_core::{CartanDatum, EmbeddingModel, Member};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid model: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> ModelFileError {
    ModelFileError::Syntax { line, message: message.into() }
}

pub fn parse_cartan(text: &str) -> Result<CartanDatum, String> {
    let t = text.trim();
    if t.starts_with('[') {
        let rows = parse_matrix(t).ok_or_else(|| format!("malformed matrix `{t}`"))?;
        CartanDatum::from_matrix(rows).map_err(|e| e.to_string())
    } else {
        CartanDatum::from_type(t).map_err(|e| e.to_string())
    }
}

fn parse_matrix(t: &str) -> Option<Vec<Vec<i32>>> {
    let inner = t.strip_prefix('[')?.strip_suffix(']')?.trim();
    let mut rows = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest.strip_prefix('[')?;
        let end = body.find(']')?;
        let row: Option<Vec<i32>> = body[..end].split(',').map(|x| x.trim().parse().ok()).collect();
        rows.push(row?);
        rest = body[end + 1..].trim_start();
        rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
    }
    Some(rows)
}

/// Parses and validates a model file.
pub fn parse_model(text: &str) -> Result<EmbeddingModel, ModelFileError> {
    let mut cartan: Option<CartanDatum> = None;
    let mut divisors: Option<usize> = None;
    let mut family = Vec::new();
    let mut last_line = 0;
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("cartan:") {
            if cartan.is_some() {
                return Err(syntax(line_no, "duplicate `cartan:` header"));
            }
            cartan = Some(parse_cartan(rest).map_err(|m| syntax(line_no, m))?);
        } else if let Some(rest) = line.strip_prefix("divisors:") {
            if cartan.is_none() {
                return Err(syntax(line_no, "`divisors:` must follow `cartan:`"));
            }
            if divisors.is_some() {
                return Err(syntax(line_no, "duplicate `divisors:` header"));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| syntax(line_no, format!("`{}` is not a divisor count", rest.trim())))?;
            divisors = Some(n);
        } else if line.starts_with('K') {
            if divisors.is_none() {
                return Err(syntax(line_no, "members must follow the `cartan:` and `divisors:` headers"));
            }
            family.push(parse_member(line).map_err(|m| syntax(line_no, m))?);
        } else {
            return Err(syntax(line_no, format!("unrecognized line `{line}`")));
        }
    }
    let cartan = cartan.ok_or_else(|| syntax(last_line.max(1), "missing `cartan:` header"))?;
    let divisors = divisors.ok_or_else(|| syntax(last_line.max(1), "missing `divisors:` header"))?;
    let model = EmbeddingModel::from_parts(cartan, divisors, family);
    model
        .validate()
        .map_err(|v| ModelFileError::Invalid(v.iter().map(ToString::to_string).collect()))?;
    Ok(model)
}

fn parse_member(line: &str) -> Result<Member, String> {
    let (k_part, p_part) = line
        .split_once(';')
        .ok_or_else(|| "expected `K = {...} ; p = {...}`".to_string())?;
    let value = |part: &str, key: &str| -> Result<String, String> {
        part.trim()
            .strip_prefix(key)
            .map(str::trim_start)
            .and_then(|s| s.strip_prefix('='))
            .map(|s| s.trim().to_string())
            .ok_or_else(|| format!("expected `{key} = {{...}}`"))
    };
    let k_text = value(k_part, "K")?;
    let p_text = value(p_part, "p")?;
    let k = parse_divisor_set(&k_text).ok_or_else(|| format!("malformed divisor set `{k_text}`"))?;
    let p = parse_parabolic_set(&p_text).ok_or_else(|| format!("malformed root subset `{p_text}`"))?;
    Ok(Member { k, p })
}

/// Canonical text form of a model.
pub fn save_model(model: &EmbeddingModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "cartan: {}", model.cartan());
    let _ = writeln!(out, "divisors: {}", model.divisors());
    for m in model.family() {
        let _ = writeln!(out, "K = {} ; p = {}", m.k, m.p);
    }
    out
}

pub fn load_model(path: &Path) -> Result<EmbeddingModel, ModelFileError> {
    let text = std::fs::read_to_string(path).map_err(|e| ModelFileError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_model(&text)
}

pub fn write_model(path: &Path, model: &EmbeddingModel) -> std::io::Result<()> {
    std::fs::write(path, save_model(model))
}
