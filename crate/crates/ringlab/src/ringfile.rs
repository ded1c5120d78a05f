//! The `.ring` file format.
//!
//! ```text
//! # comment lines start with '#'
//! ring <name> order <n> one <i>
//! <n rows of the addition table>
//! <n rows of the multiplication table>
//! ```
//!
//! Indices are in `[0, n)`; zero must be index 0. The writer emits a
//! canonical form (single spaces, one row per line, no comments), so
//! export -> import -> export is bit-exact. Names are written with
//! whitespace runs replaced by `_` since the header is token-delimited.

use std::fs;
use std::path::Path;

use ringlab_core::FiniteRing;

use crate::error::CliError;

/// Canonical text form of a ring.
pub fn render_ring(ring: &FiniteRing) -> String {
    let n = ring.order();
    let mut out = String::new();
    out.push_str(&format!(
        "ring {} order {} one {}\n",
        sanitize_name(ring.name()),
        n,
        ring.one()
    ));
    let mut table = |get: &dyn Fn(usize, usize) -> usize| {
        for a in 0..n {
            let row: Vec<String> = (0..n).map(|b| get(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    };
    table(&|a, b| ring.add(a, b));
    table(&|a, b| ring.mul(a, b));
    out
}

fn sanitize_name(name: &str) -> String {
    let mapped: String = name
        .chars()
        .map(|c| if c.is_whitespace() { '_' } else { c })
        .collect();
    if mapped.is_empty() {
        String::from("_")
    } else {
        mapped
    }
}

/// Parses and fully validates a `.ring` document.
pub fn parse_ring(text: &str) -> Result<FiniteRing, CliError> {
    let mut tokens = text
        .lines()
        .filter(|line| !line.trim_start().starts_with('#'))
        .flat_map(|line| line.split_whitespace());
    let mut expect = |what: &str| -> Result<&str, CliError> {
        tokens
            .next()
            .ok_or_else(|| CliError::Format(format!("unexpected end of file, expected {what}")))
    };
    let keyword = expect("'ring'")?;
    if keyword != "ring" {
        return Err(CliError::Format(format!(
            "expected 'ring' header, got '{keyword}'"
        )));
    }
    let name = expect("ring name")?.to_string();
    let kw = expect("'order'")?;
    if kw != "order" {
        return Err(CliError::Format(format!("expected 'order', got '{kw}'")));
    }
    let order: usize = expect("order value")?
        .parse()
        .map_err(|_| CliError::Format("order is not a number".into()))?;
    let kw = expect("'one'")?;
    if kw != "one" {
        return Err(CliError::Format(format!("expected 'one', got '{kw}'")));
    }
    let one: usize = expect("one index")?
        .parse()
        .map_err(|_| CliError::Format("one is not a number".into()))?;
    let mut read_table = |what: &str| -> Result<Vec<u32>, CliError> {
        let mut flat = Vec::with_capacity(order * order);
        for _ in 0..order * order {
            let tok = expect(what)?;
            let v: usize = tok
                .parse()
                .map_err(|_| CliError::Format(format!("bad {what} entry '{tok}'")))?;
            flat.push(v as u32);
        }
        Ok(flat)
    };
    let add = read_table("addition table entry")?;
    let mul = read_table("multiplication table entry")?;
    if let Some(extra) = tokens.next() {
        return Err(CliError::Format(format!(
            "trailing content after tables: '{extra}'"
        )));
    }
    Ok(FiniteRing::from_flat(&name, order, add, mul, one)?)
}

pub fn read_ring(path: &Path) -> Result<FiniteRing, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_ring(&text)
}

pub fn write_ring(path: &Path, ring: &FiniteRing) -> Result<(), CliError> {
    fs::write(path, render_ring(ring)).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
