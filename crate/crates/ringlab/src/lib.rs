//! IO, file formats and reporting for the finite ring laboratory.
//!
//! This crate carries everything in `ringlab` that needs the operating
//! system: the ring-expression parser and evaluator, the `.ring` file
//! format, JSON/text report rendering, and the multi-threaded suite
//! runner. All mathematics lives in [`ringlab_core`].

pub mod error;
pub mod eval;
pub mod expr;
pub mod report;
pub mod ringfile;
pub mod runner;

pub use error::CliError;
pub use eval::Evaluator;
pub use expr::{parse_expression, Expr, ParseError};

use ringlab_core::harness::{CorpusEntry, RingCorpus};

/// Builds a corpus from expression strings. Entry labels are the canonical
/// printed expressions, so every report line replays through the parser.
pub fn corpus_from_expressions(
    evaluator: &mut Evaluator,
    expressions: &[&str],
) -> Result<RingCorpus, CliError> {
    let mut entries = Vec::new();
    for text in expressions {
        let expr = parse_expression(text)?;
        let built = evaluator.eval(&expr)?;
        entries.push(CorpusEntry {
            expr: expr.to_string(),
            built: (*built).clone(),
        });
    }
    Ok(RingCorpus { entries })
}

/// Splits a corpus file into expression lines: one expression per line,
/// `#` starts a comment line, blank lines are ignored.
pub fn corpus_lines(text: &str) -> Vec<&str> {
    text.lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'))
        .collect()
}
