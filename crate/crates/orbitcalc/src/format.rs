//! The plain-text orbit-space format.
//!
//! Lines starting with `#` are comments and blank lines are ignored. Every
//! other line holds one edge weight as two decimal integers `m n`, in cyclic
//! order.

use std::fmt;

use orbitcalc_core::{OrbitSpaceError, WeightedOrbitSpace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Line `line` (1-based) is not two integers.
    Syntax { line: usize, text: String },
    Invalid(OrbitSpaceError),
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "parse_error",
            ParseError::Invalid(e) => e.code(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, text } => write!(f, "line {line}: expected \"m n\", got {text:?}"),
            ParseError::Invalid(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<OrbitSpaceError> for ParseError {
    fn from(e: OrbitSpaceError) -> Self {
        ParseError::Invalid(e)
    }
}

/// Parses the edge list without validating legality.
pub fn parse_edges(text: &str) -> Result<Vec<(i64, i64)>, ParseError> {
    let mut edges = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let syntax = || ParseError::Syntax { line: k + 1, text: line.to_string() };
        let mut fields = trimmed.split_whitespace();
        let m = fields.next().and_then(|f| f.parse().ok()).ok_or_else(syntax)?;
        let n = fields.next().and_then(|f| f.parse().ok()).ok_or_else(syntax)?;
        if fields.next().is_some() {
            return Err(syntax());
        }
        edges.push((m, n));
    }
    Ok(edges)
}

pub fn parse(text: &str) -> Result<WeightedOrbitSpace, ParseError> {
    Ok(WeightedOrbitSpace::validate(&parse_edges(text)?)?)
}

pub fn write(x: &WeightedOrbitSpace) -> String {
    x.to_pairs().iter().map(|(m, n)| format!("{m} {n}\n")).collect()
}
