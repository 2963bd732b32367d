//! Parsing of involution and tableau arguments.
//!
//! Involutions: inline `1-3,2-6,4-7@7` (`@5` is the identity on five
//! points), a JSON object `{"n":7,"arcs":[[1,3],...]}`, or a path to a file
//! holding that JSON. Tableaux: inline second column `4,5,7,8@8`, a JSON
//! object `{"n":8,"col1":[...],"col2":[...]}`, or a file.

use std::path::Path;

use linkpat::{Involution, TwoColumnTableau};
use thiserror::Error;

use crate::CliError;

/// A syntax error in an inline argument; `position` is a 1-based column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at column {position} of `{input}`")]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn at(input: &str, position: usize, message: impl Into<String>) -> Self {
        ParseError {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}

fn json_text(arg: &str) -> Result<Option<String>, CliError> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') {
        return Ok(Some(arg.to_string()));
    }
    let path = Path::new(arg);
    if !arg.contains('@') && path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        return Ok(Some(text));
    }
    Ok(None)
}

fn parse_number(input: &str, text: &str, offset: usize, what: &str) -> Result<usize, ParseError> {
    if text.is_empty() {
        return Err(ParseError::at(input, offset + 1, format!("expected {what}")));
    }
    if let Some(bad) = text.find(|c: char| !c.is_ascii_digit()) {
        let c = text[bad..].chars().next().unwrap_or(' ');
        return Err(ParseError::at(input, offset + bad + 1, format!("unexpected `{c}` in {what}")));
    }
    text.parse()
        .map_err(|_| ParseError::at(input, offset + 1, format!("{what} is too large")))
}

/// Splits `body@n`; `n` falls back to `default_n`.
fn split_size(input: &str, default_n: Option<usize>) -> Result<(&str, usize), ParseError> {
    match input.rfind('@') {
        Some(at) => {
            let n = parse_number(input, &input[at + 1..], at + 1, "point count")?;
            if let Some(given) = default_n {
                if given != n {
                    return Err(ParseError::at(
                        input,
                        at + 2,
                        format!("point count {n} conflicts with --n {given}"),
                    ));
                }
            }
            Ok((&input[..at], n))
        }
        None => default_n
            .map(|n| (input, n))
            .ok_or_else(|| ParseError::at(input, input.len() + 1, "expected `@n` (or pass --n)")),
    }
}

/// Parses the inline arc syntax `i-j,...@n`.
pub fn parse_inline_involution(input: &str, default_n: Option<usize>) -> Result<Involution, CliError> {
    let (body, n) = split_size(input, default_n)?;
    let mut arcs = Vec::new();
    if !body.is_empty() {
        let mut offset = 0;
        for piece in body.split(',') {
            let Some(dash) = piece.find('-') else {
                parse_number(input, piece, offset, "endpoint")?;
                let end = offset + piece.len() + 1;
                return Err(ParseError::at(input, end, "expected `-` between endpoints").into());
            };
            let a = parse_number(input, &piece[..dash], offset, "endpoint")?;
            let b = parse_number(input, &piece[dash + 1..], offset + dash + 1, "endpoint")?;
            arcs.push((a.min(b), a.max(b)));
            offset += piece.len() + 1;
        }
    }
    Ok(Involution::new(n, arcs)?)
}

/// Inline, JSON or file.
pub fn parse_involution(arg: &str, default_n: Option<usize>) -> Result<Involution, CliError> {
    match json_text(arg)? {
        Some(text) => {
            let sigma: Involution = serde_json::from_str(&text)?;
            if let Some(n) = default_n.filter(|&n| n != sigma.n()) {
                return Err(CliError::Usage(format!(
                    "involution has {} points but --n is {n}",
                    sigma.n()
                )));
            }
            Ok(sigma)
        }
        None => parse_inline_involution(arg, default_n),
    }
}

/// Parses `j_1,...,j_k@n`, the second column.
pub fn parse_inline_tableau(input: &str, default_n: Option<usize>) -> Result<TwoColumnTableau, CliError> {
    let (body, n) = split_size(input, default_n)?;
    let mut col2 = Vec::new();
    if !body.is_empty() {
        let mut offset = 0;
        for piece in body.split(',') {
            col2.push(parse_number(input, piece, offset, "entry")?);
            offset += piece.len() + 1;
        }
    }
    Ok(TwoColumnTableau::from_second_column(n, col2)?)
}

pub fn parse_tableau(arg: &str, default_n: Option<usize>) -> Result<TwoColumnTableau, CliError> {
    match json_text(arg)? {
        Some(text) => Ok(serde_json::from_str(&text)?),
        None => parse_inline_tableau(arg, default_n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inline_involutions() {
        let sigma = parse_involution("1-3,2-6,4-7@7", None).unwrap();
        assert_eq!(sigma.to_string(), "(1,3)(2,6)(4,7)");
        assert_eq!(parse_involution("@5", None).unwrap(), Involution::identity(5));
        assert_eq!(parse_involution("3-1", Some(3)).unwrap().arcs(), &[(1, 3)]);
    }

    #[test]
    fn json_involution() {
        let sigma = parse_involution(r#"{"n":4,"arcs":[[1,2]]}"#, None).unwrap();
        assert_eq!(sigma.arcs(), &[(1, 2)]);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = |s: &str| match parse_involution(s, None) {
            Err(CliError::Parse(e)) => e.position,
            other => panic!("{other:?}"),
        };
        assert_eq!(err("1-3,2x6@7"), 6);
        assert_eq!(err("1-3,2-6"), 8);
        assert_eq!(err("1-3@x"), 5);
        assert_eq!(err("1-@4"), 3);
    }

    #[test]
    fn semantic_errors_come_from_the_library() {
        assert!(matches!(
            parse_involution("1-3,3-4@4", None),
            Err(CliError::Core(linkpat::Error::DuplicateEndpoint(3)))
        ));
    }

    #[test]
    fn tableaux() {
        let t = parse_tableau("4,5,7,8@8", None).unwrap();
        assert_eq!(t.col1(), &[1, 2, 3, 6]);
        assert_eq!(parse_tableau("@3", None).unwrap().k(), 0);
        assert!(parse_tableau("1@2", None).is_err());
    }
}
