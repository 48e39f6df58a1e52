//! Text grammar for braid words.
//!
//! Tokens are separated by whitespace. `s<i>` is the half-twist `σ_i`; the
//! named tokens `SS<i>`, `RR<i>`, `T<j>`, `R`, `S` and `FT` stand for the
//! arc elements on `m = 2n + 2` strands. A trailing `'` inverts a token and a
//! suffix `^k` raises it to an integer power. `1` is the empty word. The
//! leftmost token is the leftmost factor.

use hilden_core::braid::{BraidLetter, BraidWord, NamedElement};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at column {column}, token `{token}`: {reason}")]
pub struct ParseError {
    /// 1-based character column of the token.
    pub column: usize,
    pub token: String,
    pub reason: String,
}

/// Parse a generator name without exponent or inversion.
pub fn parse_element(name: &str) -> Option<NamedElement> {
    let index = |rest: &str| -> Option<usize> {
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        rest.parse().ok().filter(|&i| i > 0)
    };
    match name {
        "R" => Some(NamedElement::HalfTwistAll),
        "S" => Some(NamedElement::CycleArcs),
        "FT" => Some(NamedElement::FullTwist),
        _ => {
            if let Some(rest) = name.strip_prefix("SS") {
                index(rest).map(NamedElement::ArcS)
            } else if let Some(rest) = name.strip_prefix("RR") {
                index(rest).map(NamedElement::ArcR)
            } else if let Some(rest) = name.strip_prefix('T') {
                index(rest).map(NamedElement::ArcTwist)
            } else if let Some(rest) = name.strip_prefix('s') {
                index(rest).map(NamedElement::Sigma)
            } else {
                None
            }
        }
    }
}

fn split_exponent(tok: &str) -> Result<(&str, i64), String> {
    let (base, mut exp) = match tok.split_once('^') {
        Some((base, e)) => (
            base,
            e.parse::<i64>()
                .map_err(|_| format!("bad exponent `{e}`"))?,
        ),
        None => (tok, 1),
    };
    let base = match base.strip_suffix('\'') {
        Some(b) => {
            exp = -exp;
            b
        }
        None => base,
    };
    Ok((base, exp))
}

fn expand(element: NamedElement, strands: usize) -> Result<BraidWord, String> {
    let word = match element {
        NamedElement::Sigma(i) => BraidWord::new(strands, vec![BraidLetter::sigma(i)]),
        _ if strands % 2 == 1 || strands < 4 => {
            return Err(format!(
                "named tokens need an even number of strands, at least 4 (got {strands})"
            ));
        }
        named => named.word((strands - 2) / 2),
    };
    word.map_err(|e| e.to_string())
}

/// Parse a word on `strands` strands.
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord, ParseError> {
    let mut out = BraidWord::empty(strands);
    let mut column = 0;
    let mut rest = text;
    while !rest.is_empty() {
        let trimmed = rest.trim_start();
        column += rest[..rest.len() - trimmed.len()].chars().count();
        rest = trimmed;
        if rest.is_empty() {
            break;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..end];
        let err = |reason: String| ParseError {
            column: column + 1,
            token: tok.to_owned(),
            reason,
        };
        if tok != "1" {
            let (base, exp) = split_exponent(tok).map_err(err)?;
            let element = parse_element(base).ok_or_else(|| err("unknown generator".into()))?;
            let word = expand(element, strands).map_err(err)?;
            out = out.concat(&word.pow(exp)).expect("same strand count");
        }
        column += tok.chars().count();
        rest = &rest[end..];
    }
    Ok(out)
}
