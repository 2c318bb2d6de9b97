//! Text grammar for operator words.
//!
//! A word is a comma-separated list of tokens, applied right-to-left as
//! written (so `"H(1),H(2),H(3)"` computes H_1(H_2(H_3(input)))):
//!
//! ```text
//! H(m)  C(m)  B(m)  S(m)   creation operators
//! mh(c) me(c)               multiplication by h_c, e_c
//! hp(c) ep(c)               the adjoints h_c⊥, e_c⊥
//! w                         the involution ω
//! ```
//!
//! Whitespace inside a token is rejected; negative indices are written like
//! `H(-2)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::operators::OperatorSpec;

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorSpec::MulH(c) => write!(f, "mh({})", c),
            OperatorSpec::MulE(c) => write!(f, "me({})", c),
            OperatorSpec::HPerp(c) => write!(f, "hp({})", c),
            OperatorSpec::EPerp(c) => write!(f, "ep({})", c),
            OperatorSpec::Omega => write!(f, "w"),
            OperatorSpec::S(m) => write!(f, "S({})", m),
            OperatorSpec::CoS(m) => write!(f, "coS({})", m),
            OperatorSpec::H(m) => write!(f, "H({})", m),
            OperatorSpec::C(m) => write!(f, "C({})", m),
            OperatorSpec::B(m) => write!(f, "B({})", m),
        }
    }
}

/// Render a word in the grammar's text form.
pub fn word_to_string(word: &[OperatorSpec]) -> String {
    word.iter()
        .map(|op| op.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Parse an operator word. The empty string is the empty word (identity).
pub fn parse_word(text: &str) -> Result<Vec<OperatorSpec>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .enumerate()
        .map(|(index, raw)| parse_token(index, raw))
        .collect()
}

fn parse_token(index: usize, raw: &str) -> Result<OperatorSpec> {
    let token = raw.trim();
    let err = |reason: &str| Error::WordParse {
        index,
        token: token.to_string(),
        reason: reason.to_string(),
    };
    if token.is_empty() {
        return Err(err("empty token"));
    }
    if token.chars().any(char::is_whitespace) {
        return Err(err("whitespace inside token"));
    }
    if token == "w" {
        return Ok(OperatorSpec::Omega);
    }
    let open = token
        .find('(')
        .ok_or_else(|| err("expected NAME(int) or w"))?;
    if !token.ends_with(')') {
        return Err(err("missing closing parenthesis"));
    }
    let name = &token[..open];
    let arg = &token[open + 1..token.len() - 1];
    let m: i64 = arg.parse().map_err(|_| err("argument is not an integer"))?;
    match name {
        "H" => Ok(OperatorSpec::H(m)),
        "C" => Ok(OperatorSpec::C(m)),
        "B" => Ok(OperatorSpec::B(m)),
        "S" => Ok(OperatorSpec::S(m)),
        "coS" => Ok(OperatorSpec::CoS(m)),
        "mh" => Ok(OperatorSpec::MulH(m)),
        "me" => Ok(OperatorSpec::MulE(m)),
        "hp" => Ok(OperatorSpec::HPerp(m)),
        "ep" => Ok(OperatorSpec::EPerp(m)),
        _ => Err(err("unknown operator name")),
    }
}
