//! Line-oriented lexing shared by the definition-file parsers and the CLI.

use crate::error::ParseError;
use crate::kernel::{LinComb, Scalar};

/// A whitespace-separated token and its 1-based column.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub column: usize,
}

pub(crate) fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &line[s..i], column: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: s + 1 });
    }
    out
}

/// Strips a trailing `#` comment.
pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses `c1 n1 n2 + c2 n3 - n4 ...` into a linear combination. Each term is an
/// optional rational coefficient followed by zero or more names; `resolve` turns
/// the names of one term into a basis element. Columns in errors are relative to
/// `column_offset`.
pub(crate) fn parse_linear<T, F>(text: &str, column_offset: usize, mut resolve: F) -> Result<LinComb<T>, ParseError>
where
    T: Ord + Clone,
    F: FnMut(&[Token<'_>]) -> Result<T, ParseError>,
{
    let toks = tokens(text);
    if toks.is_empty() {
        return Err(ParseError::new(0, column_offset, "empty expression"));
    }
    let mut out = LinComb::zero();
    let mut sign = Scalar::ONE;
    let mut coeff: Option<Scalar> = None;
    let mut names: Vec<Token<'_>> = Vec::new();
    let mut expect_term = true;

    let flush = |sign: Scalar, coeff: Option<Scalar>, names: &mut Vec<Token<'_>>, out: &mut LinComb<T>, resolve: &mut F| {
        let c = sign * coeff.unwrap_or(Scalar::ONE);
        let t = resolve(names)?;
        out.add_term(c, t);
        names.clear();
        Ok::<(), ParseError>(())
    };

    for tok in toks {
        let col = column_offset + tok.column - 1;
        let mut body = tok.text;
        if body == "+" || body == "-" {
            if !expect_term {
                flush(sign, coeff.take(), &mut names, &mut out, &mut resolve)?;
                expect_term = true;
                sign = Scalar::ONE;
            } else if !names.is_empty() || coeff.is_some() {
                return Err(ParseError::new(0, col, "dangling operator"));
            }
            if body == "-" {
                sign = -sign;
            }
            continue;
        }
        // A glued sign in front of a name (`-a`) acts as an operator.
        if let Some(rest) = body.strip_prefix('-').or_else(|| body.strip_prefix('+')) {
            let starts_numeric = rest.chars().next().is_some_and(|c| c.is_ascii_digit());
            if !rest.is_empty() && !starts_numeric {
                if !expect_term {
                    flush(sign, coeff.take(), &mut names, &mut out, &mut resolve)?;
                    sign = Scalar::ONE;
                }
                if body.starts_with('-') {
                    sign = -sign;
                }
                body = rest;
                expect_term = true;
            }
        }
        if expect_term && names.is_empty() && coeff.is_none() {
            if let Ok(c) = body.parse::<Scalar>() {
                coeff = Some(c);
                expect_term = false;
                continue;
            }
        }
        if body.parse::<Scalar>().is_ok() && !body.contains(char::is_alphabetic) {
            return Err(ParseError::new(0, col, format!("unexpected number `{body}`")));
        }
        names.push(Token { text: body, column: col });
        expect_term = false;
    }
    if expect_term {
        return Err(ParseError::new(0, column_offset, "expression ends with an operator"));
    }
    flush(sign, coeff, &mut names, &mut out, &mut resolve)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(text: &str) -> Result<LinComb<String>, ParseError> {
        parse_linear(text, 1, |names| Ok(names.iter().map(|t| t.text).collect::<Vec<_>>().join(" ")))
    }

    #[test]
    fn sums_and_coefficients() {
        let e = words("1/2 a b - c + 2 d").unwrap();
        assert_eq!(e.coeff(&"a b".to_string()), Scalar::HALF);
        assert_eq!(e.coeff(&"c".to_string()), -Scalar::ONE);
        assert_eq!(e.coeff(&"d".to_string()), Scalar::int(2));
    }

    #[test]
    fn glued_signs_and_indices() {
        let e = words("-a_-1/2 + -1/2 x").unwrap();
        assert_eq!(e.coeff(&"a_-1/2".to_string()), -Scalar::ONE);
        assert_eq!(e.coeff(&"x".to_string()), Scalar::new(-1, 2));
    }

    #[test]
    fn bare_number_is_unit_term() {
        let e = words("1").unwrap();
        assert_eq!(e.coeff(&String::new()), Scalar::ONE);
    }

    #[test]
    fn dangling_operator_rejected() {
        assert!(words("a +").is_err());
        assert!(words("").is_err());
    }
}
