//! The line-oriented algebra definition format.
//!
//! ```text
//! algebra K3
//! even eps : weight 0
//! odd  a   : weight 1/2
//! odd  b   : weight -1/2
//! eps*eps = eps
//! a*b     = 1/2 eps
//! ```
//!
//! A `superalgebra NAME` header switches to bracket entries `[x,y] = ...`.

use std::fmt::Write as _;

use super::spec::{AlgebraSpec, Style};
use crate::error::{DomainError, Error, ParseError, Result};
use crate::kernel::{BasisVector, Element, Parity, Weight};
use crate::text::{parse_linear, strip_comment, tokens};

pub fn load_spec(text: &str) -> Result<AlgebraSpec> {
    let mut header: Option<(String, Style)> = None;
    let mut generators: Vec<BasisVector> = Vec::new();
    let mut entries: Vec<(BasisVector, BasisVector, Element)> = Vec::new();
    let mut seen: Vec<(BasisVector, BasisVector)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = strip_comment(raw);
        let toks = tokens(line);
        let Some(first) = toks.first() else { continue };
        let err = |col: usize, msg: String| Error::Parse(ParseError::new(line_no, col, msg));

        match first.text {
            "algebra" | "superalgebra" => {
                if header.is_some() {
                    return Err(err(first.column, "duplicate header".into()));
                }
                let name = toks.get(1).ok_or_else(|| err(first.column, "missing algebra name".into()))?;
                if toks.len() > 2 {
                    return Err(err(toks[2].column, "unexpected text after algebra name".into()));
                }
                let style = if first.text == "algebra" { Style::Product } else { Style::Bracket };
                header = Some((name.text.to_string(), style));
            }
            "even" | "odd" => {
                if header.is_none() {
                    return Err(err(first.column, "generator declared before the header".into()));
                }
                let parity = if first.text == "even" { Parity::Even } else { Parity::Odd };
                let name = toks.get(1).ok_or_else(|| err(first.column, "missing generator name".into()))?;
                if !name.text.chars().all(|c| c.is_alphanumeric() || c == '\'') {
                    return Err(err(name.column, format!("invalid generator name `{}`", name.text)));
                }
                let weight = match &toks[2..] {
                    [] => Weight::ZERO,
                    [colon, kw, w] if colon.text == ":" && kw.text == "weight" => {
                        w.text.parse::<Weight>().map_err(|e| err(w.column, e.message))?
                    }
                    [t, ..] => return Err(err(t.column, "expected `: weight W`".into())),
                };
                let g = BasisVector::new(name.text, parity, weight);
                if generators.contains(&g) {
                    return Err(err(name.column, format!("generator `{g}` declared twice")));
                }
                generators.push(g);
            }
            _ => {
                let Some((_, style)) = &header else {
                    return Err(err(first.column, "expected `algebra NAME` header".into()));
                };
                let eq = line.find('=').ok_or_else(|| err(first.column, "expected an entry `u*v = ...`".into()))?;
                let (u, v) = parse_lhs(&line[..eq], *style, &generators).map_err(|(c, m)| err(c, m))?;
                if seen.contains(&(u.clone(), v.clone())) {
                    return Err(err(first.column, format!("entry for {u},{v} listed twice")));
                }
                seen.push((u.clone(), v.clone()));
                let rhs = &line[eq + 1..];
                let e = parse_linear(rhs, eq + 2, |names| match names {
                    [t] => find(&generators, t.text).ok_or_else(|| {
                        ParseError::new(0, t.column, format!("unknown generator `{}`", t.text))
                    }),
                    [] => Err(ParseError::new(0, eq + 2, "a scalar is not an algebra element")),
                    [_, t, ..] => Err(ParseError::new(0, t.column, "expected a single generator per term")),
                })
                .map_err(|e| {
                    let col = e.column;
                    Error::Parse(e.at(line_no, col))
                })?;
                entries.push((u, v, e.map_linear(|g| Element::basis(g.clone()))));
            }
        }
    }
    let (name, style) = header.ok_or_else(|| Error::Parse(ParseError::new(1, 1, "missing `algebra NAME` header")))?;
    AlgebraSpec::from_table(&name, style, order_generators(generators), entries).map_err(Error::from)
}

/// Evens first, keeping declaration order within each parity.
fn order_generators(mut gens: Vec<BasisVector>) -> Vec<BasisVector> {
    gens.sort_by_key(|g| g.parity());
    gens
}

fn find(gens: &[BasisVector], name: &str) -> Option<BasisVector> {
    gens.iter().find(|g| g.name() == name).cloned()
}

fn parse_lhs(text: &str, style: Style, gens: &[BasisVector]) -> Result<(BasisVector, BasisVector), (usize, String)> {
    let start = text.len() - text.trim_start().len() + 1;
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let parts: Option<(&str, &str)> = match style {
        Style::Product => compact.split_once('*'),
        Style::Bracket => compact.strip_prefix('[').and_then(|s| s.strip_suffix(']')).and_then(|s| s.split_once(',')),
    };
    let (l, r) = parts.ok_or_else(|| {
        let shape = if style == Style::Product { "u*v" } else { "[u,v]" };
        (start, format!("expected `{shape}` on the left of `=`"))
    })?;
    let look = |n: &str| find(gens, n).ok_or_else(|| (start, format!("unknown generator `{n}`")));
    Ok((look(l)?, look(r)?))
}

/// Writes a finite table back in the definition format.
pub fn to_document(spec: &AlgebraSpec) -> Result<String> {
    let Some(entries) = spec.table_entries() else {
        return Err(DomainError::Unsupported("only finite tables have a document form".into()).into());
    };
    let mut out = String::new();
    let bracket = spec.is_bracket();
    let _ = writeln!(out, "{} {}", if bracket { "superalgebra" } else { "algebra" }, spec.name());
    for g in spec.generators() {
        let _ = writeln!(out, "{} {} : weight {}", g.parity(), g, g.weight());
    }
    let pos = |g: &BasisVector| spec.generators().iter().position(|h| h == g);
    for (u, v, e) in entries {
        if pos(u) > pos(v) {
            continue;
        }
        if bracket {
            let _ = writeln!(out, "[{u},{v}] = {e}");
        } else {
            let _ = writeln!(out, "{u}*{v} = {e}");
        }
    }
    Ok(out)
}
