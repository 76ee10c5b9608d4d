//! Line-oriented presentation files.
//!
//! ```text
//! # comments run to the end of the line
//! field Q            # or: field F 7
//! vertex 1
//! vertex 2
//! vertex 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 3
//! relation b*a       # composition is right to left: first a, then b
//! bound 4            # optional: paths of length >= 4 vanish
//! ```
//!
//! A relation term is `[coef*]a_k*...*a_1` with `coef` an integer or `n/d`;
//! terms are joined by `+` or `-`.

use std::fmt::Write as _;

use crate::algebra::{PathWord, Presentation, Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{Field, Scalar};

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(is_ident_start) && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_vertex_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '.' | '\''))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(String),
    Star,
    Plus,
    Minus,
}

/// Tokens of a relation body with their 1-based columns.
fn lex_relation(body: &str, line: usize, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let cs: Vec<char> = body.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        let col = offset + i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        match c {
            '*' => out.push((Tok::Star, col)),
            '+' => out.push((Tok::Plus, col)),
            '-' => out.push((Tok::Minus, col)),
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < cs.len() && (cs[i + 1].is_ascii_digit() || cs[i + 1] == '/') {
                    i += 1;
                }
                if i + 1 < cs.len() && is_ident_start(cs[i + 1]) {
                    return Err(syntax(line, offset + i + 2, "expected `*` after coefficient"));
                }
                out.push((Tok::Num(cs[start..=i].iter().collect()), col));
            }
            c if is_ident_start(c) => {
                let start = i;
                while i + 1 < cs.len() && (cs[i + 1].is_ascii_alphanumeric() || cs[i + 1] == '_') {
                    i += 1;
                }
                out.push((Tok::Ident(cs[start..=i].iter().collect()), col));
            }
            _ => return Err(syntax(line, col, format!("unexpected character `{c}`"))),
        }
        i += 1;
    }
    Ok(out)
}

fn parse_relation(p: &Presentation, body: &str, line: usize, offset: usize) -> Result<Relation> {
    let toks = lex_relation(body, line, offset)?;
    let end_col = offset + body.chars().count() + 1;
    let mut pos = 0;
    let mut terms = Vec::new();
    let field = p.field;
    loop {
        let mut negative = false;
        match toks.get(pos) {
            Some((Tok::Plus, _)) => pos += 1,
            Some((Tok::Minus, _)) => {
                negative = true;
                pos += 1;
            }
            _ => {}
        }
        let mut coef = field.one();
        if let Some((Tok::Num(n), col)) = toks.get(pos) {
            coef = Scalar::parse_in(field, n).map_err(|e| syntax(line, *col, e.to_string()))?;
            if coef.is_zero() {
                return Err(syntax(line, *col, "zero coefficient"));
            }
            pos += 1;
            match toks.get(pos) {
                Some((Tok::Star, _)) => pos += 1,
                Some((_, col)) => return Err(syntax(line, *col, "expected `*` after coefficient")),
                None => return Err(syntax(line, end_col, "expected a path after coefficient")),
            }
        }
        let mut names = Vec::new();
        loop {
            match toks.get(pos) {
                Some((Tok::Ident(a), col)) => {
                    let id = p.quiver.arrow_index(a).ok_or_else(|| Error::UnknownArrow(a.clone()))?;
                    names.push((id, *col));
                    pos += 1;
                }
                Some((_, col)) => return Err(syntax(line, *col, "expected an arrow name")),
                None => return Err(syntax(line, end_col, "expected an arrow name")),
            }
            match toks.get(pos) {
                Some((Tok::Star, _)) => pos += 1,
                Some((Tok::Ident(_), col)) => return Err(syntax(line, *col, "arrows must be joined by `*`")),
                _ => break,
            }
        }
        let ids: Vec<usize> = names.iter().rev().map(|x| x.0).collect();
        let path = PathWord::from_arrows(&p.quiver, &ids)
            .map_err(|_| syntax(line, names[0].1, "arrows do not compose to a path"))?;
        if negative {
            coef = coef.neg_ref();
        }
        terms.push((coef, path));
        match toks.get(pos) {
            None => break,
            Some((Tok::Plus | Tok::Minus, _)) => {}
            Some((_, col)) => return Err(syntax(line, *col, "expected `+` or `-`")),
        }
    }
    Ok(Relation::new(terms))
}

/// Parses a presentation file. Errors carry 1-based line and column.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut p = Presentation::new(Field::Rational, Quiver::new());
    let mut field_seen = false;
    let mut body_started = false;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (kw, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed.trim_end(), ""));
        let rest_col = indent + kw.len() + 2 + (rest.len() - rest.trim_start().len());
        let rest = rest.trim();
        match kw {
            "field" => {
                if field_seen || body_started {
                    return Err(syntax(line, indent + 1, "`field` must come first and only once"));
                }
                field_seen = true;
                let parts: Vec<&str> = rest.split_whitespace().collect();
                p.field = match parts.as_slice() {
                    ["Q"] => Field::Rational,
                    ["F", q] => {
                        let q: u64 = q.parse().map_err(|_| syntax(line, rest_col + 2, "expected a prime"))?;
                        Field::prime(q).map_err(|e| syntax(line, rest_col + 2, e.to_string()))?
                    }
                    _ => return Err(syntax(line, rest_col, "expected `Q` or `F <p>`")),
                };
            }
            "vertex" => {
                body_started = true;
                if !is_vertex_label(rest) {
                    return Err(syntax(line, rest_col, format!("invalid vertex label `{rest}`")));
                }
                p.quiver.add_vertex(rest).map_err(|e| syntax(line, rest_col, e.to_string()))?;
            }
            "arrow" => {
                body_started = true;
                let Some((name, ends)) = rest.split_once(':') else {
                    return Err(syntax(line, rest_col, "expected `arrow <name>: <source> -> <target>`"));
                };
                let name = name.trim();
                if !is_ident(name) {
                    return Err(syntax(line, rest_col, format!("invalid arrow name `{name}`")));
                }
                let Some((s, t)) = ends.split_once("->") else {
                    return Err(syntax(line, rest_col + name.len() + 1, "expected `->`"));
                };
                let (s, t) = (s.trim(), t.trim());
                let vs = p.quiver.vertex_index(s).ok_or_else(|| Error::UnknownVertex(s.into()))?;
                let vt = p.quiver.vertex_index(t).ok_or_else(|| Error::UnknownVertex(t.into()))?;
                p.quiver.add_arrow(name, vs, vt).map_err(|e| syntax(line, rest_col, e.to_string()))?;
            }
            "relation" => {
                body_started = true;
                if rest.is_empty() {
                    return Err(syntax(line, rest_col, "empty relation"));
                }
                let r = parse_relation(&p, rest, line, rest_col - 1)?;
                p.add_relation(r)?;
            }
            "bound" => {
                body_started = true;
                let b: usize = rest.parse().map_err(|_| syntax(line, rest_col, "expected a length"))?;
                if b < 2 {
                    return Err(syntax(line, rest_col, "bound must be at least 2"));
                }
                p.length_bound = Some(b);
            }
            _ => return Err(syntax(line, indent + 1, format!("unknown keyword `{kw}`"))),
        }
    }
    p.validate()?;
    Ok(p)
}

/// Prints a presentation in the normalized file form accepted by
/// [`parse_presentation`].
pub fn print_presentation(p: &Presentation) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "field {}", p.field);
    let q = &p.quiver;
    for v in q.vertices() {
        let _ = writeln!(s, "vertex {v}");
    }
    for a in q.arrows() {
        let _ = writeln!(s, "arrow {}: {} -> {}", a.name, q.vertices()[a.source], q.vertices()[a.target]);
    }
    for r in &p.relations {
        let _ = writeln!(s, "relation {}", r.display(q));
    }
    if let Some(b) = p.length_bound {
        let _ = writeln!(s, "bound {b}");
    }
    s
}
