//! Line-oriented presentation format.
//!
//! ```text
//! # Λ(1,1,0)
//! vertex 0
//! arrow a0 0 0
//! relation a0 a0
//! ```
//!
//! Declarations may appear in any order. The serializer emits vertices,
//! arrows and relations in canonical order, one per line.

use std::collections::HashMap;

use super::{BoundQuiverPresentation, QuiverError};

/// A token with its line and column.
type Spanned = (String, usize, usize);

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let body = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in body.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, i));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, body.len()));
    }
    out.into_iter()
        .map(|(s, e)| Token {
            text: &body[s..e],
            column: body[..s].chars().count() + 1,
        })
        .collect()
}

fn located(line: usize, column: usize, error: QuiverError) -> QuiverError {
    QuiverError::Located {
        line,
        column,
        error: Box::new(error),
    }
}

pub fn parse_presentation(text: &str) -> Result<BoundQuiverPresentation, QuiverError> {
    let mut vertices: Vec<Spanned> = Vec::new();
    let mut arrows: Vec<(String, [Spanned; 2], usize, usize)> = Vec::new();
    let mut relations: Vec<Vec<Spanned>> = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let line = n + 1;
        let tokens = tokenize(raw);
        let Some(head) = tokens.first() else { continue };
        let arity_error = |expected: &str| {
            located(
                line,
                head.column,
                QuiverError::Syntax(format!("`{}` expects {expected}", head.text)),
            )
        };
        match head.text {
            "vertex" => {
                if tokens.len() != 2 {
                    return Err(arity_error("exactly one id"));
                }
                vertices.push((tokens[1].text.to_string(), line, tokens[1].column));
            }
            "arrow" => {
                if tokens.len() != 4 {
                    return Err(arity_error("an id, a source and a target"));
                }
                let endpoint = |t: &Token| (t.text.to_string(), line, t.column);
                arrows.push((
                    tokens[1].text.to_string(),
                    [endpoint(&tokens[2]), endpoint(&tokens[3])],
                    line,
                    tokens[1].column,
                ));
            }
            "relation" => {
                if tokens.len() < 3 {
                    return Err(arity_error("at least two arrow ids"));
                }
                relations.push(
                    tokens[1..]
                        .iter()
                        .map(|t| (t.text.to_string(), line, t.column))
                        .collect(),
                );
            }
            other => {
                return Err(located(
                    line,
                    head.column,
                    QuiverError::Syntax(format!("unknown declaration `{other}`")),
                ))
            }
        }
    }

    // Resolve references here so errors carry positions; `new` re-validates.
    let mut vertex_seen: HashMap<&str, ()> = HashMap::new();
    for (v, line, col) in &vertices {
        if vertex_seen.insert(v.as_str(), ()).is_some() {
            return Err(located(*line, *col, QuiverError::DuplicateVertex(v.clone())));
        }
    }
    let mut arrow_ends: HashMap<&str, (&str, &str)> = HashMap::new();
    for (id, ends, line, col) in &arrows {
        for (v, l, c) in ends {
            if !vertex_seen.contains_key(v.as_str()) {
                return Err(located(*l, *c, QuiverError::UnknownVertex(v.clone())));
            }
        }
        if arrow_ends
            .insert(id.as_str(), (ends[0].0.as_str(), ends[1].0.as_str()))
            .is_some()
        {
            return Err(located(*line, *col, QuiverError::DuplicateArrow(id.clone())));
        }
    }
    for rel in &relations {
        for (a, line, col) in rel {
            if !arrow_ends.contains_key(a.as_str()) {
                return Err(located(*line, *col, QuiverError::UnknownArrow(a.clone())));
            }
        }
        for w in rel.windows(2) {
            let (first, second) = (arrow_ends[w[0].0.as_str()], arrow_ends[w[1].0.as_str()]);
            if first.1 != second.0 {
                return Err(located(
                    w[1].1,
                    w[1].2,
                    QuiverError::NotComposable {
                        path: rel.iter().map(|r| r.0.as_str()).collect::<Vec<_>>().join(" "),
                        first: w[0].0.clone(),
                        end: first.1.to_string(),
                        second: w[1].0.clone(),
                        start: second.0.to_string(),
                    },
                ));
            }
        }
    }

    BoundQuiverPresentation::new(
        vertices.into_iter().map(|v| v.0),
        arrows
            .into_iter()
            .map(|(id, [s, t], _, _)| (id, s.0, t.0))
            .collect::<Vec<_>>(),
        relations
            .into_iter()
            .map(|r| r.into_iter().map(|a| a.0).collect()),
    )
}

/// Canonical text form; byte-stable for equal presentations.
pub fn serialize_presentation(p: &BoundQuiverPresentation) -> String {
    let q = p.quiver();
    let mut out = String::new();
    for v in q.vertices() {
        out.push_str(&format!("vertex {v}\n"));
    }
    for a in q.arrows() {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            a.id,
            q.vertex_id(a.source),
            q.vertex_id(a.target)
        ));
    }
    for r in p.relations() {
        let ids: Vec<&str> = r.iter().map(|&a| q.arrow(a).id.as_str()).collect();
        out.push_str(&format!("relation {}\n", ids.join(" ")));
    }
    out
}
