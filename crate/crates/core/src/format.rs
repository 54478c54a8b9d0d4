//! Text and JSON encodings of hypergraphs and graphs.
//!
//! JSON: `{"carrier":["x","y"],"members":[["x"],["y"],["x","y"]]}`.
//!
//! Compact text: one member per line, atoms separated by commas, `#` starts
//! a comment. The carrier is the set of atoms mentioned, ordered by first
//! appearance.
//!
//! Graph edge lists: one `x-y` edge per line, plus optional
//! `atoms: x, y, z` lines declaring vertices (isolated ones included).

use std::collections::HashSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::atoms::{AtomSet, AtomTable};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Serialize, Deserialize)]
struct HypergraphJson {
    carrier: Vec<String>,
    members: Vec<Vec<String>>,
}

fn member_set(atoms: &AtomTable, names: &[String]) -> Result<AtomSet> {
    if names.is_empty() {
        return Err(Error::EmptyMember);
    }
    let mut set = AtomSet::new();
    for n in names {
        let a = atoms.index(n)?;
        if set.contains(a) {
            return Err(Error::RepeatedAtom(n.clone()));
        }
        set.insert(a);
    }
    Ok(set)
}

pub fn from_json(text: &str) -> Result<Hypergraph> {
    let raw: HypergraphJson = serde_json::from_str(text)?;
    let atoms = Arc::new(AtomTable::new(&raw.carrier)?);
    let members = raw
        .members
        .iter()
        .map(|m| member_set(&atoms, m))
        .collect::<Result<Vec<_>>>()?;
    let carrier = atoms.all();
    Hypergraph::validate(atoms, carrier, members)
}

pub fn to_json(h: &Hypergraph) -> String {
    let raw = HypergraphJson {
        carrier: h.carrier_names().iter().map(|s| s.to_string()).collect(),
        members: h
            .members()
            .iter()
            .map(|m| m.iter().map(|a| h.atoms().name(a).to_string()).collect())
            .collect(),
    };
    serde_json::to_string(&raw).expect("plain data serializes")
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub fn from_compact(text: &str) -> Result<Hypergraph> {
    let mut names: Vec<String> = Vec::new();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let body = strip_comment(line);
        if !body.is_empty() {
            if body == "{}" {
                return Err(Error::EmptyMember);
            }
            let mut row = Vec::new();
            for token in body.split(',') {
                let token = token.trim();
                if token.is_empty() || token.chars().any(|c| c.is_whitespace()) {
                    return Err(Error::Syntax {
                        pos: offset,
                        msg: format!("bad atom list `{body}`"),
                    });
                }
                if !names.iter().any(|n| n == token) {
                    names.push(token.to_string());
                }
                row.push(token.to_string());
            }
            rows.push(row);
        }
        offset += line.len() + 1;
    }
    let atoms = Arc::new(AtomTable::new(&names)?);
    let members = rows
        .iter()
        .map(|r| member_set(&atoms, r))
        .collect::<Result<Vec<_>>>()?;
    let carrier = atoms.all();
    Hypergraph::validate(atoms, carrier, members)
}

pub fn to_compact(h: &Hypergraph) -> String {
    let mut out = String::new();
    for m in h.members() {
        let names: Vec<&str> = m.iter().map(|a| h.atoms().name(a)).collect();
        out.push_str(&names.join(","));
        out.push('\n');
    }
    out
}

/// Reads a hypergraph, choosing JSON when the text starts with `{` followed
/// by a quote and the compact format otherwise.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') && trimmed[1..].trim_start().starts_with('"') {
        from_json(text)
    } else {
        from_compact(text)
    }
}

/// A parsed edge list.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

pub fn parse_graph(text: &str) -> Result<GraphSpec> {
    let mut spec = GraphSpec::default();
    let mut seen = HashSet::new();
    let mut add = |spec: &mut GraphSpec, v: &str| {
        if seen.insert(v.to_string()) {
            spec.vertices.push(v.to_string());
        }
    };
    for line in text.lines() {
        let body = strip_comment(line);
        if body.is_empty() {
            continue;
        }
        if let Some(decl) = body.strip_prefix("atoms:") {
            for v in decl.split(|c: char| c == ',' || c.is_whitespace()) {
                if !v.is_empty() {
                    add(&mut spec, v);
                }
            }
            continue;
        }
        let parts: Vec<&str> = body.split('-').map(str::trim).collect();
        match parts.as_slice() {
            [a, b] if !a.is_empty() && !b.is_empty() && a != b => {
                add(&mut spec, a);
                add(&mut spec, b);
                spec.edges.push((a.to_string(), b.to_string()));
            }
            _ => return Err(Error::BadEdge(body.to_string())),
        }
    }
    Ok(spec)
}
