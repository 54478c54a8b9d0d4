//! The named hypergraphs on at most four atoms, loaded from the data files in
//! `catalog/` and checked against their names on first use.
//!
//! A name `H_{k i2 … ik}` records the member census: `k` atoms, then the
//! number of members of each size from 2 up to `k`. Variants sharing a census
//! carry primes, a star or a circle (`H'_4321`, `H*_4331`, `H°_4441`).

use std::sync::OnceLock;

use serde::Serialize;

use crate::atoms::AtomSet;
use crate::error::{Error, Result};
use crate::face_lattice::{abstract_polytope, f_vector};
use crate::format::from_compact;
use crate::hypergraph::Hypergraph;

const SOURCES: [&str; 3] = [
    include_str!("../catalog/small.hg"),
    include_str!("../catalog/degenerate.hg"),
    include_str!("../catalog/tetrahedral.hg"),
];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub hypergraph: Hypergraph,
    pub nickname: Option<String>,
    /// More than one subscript and the last one is zero: the carrier is
    /// not a member and the polytope drops rank.
    pub degenerate: bool,
    /// Appears in the inclusion chart.
    pub chart: bool,
    /// Boxed in the chart: a case already covered by graph-based
    /// constructions. Metadata only.
    pub boxed: bool,
}

/// The census digits of `h`: carrier size, then member counts for sizes
/// `2..=k`.
pub fn census_digits(h: &Hypergraph) -> String {
    let k = h.carrier().len();
    let census = h.census();
    let mut out = k.to_string();
    for size in 2..=k {
        out.push_str(&census.get(size).copied().unwrap_or(0).to_string());
    }
    out
}

fn subscript(name: &str) -> &str {
    name.rsplit('_').next().unwrap_or("")
}

/// Parses catalog text: entries start with `@ name [nickname=…] [chart [box]]`
/// and list members in the compact format.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut entries = Vec::new();
    let mut header: Option<&str> = None;
    let mut body = String::new();
    let mut flush = |header: Option<&str>, body: &str| -> Result<()> {
        let Some(header) = header else {
            return Ok(());
        };
        let mut words = header.split_whitespace();
        let name = words
            .next()
            .ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: "entry without a name".into(),
            })?
            .to_string();
        let (mut nickname, mut chart, mut boxed) = (None, false, false);
        for w in words {
            match w {
                "chart" => chart = true,
                "box" => boxed = true,
                _ => match w.strip_prefix("nickname=") {
                    Some(n) => nickname = Some(n.to_string()),
                    None => {
                        return Err(Error::Syntax {
                            pos: 0,
                            msg: format!("unknown attribute `{w}` for {name}"),
                        })
                    }
                },
            }
        }
        let hypergraph = from_compact(body)?;
        let digits = subscript(&name);
        if census_digits(&hypergraph) != digits {
            return Err(Error::Syntax {
                pos: 0,
                msg: format!("{name} has census {}", census_digits(&hypergraph)),
            });
        }
        entries.push(CatalogEntry {
            degenerate: digits.len() > 1 && digits.ends_with('0'),
            name,
            hypergraph,
            nickname,
            chart,
            boxed,
        });
        Ok(())
    };
    for line in text.lines() {
        if let Some(rest) = line.trim().strip_prefix('@') {
            flush(header, &body)?;
            header = Some(rest.trim());
            body.clear();
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    flush(header, &body)?;
    Ok(entries)
}

/// All entries, in presentation order.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        SOURCES
            .iter()
            .flat_map(|s| parse_catalog(s).expect("bundled catalog is valid"))
            .collect()
    })
}

/// Accepts the printed names and ASCII spellings: `Hp_4321` or `H'_4321`,
/// `Hpp_4121`, `Hs_4331` or `H*_4331`, `Ho_4441` or `H°_4441`; the
/// underscore is optional.
pub fn canonical_name(name: &str) -> String {
    let name = name.trim();
    let split = name
        .find(|c: char| c.is_ascii_digit())
        .unwrap_or(name.len());
    let (prefix, digits) = name.split_at(split);
    let prefix = prefix.trim_end_matches('_');
    let prefix = match prefix {
        "Hp" => "H'",
        "Hpp" => "H''",
        "Hs" => "H*",
        "Ho" => "H°",
        other => other,
    };
    format!("{prefix}_{digits}")
}

pub fn catalog_lookup(name: &str) -> Result<&'static CatalogEntry> {
    let wanted = canonical_name(name);
    catalog()
        .iter()
        .find(|e| e.name == wanted)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVectorRow {
    pub name: String,
    pub nickname: Option<String>,
    pub rank: i32,
    /// Numbers of faces of ranks `0..rank`, the top excluded.
    pub f_vector: Vec<usize>,
}

pub fn fvector_row(entry: &CatalogEntry) -> Result<FVectorRow> {
    let p = abstract_polytope(&entry.hypergraph)?;
    Ok(FVectorRow {
        name: entry.name.clone(),
        nickname: entry.nickname.clone(),
        rank: p.rank(),
        f_vector: f_vector(&p).proper().to_vec(),
    })
}

pub fn fvector_table() -> Result<Vec<FVectorRow>> {
    catalog().iter().map(fvector_row).collect()
}

/// Whether some renaming of the atoms of `a` makes it a subfamily of `b`.
/// Both must use atom indices `0..k` on the same `k`.
pub fn embeds(a: &Hypergraph, b: &Hypergraph) -> bool {
    let k = a.carrier().len();
    if k != b.carrier().len() || a.len() > b.len() {
        return false;
    }
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let fits = a.members().iter().all(|x| {
            let image: AtomSet = x.iter().map(|i| perm[i]).collect();
            b.contains(&image)
        });
        if fits {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lines of the inclusion chart: pairs `(lower, upper)` of chart entries
/// where a copy of the lower type sits inside the upper one with no chart
/// type strictly in between.
pub fn chart_edges() -> Vec<(&'static str, &'static str)> {
    let chart: Vec<&CatalogEntry> = catalog().iter().filter(|e| e.chart).collect();
    let n = chart.len();
    let below: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    i != j
                        && chart[i].hypergraph.len() < chart[j].hypergraph.len()
                        && embeds(&chart[i].hypergraph, &chart[j].hypergraph)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if below[i][j] && !(0..n).any(|m| below[i][m] && below[m][j]) {
                out.push((chart[i].name.as_str(), chart[j].name.as_str()));
            }
        }
    }
    out
}
