//! Line-oriented text formats for posets and automorphisms.
//!
//! Poset files:
//!
//! ```text
//! # comment
//! elem {} rank 0
//! elem {1} rank 1
//! cover {} {1}
//! ```
//!
//! Ranks are either given on every `elem` line or on none, in which case they
//! are inferred from longest chains. Automorphism files hold `map <from> <to>`
//! lines; elements never mapped are fixed.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::constructions::PosetParts;
use crate::error::{Error, Result};
use crate::poset::{infer_ranks, Poset, RankAssignment, RankedPoset};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

/// Parses a poset file. The result is not rank-validated; pass it to
/// [`RankedPoset::new`] for that.
pub fn parse_poset(text: &str) -> Result<(Poset, RankAssignment)> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut ranks: Vec<Option<u32>> = Vec::new();
    let mut elem_lines: Vec<usize> = Vec::new();
    let mut covers: Vec<(usize, usize, usize)> = Vec::new();

    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["elem", label] | ["elem", label, "rank", _] => {
                let rank = match tokens.get(3) {
                    Some(r) => Some(
                        r.parse::<u32>()
                            .map_err(|_| parse_err(line, format!("invalid rank `{r}`")))?,
                    ),
                    None => None,
                };
                if index.insert((*label).to_owned(), labels.len()).is_some() {
                    return Err(parse_err(line, format!("duplicate element `{label}`")));
                }
                labels.push((*label).to_owned());
                ranks.push(rank);
                elem_lines.push(line);
            }
            ["cover", lower, upper] => {
                let find = |l: &str| {
                    index
                        .get(l)
                        .copied()
                        .ok_or_else(|| parse_err(line, format!("unknown element `{l}`")))
                };
                covers.push((line, find(lower)?, find(upper)?));
            }
            _ => {
                return Err(parse_err(
                    line,
                    format!(
                        "expected `elem <label> [rank <k>]` or `cover <lower> <upper>`, found `{}`",
                        tokens.join(" ")
                    ),
                ))
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::EmptyPoset);
    }
    if let Some((line, a, _)) = covers.iter().find(|&&(_, a, b)| a == b) {
        return Err(parse_err(
            *line,
            format!("`{}` cannot cover itself", labels[*a]),
        ));
    }
    let edges: Vec<(usize, usize)> = covers.iter().map(|&(_, a, b)| (a, b)).collect();
    let poset = Poset::from_index_covers(labels, &edges)?;

    let given = ranks.iter().filter(|r| r.is_some()).count();
    let ranks = if given == 0 {
        infer_ranks(&poset)
    } else if given == ranks.len() {
        RankAssignment::detect(&poset, ranks.into_iter().flatten().collect())
    } else {
        let first = ranks.iter().position(Option::is_none).unwrap_or(0);
        return Err(parse_err(
            elem_lines[first],
            format!(
                "`{}` has no rank; either every element or no element must carry one",
                poset.label(first)
            ),
        ));
    };
    Ok((poset, ranks))
}

/// Parses and validates.
pub fn parse_ranked_poset(text: &str) -> Result<RankedPoset> {
    let (poset, ranks) = parse_poset(text)?;
    RankedPoset::new(poset, ranks)
}

fn write_raw(labels: &[String], ranks: &[u32], covers: &[(usize, usize)]) -> String {
    let mut out = String::new();
    for (label, rank) in labels.iter().zip(ranks) {
        writeln!(out, "elem {label} rank {rank}").unwrap();
    }
    for &(a, b) in covers {
        writeln!(out, "cover {} {}", labels[a], labels[b]).unwrap();
    }
    out
}

/// Elements in index order with explicit ranks, then the Hasse covers.
pub fn write_poset(poset: &RankedPoset) -> String {
    write_raw(
        poset.poset().labels(),
        poset.ranks().ranks(),
        poset.poset().covers(),
    )
}

pub fn write_parts(parts: &PosetParts) -> String {
    write_raw(&parts.labels, &parts.ranks, &parts.covers)
}

/// `(from, to)` pairs of an automorphism file, checked for repeated sources
/// and targets. Labels are resolved against a poset later.
pub fn parse_automorphism(text: &str) -> Result<Vec<(String, String)>> {
    let mut pairs = Vec::new();
    let mut sources = HashMap::new();
    let mut targets = HashMap::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            ["map", from, to] => {
                if sources.insert((*from).to_owned(), line).is_some() {
                    return Err(parse_err(line, format!("`{from}` is mapped twice")));
                }
                if targets.insert((*to).to_owned(), line).is_some() {
                    return Err(parse_err(
                        line,
                        format!("`{to}` is the image of two elements"),
                    ));
                }
                pairs.push(((*from).to_owned(), (*to).to_owned()));
            }
            _ => {
                return Err(parse_err(
                    line,
                    format!("expected `map <from> <to>`, found `{}`", tokens.join(" ")),
                ))
            }
        }
    }
    Ok(pairs)
}

pub fn write_automorphism(pairs: &[(String, String)]) -> String {
    pairs
        .iter()
        .map(|(a, b)| format!("map {a} {b}\n"))
        .collect()
}
